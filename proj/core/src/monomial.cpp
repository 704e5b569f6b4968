#include "monolift/monomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace monolift {

std::string Ring::var_name(int index) const {
  if (index < 0 || index >= nvars()) throw std::invalid_argument("variable index out of range");
  if (index < nx) return "x" + std::to_string(index + 1);
  return "u" + std::to_string(index - nx + 1);
}

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  if (exps_.empty()) throw std::invalid_argument("monomial needs at least one variable");
  for (int e : exps_)
    if (e < 0) throw std::invalid_argument("negative exponent");
}

Monomial Monomial::unit(int nvars) { return Monomial(std::vector<int>(static_cast<size_t>(nvars), 0)); }

Monomial Monomial::variable(int nvars, int index, int power) {
  std::vector<int> e(static_cast<size_t>(nvars), 0);
  e.at(static_cast<size_t>(index)) = power;
  return Monomial(std::move(e));
}

long long Monomial::degree() const {
  long long d = 0;
  for (int e : exps_) d += e;
  return d;
}

bool Monomial::is_unit() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

Monomial Monomial::extended(int new_nvars) const {
  if (new_nvars < nvars()) throw std::invalid_argument("extended: shrinking ambient");
  std::vector<int> e(exps_.begin(), exps_.end());
  e.resize(static_cast<size_t>(new_nvars), 0);
  return Monomial(std::move(e));
}

bool ExpLess::operator()(const Monomial& a, const Monomial& b) const {
  return std::lexicographical_compare(a.exponents().begin(), a.exponents().end(),
                                      b.exponents().begin(), b.exponents().end());
}

static void check_same_ambient(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("monomial ambient mismatch");
}

bool divides(const Monomial& a, const Monomial& b) {
  check_same_ambient(a, b);
  for (int j = 0; j < a.nvars(); ++j)
    if (a.exponent(j) > b.exponent(j)) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  check_same_ambient(a, b);
  std::vector<int> e(static_cast<size_t>(a.nvars()));
  for (int j = 0; j < a.nvars(); ++j) e[static_cast<size_t>(j)] = std::max(a.exponent(j), b.exponent(j));
  return Monomial(std::move(e));
}

Monomial lcm(std::span<const Monomial> ms) {
  if (ms.empty()) throw std::invalid_argument("lcm of empty set");
  Monomial acc = ms[0];
  for (size_t i = 1; i < ms.size(); ++i) acc = lcm(acc, ms[i]);
  return acc;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  check_same_ambient(a, b);
  std::vector<int> e(static_cast<size_t>(a.nvars()));
  for (int j = 0; j < a.nvars(); ++j) e[static_cast<size_t>(j)] = std::min(a.exponent(j), b.exponent(j));
  return Monomial(std::move(e));
}

Monomial product(const Monomial& a, const Monomial& b) {
  check_same_ambient(a, b);
  std::vector<int> e(static_cast<size_t>(a.nvars()));
  for (int j = 0; j < a.nvars(); ++j) {
    long long s = static_cast<long long>(a.exponent(j)) + b.exponent(j);
    if (s > std::numeric_limits<int>::max()) throw std::overflow_error("exponent overflow");
    e[static_cast<size_t>(j)] = static_cast<int>(s);
  }
  return Monomial(std::move(e));
}

Monomial colon(const Monomial& a, const Monomial& b) {
  check_same_ambient(a, b);
  std::vector<int> e(static_cast<size_t>(a.nvars()));
  for (int j = 0; j < a.nvars(); ++j) e[static_cast<size_t>(j)] = std::max(a.exponent(j) - b.exponent(j), 0);
  return Monomial(std::move(e));
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  check_same_ambient(a, b);
  long long da = a.degree(), db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  const int n = a.nvars();
  auto var_at = [&](int pos) {
    return priority.empty() ? pos : priority[static_cast<size_t>(pos)];
  };
  if (!priority.empty() && static_cast<int>(priority.size()) != n)
    throw std::invalid_argument("term order priority size mismatch");
  if (kind == Kind::deglex) {
    for (int pos = 0; pos < n; ++pos) {
      int d = a.exponent(var_at(pos)) - b.exponent(var_at(pos));
      if (d != 0) return d > 0 ? 1 : -1;
    }
    return 0;
  }
  // degrevlex: last (lowest-priority) differing variable, smaller exponent wins
  for (int pos = n - 1; pos >= 0; --pos) {
    int d = a.exponent(var_at(pos)) - b.exponent(var_at(pos));
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

MonomialIdeal MonomialIdeal::zero(int nvars) { return MonomialIdeal(nvars); }

MonomialIdeal MonomialIdeal::unit_ideal(int nvars) {
  MonomialIdeal J(nvars);
  J.gens_.push_back(Monomial::unit(nvars));
  return J;
}

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }

MonomialIdeal MonomialIdeal::from_generators(int nvars, std::vector<Monomial> gens) {
  return minimalize(nvars, std::move(gens));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.nvars() != nvars_) throw std::invalid_argument("ideal/monomial ambient mismatch");
  for (const Monomial& g : gens_)
    if (divides(g, m)) return true;
  return false;
}

MonomialIdeal MonomialIdeal::extended(int new_nvars) const {
  std::vector<Monomial> gens;
  gens.reserve(gens_.size());
  for (const Monomial& g : gens_) gens.push_back(g.extended(new_nvars));
  return from_generators(new_nvars, std::move(gens));
}

MonomialIdeal minimalize(int nvars, std::vector<Monomial> gens) {
  for (const Monomial& g : gens)
    if (g.nvars() != nvars) throw std::invalid_argument("generator ambient mismatch");
  // Sort by degree so potential divisors come first; dedup.
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return ExpLess{}(a, b);
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (const Monomial& g : gens) {
    bool redundant = false;
    for (const Monomial& k : kept)
      if (divides(k, g)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(g);
  }
  if (!kept.empty() && kept.front().is_unit()) return MonomialIdeal::unit_ideal(nvars);
  MonomialIdeal J(nvars);
  J.gens_ = std::move(kept);
  return J;
}

bool is_artinian(const MonomialIdeal& J) {
  if (J.is_unit()) return true;
  if (J.is_zero()) return J.nvars() == 0;
  for (int j = 0; j < J.nvars(); ++j) {
    bool has_pure_power = false;
    for (const Monomial& g : J.generators()) {
      if (g.exponent(j) == 0) continue;
      bool pure = true;
      for (int k = 0; k < J.nvars(); ++k)
        if (k != j && g.exponent(k) != 0) {
          pure = false;
          break;
        }
      if (pure) {
        has_pure_power = true;
        break;
      }
    }
    if (!has_pure_power) return false;
  }
  return true;
}

MaxExponents max_exponents(const MonomialIdeal& J) {
  MaxExponents out;
  out.per_variable.assign(static_cast<size_t>(J.nvars()), 0);
  for (const Monomial& g : J.generators())
    for (int j = 0; j < J.nvars(); ++j)
      out.per_variable[static_cast<size_t>(j)] =
          std::max(out.per_variable[static_cast<size_t>(j)], g.exponent(j));
  for (int nj : out.per_variable) out.overall = std::max(out.overall, nj);
  return out;
}

std::vector<Monomial> monomials_of_degree(int nvars, long long degree) {
  std::vector<Monomial> out;
  std::vector<int> cur(static_cast<size_t>(nvars), 0);
  // Descending exponent choice from the front yields descending degree-lex.
  auto rec = [&](auto&& self, int pos, long long remaining) -> void {
    if (pos == nvars - 1) {
      cur[static_cast<size_t>(pos)] = static_cast<int>(remaining);
      out.push_back(Monomial(cur));
      return;
    }
    for (long long e = remaining; e >= 0; --e) {
      cur[static_cast<size_t>(pos)] = static_cast<int>(e);
      self(self, pos + 1, remaining - e);
    }
  };
  if (nvars == 0) throw std::invalid_argument("monomials_of_degree: nvars == 0");
  rec(rec, 0, degree);
  return out;
}

long long count_monomials_of_degree(int nvars, long long degree) {
  // C(degree + nvars - 1, nvars - 1)
  long long num = 1;
  for (int k = 1; k <= nvars - 1; ++k) num = num * (degree + k) / k;
  return num;
}

bool is_lex_segment(const MonomialIdeal& J) {
  if (J.is_zero() || J.is_unit()) return true;
  long long maxdeg = 0;
  for (const Monomial& g : J.generators()) maxdeg = std::max(maxdeg, g.degree());
  TermOrder deglex;
  for (long long d = 1; d <= maxdeg; ++d) {
    bool seen_nonmember = false;
    for (const Monomial& m : monomials_of_degree(J.nvars(), d)) {
      bool in = J.contains(m);
      if (in && seen_nonmember) return false;
      if (!in) seen_nonmember = true;
    }
  }
  return true;
}

std::vector<Monomial> standard_monomials(const MonomialIdeal& J,
                                         std::optional<long long> degree_bound) {
  std::vector<Monomial> out;
  if (J.is_unit()) return out;
  if (degree_bound) {
    for (long long d = 0; d <= *degree_bound; ++d)
      for (const Monomial& m : monomials_of_degree(J.nvars(), d))
        if (!J.contains(m)) out.push_back(m);
    return out;
  }
  if (!is_artinian(J))
    throw std::invalid_argument("standard_monomials: unbounded request on non-Artinian ideal");
  MaxExponents N = max_exponents(J);
  std::vector<int> cur(static_cast<size_t>(J.nvars()), 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == J.nvars()) {
      Monomial m(cur);
      if (!J.contains(m)) out.push_back(m);
      return;
    }
    int cap = N.per_variable[static_cast<size_t>(pos)];
    for (int e = 0; e < std::max(cap, 1); ++e) {
      cur[static_cast<size_t>(pos)] = e;
      self(self, pos + 1);
    }
    cur[static_cast<size_t>(pos)] = 0;
  };
  rec(rec, 0);
  return out;
}

std::vector<long long> standard_monomial_histogram(const MonomialIdeal& J) {
  std::vector<long long> hist;
  for (const Monomial& m : standard_monomials(J)) {
    size_t d = static_cast<size_t>(m.degree());
    if (hist.size() <= d) hist.resize(d + 1, 0);
    ++hist[d];
  }
  return hist;
}

}  // namespace monolift
