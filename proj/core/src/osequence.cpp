#include "monolift/osequence.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace monolift {

namespace {

long long binomial(long long top, long long k) {
  if (k < 0 || top < k) return 0;
  long long out = 1;
  for (long long i = 1; i <= k; ++i) out = out * (top - k + i) / i;
  return out;
}

}  // namespace

long long macaulay_growth(long long c, int d) {
  if (c < 0 || d < 1) throw std::invalid_argument("macaulay_growth: need c >= 0, d >= 1");
  if (c == 0) return 0;
  // d-th binomial representation: c = C(k_d,d) + C(k_{d-1},d-1) + ...
  long long rest = c;
  long long bound = 0;
  int i = d;
  while (rest > 0 && i >= 1) {
    long long k = i;
    while (binomial(k + 1, i) <= rest) ++k;
    rest -= binomial(k, i);
    bound += binomial(k + 1, i + 1);
    --i;
  }
  return bound;
}

bool is_o_sequence(const std::vector<long long>& s) {
  if (s.empty()) return false;
  if (s[0] != 1) return false;
  for (long long v : s)
    if (v < 0) return false;
  for (size_t d = 1; d + 1 < s.size(); ++d)
    if (s[d + 1] > macaulay_growth(s[d], static_cast<int>(d))) return false;
  return true;
}

std::vector<long long> difference(const std::vector<long long>& s, int times) {
  std::vector<long long> cur = s;
  for (int k = 0; k < times; ++k) {
    std::vector<long long> next(cur.size());
    long long prev = 0;  // c_{-1} = 0
    for (size_t i = 0; i < cur.size(); ++i) {
      next[i] = cur[i] - prev;
      prev = cur[i];
    }
    cur = std::move(next);
  }
  return cur;
}

bool is_t_differentiable(const std::vector<long long>& s, int t) {
  std::vector<long long> cur = s;
  for (int k = 0; k <= t; ++k) {
    if (!is_o_sequence(cur)) return false;
    if (k < t) cur = difference(cur);
  }
  return true;
}

std::vector<long long> integrate(const std::vector<long long>& h, int t, size_t length) {
  std::vector<long long> cur(length, 0);
  for (size_t i = 0; i < std::min(h.size(), length); ++i) cur[i] = h[i];
  for (int k = 0; k < t; ++k) {
    long long run = 0;
    for (size_t i = 0; i < length; ++i) {
      run += cur[i];
      cur[i] = run;
    }
  }
  return cur;
}

namespace {

std::vector<long long> strip_trailing_zeros(std::vector<long long> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

void validate_h_vector(const std::vector<long long>& h, int n) {
  if (h.empty() || h[0] != 1) throw std::invalid_argument("h-vector must start with 1");
  if (h.size() > 1 && h[1] > n)
    throw std::invalid_argument("h-vector needs h_1 <= number of variables");
  if (!is_o_sequence(h)) throw std::invalid_argument("h-vector is not an O-sequence");
}

}  // namespace

MonomialIdeal lex_ideal_from_h_vector(const std::vector<long long>& h_in, int n) {
  if (n < 1) throw std::invalid_argument("lex_ideal_from_h_vector: n >= 1 required");
  std::vector<long long> h = strip_trailing_zeros(h_in);
  if (h.empty()) throw std::invalid_argument("h-vector must be nonzero");
  validate_h_vector(h, n);
  const size_t D = h.size() - 1;
  std::vector<Monomial> gens;
  std::set<Monomial, ExpLess> prev_ideal_part;  // degree d-1 part of J
  for (size_t d = 1; d <= D + 1; ++d) {
    std::vector<Monomial> all = monomials_of_degree(n, static_cast<long long>(d));  // descending deg-lex
    long long hd = d < h.size() ? h[d] : 0;
    long long in_count = static_cast<long long>(all.size()) - hd;
    if (in_count < 0) throw std::invalid_argument("h-vector entry exceeds ambient dimension");
    std::set<Monomial, ExpLess> ideal_part(all.begin(), all.begin() + in_count);
    // the lex choice must contain the shadow of the previous degree
    for (size_t i = static_cast<size_t>(in_count); i < all.size(); ++i) {
      const Monomial& m = all[i];
      for (int j = 0; j < n; ++j) {
        if (m.exponent(j) == 0) continue;
        Monomial div = colon(m, Monomial::variable(n, j));
        if (prev_ideal_part.count(div))
          throw std::logic_error("lex_ideal_from_h_vector: shadow violation (invalid h-vector)");
      }
    }
    // new generators: ideal part minus the shadow
    for (long long i = 0; i < in_count; ++i) {
      const Monomial& m = all[static_cast<size_t>(i)];
      bool in_shadow = false;
      for (int j = 0; j < n && !in_shadow; ++j) {
        if (m.exponent(j) == 0) continue;
        if (prev_ideal_part.count(colon(m, Monomial::variable(n, j)))) in_shadow = true;
      }
      if (!in_shadow) gens.push_back(m);
    }
    prev_ideal_part = std::move(ideal_part);
  }
  return MonomialIdeal::from_generators(n, std::move(gens));
}

std::optional<MonomialIdeal> find_non_lex_ideal_with_h_vector(const std::vector<long long>& h_in,
                                                              int n) {
  std::vector<long long> h = strip_trailing_zeros(h_in);
  if (h.empty()) return std::nullopt;
  validate_h_vector(h, n);
  const size_t D = h.size() - 1;
  // DFS over standard-monomial choices per degree, preferring non-lex picks.
  std::vector<std::set<Monomial, ExpLess>> std_parts(D + 1);
  std_parts[0] = {Monomial::unit(n)};
  long long budget = 200000;

  auto build_ideal = [&]() -> MonomialIdeal {
    std::vector<Monomial> gens;
    for (size_t d = 1; d <= D + 1; ++d)
      for (const Monomial& m : monomials_of_degree(n, static_cast<long long>(d)))
        if (d > D || !std_parts[d].count(m)) gens.push_back(m);
    return MonomialIdeal::from_generators(n, std::move(gens));
  };

  auto rec = [&](auto&& self, size_t d) -> std::optional<MonomialIdeal> {
    if (budget-- < 0) return std::nullopt;
    if (d > D) {
      MonomialIdeal J = build_ideal();
      if (!is_lex_segment(J)) return J;
      return std::nullopt;
    }
    // candidates: monomials all of whose degree-(d-1) divisors are standard
    std::vector<Monomial> cands;
    for (const Monomial& m : monomials_of_degree(n, static_cast<long long>(d))) {
      bool ok = true;
      for (int j = 0; j < n && ok; ++j) {
        if (m.exponent(j) == 0) continue;
        if (!std_parts[d - 1].count(colon(m, Monomial::variable(n, j)))) ok = false;
      }
      if (ok) cands.push_back(m);
    }
    long long hd = h[d];
    if (static_cast<long long>(cands.size()) < hd) return std::nullopt;
    // choose hd of the candidates; iterate subsets
    std::vector<size_t> pick(static_cast<size_t>(hd));
    auto choose = [&](auto&& chooser, size_t from, size_t got) -> std::optional<MonomialIdeal> {
      if (budget < 0) return std::nullopt;
      if (got == static_cast<size_t>(hd)) {
        std_parts[d].clear();
        for (size_t i = 0; i < got; ++i) std_parts[d].insert(cands[pick[i]]);
        return self(self, d + 1);
      }
      for (size_t i = from; i + (static_cast<size_t>(hd) - got) <= cands.size(); ++i) {
        pick[got] = i;
        if (auto r = chooser(chooser, i + 1, got + 1)) return r;
      }
      return std::nullopt;
    };
    return choose(choose, 0, 0);
  };
  return rec(rec, 1);
}

StickFigurePipelineResult stick_figure_from_o_sequence(const std::vector<long long>& h_in, int t,
                                                       int n, const StickFigureMatrixConfig& cfg) {
  std::vector<long long> h = strip_trailing_zeros(h_in);
  if (h.empty()) throw std::invalid_argument("h-vector must be nonzero");
  if (t < 0) throw std::invalid_argument("t >= 0 required");
  if (n <= 0) n = h.size() > 1 ? static_cast<int>(h[1]) : 1;
  validate_h_vector(h, n);

  StickFigurePipelineResult out;
  out.h = h;
  out.ideal = lex_ideal_from_h_vector(h, n);
  MaxExponents N = max_exponents(out.ideal);

  if (cfg.random_seed) {
    out.matrix = random_lifting_matrix(n, t, N.per_variable, LiftingMatrix::Mode::restricted,
                                       *cfg.random_seed);
  } else {
    size_t p = 0;
    for (int nj : N.per_variable) p += static_cast<size_t>(nj);
    std::vector<Rat> scalars;
    if (cfg.vandermonde_scalars) {
      scalars = *cfg.vandermonde_scalars;
    } else {
      for (size_t i = 1; i <= p; ++i) scalars.push_back(Rat(static_cast<long>(i)));
    }
    out.matrix = vandermonde_lifting_matrix(n, t, N.per_variable, scalars);
  }
  out.genericity = check_genericity(out.matrix, out.ideal);
  out.configuration = components_artinian(out.ideal, t, N.per_variable);
  out.stick = is_generalized_stick_figure(out.configuration, false);
  out.degree_bound = default_degree_bound(out.ideal);

  // Delta^t h_{R/I} = h_{S/J}, with h_{S/J} from the standard-monomial count
  // and h_{R/I} from the graded dimensions of the lifted resolution.
  HilbertData base = hilbert_series(out.ideal);
  HilbertData lifted = base;
  lifted.nvars = n + t;
  std::vector<long long> lifted_values;
  for (long long d = 0; d <= out.degree_bound + t; ++d)
    lifted_values.push_back(lifted.hilbert_function(d));
  std::vector<long long> dropped = difference(lifted_values, t);
  std::vector<long long> hist = standard_monomial_histogram(out.ideal);
  out.hilbert_identity_ok = true;
  for (long long d = 0; d <= out.degree_bound; ++d) {
    long long expect = d < static_cast<long long>(hist.size()) ? hist[static_cast<size_t>(d)] : 0;
    if (dropped[static_cast<size_t>(d)] != expect) out.hilbert_identity_ok = false;
  }
  long long total = 0;
  for (long long v : h) total += v;
  if (static_cast<long long>(out.configuration.component_count()) != total)
    out.hilbert_identity_ok = false;
  return out;
}

}  // namespace monolift
