#include "monolift/ideal_algebra.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "monolift/linalg.hpp"

namespace monolift {

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("intersect: ambient mismatch");
  if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.nvars());
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  std::vector<Monomial> gens;
  gens.reserve(a.generator_count() * b.generator_count());
  for (const Monomial& ga : a.generators())
    for (const Monomial& gb : b.generators()) gens.push_back(lcm(ga, gb));
  return MonomialIdeal::from_generators(a.nvars(), std::move(gens));
}

MonomialIdeal intersect(std::span<const MonomialIdeal> ideals, int nvars) {
  MonomialIdeal acc = MonomialIdeal::unit_ideal(nvars);
  for (const MonomialIdeal& J : ideals) acc = intersect(acc, J);
  return acc;
}

MonomialIdeal quotient(const MonomialIdeal& J, const MonomialIdeal& K) {
  if (J.nvars() != K.nvars()) throw std::invalid_argument("quotient: ambient mismatch");
  if (K.is_zero()) return MonomialIdeal::unit_ideal(J.nvars());
  if (J.is_zero()) return MonomialIdeal::zero(J.nvars());
  MonomialIdeal acc = MonomialIdeal::unit_ideal(J.nvars());
  for (const Monomial& g : K.generators()) {
    std::vector<Monomial> gens;
    gens.reserve(J.generator_count());
    for (const Monomial& m : J.generators()) gens.push_back(colon(m, g));
    acc = intersect(acc, MonomialIdeal::from_generators(J.nvars(), std::move(gens)));
  }
  return acc;
}

MonomialIdeal IrreducibleComponent::to_ideal(int nvars) const {
  std::vector<Monomial> gens;
  for (const auto& [var, exp] : entries) gens.push_back(Monomial::variable(nvars, var, exp));
  return MonomialIdeal::from_generators(nvars, std::move(gens));
}

namespace {

// All generators pure powers?
std::optional<IrreducibleComponent> as_irreducible(const MonomialIdeal& J) {
  IrreducibleComponent comp;
  for (const Monomial& g : J.generators()) {
    int var = -1;
    for (int j = 0; j < J.nvars(); ++j)
      if (g.exponent(j) != 0) {
        if (var >= 0) return std::nullopt;
        var = j;
      }
    if (var < 0) return std::nullopt;  // unit generator
    comp.entries[var] = g.exponent(var);
  }
  return comp;
}

void decompose_rec(const MonomialIdeal& J, std::set<IrreducibleComponent>& out,
                   std::set<std::vector<std::vector<int>>>& visited) {
  std::vector<std::vector<int>> key;
  key.reserve(J.generator_count());
  for (const Monomial& g : J.generators())
    key.emplace_back(g.exponents().begin(), g.exponents().end());
  if (!visited.insert(std::move(key)).second) return;
  if (auto comp = as_irreducible(J)) {
    out.insert(std::move(*comp));
    return;
  }
  // Split the first mixed generator into coprime parts m = m' * m''.
  const Monomial* mixed = nullptr;
  for (const Monomial& g : J.generators()) {
    int support = 0;
    for (int j = 0; j < J.nvars(); ++j)
      if (g.exponent(j) != 0) ++support;
    if (support >= 2) {
      mixed = &g;
      break;
    }
  }
  int split_var = -1;
  for (int j = 0; j < J.nvars(); ++j)
    if (mixed->exponent(j) != 0) {
      split_var = j;
      break;
    }
  Monomial part1 = Monomial::variable(J.nvars(), split_var, mixed->exponent(split_var));
  Monomial part2 = colon(*mixed, part1);
  for (const Monomial* part : {&part1, &part2}) {
    std::vector<Monomial> gens = J.generators();
    gens.push_back(*part);
    decompose_rec(MonomialIdeal::from_generators(J.nvars(), std::move(gens)), out, visited);
  }
}

}  // namespace

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& J) {
  if (!J.is_proper()) throw std::invalid_argument("irreducible_decomposition: ideal must be proper and nonzero");
  std::set<IrreducibleComponent> comps;
  std::set<std::vector<std::vector<int>>> visited;
  decompose_rec(J, comps, visited);
  std::vector<IrreducibleComponent> all(comps.begin(), comps.end());
  // Drop components containing the intersection of the others.
  std::vector<MonomialIdeal> as_ideals;
  as_ideals.reserve(all.size());
  for (const auto& c : all) as_ideals.push_back(c.to_ideal(J.nvars()));
  std::vector<bool> keep(all.size(), true);
  for (size_t i = 0; i < all.size(); ++i) {
    MonomialIdeal rest = MonomialIdeal::unit_ideal(J.nvars());
    for (size_t k = 0; k < all.size(); ++k)
      if (k != i && keep[k]) rest = intersect(rest, as_ideals[k]);
    bool contains_rest = true;
    for (const Monomial& g : rest.generators())
      if (!as_ideals[i].contains(g)) {
        contains_rest = false;
        break;
      }
    if (contains_rest && !rest.is_unit()) keep[i] = false;
  }
  std::vector<IrreducibleComponent> out;
  for (size_t i = 0; i < all.size(); ++i)
    if (keep[i]) out.push_back(all[i]);
  return out;
}

int codimension(const MonomialIdeal& J) {
  if (!J.is_proper()) throw std::invalid_argument("codimension: ideal must be proper and nonzero");
  const int n = J.nvars();
  if (n > 30) throw resource_limit_error("codimension: too many variables for subset scan");
  std::vector<unsigned> supports;
  for (const Monomial& g : J.generators()) {
    unsigned s = 0;
    for (int j = 0; j < n; ++j)
      if (g.exponent(j) != 0) s |= 1u << j;
    supports.push_back(s);
  }
  for (int k = 1; k <= n; ++k) {
    // all k-subsets of variables
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != k) continue;
      bool covers = true;
      for (unsigned s : supports)
        if ((s & mask) == 0) {
          covers = false;
          break;
        }
      if (covers) return k;
    }
  }
  return n;
}

bool is_equidimensional(const MonomialIdeal& J) {
  if (!J.is_proper()) throw std::invalid_argument("is_equidimensional: ideal must be proper and nonzero");
  auto comps = irreducible_decomposition(J);
  for (const auto& c : comps)
    if (c.codim() != comps.front().codim()) return false;
  return true;
}

long long HilbertData::hilbert_function(long long d) const {
  // dim (S/J)_d = sum_j K_j * C(d - j + n - 1, n - 1)
  long long acc = 0;
  for (size_t j = 0; j < numerator.size(); ++j) {
    long long shift = d - static_cast<long long>(j);
    if (shift < 0) continue;
    acc += numerator[j] * count_monomials_of_degree(nvars, shift);
  }
  return acc;
}

namespace {

std::vector<long long> numerator_by_subsets(const MonomialIdeal& J) {
  const size_t r = J.generator_count();
  const int n = J.nvars();
  std::vector<std::vector<int>> lcm_exps(size_t(1) << r);
  std::vector<long long> K{1};
  lcm_exps[0].assign(static_cast<size_t>(n), 0);
  for (size_t mask = 1; mask < lcm_exps.size(); ++mask) {
    size_t low = static_cast<size_t>(std::countr_zero(mask));
    const auto& prev = lcm_exps[mask & (mask - 1)];
    const Monomial& g = J.generators()[low];
    auto& cur = lcm_exps[mask];
    cur.resize(static_cast<size_t>(n));
    long long deg = 0;
    for (int j = 0; j < n; ++j) {
      cur[static_cast<size_t>(j)] = std::max(prev[static_cast<size_t>(j)], g.exponent(j));
      deg += cur[static_cast<size_t>(j)];
    }
    if (K.size() <= static_cast<size_t>(deg)) K.resize(static_cast<size_t>(deg) + 1, 0);
    K[static_cast<size_t>(deg)] += (std::popcount(mask) % 2 == 0) ? 1 : -1;
  }
  while (!K.empty() && K.back() == 0) K.pop_back();
  return K;
}

void add_scaled(std::vector<long long>& acc, const std::vector<long long>& v, long long shift,
                long long scale) {
  if (acc.size() < v.size() + static_cast<size_t>(shift))
    acc.resize(v.size() + static_cast<size_t>(shift), 0);
  for (size_t i = 0; i < v.size(); ++i) acc[i + static_cast<size_t>(shift)] += scale * v[i];
}

std::vector<long long> numerator_by_recursion(const MonomialIdeal& J) {
  if (J.is_zero()) return {1};
  if (J.is_unit()) return {};
  const auto& gens = J.generators();
  if (gens.size() == 1) {
    std::vector<long long> K(static_cast<size_t>(gens[0].degree()) + 1, 0);
    K[0] = 1;
    K.back() = -1;
    return K;
  }
  // Split off the last generator m: K(J) = K(J') - t^deg(m) K(J' : m).
  std::vector<Monomial> rest(gens.begin(), gens.end() - 1);
  const Monomial& m = gens.back();
  MonomialIdeal Jrest = MonomialIdeal::from_generators(J.nvars(), rest);
  std::vector<Monomial> colon_gens;
  for (const Monomial& g : Jrest.generators()) colon_gens.push_back(colon(g, m));
  MonomialIdeal Jcolon = MonomialIdeal::from_generators(J.nvars(), std::move(colon_gens));
  std::vector<long long> K = numerator_by_recursion(Jrest);
  add_scaled(K, numerator_by_recursion(Jcolon), m.degree(), -1);
  while (!K.empty() && K.back() == 0) K.pop_back();
  return K;
}

// Divide K by (1-t) `times` times; nullopt when any division is inexact.
std::optional<std::vector<long long>> divide_by_one_minus_t(std::vector<long long> K, int times) {
  for (int iter = 0; iter < times; ++iter) {
    long long run = 0;
    std::vector<long long> q;
    q.reserve(K.size());
    for (long long c : K) {
      run += c;
      q.push_back(run);
    }
    if (run != 0) return std::nullopt;  // remainder
    while (!q.empty() && q.back() == 0) q.pop_back();
    K = std::move(q);
  }
  return K;
}

}  // namespace

HilbertData hilbert_series(const MonomialIdeal& J, const HilbertOptions& opts) {
  HilbertData out;
  out.nvars = J.nvars();
  if (J.is_unit()) {
    out.dim = -1;
    return out;
  }
  if (J.generator_count() <= opts.subset_limit) {
    out.numerator = numerator_by_subsets(J);
  } else if (opts.allow_recursion) {
    out.numerator = numerator_by_recursion(J);
  } else {
    throw resource_limit_error("hilbert_series: generator count exceeds subset limit");
  }
  int codim = J.is_zero() ? 0 : codimension(J);
  out.dim = J.nvars() - codim;
  if (auto h = divide_by_one_minus_t(out.numerator, codim)) {
    bool nonneg = std::all_of(h->begin(), h->end(), [](long long v) { return v >= 0; });
    if (nonneg) out.h_vector = std::move(*h);
  }
  return out;
}

namespace {

struct TaylorCombinatorics {
  int n = 0;
  size_t r = 0;
  std::vector<std::vector<int>> lcm_exps;  // per subset mask
  std::vector<long long> lcm_deg;

  explicit TaylorCombinatorics(const MonomialIdeal& J) {
    n = J.nvars();
    r = J.generator_count();
    lcm_exps.resize(size_t(1) << r);
    lcm_deg.resize(size_t(1) << r, 0);
    lcm_exps[0].assign(static_cast<size_t>(n), 0);
    for (size_t mask = 1; mask < lcm_exps.size(); ++mask) {
      size_t low = static_cast<size_t>(std::countr_zero(mask));
      const auto& prev = lcm_exps[mask & (mask - 1)];
      const Monomial& g = J.generators()[low];
      auto& cur = lcm_exps[mask];
      cur.resize(static_cast<size_t>(n));
      long long deg = 0;
      for (int j = 0; j < n; ++j) {
        cur[static_cast<size_t>(j)] = std::max(prev[static_cast<size_t>(j)], g.exponent(j));
        deg += cur[static_cast<size_t>(j)];
      }
      lcm_deg[mask] = deg;
    }
  }
};

}  // namespace

BettiTable graded_betti(const MonomialIdeal& J, const BettiOptions& opts) {
  if (J.is_zero() || J.is_unit()) return {};
  if (J.generator_count() > opts.max_generators)
    throw resource_limit_error("graded_betti: generator count exceeds Taylor limit");
  TaylorCombinatorics tc(J);
  const size_t r = tc.r;
  // Group subset masks by (level = popcount, internal degree).
  std::map<std::pair<int, long long>, std::vector<size_t>> blocks;
  for (size_t mask = 1; mask < (size_t(1) << r); ++mask)
    blocks[{std::popcount(mask), tc.lcm_deg[mask]}].push_back(mask);

  // Rank of the unit-entry block of d_level at internal degree deg:
  // rows = level-1 subsets of the same lcm degree, cols = level subsets.
  auto block_rank = [&](int level, long long deg) -> long long {
    auto cit = blocks.find({level, deg});
    if (cit == blocks.end()) return 0;
    auto rit = blocks.find({level - 1, deg});
    if (level == 1 || rit == blocks.end()) return 0;
    const auto& cols = cit->second;
    const auto& rows = rit->second;
    std::map<size_t, int> row_index;
    for (size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = static_cast<int>(i);
    // sparse column-major unit-entry matrix, eliminated by columns
    std::vector<std::map<int, Rat>> sparse_cols(cols.size());
    for (size_t c = 0; c < cols.size(); ++c) {
      size_t A = cols[c];
      int k = 0;
      for (size_t bit = 0; bit < r; ++bit) {
        if (!(A & (size_t(1) << bit))) continue;
        ++k;  // bit is the k-th element of A (ascending)
        size_t B = A & ~(size_t(1) << bit);
        if (tc.lcm_deg[B] != deg) continue;
        if (tc.lcm_exps[B] != tc.lcm_exps[A]) continue;
        auto it = row_index.find(B);
        if (it == row_index.end()) continue;
        sparse_cols[c].emplace(it->second, (k % 2 == 0) ? Rat(1) : Rat(-1));
      }
    }
    if (opts.field == FieldMode::prime_field) {
      MatP m(static_cast<int>(cols.size()), static_cast<int>(rows.size()));
      for (size_t c = 0; c < cols.size(); ++c)
        for (const auto& [ri, v] : sparse_cols[c])
          m.at(static_cast<int>(c), ri) = Fp(v == 1 ? 1 : -1).value();
      return rank_mod_p(std::move(m));
    }
    return rank_sparse_rational(std::move(sparse_cols));
  };

  BettiTable out;
  for (const auto& [key, masks] : blocks) {
    auto [level, deg] = key;
    long long dim = static_cast<long long>(masks.size());
    long long beta = dim - block_rank(level, deg) - block_rank(level + 1, deg);
    if (beta != 0) out[{level, deg}] = beta;
  }
  return out;
}

HomologicalSummary depth_and_cm(const MonomialIdeal& J, const BettiOptions& opts) {
  if (J.is_zero() || J.is_unit())
    throw std::invalid_argument("depth_and_cm: ideal must be proper and nonzero");
  BettiTable betti = graded_betti(J, opts);
  HomologicalSummary out;
  for (const auto& [key, value] : betti)
    out.projective_dimension = std::max(out.projective_dimension, key.first);
  out.depth = J.nvars() - out.projective_dimension;
  out.dim = J.nvars() - codimension(J);
  out.cohen_macaulay = out.depth == out.dim;
  return out;
}

}  // namespace monolift
