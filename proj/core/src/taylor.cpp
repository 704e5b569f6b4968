#include "monolift/taylor.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <stdexcept>

namespace monolift {

void LiftingMatrix::validate() const {
  if (n < 1 || t < 0) throw std::invalid_argument("lifting matrix: bad dimensions");
  if (static_cast<int>(rows.size()) != n) throw std::invalid_argument("lifting matrix: row count");
  for (int j = 0; j < n; ++j)
    for (const SparsePoly& L : rows[static_cast<size_t>(j)]) {
      if (L.nvars() != nvars()) throw std::invalid_argument("lifting matrix: entry ambient");
      if (L.is_zero() || L.degree() != 1 || !L.is_homogeneous())
        throw std::invalid_argument("lifting matrix: entries must be nonzero linear forms");
      if (mode == Mode::restricted) {
        for (const auto& [m, c] : L.terms())
          for (int v = 0; v < n; ++v)
            if (v != j && m.exponent(v) != 0)
              throw std::invalid_argument("restricted lifting matrix: row " + std::to_string(j + 1) +
                                          " entry involves a foreign x-variable");
        if (L.coefficient(Monomial::variable(nvars(), j)) == 0)
          throw std::invalid_argument("restricted lifting matrix: zero x-coefficient");
      }
    }
}

LiftingMatrix vandermonde_lifting_matrix(int n, int t, const std::vector<int>& row_lengths,
                                         const std::vector<Rat>& scalars) {
  if (static_cast<int>(row_lengths.size()) != n)
    throw std::invalid_argument("vandermonde: need one length per row");
  size_t p = 0;
  for (int nk : row_lengths) p += static_cast<size_t>(std::max(nk, 0));
  if (scalars.size() < p) throw std::invalid_argument("vandermonde: not enough scalars");
  std::set<Rat> distinct(scalars.begin(), scalars.begin() + static_cast<long>(p));
  if (distinct.size() != p) throw std::invalid_argument("vandermonde: scalars must be distinct");

  LiftingMatrix A;
  A.n = n;
  A.t = t;
  A.mode = LiftingMatrix::Mode::restricted;
  A.provenance = "vandermonde";
  A.rows.resize(static_cast<size_t>(n));
  size_t offset = 0;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < row_lengths[static_cast<size_t>(k)]; ++i) {
      const Rat& b = scalars[offset++];
      std::vector<Rat> coeffs(static_cast<size_t>(n + t), Rat(0));
      coeffs[static_cast<size_t>(k)] = 1;
      Rat power(1);
      for (int s = 1; s <= t; ++s) {
        power *= b;
        coeffs[static_cast<size_t>(n + s - 1)] = power;
      }
      A.rows[static_cast<size_t>(k)].push_back(SparsePoly::linear_form(coeffs));
    }
  }
  A.validate();
  return A;
}

LiftingMatrix random_lifting_matrix(int n, int t, const std::vector<int>& row_lengths,
                                    LiftingMatrix::Mode mode, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(1, 1000003);
  LiftingMatrix A;
  A.n = n;
  A.t = t;
  A.mode = mode;
  A.provenance = "random(seed=" + std::to_string(seed) + ")";
  A.rows.resize(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < row_lengths[static_cast<size_t>(j)]; ++i) {
      std::vector<Rat> coeffs(static_cast<size_t>(n + t), Rat(0));
      if (mode == LiftingMatrix::Mode::restricted) {
        coeffs[static_cast<size_t>(j)] = 1;
        for (int s = 0; s < t; ++s) coeffs[static_cast<size_t>(n + s)] = Rat(dist(rng));
      } else {
        for (int v = 0; v < n + t; ++v) coeffs[static_cast<size_t>(v)] = Rat(dist(rng));
      }
      A.rows[static_cast<size_t>(j)].push_back(SparsePoly::linear_form(coeffs));
    }
  A.validate();
  return A;
}

namespace {

// Coefficient row of a linear form.
std::vector<Rat> coeff_row(const SparsePoly& L) {
  std::vector<Rat> out(static_cast<size_t>(L.nvars()), Rat(0));
  for (const auto& [m, c] : L.terms())
    for (int j = 0; j < L.nvars(); ++j)
      if (m.exponent(j) != 0) out[static_cast<size_t>(j)] = c;
  return out;
}

MatQ coeff_matrix(const LiftingMatrix& A, const std::vector<std::pair<int, int>>& picks) {
  MatQ m(static_cast<int>(picks.size()), A.nvars());
  for (size_t i = 0; i < picks.size(); ++i) {
    auto row = coeff_row(A.entry(picks[i].first + 1, picks[i].second + 1));
    for (int c = 0; c < A.nvars(); ++c) m.at(static_cast<int>(i), c) = row[static_cast<size_t>(c)];
  }
  return m;
}

// `expected` is a structural upper bound, so reaching it modulo p certifies
// the rational rank; only drops need the exact fallback.
bool coeff_rank_is(const LiftingMatrix& A, const std::vector<std::pair<int, int>>& picks,
                   int expected) {
  MatQ m = coeff_matrix(A, picks);
  try {
    if (rank_mod_p(reduce_mod_p(m)) == expected) return true;
  } catch (const std::domain_error&) {
    // denominator hit the characteristic; the exact path below decides
  }
  return rank_rational(m) == expected;
}

}  // namespace

GenericityReport check_genericity(const LiftingMatrix& A, const MonomialIdeal& J) {
  A.validate();
  GenericityReport report;
  // Entries actually used by J: (row j, col i) with i <= N_j.
  MaxExponents N = max_exponents(J);
  std::vector<std::pair<int, int>> used;  // 0-based (row, col)
  for (int j = 0; j < A.n; ++j) {
    int nj = J.is_zero() ? A.row_length(j) : N.per_variable[static_cast<size_t>(j)];
    nj = std::min(nj, A.row_length(j));
    for (int i = 0; i < nj; ++i) used.push_back({j, i});
  }
  const int cap = A.nvars();
  // All subsets of used entries of size <= n+t, by backtracking.
  std::vector<std::pair<int, int>> picks;
  auto record_violation = [&](const std::string& what) { report.violations.push_back(what); };
  auto check_picks = [&]() {
    ++report.subsets_checked;
    int k = static_cast<int>(picks.size());
    std::set<int> rows_used;
    for (auto& [j, i] : picks) rows_used.insert(j);
    int expected;
    if (A.mode == LiftingMatrix::Mode::restricted)
      expected = std::min(static_cast<int>(rows_used.size()) + A.t, k);
    else
      expected = std::min(A.nvars(), k);
    if (!coeff_rank_is(A, picks, expected)) {
      std::string s = "rank below expected " + std::to_string(expected) + " for entries";
      for (auto& [j, i] : picks) s += " L[" + std::to_string(j + 1) + "," + std::to_string(i + 1) + "]";
      record_violation(s);
    }
  };
  auto rec = [&](auto&& self, size_t from) -> void {
    if (!picks.empty()) check_picks();
    if (static_cast<int>(picks.size()) == cap) return;
    for (size_t idx = from; idx < used.size(); ++idx) {
      picks.push_back(used[idx]);
      self(self, idx + 1);
      picks.pop_back();
    }
  };
  rec(rec, 0);

  if (A.mode == LiftingMatrix::Mode::general) {
    // Row products must cut out a reduced complete intersection: no two
    // entries of one row proportional, and every one-per-row selection of
    // used entries independent of rank n.
    for (int j = 0; j < A.n; ++j)
      for (int a = 0; a < A.row_length(j); ++a)
        for (int b = a + 1; b < A.row_length(j); ++b) {
          std::vector<std::pair<int, int>> pair = {{j, a}, {j, b}};
          if (!coeff_rank_is(A, pair, 2))
            record_violation("row " + std::to_string(j + 1) + " entries " + std::to_string(a + 1) +
                             "," + std::to_string(b + 1) + " proportional");
        }
    std::vector<std::pair<int, int>> diag(static_cast<size_t>(A.n));
    auto rec2 = [&](auto&& self, int j) -> void {
      if (j == A.n) {
        ++report.subsets_checked;
        if (!coeff_rank_is(A, diag, A.n)) {
          std::string s = "one-per-row selection rank below " + std::to_string(A.n) + ":";
          for (auto& [row, col] : diag)
            s += " L[" + std::to_string(row + 1) + "," + std::to_string(col + 1) + "]";
          record_violation(s);
        }
        return;
      }
      for (int i = 0; i < A.row_length(j); ++i) {
        diag[static_cast<size_t>(j)] = {j, i};
        self(self, j + 1);
      }
    };
    rec2(rec2, 0);
  }
  report.pass = report.violations.empty();
  return report;
}

SparsePoly lift_monomial(const Monomial& m, const LiftingMatrix& A) {
  if (m.nvars() != A.n) throw std::invalid_argument("lift_monomial: ambient mismatch");
  SparsePoly acc = SparsePoly::constant(A.nvars(), 1);
  for (int j = 0; j < A.n; ++j) {
    int a = m.exponent(j);
    if (a > A.row_length(j))
      throw std::invalid_argument("lift_monomial: exponent exceeds row length of lifting matrix");
    for (int i = 1; i <= a; ++i) acc = acc * A.entry(j + 1, i);
  }
  return acc;
}

std::vector<SparsePoly> lifted_ideal(const MonomialIdeal& J, const LiftingMatrix& A) {
  std::vector<SparsePoly> out;
  out.reserve(J.generator_count());
  for (const Monomial& g : J.generators()) out.push_back(lift_monomial(g, A));
  return out;
}

namespace {

// Partial product of the lifted quotient m_A / m_B along row j: entries
// a_j(B)+1 .. a_j(A); these need not start at L_{j,1}.
SparsePoly lifted_quotient(const std::vector<int>& expA, const std::vector<int>& expB,
                           const LiftingMatrix& A) {
  SparsePoly acc = SparsePoly::constant(A.nvars(), 1);
  for (int j = 0; j < A.n; ++j) {
    for (int i = expB[static_cast<size_t>(j)] + 1; i <= expA[static_cast<size_t>(j)]; ++i)
      acc = acc * A.entry(j + 1, i);
  }
  return acc;
}

FreeComplex build_complex(int n, const std::vector<Monomial>& gens, const LiftingMatrix* A,
                          const TaylorOptions& opts) {
  if (gens.empty()) throw std::invalid_argument("taylor_complex: need at least one generator");
  for (const Monomial& g : gens)
    if (g.nvars() != n || g.is_unit())
      throw std::invalid_argument("taylor_complex: bad generator list");
  const size_t r = gens.size();
  if (r > opts.max_generators) throw resource_limit_error("taylor_complex: generator limit exceeded");
  const int nv = A ? A->nvars() : n;
  if (A && A->n != n) throw std::invalid_argument("lift_taylor_complex: ambient mismatch");

  // lcm exponents per subset mask
  std::vector<std::vector<int>> lcm_exps(size_t(1) << r);
  lcm_exps[0].assign(static_cast<size_t>(n), 0);
  for (size_t mask = 1; mask < lcm_exps.size(); ++mask) {
    size_t low = static_cast<size_t>(std::countr_zero(mask));
    const auto& prev = lcm_exps[mask & (mask - 1)];
    const Monomial& g = gens[low];
    auto& cur = lcm_exps[mask];
    cur.resize(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j)
      cur[static_cast<size_t>(j)] = std::max(prev[static_cast<size_t>(j)], g.exponent(j));
  }
  auto deg_of = [&](size_t mask) {
    long long d = 0;
    for (int e : lcm_exps[mask]) d += e;
    return d;
  };

  FreeComplex c;
  c.nvars = nv;
  c.r = r;
  c.basis.resize(r + 1);
  c.shifts.resize(r + 1);
  c.diff.resize(r + 1);
  for (size_t mask = 0; mask < lcm_exps.size(); ++mask) {
    int level = std::popcount(mask);
    c.basis[static_cast<size_t>(level)].push_back(static_cast<std::uint32_t>(mask));
    c.shifts[static_cast<size_t>(level)].push_back(deg_of(mask));
  }
  // bitmask order is already ascending within each level
  for (size_t level = 1; level <= r; ++level) {
    std::map<std::uint32_t, int> row_index;
    for (size_t i = 0; i < c.basis[level - 1].size(); ++i) row_index[c.basis[level - 1][i]] = static_cast<int>(i);
    PolyMatrix d(nv, c.shifts[level - 1], c.shifts[level]);
    for (size_t col = 0; col < c.basis[level].size(); ++col) {
      std::uint32_t mask = c.basis[level][col];
      int k = 0;
      for (size_t bit = 0; bit < r; ++bit) {
        if (!(mask & (std::uint32_t(1) << bit))) continue;
        ++k;  // bit is the k-th element of the subset, ascending
        std::uint32_t sub = mask & ~(std::uint32_t(1) << bit);
        SparsePoly entry(nv);
        if (A) {
          entry = lifted_quotient(lcm_exps[mask], lcm_exps[sub], *A);
        } else {
          std::vector<int> q(static_cast<size_t>(n));
          for (int j = 0; j < n; ++j)
            q[static_cast<size_t>(j)] = lcm_exps[mask][static_cast<size_t>(j)] -
                                        lcm_exps[sub][static_cast<size_t>(j)];
          entry = SparsePoly::from_monomial(Monomial(std::move(q)));
        }
        if (k % 2 == 1) entry = -entry;
        d.set(row_index.at(sub), static_cast<int>(col), std::move(entry));
      }
    }
    c.diff[level] = std::move(d);
  }
  return c;
}

}  // namespace

FreeComplex taylor_complex(const MonomialIdeal& J, const TaylorOptions& opts) {
  if (J.is_zero() || J.is_unit())
    throw std::invalid_argument("taylor_complex: ideal must be proper and nonzero");
  return build_complex(J.nvars(), J.generators(), nullptr, opts);
}

FreeComplex lift_taylor_complex(const MonomialIdeal& J, const LiftingMatrix& A,
                                const TaylorOptions& opts) {
  if (J.is_zero() || J.is_unit())
    throw std::invalid_argument("taylor_complex: ideal must be proper and nonzero");
  A.validate();
  return build_complex(J.nvars(), J.generators(), &A, opts);
}

FreeComplex taylor_complex_ordered(int nvars, const std::vector<Monomial>& gens,
                                   const TaylorOptions& opts) {
  return build_complex(nvars, gens, nullptr, opts);
}

FreeComplex lift_taylor_complex_ordered(const std::vector<Monomial>& gens, const LiftingMatrix& A,
                                        const TaylorOptions& opts) {
  A.validate();
  return build_complex(A.n, gens, &A, opts);
}

bool verify_complex(const FreeComplex& c) {
  for (size_t level = 2; level <= c.r; ++level)
    if (!matrix_product(c.diff[level - 1], c.diff[level]).is_zero()) return false;
  return true;
}

long long default_degree_bound(const MonomialIdeal& J) {
  long long maxdeg = 0;
  for (const Monomial& g : J.generators()) maxdeg = std::max(maxdeg, g.degree());
  return maxdeg + 4;
}

ExactnessReport verify_exactness(const FreeComplex& c, long long degree_bound, FieldMode mode,
                                 std::uint64_t seed, int trials) {
  ExactnessReport report;
  report.degree_bound = degree_bound;
  report.seed = seed;
  report.trials = trials;

  // (a) Buchsbaum-Eisenbud rank sums with randomized ranks.
  report.generic_rank_ok = true;
  std::vector<int> ranks(c.r + 2, 0);
  for (size_t level = 1; level <= c.r; ++level)
    ranks[level] = randomized_rank(c.diff[level], seed + level, trials, mode);
  for (size_t level = 1; level <= c.r; ++level) {
    long long expected = static_cast<long long>(c.basis[level].size());
    if (ranks[level] + ranks[level + 1] != expected) {
      report.generic_rank_ok = false;
      report.failures.push_back("rank d_" + std::to_string(level) + " + rank d_" +
                                std::to_string(level + 1) + " = " +
                                std::to_string(ranks[level] + ranks[level + 1]) +
                                " != " + std::to_string(expected));
    }
  }

  // (b) degreewise homology certificate.
  report.degreewise_ok = true;
  for (long long d = 0; d <= degree_bound; ++d) {
    std::vector<long long> slice_rank(c.r + 2, 0);
    std::vector<long long> slice_dim(c.r + 1, 0);
    for (size_t level = 1; level <= c.r; ++level) {
      MatQ m = graded_slice(c.diff[level], d);
      slice_rank[level] = rank_in_mode(m, mode);
      slice_dim[level] = m.cols();
    }
    for (size_t level = 1; level <= c.r; ++level) {
      long long homology = slice_dim[level] - slice_rank[level] - slice_rank[level + 1];
      if (homology != 0) {
        report.degreewise_ok = false;
        report.failures.push_back("homology dim " + std::to_string(homology) + " at position " +
                                  std::to_string(level) + ", degree " + std::to_string(d));
      }
    }
  }
  return report;
}

BettiTable tor_table(const FreeComplex& c, FieldMode mode) {
  // Kill every non-unit entry, then take degreewise homology.
  std::map<std::pair<int, long long>, std::vector<size_t>> blocks;  // (level, shift) -> positions
  for (size_t level = 1; level <= c.r; ++level)
    for (size_t i = 0; i < c.basis[level].size(); ++i)
      blocks[{static_cast<int>(level), c.shifts[level][i]}].push_back(i);

  auto block_rank = [&](int level, long long deg) -> long long {
    if (level < 1 || level > static_cast<int>(c.r)) return 0;
    auto cit = blocks.find({level, deg});
    if (cit == blocks.end()) return 0;
    std::vector<size_t> rows;
    if (level == 1) return 0;  // level-0 shift is 0 < deg, no unit entries
    auto rit = blocks.find({level - 1, deg});
    if (rit == blocks.end()) return 0;
    rows = rit->second;
    std::map<size_t, int> row_index;
    for (size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = static_cast<int>(i);
    const PolyMatrix& dmat = c.diff[static_cast<size_t>(level)];
    std::vector<std::map<int, Rat>> sparse_cols(cit->second.size());
    for (size_t cc = 0; cc < cit->second.size(); ++cc) {
      int col = static_cast<int>(cit->second[cc]);
      for (auto [rowpos, ri] : row_index) {
        const SparsePoly& e = dmat.at(static_cast<int>(rowpos), col);
        if (e.is_zero() || !e.is_constant()) continue;
        sparse_cols[cc].emplace(ri, e.coefficient(Monomial::unit(c.nvars)));
      }
    }
    if (mode == FieldMode::prime_field) {
      MatP m(static_cast<int>(sparse_cols.size()), static_cast<int>(rows.size()));
      for (size_t cc = 0; cc < sparse_cols.size(); ++cc)
        for (const auto& [ri, v] : sparse_cols[cc]) m.at(static_cast<int>(cc), ri) = Fp::from_rational(v).value();
      return rank_mod_p(std::move(m));
    }
    return rank_sparse_rational(std::move(sparse_cols));
  };

  BettiTable out;
  for (const auto& [key, positions] : blocks) {
    auto [level, deg] = key;
    long long beta = static_cast<long long>(positions.size()) - block_rank(level, deg) -
                     block_rank(level + 1, deg);
    if (beta != 0) out[{level, deg}] = beta;
  }
  return out;
}

bool betti_agreement(const MonomialIdeal& J, const LiftingMatrix& A, long long degree_bound,
                     const TaylorOptions& opts) {
  FreeComplex lifted = lift_taylor_complex(J, A, opts);
  BettiTable lifted_table = tor_table(lifted);
  BettiOptions bopts;
  bopts.max_generators = opts.max_generators;
  BettiTable base = graded_betti(J, bopts);
  // Compare up to the requested internal degree.
  for (const auto& [key, value] : base)
    if (key.second <= degree_bound && (!lifted_table.count(key) || lifted_table.at(key) != value))
      return false;
  for (const auto& [key, value] : lifted_table)
    if (key.second <= degree_bound && (!base.count(key) || base.at(key) != value)) return false;
  return true;
}

}  // namespace monolift
