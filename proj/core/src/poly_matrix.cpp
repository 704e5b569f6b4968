#include "monolift/poly_matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace monolift {

PolyMatrix::PolyMatrix(int nvars, std::vector<long long> row_shifts,
                       std::vector<long long> col_shifts)
    : nvars_(nvars), row_shifts_(std::move(row_shifts)), col_shifts_(std::move(col_shifts)) {
  entries_.assign(static_cast<size_t>(rows()) * cols(), SparsePoly(nvars_));
}

void PolyMatrix::set(int r, int c, SparsePoly p) {
  if (p.nvars() != nvars_) throw std::invalid_argument("matrix entry ambient mismatch");
  entries_[static_cast<size_t>(r) * cols() + c] = std::move(p);
}

bool PolyMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const SparsePoly& p) { return p.is_zero(); });
}

bool PolyMatrix::shifts_consistent() const {
  for (int r = 0; r < rows(); ++r)
    for (int c = 0; c < cols(); ++c) {
      const SparsePoly& p = at(r, c);
      if (p.is_zero()) continue;
      if (!p.is_homogeneous()) return false;
      if (p.degree() != col_shifts_[static_cast<size_t>(c)] - row_shifts_[static_cast<size_t>(r)])
        return false;
    }
  return true;
}

PolyMatrix matrix_product(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("matrix product: ambient mismatch");
  if (a.cols() != b.rows() || a.col_shifts() != b.row_shifts())
    throw std::invalid_argument("matrix product: shape or shift mismatch");
  PolyMatrix out(a.nvars(), a.row_shifts(), b.col_shifts());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) {
      SparsePoly acc(a.nvars());
      for (int k = 0; k < a.cols(); ++k) {
        if (a.at(r, k).is_zero() || b.at(k, c).is_zero()) continue;
        acc += a.at(r, k) * b.at(k, c);
      }
      out.set(r, c, std::move(acc));
    }
  return out;
}

long long graded_dim(const std::vector<long long>& shifts, int nvars, long long d) {
  long long total = 0;
  for (long long s : shifts)
    if (d - s >= 0) total += count_monomials_of_degree(nvars, d - s);
  return total;
}

MatQ graded_slice(const PolyMatrix& m, long long d) {
  const int nv = m.nvars();
  // Per-block monomial bases with global offsets.
  struct Block {
    std::vector<Monomial> basis;
    long long offset = 0;
  };
  auto build_blocks = [&](const std::vector<long long>& shifts) {
    std::vector<Block> blocks(shifts.size());
    long long off = 0;
    for (size_t i = 0; i < shifts.size(); ++i) {
      blocks[i].offset = off;
      long long deg = d - shifts[i];
      if (deg >= 0) blocks[i].basis = monomials_of_degree(nv, deg);
      off += static_cast<long long>(blocks[i].basis.size());
    }
    return blocks;
  };
  std::vector<Block> row_blocks = build_blocks(m.row_shifts());
  std::vector<Block> col_blocks = build_blocks(m.col_shifts());
  long long nrows = row_blocks.empty() ? 0 : row_blocks.back().offset +
                        static_cast<long long>(row_blocks.back().basis.size());
  long long ncols = col_blocks.empty() ? 0 : col_blocks.back().offset +
                        static_cast<long long>(col_blocks.back().basis.size());
  MatQ out(static_cast<int>(nrows), static_cast<int>(ncols));
  // Per-block lookup tables from monomial to basis position.  Blocks with the
  // same shift share a table.
  std::map<long long, std::map<Monomial, long long, ExpLess>> index_by_degree;
  for (size_t rb = 0; rb < row_blocks.size(); ++rb) {
    long long deg = d - m.row_shifts()[rb];
    if (deg < 0 || index_by_degree.count(deg)) continue;
    auto& table = index_by_degree[deg];
    for (size_t i = 0; i < row_blocks[rb].basis.size(); ++i)
      table.emplace(row_blocks[rb].basis[i], static_cast<long long>(i));
  }
  for (int c = 0; c < m.cols(); ++c) {
    for (size_t cb = 0; cb < col_blocks[static_cast<size_t>(c)].basis.size(); ++cb) {
      const Monomial& mu = col_blocks[static_cast<size_t>(c)].basis[cb];
      long long col = col_blocks[static_cast<size_t>(c)].offset + static_cast<long long>(cb);
      for (int r = 0; r < m.rows(); ++r) {
        const SparsePoly& entry = m.at(r, c);
        if (entry.is_zero()) continue;
        const auto& table = index_by_degree.at(d - m.row_shifts()[static_cast<size_t>(r)]);
        for (const auto& [em, ec] : entry.terms()) {
          Monomial target = product(em, mu);
          auto it = table.find(target);
          if (it == table.end()) throw std::logic_error("graded_slice: inhomogeneous entry");
          out.at(static_cast<int>(row_blocks[static_cast<size_t>(r)].offset + it->second),
                 static_cast<int>(col)) += ec;
        }
      }
    }
  }
  return out;
}

int rank_exact(const PolyMatrix& mat) {
  // Bareiss over the polynomial ring; divisions are exact.
  const int rows = mat.rows(), cols = mat.cols();
  std::vector<SparsePoly> w;
  w.reserve(static_cast<size_t>(rows) * cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) w.push_back(mat.at(r, c));
  auto at = [&](int r, int c) -> SparsePoly& { return w[static_cast<size_t>(r) * cols + c]; };
  TermOrder order;
  SparsePoly prev = SparsePoly::constant(mat.nvars(), 1);
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (!at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int c = col; c < cols; ++c) std::swap(at(piv, c), at(rank, c));
    const SparsePoly p = at(rank, col);
    for (int r = rank + 1; r < rows; ++r) {
      const SparsePoly f = at(r, col);
      for (int c = col + 1; c < cols; ++c) {
        SparsePoly v = p * at(r, c) - f * at(rank, c);
        if (v.is_zero()) {
          at(r, c) = v;
          continue;
        }
        auto q = exact_divide(v, prev, order);
        if (!q) throw std::logic_error("rank_exact: non-exact Bareiss division");
        at(r, c) = std::move(*q);
      }
      at(r, col) = SparsePoly::zero(mat.nvars());
    }
    prev = p;
    ++rank;
  }
  return rank;
}

int randomized_rank(const PolyMatrix& m, std::uint64_t seed, int trials, FieldMode mode) {
  std::mt19937_64 rng(seed);
  int best = 0;
  for (int trial = 0; trial < trials; ++trial) {
    MatQ spec(m.rows(), m.cols());
    std::vector<Rat> values(static_cast<size_t>(m.nvars()));
    std::uniform_int_distribution<long> dist(1, 1 << 20);
    for (auto& v : values) v = Rat(dist(rng));
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) {
        const SparsePoly& p = m.at(r, c);
        Rat acc(0);
        for (const auto& [mono, coef] : p.terms()) {
          Rat term = coef;
          for (int j = 0; j < m.nvars(); ++j)
            for (int e = 0; e < mono.exponent(j); ++e) term *= values[static_cast<size_t>(j)];
          acc += term;
        }
        spec.at(r, c) = acc;
      }
    best = std::max(best, rank_in_mode(spec, mode));
  }
  return best;
}

}  // namespace monolift
