// Matrices of polynomials between graded free modules, with degree shifts.
// Entry (r, c) is zero or homogeneous of degree col_shift[c] - row_shift[r].
// Rows index the target free module, columns the source.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "monolift/linalg.hpp"
#include "monolift/poly.hpp"

namespace monolift {

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int nvars, std::vector<long long> row_shifts, std::vector<long long> col_shifts);

  int nvars() const { return nvars_; }
  int rows() const { return static_cast<int>(row_shifts_.size()); }
  int cols() const { return static_cast<int>(col_shifts_.size()); }
  const std::vector<long long>& row_shifts() const { return row_shifts_; }
  const std::vector<long long>& col_shifts() const { return col_shifts_; }

  const SparsePoly& at(int r, int c) const { return entries_[static_cast<size_t>(r) * cols() + c]; }
  void set(int r, int c, SparsePoly p);

  bool is_zero() const;
  // Checks the homogeneity invariant of every entry against the shifts.
  bool shifts_consistent() const;

 private:
  int nvars_ = 0;
  std::vector<long long> row_shifts_, col_shifts_;
  std::vector<SparsePoly> entries_;
};

PolyMatrix matrix_product(const PolyMatrix& a, const PolyMatrix& b);

// Dimension of the degree-d slice of a free module with the given shifts.
long long graded_dim(const std::vector<long long>& shifts, int nvars, long long d);

// Matrix of the degree-d graded piece of the map, in per-block monomial
// bases ordered descending degree-lex (x's before u's).
MatQ graded_slice(const PolyMatrix& m, long long d);

// Fraction-free elimination rank over the polynomial fraction field.
int rank_exact(const PolyMatrix& m);

// Max rank over `trials` random scalar substitutions; certified lower bound
// for rank_exact, equal to it generically.
int randomized_rank(const PolyMatrix& m, std::uint64_t seed, int trials,
                    FieldMode mode = FieldMode::rationals);

}  // namespace monolift
