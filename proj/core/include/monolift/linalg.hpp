// Dense exact matrices and ranks.  Rational ranks go through fraction-free
// (Bareiss) elimination on a denominator-cleared integer matrix; GF(p) ranks
// use plain elimination.  For an integer matrix, rank mod p never exceeds the
// rational rank, which makes vanishing homology mod p an unconditional
// certificate of vanishing homology over the rationals.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "monolift/field.hpp"

namespace monolift {

template <typename T>
class DenseMat {
 public:
  DenseMat() = default;
  DenseMat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const T& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using MatQ = DenseMat<Rat>;
using MatZ = DenseMat<Int>;
using MatP = DenseMat<std::int64_t>;  // entries in [0, Fp::P)

// Fraction-free Gaussian elimination (Bareiss) rank; exact.
int rank_bareiss(MatZ m);
int rank_rational(const MatQ& m);

// Elimination over GF(32003).
int rank_mod_p(MatP m);

MatZ clear_denominators(const MatQ& m);   // row-wise scaling, rank-preserving
MatP reduce_mod_p(const MatQ& m);         // throws if a denominator vanishes mod p

// Rank in the requested field mode.  In prime-field mode this is a lower
// bound for the rational rank (equal in all but degenerate reductions).
int rank_in_mode(const MatQ& m, FieldMode mode);

// Exact rational rank by sparse elimination (rows are column -> value maps);
// suited to the near-incidence matrices of the Tor computations.
int rank_sparse_rational(std::vector<std::map<int, Rat>> rows);

}  // namespace monolift
