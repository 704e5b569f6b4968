// Lifting matrices, lifted generators, Taylor complexes of monomial ideals
// and their lifted counterparts, and the verification machinery: complex
// check, degreewise exactness certificates, Betti agreement.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monolift/ideal_algebra.hpp"
#include "monolift/poly_matrix.hpp"

namespace monolift {

// The n x N array [L_{j,i}] of linear forms in n+t variables.  Row j replaces
// powers of x_j.  In restricted mode every entry of row j lies in
// k[x_j, u_1..u_t] and has nonzero x_j coefficient; general mode allows
// arbitrary entries and is only required to cut out a reduced complete
// intersection row-product by row-product (pseudo-lifting).
struct LiftingMatrix {
  enum class Mode { restricted, general };

  int n = 0;
  int t = 0;
  Mode mode = Mode::restricted;
  std::vector<std::vector<SparsePoly>> rows;  // rows[j][i-1] = L_{j,i}
  std::string provenance = "explicit";

  int nvars() const { return n + t; }
  // 0-based row index.
  int row_length(int j) const { return static_cast<int>(rows[static_cast<size_t>(j)].size()); }
  // 1-based row and column, matching the L_{j,i} notation.
  const SparsePoly& entry(int j, int i) const {
    return rows[static_cast<size_t>(j - 1)][static_cast<size_t>(i - 1)];
  }

  // Structural sanity: degrees, ambient, restricted-mode support pattern.
  void validate() const;
};

// Rows built from the power blocks of a Vandermonde matrix on p = sum(N_j)
// distinct scalars: entry i of row k is x_k + b^1 u_1 + ... + b^t u_t for the
// block's i-th scalar b.
LiftingMatrix vandermonde_lifting_matrix(int n, int t, const std::vector<int>& row_lengths,
                                         const std::vector<Rat>& scalars);

LiftingMatrix random_lifting_matrix(int n, int t, const std::vector<int>& row_lengths,
                                    LiftingMatrix::Mode mode, std::uint64_t seed);

struct GenericityReport {
  bool pass = false;
  size_t subsets_checked = 0;
  std::vector<std::string> violations;  // empty iff pass
};

// Verifies the codimension condition on every subset (up to size n+t) of the
// matrix entries actually used by J: the coefficient matrix of k chosen
// entries must have rank min(#rows used + t, k) in restricted mode and
// min(n + t, k) in general mode.  General mode additionally requires entries
// of a row pairwise non-proportional and every one-per-row selection to have
// full rank n (reduced complete intersection of the row products).
GenericityReport check_genericity(const LiftingMatrix& A, const MonomialIdeal& J);

// The homogeneous polynomial attached to a monomial: for each j, the product
// of the first a_j entries of row j.
SparsePoly lift_monomial(const Monomial& m, const LiftingMatrix& A);

std::vector<SparsePoly> lifted_ideal(const MonomialIdeal& J, const LiftingMatrix& A);

// Subset-indexed free complex; level s has one basis element e_A per
// s-subset A of generators, ordered by bitmask value, with shift deg m_A.
// diff[s] maps level s to level s-1 (s = 1..r); level 0 is the ring.
// Signs follow the subset convention (-1)^k for A = B + {i_k} at every
// level, so the augmentation row diff[1] carries -m_A; negating the level-0
// basis vector recovers the customary positive display.
struct FreeComplex {
  int nvars = 0;
  size_t r = 0;
  std::vector<std::vector<std::uint32_t>> basis;     // [level] -> subset masks
  std::vector<std::vector<long long>> shifts;        // [level] -> deg of each basis element
  std::vector<PolyMatrix> diff;                      // diff[s], s >= 1; diff[0] empty

  int length() const { return static_cast<int>(r); }
};

struct TaylorOptions {
  size_t max_generators = 14;
};

FreeComplex taylor_complex(const MonomialIdeal& J, const TaylorOptions& opts = {});
FreeComplex lift_taylor_complex(const MonomialIdeal& J, const LiftingMatrix& A,
                                const TaylorOptions& opts = {});

// Same constructions with an explicit generator sequence; the subset basis
// and signs depend on that order.
FreeComplex taylor_complex_ordered(int nvars, const std::vector<Monomial>& gens,
                                   const TaylorOptions& opts = {});
FreeComplex lift_taylor_complex_ordered(const std::vector<Monomial>& gens, const LiftingMatrix& A,
                                        const TaylorOptions& opts = {});

// Every consecutive composite is exactly the zero matrix.
bool verify_complex(const FreeComplex& c);

struct ExactnessReport {
  bool generic_rank_ok = false;      // probabilistic Buchsbaum-Eisenbud rank check
  bool degreewise_ok = false;        // unconditional certificate up to degree_bound
  long long degree_bound = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<std::string> failures;
  bool exact() const { return generic_rank_ok && degreewise_ok; }
};

// (a) randomized rank check: rank d_{k+1} + rank d_k = rank F_k for all k;
// (b) for each internal degree d <= degree_bound, exact slice ranks certify
//     ker = im at every positive homological position.  Prime-field slice
//     ranks certify rational exactness unconditionally (rank can only drop
//     modulo p, and homology dimensions are nonnegative).
ExactnessReport verify_exactness(const FreeComplex& c, long long degree_bound,
                                 FieldMode mode = FieldMode::prime_field,
                                 std::uint64_t seed = 1, int trials = 3);

// Degreewise homology ranks of the complex tensored with the residue field:
// entries that are not units die.  For a lifted Taylor complex this is the
// graded Betti table of the lifted quotient.
BettiTable tor_table(const FreeComplex& c, FieldMode mode = FieldMode::rationals);

// Tor ranks of the lifted complex coincide with graded_betti(J).
bool betti_agreement(const MonomialIdeal& J, const LiftingMatrix& A, long long degree_bound,
                     const TaylorOptions& opts = {});

// Default certificate bound: max generator degree + 4.
long long default_degree_bound(const MonomialIdeal& J);

}  // namespace monolift
