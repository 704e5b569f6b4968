// Ideal-level algebra on monomial ideals: intersection, quotient,
// irreducible decomposition, codimension, Hilbert series, graded Betti
// numbers and the depth / Cohen-Macaulay dichotomy.
#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "monolift/field.hpp"
#include "monolift/monomial.hpp"

namespace monolift {

class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(std::span<const MonomialIdeal> ideals, int nvars);

// Ideal quotient (J : K).
MonomialIdeal quotient(const MonomialIdeal& J, const MonomialIdeal& K);

// A complete intersection (X_{j1}^{a1}, ..., X_{jp}^{ap}); keys are variable
// indices, values the positive exponents.
struct IrreducibleComponent {
  std::map<int, int> entries;

  MonomialIdeal to_ideal(int nvars) const;
  int codim() const { return static_cast<int>(entries.size()); }
  friend bool operator==(const IrreducibleComponent&, const IrreducibleComponent&) = default;
  friend auto operator<=>(const IrreducibleComponent&, const IrreducibleComponent&) = default;
};

// Irredundant decomposition into irreducible components; intersecting the
// result returns exactly J.
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& J);

// Minimum size of a variable set meeting the support of every generator.
int codimension(const MonomialIdeal& J);

bool is_equidimensional(const MonomialIdeal& J);

// map (homological index i, internal degree j) -> beta_{i,j}; i >= 1
// (index 1 = minimal generators; the rank-one degree-0 head is omitted).
using BettiTable = std::map<std::pair<int, long long>, long long>;

struct HilbertOptions {
  size_t subset_limit = 20;    // inclusion-exclusion route cap
  bool allow_recursion = true; // pivot recursion for larger generator counts
};

struct HilbertData {
  std::vector<long long> numerator;  // K(t); Hilbert series = K(t)/(1-t)^n
  int nvars = 0;
  int dim = -1;  // Krull dimension of the quotient; -1 for the unit ideal
  std::optional<std::vector<long long>> h_vector;  // set when division is exact

  // Hilbert function of the quotient at degree d, from the numerator.
  long long hilbert_function(long long d) const;
};

HilbertData hilbert_series(const MonomialIdeal& J, const HilbertOptions& opts = {});

struct BettiOptions {
  size_t max_generators = 14;  // the Taylor complex has 2^r terms
  FieldMode field = FieldMode::rationals;
};

BettiTable graded_betti(const MonomialIdeal& J, const BettiOptions& opts = {});

struct HomologicalSummary {
  int projective_dimension = 0;  // of the quotient
  int depth = 0;
  int dim = 0;
  bool cohen_macaulay = false;
};

HomologicalSummary depth_and_cm(const MonomialIdeal& J, const BettiOptions& opts = {});

}  // namespace monolift
