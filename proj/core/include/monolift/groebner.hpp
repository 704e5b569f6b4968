// A deliberately small Buchberger engine over the rationals, used to verify
// the initial-ideal claim and to cross-check lifted-ideal membership at desk
// scale.  Hard resource limits; this is an oracle, not a CAS.
#pragma once

#include <vector>

#include "monolift/poly.hpp"
#include "monolift/taylor.hpp"

namespace monolift {

struct BuchbergerLimits {
  size_t max_generators = 8;
  long long max_total_degree = 8;
  long long max_pair_reductions = 50000;
};

struct GroebnerBasis {
  std::vector<SparsePoly> basis;  // reduced, monic, deterministic order
  TermOrder order;
  bool reduced = false;
  bool completed = false;         // false when a resource limit stopped the run
  long long pair_reductions = 0;
};

GroebnerBasis buchberger(std::vector<SparsePoly> gens, const TermOrder& order,
                         const BuchbergerLimits& limits = {});

// Full normal form of p modulo the basis.
SparsePoly normal_form(const SparsePoly& p, const std::vector<SparsePoly>& basis,
                       const TermOrder& order);

struct InitialIdealResult {
  bool completed = false;  // Buchberger ran to completion within limits
  bool verified = false;   // in(I) equals J extended to n+t variables
  size_t basis_size = 0;
  MonomialIdeal initial_ideal{0};
};

// Cor-style oracle: with the degree-lex order x_1 > .. > x_n > u_1 > .. > u_t,
// the initial ideal of the lifted ideal is J itself (extended).
InitialIdealResult verify_initial_ideal(const MonomialIdeal& J, const LiftingMatrix& A,
                                        const BuchbergerLimits& limits = {});

}  // namespace monolift
