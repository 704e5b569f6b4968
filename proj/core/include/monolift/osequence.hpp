// O-sequence validation (Macaulay growth), differencing, lex-segment ideal
// construction from an h-vector, and the pipeline from an admissible Hilbert
// function to an arithmetically Cohen-Macaulay generalized stick figure.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "monolift/configuration.hpp"
#include "monolift/ideal_algebra.hpp"
#include "monolift/taylor.hpp"

namespace monolift {

// Maximal admissible value of c_{d+1} given c_d = c (Macaulay bound c^<d>,
// via the d-th binomial representation).
long long macaulay_growth(long long c, int d);

// Finite sequences are read as eventually zero (dimension-0 windows).
bool is_o_sequence(const std::vector<long long>& s);

// First difference, with the convention c_{-1} = 0; `times`-fold.
std::vector<long long> difference(const std::vector<long long>& s, int times = 1);

bool is_t_differentiable(const std::vector<long long>& s, int t);

// Accumulates t-fold partial sums out to `length` entries: the dimension-t
// Hilbert function whose t-th difference is h.
std::vector<long long> integrate(const std::vector<long long>& h, int t, size_t length);

// Artinian lex-segment ideal in n variables whose h-vector is h.
MonomialIdeal lex_ideal_from_h_vector(const std::vector<long long>& h, int n);

// Searches for an Artinian non-lex-segment monomial ideal with the given
// h-vector; empty when none exists (the "generic" h-vectors force lex).
std::optional<MonomialIdeal> find_non_lex_ideal_with_h_vector(const std::vector<long long>& h, int n);

struct StickFigurePipelineResult {
  std::vector<long long> h;          // h = Delta^t of the input Hilbert function
  MonomialIdeal ideal{0};            // Artinian lex-segment realization
  LiftingMatrix matrix;              // generic restricted lifting matrix
  Configuration configuration;       // components of the lifting
  GenericityReport genericity;
  StickFigureReport stick;
  bool hilbert_identity_ok = false;  // Delta^t h_{R/I} = h_{S/J} up to the bound
  long long degree_bound = 0;
};

struct StickFigureMatrixConfig {
  std::optional<std::vector<Rat>> vandermonde_scalars;  // default: 1..p
  std::optional<std::uint64_t> random_seed;             // used instead when set
};

// Hilbert functions of dimension t are passed as (h, t): h must be a valid
// finite O-sequence with h_0 = 1 and h_1 <= n.  With t = 0 the result carries
// the ideal itself and an empty lifting.
StickFigurePipelineResult stick_figure_from_o_sequence(const std::vector<long long>& h, int t,
                                                       int n = 0,
                                                       const StickFigureMatrixConfig& cfg = {});

}  // namespace monolift
