// JSON serialization of the public artifacts.  Schemas:
//   algebra:       {"betti": [[i, j, b], ...], "hilbert_numerator": [c0, ...],
//                   "h_vector": [...]}
//   configuration: {"grid": [N1..Nn], "t": int, "components": [[i1..in], ...]}
//                  (+ "mode", and "general_components" for non-grid data)
//   matrix config: {"mode": "restricted"|"general", "t": int,
//                   "provenance": {"vandermonde": {"b": [...]}}
//                              | {"random": {"seed": ...}}
//                              | {"explicit": [[form strings]]}}
//   poly matrix:   {"row_shifts": [...], "col_shifts": [...],
//                   "entries": [["poly", ...], ...]}
#pragma once

#include <string>

#include "monolift/configuration.hpp"
#include "monolift/ideal_algebra.hpp"
#include "monolift/taylor.hpp"

namespace monolift {

std::string to_json(const BettiTable& betti, const HilbertData& hilbert);
std::string to_json(const BettiTable& betti);
std::string to_json(const HilbertData& hilbert);

std::string to_json(const Configuration& config);
Configuration configuration_from_json(const std::string& text);

std::string to_json(const PolyMatrix& m, const Ring& ring);

// Builds the matrix described by a config document for an ideal with the
// given per-row entry requirements (typically max_exponents(J)).
LiftingMatrix lifting_matrix_from_config(const std::string& text, int n,
                                         const std::vector<int>& row_lengths);
std::string to_json(const LiftingMatrix& A);

}  // namespace monolift
