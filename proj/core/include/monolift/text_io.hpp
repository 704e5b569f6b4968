// Text grammar for monomials and monomial ideals.
//
//   monomial:  x1^2*x2*x3   (variables x<k> and u<k>, '^' powers, '*' products,
//                            '1' for the unit monomial)
//   ideal:     comma-separated list of monomials; '0' for the zero ideal
//
// Printing is canonical (variables in ambient order, exponent 1 omitted) and
// round-trips bit-exactly through the parser.
#pragma once

#include <stdexcept>
#include <string>

#include "monolift/monomial.hpp"

namespace monolift {

class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position + 1) + ")"),
        position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

std::string to_string(const Monomial& m, const Ring& ring);
std::string to_string(const MonomialIdeal& J, const Ring& ring);

Monomial parse_monomial(const std::string& text, const Ring& ring);
MonomialIdeal parse_monomial_ideal(const std::string& text, const Ring& ring);

// Smallest ring that can hold every variable mentioned in the text
// (nx = largest x index, nu = largest u index).
Ring infer_ring(const std::string& text);

}  // namespace monolift
