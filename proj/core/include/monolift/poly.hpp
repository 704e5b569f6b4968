// Exact multivariate polynomials over the rationals, sparse representation.
// Terms are kept in a canonical container order; algebraic term orders are
// applied on demand (leading_term).
#pragma once

#include <map>
#include <optional>
#include <utility>

#include "monolift/field.hpp"
#include "monolift/monomial.hpp"
#include "monolift/text_io.hpp"

namespace monolift {

class SparsePoly {
 public:
  using TermMap = std::map<Monomial, Rat, ExpLess>;

  explicit SparsePoly(int nvars) : nvars_(nvars) {}
  static SparsePoly zero(int nvars) { return SparsePoly(nvars); }
  static SparsePoly constant(int nvars, const Rat& c);
  static SparsePoly from_monomial(const Monomial& m, const Rat& c = Rat(1));
  // Degree-one form with the given coefficient per variable.
  static SparsePoly linear_form(const std::vector<Rat>& coeffs);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Rat coefficient(const Monomial& m) const;

  // -1 for the zero polynomial.
  long long degree() const;
  bool is_homogeneous() const;

  void add_term(const Monomial& m, const Rat& c);

  SparsePoly operator-() const;
  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly scaled(const Rat& c) const;

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

  // Substitute polynomials (or scalars via constants) for selected variables.
  SparsePoly substitute(const std::map<int, SparsePoly>& assignments) const;
  // Fast path: set every variable with index >= first_killed to zero.
  SparsePoly restrict_tail_to_zero(int first_killed) const;
  SparsePoly extended(int new_nvars) const;

  std::pair<Monomial, Rat> leading_term(const TermOrder& order) const;

 private:
  int nvars_;
  TermMap terms_;
};

// Exact division: returns a/b when b divides a in the polynomial ring.
// Used by fraction-free elimination, where divisibility is guaranteed.
std::optional<SparsePoly> exact_divide(const SparsePoly& a, const SparsePoly& b,
                                       const TermOrder& order = {});

std::string to_string(const SparsePoly& p, const Ring& ring);
SparsePoly parse_poly(const std::string& text, const Ring& ring);

}  // namespace monolift
