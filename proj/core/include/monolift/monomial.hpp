// Exact monomial and monomial-ideal arithmetic: divisibility, lcm, term
// orders, membership, minimal generating sets, structural predicates.
//
// A monomial is an exponent vector over a fixed ambient ring.  Ambient
// variables split into "x" variables (indices 0..nx-1, printed x1..xn)
// and "u" variables (indices nx..nx+nu-1, printed u1..ut).
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace monolift {

// Ambient ring descriptor. Only used for naming variables in text I/O and
// for sanity checks; the data types below carry just the variable count.
struct Ring {
  int nx = 0;
  int nu = 0;
  int nvars() const { return nx + nu; }
  std::string var_name(int index) const;
};

class Monomial {
 public:
  explicit Monomial(std::vector<int> exponents);
  static Monomial unit(int nvars);
  static Monomial variable(int nvars, int index, int power = 1);

  int nvars() const { return static_cast<int>(exps_.size()); }
  int exponent(int j) const { return exps_[static_cast<size_t>(j)]; }
  long long degree() const;
  bool is_unit() const;
  std::span<const int> exponents() const { return exps_; }

  // Appends zero exponents for extra variables (e.g. S-monomial into R).
  Monomial extended(int new_nvars) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exps_;
};

// Plain componentwise-lexicographic compare, used as a canonical container
// order; unrelated to the algebraic term orders below.
struct ExpLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial lcm(std::span<const Monomial> ms);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial product(const Monomial& a, const Monomial& b);
// Componentwise max(a-b, 0); this is the generator of ((a) : b).
Monomial colon(const Monomial& a, const Monomial& b);

// Degree-lex / degree-revlex with a variable priority permutation
// (priority[0] is the greatest variable; empty means 0 > 1 > ... > n-1,
// i.e. x1 > ... > xn > u1 > ... > ut).
struct TermOrder {
  enum class Kind { deglex, degrevlex };
  Kind kind = Kind::deglex;
  std::vector<int> priority;

  // (sum(a_i-b_i), a_1-b_1, ..., a_n-b_n): sign of first nonzero entry.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
};

// Generators are kept minimal (no generator divides another) and sorted.
// The zero ideal has no generators; the unit ideal is generated by 1.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(int nvars) : nvars_(nvars) {}
  static MonomialIdeal zero(int nvars);
  static MonomialIdeal unit_ideal(int nvars);
  static MonomialIdeal from_generators(int nvars, std::vector<Monomial> gens);

  int nvars() const { return nvars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  size_t generator_count() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool is_proper() const { return !is_zero() && !is_unit(); }

  bool contains(const Monomial& m) const;
  MonomialIdeal extended(int new_nvars) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
  friend MonomialIdeal minimalize(int nvars, std::vector<Monomial> gens);

 private:
  int nvars_;
  std::vector<Monomial> gens_;
};

MonomialIdeal minimalize(int nvars, std::vector<Monomial> gens);

// True iff every variable has a pure-power generator.
bool is_artinian(const MonomialIdeal& J);

struct MaxExponents {
  std::vector<int> per_variable;  // N_j, 0 if X_j appears in no generator
  int overall = 0;                // N
};
MaxExponents max_exponents(const MonomialIdeal& J);

// Degree-d part of J is an initial segment in degree-lex order, for every
// d up to the maximum generator degree (which suffices: the shadow of an
// initial segment is an initial segment).
bool is_lex_segment(const MonomialIdeal& J);

// All monomials not in J.  Without a degree bound J must be Artinian.
std::vector<Monomial> standard_monomials(const MonomialIdeal& J,
                                         std::optional<long long> degree_bound = std::nullopt);

// Histogram of standard-monomial degrees (index = degree).
std::vector<long long> standard_monomial_histogram(const MonomialIdeal& J);

// All monomials of the given degree, in descending degree-lex order.
std::vector<Monomial> monomials_of_degree(int nvars, long long degree);
long long count_monomials_of_degree(int nvars, long long degree);

}  // namespace monolift
