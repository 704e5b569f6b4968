#include <doctest.h>

#include <random>

#include "monolift/groebner.hpp"
#include "test_helpers.hpp"

using namespace monolift;
using namespace monolift::testing;

TEST_CASE("buchberger fixed points and linear elimination") {
  TermOrder order;
  Ring r{1, 1};
  GroebnerBasis single = buchberger({parse_poly("x1^2 - u1^2", r)}, order);
  CHECK(single.completed);
  REQUIRE(single.basis.size() == 1);
  CHECK(single.basis[0] == parse_poly("x1^2 - u1^2", r));

  GroebnerBasis lin = buchberger({parse_poly("x1 + u1", r), parse_poly("x1 - u1", r)}, order);
  CHECK(lin.completed);
  REQUIRE(lin.basis.size() == 2);
  CHECK(lin.basis[0] == parse_poly("u1", r));
  CHECK(lin.basis[1] == parse_poly("x1", r));
}

TEST_CASE("normal form membership matches slice linear algebra") {
  // I = (x1^2, x1*x2): membership of monomials is divisibility
  TermOrder order;
  Ring r{2, 0};
  std::vector<SparsePoly> gens = {parse_poly("x1^2", r), parse_poly("x1*x2", r)};
  GroebnerBasis gb = buchberger(gens, order);
  CHECK(gb.completed);
  MonomialIdeal J = ideal("x1^2, x1*x2", 2);
  for (long long d = 0; d <= 5; ++d)
    for (const Monomial& m : monomials_of_degree(2, d)) {
      bool member = normal_form(SparsePoly::from_monomial(m), gb.basis, order).is_zero();
      CHECK(member == J.contains(m));
    }
}

TEST_CASE("reduced bases are fixed points") {
  TermOrder order;
  Ring r{2, 1};
  std::vector<SparsePoly> gens = {parse_poly("x1^2 - u1^2", r), parse_poly("x1*x2 + u1^2", r)};
  GroebnerBasis gb = buchberger(gens, order);
  REQUIRE(gb.completed);
  GroebnerBasis again = buchberger(gb.basis, order);
  CHECK(again.completed);
  CHECK(again.basis == gb.basis);
}

TEST_CASE("initial ideal of a lifted ideal") {
  // principal ideal
  LiftingMatrix single = vandermonde_lifting_matrix(1, 1, {2}, {Rat(1), Rat(2)});
  InitialIdealResult principal = verify_initial_ideal(ideal("x1^2", 1), single);
  CHECK(principal.completed);
  CHECK(principal.verified);

  // h-vector (1,2,1) lex ideal with a Vandermonde matrix, t = 1
  MonomialIdeal J = ideal("x1^2, x1*x2, x2^3", 2);
  MaxExponents N = max_exponents(J);
  std::vector<Rat> scalars;
  for (long i = 1; i <= 5; ++i) scalars.push_back(Rat(i));
  LiftingMatrix A = vandermonde_lifting_matrix(2, 1, N.per_variable, scalars);
  InitialIdealResult res = verify_initial_ideal(J, A);
  CHECK(res.completed);
  CHECK(res.verified);
  CHECK(res.initial_ideal == J.extended(3));

  // the inclusion holds before completion: each lifted generator leads with
  // its monomial
  TermOrder order;
  for (size_t k = 0; k < J.generator_count(); ++k) {
    SparsePoly lifted = lift_monomial(J.generators()[k], A);
    CHECK(lifted.leading_term(order).first == J.generators()[k].extended(3));
  }
}

TEST_CASE("initial ideal for the cubic example at a small random matrix") {
  MonomialIdeal J = example_cube_lift();
  LiftingMatrix A = random_lifting_matrix(3, 1, {2, 2, 2}, LiftingMatrix::Mode::restricted, 12345);
  BuchbergerLimits limits;
  limits.max_pair_reductions = 200000;
  limits.max_total_degree = 12;
  InitialIdealResult res = verify_initial_ideal(J, A, limits);
  CHECK(res.completed);
  CHECK(res.verified);
}

TEST_CASE("resource limits are reported, not mathematical failures") {
  MonomialIdeal J = example_cube_lift();
  LiftingMatrix A = random_lifting_matrix(3, 1, {2, 2, 2}, LiftingMatrix::Mode::restricted, 9);
  BuchbergerLimits tiny;
  tiny.max_pair_reductions = 1;
  InitialIdealResult res = verify_initial_ideal(J, A, tiny);
  CHECK_FALSE(res.completed);
  CHECK_FALSE(res.verified);

  BuchbergerLimits strict;
  strict.max_generators = 1;
  CHECK_THROWS_AS(buchberger({SparsePoly::constant(2, 1), SparsePoly::constant(2, 1)},
                             TermOrder{}, strict),
                  resource_limit_error);
}

TEST_CASE("hilbert route of the initial-ideal proof") {
  // Delta^t h_{R/I} = h_{S/J} = Delta^t h_{R/JR} on a window
  MonomialIdeal J = ideal("x1^2, x1*x2, x2^3", 2);
  int t = 1;
  HilbertData base = hilbert_series(J);
  HilbertData extended_ring = base;
  extended_ring.nvars = J.nvars() + t;
  HilbertData jr = hilbert_series(J.extended(J.nvars() + t));
  auto hist = standard_monomial_histogram(J);
  for (long long d = 0; d <= 8; ++d) {
    long long hs_j = d < static_cast<long long>(hist.size()) ? hist[static_cast<size_t>(d)] : 0;
    long long lifted_delta = extended_ring.hilbert_function(d) -
                             (d > 0 ? extended_ring.hilbert_function(d - 1) : 0);
    long long jr_delta =
        jr.hilbert_function(d) - (d > 0 ? jr.hilbert_function(d - 1) : 0);
    CHECK(lifted_delta == hs_j);
    CHECK(jr_delta == hs_j);
  }
}
