#include <doctest.h>

#include <algorithm>
#include <random>

#include "test_helpers.hpp"

using namespace monolift;
using namespace monolift::testing;

TEST_CASE("divisibility is componentwise") {
  CHECK(divides(mono("x1*x2", 3), mono("x1^2*x2", 3)));
  CHECK(divides(mono("1", 3), mono("x1^2*x2^5", 3)));
  CHECK_FALSE(divides(mono("x1^2*x2", 3), mono("x1*x2", 3)));
  // no generator of the 14-point example divides x1^2*x3^2
  MonomialIdeal J = example_degree3_gap();
  for (const Monomial& g : J.generators()) CHECK_FALSE(divides(g, mono("x1*x3^2", 3)));
}

TEST_CASE("lcm is componentwise max") {
  auto oracle = [](const Monomial& a, const Monomial& b) {
    std::vector<int> e;
    for (int j = 0; j < a.nvars(); ++j) e.push_back(std::max(a.exponent(j), b.exponent(j)));
    return Monomial(e);
  };
  Monomial a = mono("x1^2*x2", 3), b = mono("x2^2*x3", 3), c = mono("x3^2*x1", 3);
  CHECK(lcm(a, b) == oracle(a, b));
  CHECK(lcm(a, b) == mono("x1^2*x2^2*x3", 3));
  CHECK(lcm(std::span<const Monomial>(&a, 1)) == a);
  std::vector<Monomial> all = {a, b, c};
  CHECK(lcm(std::span<const Monomial>(all)) == mono("x1^2*x2^2*x3^2", 3));
  CHECK_THROWS(lcm(std::span<const Monomial>{}));
}

TEST_CASE("lcm algebraic laws on random monomials") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(0, 5);
  for (int trial = 0; trial < 200; ++trial) {
    auto rnd = [&] {
      std::vector<int> e(3);
      for (auto& v : e) v = d(rng);
      return Monomial(e);
    };
    Monomial a = rnd(), b = rnd(), c = rnd();
    CHECK(lcm(a, b) == lcm(b, a));
    CHECK(lcm(a, lcm(b, c)) == lcm(lcm(a, b), c));
    CHECK(lcm(a, a) == a);
    CHECK(divides(a, lcm(a, b)));
  }
}

TEST_CASE("contains matches the product-span oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);  // 2..4
    MonomialIdeal J = random_artinian_ideal(rng, n, 4, 3);
    for (long long deg = 0; deg <= 8; ++deg)
      for (const Monomial& m : monomials_of_degree(n, deg))
        CHECK(J.contains(m) == contains_oracle(J, m));
  }
}

TEST_CASE("membership in the worked examples") {
  CHECK_FALSE(example_almost_lex().contains(mono("x1^2*x3^2", 3)));
  CHECK_FALSE(example_degree3_gap().contains(mono("x1*x3^2", 3)));
  MonomialIdeal J = example_almost_lex();
  for (const Monomial& g : J.generators()) CHECK(J.contains(g));
}

TEST_CASE("minimalize removes divisible generators") {
  MonomialIdeal J = MonomialIdeal::from_generators(2, {mono("x1", 2), mono("x1*x2", 2)});
  CHECK(J.generators() == std::vector<Monomial>{mono("x1", 2)});
  MonomialIdeal K =
      MonomialIdeal::from_generators(2, {mono("x1^2", 2), mono("x1*x2", 2), mono("x2^3", 2),
                                         mono("x1^2*x2", 2)});
  CHECK(K.generator_count() == 3);
  CHECK(K == ideal("x1^2, x1*x2, x2^3", 2));
}

TEST_CASE("minimalize is idempotent and generation-preserving") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> d(0, 3);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 2);
    std::vector<Monomial> gens;
    for (int k = 0; k < 6; ++k) {
      std::vector<int> e(static_cast<size_t>(n));
      for (auto& v : e) v = d(rng);
      gens.push_back(Monomial(e));
    }
    MonomialIdeal J = MonomialIdeal::from_generators(n, gens);
    MonomialIdeal again = MonomialIdeal::from_generators(n, J.generators());
    CHECK(J == again);
    // same membership on a degree-bounded grid
    for (long long deg = 0; deg <= 6; ++deg)
      for (const Monomial& m : monomials_of_degree(n, deg)) {
        bool in_raw = false;
        for (const Monomial& g : gens)
          if (divides(g, m)) in_raw = true;
        CHECK(in_raw == J.contains(m));
      }
  }
}

TEST_CASE("artinian detection and maximum exponents") {
  MonomialIdeal J = example_almost_lex();
  CHECK(is_artinian(J));
  MaxExponents N = max_exponents(J);
  CHECK(N.per_variable == std::vector<int>{3, 4, 4});
  CHECK(N.overall == 4);
  CHECK_FALSE(is_artinian(ideal("x1*x2", 2)));
  CHECK_FALSE(is_artinian(example_cube_lift()));
}

TEST_CASE("lex-segment detection") {
  CHECK_FALSE(is_lex_segment(example_almost_lex()));
  CHECK_FALSE(is_lex_segment(example_degree3_gap()));
  // (x1,x2)^k is lex-segment in two variables; in a larger ambient it is
  // not (x1*x3 precedes x2^2 in degree-lex but only the latter is in it)
  for (int k = 1; k <= 3; ++k) {
    std::vector<Monomial> gens;
    for (const Monomial& m : monomials_of_degree(2, k)) gens.push_back(m);
    CHECK(is_lex_segment(MonomialIdeal::from_generators(2, gens)));
  }
  {
    std::vector<Monomial> gens;
    for (const Monomial& m : monomials_of_degree(2, 2)) gens.push_back(m.extended(3));
    CHECK_FALSE(is_lex_segment(MonomialIdeal::from_generators(3, gens)));
    CHECK(is_lex_segment(ideal("x1, x2", 3)));
  }
}

TEST_CASE("standard monomials and histograms") {
  MonomialIdeal J = example_almost_lex();
  auto std_monos = standard_monomials(J);
  CHECK(std_monos.size() == 20);
  CHECK(standard_monomial_histogram(J) == std::vector<long long>{1, 3, 6, 9, 1});
  CHECK(standard_monomials(example_degree3_gap()).size() == 14);
  CHECK(standard_monomial_histogram(example_degree3_gap()) ==
        std::vector<long long>{1, 3, 6, 4});

  MonomialIdeal max_ideal = ideal("x1, x2, x3, x4", 4);
  auto only_unit = standard_monomials(max_ideal);
  REQUIRE(only_unit.size() == 1);
  CHECK(only_unit[0].is_unit());

  CHECK_THROWS_AS(standard_monomials(ideal("x1*x2", 2)), std::invalid_argument);
  CHECK(standard_monomials(ideal("x1*x2", 2), 2).size() == 5);  // 1, x1, x2, x1^2, x2^2
}

TEST_CASE("degree-lex order uses the difference vector") {
  TermOrder o;
  // x1^2*x3^2 > x2^4 in degree 4 (first nonzero of (0, 2, -4, 2) positive)
  CHECK(o.greater(mono("x1^2*x3^2", 3), mono("x2^4", 3)));
  CHECK(o.greater(mono("x1", 3), mono("x2", 3)));
  CHECK(o.greater(mono("x2^2", 3), mono("x1", 3)));  // degree first
  CHECK(o.compare(mono("x1*x2", 3), mono("x1*x2", 3)) == 0);
  // monomials_of_degree enumerates in descending degree-lex
  for (long long d = 1; d <= 4; ++d) {
    auto ms = monomials_of_degree(3, d);
    for (size_t i = 0; i + 1 < ms.size(); ++i) CHECK(o.greater(ms[i], ms[i + 1]));
  }
}

TEST_CASE("priority permutations reorder the variables") {
  TermOrder o;
  o.priority = {1, 0};  // x2 > x1
  CHECK(o.greater(mono("x2", 2), mono("x1", 2)));
  CHECK(o.greater(mono("x2^2", 2), mono("x1*x2", 2)));
}

TEST_CASE("degree-revlex differs from degree-lex in the classic spot") {
  TermOrder lex;
  TermOrder revlex;
  revlex.kind = TermOrder::Kind::degrevlex;
  // x1*x3 vs x2^2: deglex says x1*x3 bigger; degrevlex also ranks x1*x3 > x2^2?
  // revlex compares the last differing exponent: exps (1,0,1) vs (0,2,0):
  // last diff position is x3 with 1 > 0, so x2^2 wins in revlex.
  CHECK(lex.greater(mono("x1*x3", 3), mono("x2^2", 3)));
  CHECK(revlex.greater(mono("x2^2", 3), mono("x1*x3", 3)));
}

TEST_CASE("text round trip is bit exact") {
  Ring ring{3, 2};
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(0, 6);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<int> e(5);
    for (auto& v : e) v = d(rng);
    Monomial m{e};
    CHECK(parse_monomial(to_string(m, ring), ring) == m);
  }
  CHECK(to_string(mono("1", 3), Ring{3, 0}) == "1");
  CHECK(to_string(mono("x1^2*x2", 3), Ring{3, 0}) == "x1^2*x2");
  MonomialIdeal J = example_cube_lift();
  CHECK(parse_monomial_ideal(to_string(J, Ring{3, 0}), Ring{3, 0}) == J);
  CHECK(to_string(MonomialIdeal::zero(2), Ring{2, 0}) == "0");
  CHECK(parse_monomial_ideal("0", Ring{2, 0}).is_zero());
}

TEST_CASE("parse errors carry a position") {
  Ring ring{2, 0};
  CHECK_THROWS_AS(parse_monomial("x3", ring), parse_error);
  CHECK_THROWS_AS(parse_monomial("x1^", ring), parse_error);
  CHECK_THROWS_AS(parse_monomial("y1", ring), parse_error);
  CHECK_THROWS_AS(parse_monomial_ideal("x1,, x2", ring), parse_error);
  try {
    parse_monomial("x1 * u1", Ring{2, 0});
    CHECK(false);
  } catch (const parse_error& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("ring inference") {
  Ring r = infer_ring("x1^2*x3, x2*u2");
  CHECK(r.nx == 3);
  CHECK(r.nu == 2);
}
