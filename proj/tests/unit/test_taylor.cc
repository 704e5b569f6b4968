#include <doctest.h>

#include <algorithm>
#include <random>

#include "monolift/taylor.hpp"
#include "test_helpers.hpp"

using namespace monolift;
using namespace monolift::testing;

namespace {

LiftingMatrix cube_matrix(int t = 2) {
  // three rows of length 2, the sizes the running cubic example needs
  std::vector<Rat> scalars;
  for (long i = 1; i <= 6; ++i) scalars.push_back(Rat(i));
  return vandermonde_lifting_matrix(3, t, {2, 2, 2}, scalars);
}

// the cubic example's generators in their customary order
std::vector<Monomial> cube_gens() {
  return {mono("x1^2*x2", 3), mono("x2^2*x3", 3), mono("x1*x3^2", 3)};
}

}  // namespace

TEST_CASE("vandermonde matrix construction") {
  LiftingMatrix a = vandermonde_lifting_matrix(1, 1, {2}, {Rat(0), Rat(1)});
  Ring r{1, 1};
  CHECK(a.entry(1, 1) == parse_poly("x1", r));
  CHECK(a.entry(1, 2) == parse_poly("x1 + u1", r));

  LiftingMatrix b = vandermonde_lifting_matrix(2, 1, {1, 1}, {Rat(0), Rat(1)});
  Ring r2{2, 1};
  CHECK(b.entry(1, 1) == parse_poly("x1", r2));
  CHECK(b.entry(2, 1) == parse_poly("x2 + u1", r2));

  // t = 0: every entry is a scalar multiple of its row variable
  LiftingMatrix c = vandermonde_lifting_matrix(2, 0, {2, 1}, {Rat(1), Rat(2), Rat(3)});
  for (int j = 1; j <= 2; ++j)
    for (int i = 1; i <= c.row_length(j - 1); ++i) {
      CHECK(c.entry(j, i).term_count() == 1);
      CHECK(c.entry(j, i).coefficient(Monomial::variable(2, j - 1)) != 0);
    }
  CHECK_THROWS(vandermonde_lifting_matrix(1, 1, {2}, {Rat(1), Rat(1)}));
}

TEST_CASE("genericity report") {
  MonomialIdeal J = example_cube_lift();
  CHECK(check_genericity(cube_matrix(), J).pass);

  // cone case: every entry equal to the row variable
  LiftingMatrix cone;
  cone.n = 3;
  cone.t = 1;
  cone.rows.resize(3);
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 2; ++i)
      cone.rows[static_cast<size_t>(j)].push_back(
          SparsePoly::from_monomial(Monomial::variable(4, j)));
  GenericityReport bad = check_genericity(cone, J);
  CHECK_FALSE(bad.pass);
  CHECK(!bad.violations.empty());

  LiftingMatrix rnd = random_lifting_matrix(3, 2, {2, 2, 2}, LiftingMatrix::Mode::restricted, 99);
  CHECK(check_genericity(rnd, J).pass);
  LiftingMatrix gnd = random_lifting_matrix(2, 1, {2, 2}, LiftingMatrix::Mode::general, 7);
  CHECK(check_genericity(gnd, ideal("x1^2, x1*x2, x2^2", 2)).pass);
}

TEST_CASE("lifting a monomial multiplies prefixes of the rows") {
  LiftingMatrix A = cube_matrix();
  MonomialIdeal J = example_cube_lift();
  SparsePoly expect = A.entry(1, 1) * A.entry(1, 2) * A.entry(2, 1);
  CHECK(lift_monomial(mono("x1^2*x2", 3), A) == expect);
  CHECK(lift_monomial(mono("1", 3), A) == SparsePoly::constant(5, 1));
  CHECK_THROWS(lift_monomial(mono("x1^3", 3), A));

  // setting the u's to zero recovers the monomial scaled by the product of
  // x-coefficients (1 for the Vandermonde rows)
  SparsePoly lifted = lift_monomial(mono("x1^2*x2", 3), A);
  CHECK(lifted.restrict_tail_to_zero(3) ==
        SparsePoly::from_monomial(mono("x1^2*x2", 3).extended(5)));

  // the lifted generating set matches the three printed products
  std::vector<SparsePoly> gens = lifted_ideal(J, A);
  REQUIRE(gens.size() == 3);
  std::vector<SparsePoly> printed = {A.entry(1, 1) * A.entry(1, 2) * A.entry(2, 1),
                                     A.entry(2, 1) * A.entry(2, 2) * A.entry(3, 1),
                                     A.entry(1, 1) * A.entry(3, 1) * A.entry(3, 2)};
  for (const SparsePoly& want : printed)
    CHECK(std::count(gens.begin(), gens.end(), want) == 1);

  LiftingMatrix single = vandermonde_lifting_matrix(1, 1, {1}, {Rat(1)});
  auto principal = lifted_ideal(ideal("x1", 1), single);
  REQUIRE(principal.size() == 1);
  CHECK(principal[0] == single.entry(1, 1));
}

TEST_CASE("Taylor complex of the cubic example") {
  FreeComplex c = taylor_complex_ordered(3, cube_gens());
  REQUIRE(c.r == 3);
  CHECK(c.basis[1].size() == 3);
  CHECK(c.basis[2].size() == 3);
  CHECK(c.basis[3].size() == 1);
  CHECK(c.shifts[1] == std::vector<long long>{3, 3, 3});
  CHECK(c.shifts[2] == std::vector<long long>{5, 5, 5});
  CHECK(c.shifts[3] == std::vector<long long>{6});
  CHECK(verify_complex(c));

  // the augmentation row carries the generators (sign from the subset
  // convention applied at level one)
  Ring r{3, 0};
  CHECK(c.diff[1].at(0, 0) == -parse_poly("x1^2*x2", r));

  // single generator: 0 -> R(-deg) -> I
  FreeComplex single = taylor_complex(ideal("x1^2*x2", 3));
  CHECK(single.r == 1);
  CHECK(single.shifts[1] == std::vector<long long>{3});
  CHECK(verify_complex(single));
}

TEST_CASE("lifted complex reproduces the printed matrices") {
  LiftingMatrix A = cube_matrix();
  FreeComplex c = lift_taylor_complex_ordered(cube_gens(), A);
  CHECK(verify_complex(c));

  auto L = [&](int j, int i) { return A.entry(j, i); };

  // first differential: the lifted generators in order, displayed in the
  // printed basis (level-0 basis vector negated)
  CHECK(-c.diff[1].at(0, 0) == L(1, 1) * L(1, 2) * L(2, 1));
  CHECK(-c.diff[1].at(0, 1) == L(2, 1) * L(2, 2) * L(3, 1));
  CHECK(-c.diff[1].at(0, 2) == L(1, 1) * L(3, 1) * L(3, 2));

  // Level-2 basis here is (e12, e13, e23); the printed second matrix uses
  // the basis (-e13, -e23, -e12), so apply that permutation and sign.
  const int perm[3] = {1, 2, 0};
  auto printed_col2 = [&](int printed) {
    std::vector<SparsePoly> col;
    for (int row = 0; row < 3; ++row) col.push_back(-c.diff[2].at(row, perm[printed]));
    return col;
  };
  std::vector<std::vector<SparsePoly>> expected2 = {
      {-(L(3, 1) * L(3, 2)), SparsePoly::zero(5), L(1, 2) * L(2, 1)},
      {SparsePoly::zero(5), -(L(1, 1) * L(3, 2)), L(2, 1) * L(2, 2)},
      {-(L(2, 2) * L(3, 1)), L(1, 1) * L(1, 2), SparsePoly::zero(5)}};
  for (int col = 0; col < 3; ++col) {
    auto got = printed_col2(col);
    for (int row = 0; row < 3; ++row) CHECK(got[static_cast<size_t>(row)] == expected2[static_cast<size_t>(col)][static_cast<size_t>(row)]);
  }

  // third differential in the same transformed basis: (-L22, L12, L32)
  std::vector<SparsePoly> expected3 = {-L(2, 2), L(1, 2), L(3, 2)};
  for (int printed = 0; printed < 3; ++printed)
    CHECK(-c.diff[3].at(perm[printed], 0) == expected3[static_cast<size_t>(printed)]);
}

TEST_CASE("restriction at u = 0 recovers the Taylor differentials") {
  LiftingMatrix A = cube_matrix();
  FreeComplex base = taylor_complex_ordered(3, cube_gens());
  FreeComplex lifted = lift_taylor_complex_ordered(cube_gens(), A);
  // same length, basis sizes and shifts level by level
  REQUIRE(lifted.r == base.r);
  for (size_t level = 0; level <= 3; ++level) {
    CHECK(lifted.basis[level] == base.basis[level]);
    CHECK(lifted.shifts[level] == base.shifts[level]);
  }
  for (size_t level = 1; level <= 3; ++level)
    for (int r = 0; r < base.diff[level].rows(); ++r)
      for (int c = 0; c < base.diff[level].cols(); ++c) {
        SparsePoly restricted = lifted.diff[level].at(r, c).restrict_tail_to_zero(3);
        CHECK(restricted == base.diff[level].at(r, c).extended(5));
      }
}

TEST_CASE("Taylor complexes of random ideals are complexes") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 10; ++trial) {
    MonomialIdeal J = random_artinian_ideal(rng, 3, 3, 2);
    if (J.generator_count() > 7) continue;
    CHECK(verify_complex(taylor_complex(J)));
  }
}

TEST_CASE("first differential slices measure the ideal") {
  // the degree-3 slice of the lifted first differential has rank 3: the
  // three cubic generators are independent
  LiftingMatrix A = cube_matrix();
  FreeComplex c = lift_taylor_complex_ordered(cube_gens(), A);
  MatQ slice = graded_slice(c.diff[1], 3);
  CHECK(rank_rational(slice) == 3);
  CHECK(slice.cols() == 3);
}

TEST_CASE("a flipped sign breaks the complex") {
  MonomialIdeal J = example_cube_lift();
  FreeComplex c = taylor_complex(J);
  PolyMatrix d2 = c.diff[2];
  d2.set(0, 0, -d2.at(0, 0));
  c.diff[2] = d2;
  CHECK_FALSE(verify_complex(c));
}

TEST_CASE("exactness certificates") {
  MonomialIdeal J = example_cube_lift();
  LiftingMatrix A = cube_matrix();
  FreeComplex lifted = lift_taylor_complex(J, A);
  ExactnessReport rep = verify_exactness(lifted, 8);
  CHECK(rep.generic_rank_ok);
  CHECK(rep.degreewise_ok);
  CHECK(rep.exact());

  // Taylor complexes are resolutions even when non-minimal
  FreeComplex nonmin = taylor_complex(ideal("x1^2, x1*x2", 2));
  ExactnessReport rep2 = verify_exactness(nonmin, 6);
  CHECK(rep2.exact());

  // the cone matrix still lifts to an exact complex (same resolution)
  LiftingMatrix cone;
  cone.n = 3;
  cone.t = 2;
  cone.rows.resize(3);
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 2; ++i)
      cone.rows[static_cast<size_t>(j)].push_back(
          SparsePoly::from_monomial(Monomial::variable(5, j)));
  FreeComplex cone_complex = lift_taylor_complex(J, cone);
  CHECK(verify_complex(cone_complex));
  CHECK(verify_exactness(cone_complex, 8).exact());
}

TEST_CASE("Taylor differential ranks") {
  MonomialIdeal J = example_cube_lift();
  FreeComplex c = taylor_complex(J);
  // exactness forces rank d_k = C(r-1, k-1)
  CHECK(rank_exact(c.diff[1]) == 1);
  CHECK(rank_exact(c.diff[2]) == 2);
  CHECK(rank_exact(c.diff[3]) == 1);
  for (size_t level = 1; level <= 3; ++level)
    CHECK(randomized_rank(c.diff[level], 5, 3) == rank_exact(c.diff[level]));
}

TEST_CASE("exactness certificate catches a broken complex") {
  MonomialIdeal J = example_cube_lift();
  LiftingMatrix A = cube_matrix();
  FreeComplex c = lift_taylor_complex(J, A);
  // zero out one entry of the middle differential: still degreewise maps,
  // no longer exact
  PolyMatrix d2 = c.diff[2];
  d2.set(0, 0, SparsePoly::zero(5));
  c.diff[2] = d2;
  ExactnessReport rep = verify_exactness(c, 8);
  CHECK_FALSE(rep.degreewise_ok);
}

TEST_CASE("Betti agreement at random restricted matrices") {
  std::mt19937_64 rng(113);
  for (int trial = 0; trial < 8; ++trial) {
    MonomialIdeal J = random_artinian_ideal(rng, 3, 3, 2);
    if (J.generator_count() > 7) continue;
    MaxExponents N = max_exponents(J);
    int t = 1 + static_cast<int>(rng() % 2);
    LiftingMatrix A =
        random_lifting_matrix(3, t, N.per_variable, LiftingMatrix::Mode::restricted, rng());
    CHECK(betti_agreement(J, A, 12));
  }
}

TEST_CASE("Betti agreement between base and lifted complexes") {
  MonomialIdeal J = example_cube_lift();
  LiftingMatrix A = cube_matrix();
  FreeComplex lifted = lift_taylor_complex(J, A);
  BettiTable table = tor_table(lifted);
  BettiTable expected = {{{1, 3}, 3}, {{2, 5}, 3}, {{3, 6}, 1}};
  CHECK(table == expected);
  CHECK(betti_agreement(J, A, 10));

  // the 20-point example with t = 1
  MonomialIdeal J47 = example_almost_lex();
  MaxExponents N = max_exponents(J47);
  std::vector<Rat> scalars;
  for (long i = 1; i <= 11; ++i) scalars.push_back(Rat(i));
  LiftingMatrix A47 = vandermonde_lifting_matrix(3, 1, N.per_variable, scalars);
  CHECK(betti_agreement(J47, A47, 8));
}
