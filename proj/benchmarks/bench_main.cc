#include <benchmark/benchmark.h>

#include <random>

#include "monolift/configuration.hpp"
#include "monolift/groebner.hpp"
#include "monolift/osequence.hpp"
#include "monolift/taylor.hpp"
#include "monolift/text_io.hpp"

using namespace monolift;

namespace {

MonomialIdeal twenty_points() {
  return parse_monomial_ideal(
      "x1^3, x1^2*x2^2, x1^2*x2*x3, x1*x2^3, x1*x2^2*x3, x1*x2*x3^2, x1*x3^3, "
      "x2^4, x2^3*x3, x2^2*x3^2, x2*x3^3, x3^4",
      Ring{3, 0});
}

LiftingMatrix matrix_for(const MonomialIdeal& J, int t) {
  MaxExponents N = max_exponents(J);
  size_t p = 0;
  for (int nj : N.per_variable) p += static_cast<size_t>(nj);
  std::vector<Rat> scalars;
  for (size_t i = 1; i <= p; ++i) scalars.push_back(Rat(static_cast<long>(i)));
  return vandermonde_lifting_matrix(J.nvars(), t, N.per_variable, scalars);
}

void BM_intersect(benchmark::State& state) {
  MonomialIdeal a = parse_monomial_ideal("x1^2, x1*x2, x2^2", Ring{3, 0});
  MonomialIdeal b = twenty_points();
  for (auto _ : state) benchmark::DoNotOptimize(intersect(a, b));
}
BENCHMARK(BM_intersect);

void BM_hilbert_numerator(benchmark::State& state) {
  MonomialIdeal J = twenty_points();
  HilbertOptions opts;
  opts.subset_limit = static_cast<size_t>(state.range(0));  // 0 forces the recursion
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_series(J, opts));
}
BENCHMARK(BM_hilbert_numerator)->Arg(20)->Arg(0);

void BM_graded_betti(benchmark::State& state) {
  MonomialIdeal J = twenty_points();
  for (auto _ : state) benchmark::DoNotOptimize(graded_betti(J));
}
BENCHMARK(BM_graded_betti);

void BM_lift_complex(benchmark::State& state) {
  MonomialIdeal J = twenty_points();
  LiftingMatrix A = matrix_for(J, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lift_taylor_complex(J, A));
}
BENCHMARK(BM_lift_complex)->Arg(1)->Arg(3);

void BM_slice_rank(benchmark::State& state) {
  MonomialIdeal J = parse_monomial_ideal("x1^2*x2, x2^2*x3, x1*x3^2", Ring{3, 0});
  LiftingMatrix A = matrix_for(J, 2);
  FreeComplex c = lift_taylor_complex(J, A);
  FieldMode mode = state.range(0) == 0 ? FieldMode::prime_field : FieldMode::rationals;
  for (auto _ : state) {
    MatQ slice = graded_slice(c.diff[1], 8);
    benchmark::DoNotOptimize(rank_in_mode(slice, mode));
  }
}
BENCHMARK(BM_slice_rank)->Arg(0)->Arg(1);

void BM_buchberger_lifted(benchmark::State& state) {
  MonomialIdeal J = parse_monomial_ideal("x1^2, x1*x2, x2^3", Ring{2, 0});
  LiftingMatrix A = matrix_for(J, 1);
  auto gens = lifted_ideal(J, A);
  TermOrder order;
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens, order));
}
BENCHMARK(BM_buchberger_lifted);

void BM_condition3(benchmark::State& state) {
  MonomialIdeal J = twenty_points();
  Configuration V = components_artinian(J, 1);
  for (auto _ : state) benchmark::DoNotOptimize(check_condition3(V));
}
BENCHMARK(BM_condition3);

void BM_components_grid(benchmark::State& state) {
  MonomialIdeal J = twenty_points();
  for (auto _ : state) benchmark::DoNotOptimize(components_artinian(J, 1));
}
BENCHMARK(BM_components_grid);

}  // namespace

BENCHMARK_MAIN();
