#include <benchmark/benchmark.h>

#include "stationary/catalog.hpp"
#include "stationary/cyclic.hpp"
#include "stationary/stationary.hpp"

namespace {

using namespace stationary;

void BM_ResidualGridTorus(benchmark::State& state) {
  const ParametricPatch p = make_patch({family::Torus{}});
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(residual_grid(p, 1.0, n, n).sup_abs);
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_ResidualGridTorus)->Arg(32)->Arg(64)->Arg(128);

void BM_ResidualGridInvertedCatenoid(benchmark::State& state) {
  const ParametricPatch p = make_patch(invert_spec({family::Catenoid{}}));
  for (auto _ : state) benchmark::DoNotOptimize(residual_grid(p, -4, 64, 64).sup_abs);
}
BENCHMARK(BM_ResidualGridInvertedCatenoid);

void BM_EnergySphere(benchmark::State& state) {
  const ParametricPatch p = make_patch({family::Sphere{Vec3(0.3, 0, 0), 1.0}});
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(energy(p, -1, n, n));
}
BENCHMARK(BM_EnergySphere)->Arg(32)->Arg(128);

void BM_FourierDefectFrenet(benchmark::State& state) {
  family::FrenetCyclic f;
  f.kappa = ScalarFunction::expression("1+0.2*u");
  f.tau = ScalarFunction::expression("0.3");
  f.a = ScalarFunction::expression("1");
  f.b = ScalarFunction::expression("0.2*u");
  f.c = ScalarFunction::expression("0.1-0.1*u^2");
  f.r = ScalarFunction::expression("0.4");
  const ParametricPatch p = make_patch({f});
  for (auto _ : state) benchmark::DoNotOptimize(fourier_defect(p, 1.0, 0.5, 4, 64).A[4]);
}
BENCHMARK(BM_FourierDefectFrenet);

void BM_Neg2Integration(benchmark::State& state) {
  const ScalarFunction kappa = ScalarFunction::expression("1/u");
  for (auto _ : state)
    benchmark::DoNotOptimize(
        integrate_neg2_family(kappa, 0.2, 0.1, 1.0, 1.0, {1.0, 2.718}).solution.size());
}
BENCHMARK(BM_Neg2Integration);

void BM_RiemannMinimal(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(riemann_minimal_spec(0.5, 1.0, 1.0).u_range.hi);
}
BENCHMARK(BM_RiemannMinimal);

}  // namespace
