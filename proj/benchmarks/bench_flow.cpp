#include <random>

#include <benchmark/benchmark.h>

#include "stationary/catalog.hpp"
#include "stationary/flow.hpp"

namespace {

using namespace stationary;

TriMesh noisy_sphere(int nu, int nv) {
  TriMesh m = sample_mesh(make_patch({family::Sphere{}}), nu, nv).mesh;
  std::mt19937_64 gen(99);
  std::uniform_real_distribution<double> noise(-0.02, 0.02);
  for (auto& x : m.vertices) x += Vec3(noise(gen), noise(gen), noise(gen));
  return m;
}

void BM_DiscreteGradient(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const TriMesh m = noisy_sphere(n, 2 * n);
  for (auto _ : state) benchmark::DoNotOptimize(discrete_gradient(m, -2).size());
  state.SetItemsProcessed(state.iterations() * static_cast<long>(m.triangles.size()));
}
BENCHMARK(BM_DiscreteGradient)->Arg(16)->Arg(32)->Arg(64);

void BM_Descend(benchmark::State& state) {
  const TriMesh m = noisy_sphere(16, 32);
  DescentOptions opt;
  opt.steps = static_cast<int>(state.range(0));
  opt.dt = 1e-2;
  for (auto _ : state) benchmark::DoNotOptimize(descend(m, -2, opt).trace.size());
}
BENCHMARK(BM_Descend)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace
