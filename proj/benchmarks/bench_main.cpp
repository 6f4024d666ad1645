#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "rbfadapt/adaptive.hpp"
#include "rbfadapt/mple.hpp"
#include "rbfadapt/targets.hpp"

using namespace rbfadapt;

namespace {

// Deterministic scattered layout with a mild separation guarantee: a jittered
// grid, the same shape the adaptive loop produces in practice.
PointSet jittered_nodes(int n, int dim, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> jitter(-0.2, 0.2);
  std::vector<Point> pts;
  pts.reserve(n);
  if (dim == 1) {
    for (int i = 0; i < n; ++i) {
      const double h = 2.0 / (n + 1);
      pts.push_back({-1.0 + h * (i + 1) + h * jitter(rng), 0.0});
    }
  } else {
    const int side = static_cast<int>(std::ceil(std::sqrt(double(n))));
    const double h = 2.0 / (side + 1);
    for (int iy = 0; iy < side && static_cast<int>(pts.size()) < n; ++iy)
      for (int ix = 0; ix < side && static_cast<int>(pts.size()) < n; ++ix)
        pts.push_back({-1.0 + h * (ix + 1) + h * jitter(rng),
                       -1.0 + h * (iy + 1) + h * jitter(rng)});
  }
  return PointSet(dim, std::move(pts));
}

std::vector<double> sample_f5(const PointSet& pts) {
  const TargetFn f = target_callable(TargetId::F5);
  std::vector<double> y;
  y.reserve(pts.size());
  for (const Point& p : pts) y.push_back(f(p));
  return y;
}

void bm_kernel_matrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PointSet pts = jittered_nodes(n, 2, 7);
  const SymMatrix dist = distance_matrix(pts);
  const KernelSpec spec(KernelFamily::M6, 3.0);
  for (auto _ : state) {
    SymMatrix a = kernel_matrix_from_distances(spec, dist);
    benchmark::DoNotOptimize(a.raw().data());
  }
  state.SetComplexityN(n);
}

void bm_cholesky(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PointSet pts = jittered_nodes(n, 2, 11);
  const SymMatrix a = kernel_matrix({KernelFamily::M6, 3.0}, pts);
  for (auto _ : state) {
    auto f = try_cholesky(a);
    benchmark::DoNotOptimize(f);
  }
  state.SetComplexityN(n);
}

void bm_eigenvalues(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PointSet pts = jittered_nodes(n, 2, 13);
  const SymMatrix a = kernel_matrix({KernelFamily::M6, 3.0}, pts);
  for (auto _ : state) {
    std::vector<double> ev = symmetric_eigenvalues(a);
    benchmark::DoNotOptimize(ev.data());
  }
  state.SetComplexityN(n);
}

void bm_select_shape(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PointSet pts = jittered_nodes(n, 2, 17);
  const std::vector<double> y = sample_f5(pts);
  const SymMatrix dist = distance_matrix(pts);
  for (auto _ : state) {
    MpleResult r = select_shape_from_distances(KernelFamily::M6, dist, y);
    benchmark::DoNotOptimize(r.eps_opt);
  }
}

void bm_adaptive_run_1d(benchmark::State& state) {
  AdaptiveConfig cfg;
  cfg.theta_refine = 1e-6;
  cfg.theta_coarse = 1e-8;
  const TargetFn f = target_callable(TargetId::F1);
  for (auto _ : state) {
    RunResult r = run_adaptive_1d(f, -1.0, 1.0, KernelFamily::M4, 13, cfg);
    benchmark::DoNotOptimize(r.mae);
  }
}

BENCHMARK(bm_kernel_matrix)->RangeMultiplier(2)->Range(64, 1024)->Complexity();
BENCHMARK(bm_cholesky)->RangeMultiplier(2)->Range(64, 1024)->Complexity();
BENCHMARK(bm_eigenvalues)->RangeMultiplier(2)->Range(64, 512)->Complexity();
BENCHMARK(bm_select_shape)->Arg(64)->Arg(256);
BENCHMARK(bm_adaptive_run_1d)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
