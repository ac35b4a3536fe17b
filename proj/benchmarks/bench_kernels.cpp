// Serial reference vs OpenMP kernels, plus the online cost of the three
// reconstruction algorithms on identical correlations.
#include <benchmark/benchmark.h>

#include "scmsweep/array_model.hpp"
#include "scmsweep/beam_sweep.hpp"
#include "scmsweep/harness.hpp"
#include "scmsweep/music.hpp"
#include "scmsweep/scm_reconstruct.hpp"

namespace {

using namespace scmsweep;

ArrayConfig sweep_cfg() { return {32, 2, 0.5}; }

SourceScene sweep_scene() { return equispaced_scene(8, 1.0, -5.0); }

void BM_measure_correlations_serial(benchmark::State& state) {
  const ArrayConfig cfg = sweep_cfg();
  const SweepPlan plan = uniform_spatial_freq_plan(31);
  const SourceScene scene = sweep_scene();
  const int samples = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        serial::measure_correlations(cfg, plan, scene, samples, 42));
  }
}
BENCHMARK(BM_measure_correlations_serial)->Arg(128)->Arg(512);

void BM_measure_correlations_parallel(benchmark::State& state) {
  const ArrayConfig cfg = sweep_cfg();
  const SweepPlan plan = uniform_spatial_freq_plan(31);
  const SourceScene scene = sweep_scene();
  const int samples = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        measure_correlations(cfg, plan, scene, samples, 42));
  }
}
BENCHMARK(BM_measure_correlations_parallel)->Arg(128)->Arg(512);

CMatrix music_basis() {
  const ArrayConfig cfg{64, 1, 0.5};
  const SourceScene scene = equispaced_scene(8, 1.0, 0.0);
  return noise_subspace(hermitian_eig(true_scm(cfg, scene)), scene.source_count());
}

void BM_pseudospectrum_serial(benchmark::State& state) {
  const ArrayConfig cfg{64, 1, 0.5};
  const CMatrix basis = music_basis();
  const std::vector<double> grid = make_angle_grid(0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(serial::pseudospectrum(cfg, basis, grid));
  }
}
BENCHMARK(BM_pseudospectrum_serial);

void BM_pseudospectrum_parallel(benchmark::State& state) {
  const ArrayConfig cfg{64, 1, 0.5};
  const CMatrix basis = music_basis();
  const std::vector<double> grid = make_angle_grid(0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pseudospectrum(cfg, basis, grid));
  }
}
BENCHMARK(BM_pseudospectrum_parallel);

void BM_reconstruct(benchmark::State& state, Algorithm algorithm) {
  const ArrayConfig cfg{64, 4, 0.5};
  const SweepPlan plan = uniform_spatial_freq_plan(31);
  const Reconstructor solver(cfg, plan, algorithm);
  const CorrelationSet correlations =
      oracle_correlations(cfg, true_scm(cfg, sweep_scene()), plan);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solver.reconstruct(correlations));
  }
}
BENCHMARK_CAPTURE(BM_reconstruct, basic, Algorithm::basic);
BENCHMARK_CAPTURE(BM_reconstruct, low_complexity, Algorithm::low_complexity);
BENCHMARK_CAPTURE(BM_reconstruct, fast_diagonal, Algorithm::fast_diagonal);

}  // namespace

BENCHMARK_MAIN();
