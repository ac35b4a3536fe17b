// Monte Carlo harness: scenario description, single trials, and the
// experiment sweeps behind the CLI.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "scmsweep/metrics.hpp"
#include "scmsweep/scm_reconstruct.hpp"
#include "scmsweep/types.hpp"

namespace scmsweep {

enum class MeasurementMode { measured, oracle };

std::string to_string(MeasurementMode mode);
MeasurementMode measurement_mode_from_string(const std::string& name);

/// Everything one Monte Carlo run needs. `sweep_count` 0 means the
/// identifiability minimum 2 M/N - 1.
struct Scenario {
  ArrayConfig cfg;
  SourceScene scene;
  Algorithm algorithm = Algorithm::low_complexity;
  PlanFamily plan_family = PlanFamily::uniform_spatial_freq;
  MeasurementMode measurement = MeasurementMode::measured;
  int sweep_count = 0;
  int samples_per_beam = 500;
  int trials = 20;
  std::uint64_t seed = 1;
  double diagonal_loading = 1.0;
  double music_grid_step_deg = 0.1;
  bool run_music = false;

  int effective_sweep_count() const {
    return sweep_count > 0 ? sweep_count : 2 * cfg.antennas_per_chain() - 1;
  }
  void validate() const;
};

/// Scene of `sources` equal-power sources at the interval midpoints of a
/// uniform [-90, 90] partition, with noise power set from the per-source
/// SNR: N0 = power * 10^(-snr_db / 10).
SourceScene equispaced_scene(int sources, double power, double snr_db);

/// Same scene at a different SNR; only the noise power changes. The SNR is
/// referred to the first source's power.
SourceScene scene_with_snr(SourceScene scene, double snr_db);

SweepPlan plan_for(const Scenario& scenario);

/// One end-to-end trial: measure (or oracle-evaluate) correlations,
/// reconstruct, score against the ensemble covariance, and optionally run
/// the DOA stage. A refused solve yields a degenerate result, not a throw.
/// Deterministic in (scenario, trial_index). Passing a prebuilt solver for
/// the scenario's plan and algorithm skips the per-trial offline setup.
TrialResult run_trial(const Scenario& scenario, int trial_index);
TrialResult run_trial(const Scenario& scenario, int trial_index,
                      const Reconstructor* solver);

/// All trials of a scenario, parallelized over the trial index with
/// per-trial seeds, so results are independent of scheduling.
std::vector<TrialResult> run_trials(const Scenario& scenario);

struct ExperimentResult {
  std::string csv;
  bool any_success = false;
};

/// Mean NSE versus sweep budget Q for the basic solver under both plan
/// families and the low-complexity solver under the uniform-spatial-
/// frequency family. CSV: algorithm,plan_family,Q,mean_nse,trial_count.
ExperimentResult experiment_nse_vs_q(const Scenario& base,
                                     const std::vector<int>& q_list);

/// Mean NSE versus snapshot budget K per RF chain count, comparing the
/// hybrid solvers at Q = 2 M/N - 1 with the full-array sample average.
/// CSV: algorithm,N,K,mean_nse.
ExperimentResult experiment_nse_vs_k(const Scenario& base,
                                     const std::vector<int>& k_list,
                                     const std::vector<int>& n_list);

/// Mean MUSIC MSE versus SNR for the low-complexity reconstruction and the
/// sample-average baseline. CSV: algorithm,N,SNR_dB,mean_mse_deg2,degenerate_count.
ExperimentResult experiment_music_mse(const Scenario& base,
                                      const std::vector<double>& snr_list_db,
                                      const std::vector<int>& n_list);

using QRule = std::function<int(const ArrayConfig&)>;

/// Online multiplication counts per chain pair for each configuration.
/// A null rule selects the identifiability minimum Q = 2 M/N - 1.
/// CSV: M,N,Q,basic_count,low_complexity_count.
ExperimentResult experiment_complexity(const std::vector<ArrayConfig>& configs,
                                       const QRule& q_rule);

}  // namespace scmsweep
