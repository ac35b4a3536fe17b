#include "scmsweep/harness.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "scmsweep/array_model.hpp"
#include "scmsweep/beam_sweep.hpp"
#include "scmsweep/io.hpp"
#include "scmsweep/music.hpp"
#include "scmsweep/rng.hpp"

namespace scmsweep {

namespace {

struct CsvRow {
  std::vector<std::string> key;  // sort columns
  std::vector<std::string> rest;
};

/// Fixed-width integer key so lexicographic row sorting matches numeric order.
std::string int_key(long long value) {
  std::string digits = std::to_string(value);
  return std::string(digits.size() < 12 ? 12 - digits.size() : 0, '0') + digits;
}

}  // namespace

std::string to_string(MeasurementMode mode) {
  switch (mode) {
    case MeasurementMode::measured: return "measured";
    case MeasurementMode::oracle: return "oracle";
  }
  throw std::invalid_argument("unknown measurement mode");
}

MeasurementMode measurement_mode_from_string(const std::string& name) {
  if (name == "measured") return MeasurementMode::measured;
  if (name == "oracle") return MeasurementMode::oracle;
  throw std::invalid_argument("unknown measurement mode '" + name + "'");
}

void Scenario::validate() const {
  cfg.validate();
  scene.validate();
  if (sweep_count < 0) {
    throw std::invalid_argument("sweep count must be >= 0 (0 selects 2 M/N - 1)");
  }
  if (samples_per_beam < 1) {
    throw std::invalid_argument("samples per beam must be >= 1");
  }
  if (trials < 1) {
    throw std::invalid_argument("trial count must be >= 1");
  }
  if (!(diagonal_loading > 0.0) || !std::isfinite(diagonal_loading)) {
    throw std::invalid_argument("diagonal loading must be positive and finite");
  }
  if (!(music_grid_step_deg > 0.0)) {
    throw std::invalid_argument("MUSIC grid step must be positive");
  }
  if (algorithm == Algorithm::sample_average &&
      measurement == MeasurementMode::oracle) {
    throw std::invalid_argument("sample_average has no oracle-correlation mode");
  }
  if (run_music && scene.source_count() >= cfg.antennas) {
    throw std::invalid_argument("MUSIC needs fewer sources than antennas");
  }
}

SourceScene equispaced_scene(int sources, double power, double snr_db) {
  if (sources < 1) {
    throw std::invalid_argument("scene needs at least one source");
  }
  if (!(power > 0.0) || !std::isfinite(power)) {
    throw std::invalid_argument("source power must be positive and finite");
  }
  SourceScene scene;
  scene.doas_deg.reserve(sources);
  for (int i = 0; i < sources; ++i) {
    scene.doas_deg.push_back(-90.0 + 180.0 * (i + 0.5) / sources);
  }
  scene.powers.assign(sources, power);
  scene.noise_power = power * std::pow(10.0, -snr_db / 10.0);
  return scene;
}

SourceScene scene_with_snr(SourceScene scene, double snr_db) {
  scene.validate();
  scene.noise_power = scene.powers.front() * std::pow(10.0, -snr_db / 10.0);
  return scene;
}

SweepPlan plan_for(const Scenario& scenario) {
  const int q = scenario.effective_sweep_count();
  return scenario.plan_family == PlanFamily::uniform_theta
             ? uniform_theta_plan(q)
             : uniform_spatial_freq_plan(q);
}

TrialResult run_trial(const Scenario& scenario, int trial_index) {
  return run_trial(scenario, trial_index, nullptr);
}

TrialResult run_trial(const Scenario& scenario, int trial_index,
                      const Reconstructor* solver) {
  scenario.validate();
  if (trial_index < 0) {
    throw std::invalid_argument("trial index must be >= 0");
  }
  TrialResult result;
  result.truths_deg = scenario.scene.doas_deg;
  const CovarianceEstimate truth = true_scm(scenario.cfg, scenario.scene);
  const std::uint64_t trial_seed =
      mix_seed(scenario.seed, static_cast<std::uint64_t>(trial_index));

  CovarianceEstimate estimate;
  try {
    if (scenario.algorithm == Algorithm::sample_average) {
      const SnapshotBatch batch =
          generate_snapshots(scenario.cfg, scenario.scene,
                             scenario.samples_per_beam, mix_seed(trial_seed, 0));
      estimate = sample_average_scm(batch);
      estimate.rf_chains = scenario.cfg.rf_chains;
    } else {
      std::unique_ptr<Reconstructor> own;
      if (solver == nullptr) {
        own = std::make_unique<Reconstructor>(
            scenario.cfg, plan_for(scenario), scenario.algorithm,
            Reconstructor::Options{scenario.diagonal_loading, false});
        solver = own.get();
      }
      const CorrelationSet correlations =
          scenario.measurement == MeasurementMode::oracle
              ? oracle_correlations(scenario.cfg, truth, solver->plan())
              : measure_correlations(scenario.cfg, solver->plan(), scenario.scene,
                                     scenario.samples_per_beam, trial_seed);
      estimate = solver->reconstruct(correlations);
    }
  } catch (const IllConditionedError& err) {
    result.degenerate = true;
    result.reason = err.what();
    return result;
  }

  result.nse = nse(estimate, truth);
  if (scenario.run_music) {
    const int sources = scenario.scene.source_count();
    const EigenDecomposition eig = hermitian_eig(estimate);
    const CMatrix basis = noise_subspace(eig, sources);
    const MusicSpectrum spectrum = pseudospectrum(
        scenario.cfg, basis, make_angle_grid(scenario.music_grid_step_deg));
    const DoaEstimate doas = estimate_doas(spectrum, sources);
    result.estimates_deg = doas.angles_deg;
    result.doa_mse_deg2 = doa_mse(doas.angles_deg, scenario.scene.doas_deg);
    if (doas.degenerate) {
      result.degenerate = true;
      result.reason = "MUSIC peak search found fewer peaks than sources";
    }
  }
  return result;
}

std::vector<TrialResult> run_trials(const Scenario& scenario) {
  scenario.validate();
  std::vector<TrialResult> results(scenario.trials);
  std::unique_ptr<Reconstructor> shared;
  if (scenario.algorithm != Algorithm::sample_average) {
    try {
      shared = std::make_unique<Reconstructor>(
          scenario.cfg, plan_for(scenario), scenario.algorithm,
          Reconstructor::Options{scenario.diagonal_loading, false});
    } catch (const IllConditionedError& err) {
      for (TrialResult& result : results) {
        result.degenerate = true;
        result.reason = err.what();
        result.truths_deg = scenario.scene.doas_deg;
      }
      return results;
    }
  }
#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < scenario.trials; ++t) {
    try {
      results[t] = run_trial(scenario, t, shared.get());
    } catch (const std::exception& err) {
      // Keep exceptions out of the parallel region; surface them as
      // degenerate trials the aggregate will count.
      results[t].degenerate = true;
      results[t].reason = err.what();
    }
  }
  return results;
}

ExperimentResult experiment_nse_vs_q(const Scenario& base,
                                     const std::vector<int>& q_list) {
  base.validate();
  if (q_list.empty()) {
    throw std::invalid_argument("Q list is empty");
  }
  const int min_q = 2 * base.cfg.antennas_per_chain() - 1;
  struct Combo {
    Algorithm algorithm;
    PlanFamily family;
  };
  const std::vector<Combo> combos = {
      {Algorithm::basic, PlanFamily::uniform_spatial_freq},
      {Algorithm::basic, PlanFamily::uniform_theta},
      {Algorithm::low_complexity, PlanFamily::uniform_spatial_freq},
  };
  ExperimentResult out;
  std::vector<CsvRow> rows;
  for (const Combo& combo : combos) {
    for (int q : q_list) {
      if (q < 1) throw std::invalid_argument("Q values must be >= 1");
      if (combo.algorithm == Algorithm::low_complexity && q < min_q) continue;
      Scenario scenario = base;
      scenario.algorithm = combo.algorithm;
      scenario.plan_family = combo.family;
      scenario.sweep_count = q;
      scenario.run_music = false;
      const TrialSummary summary = aggregate(run_trials(scenario));
      if (!summary.mean_nse) continue;
      out.any_success = true;
      rows.push_back({{to_string(combo.algorithm), to_string(combo.family),
                       int_key(q)},
                      {format_double(*summary.mean_nse),
                       std::to_string(summary.nse_count)}});
    }
  }
  std::sort(rows.begin(), rows.end(),
            [](const CsvRow& a, const CsvRow& b) { return a.key < b.key; });
  std::string csv = "algorithm,plan_family,Q,mean_nse,trial_count\n";
  for (const CsvRow& row : rows) {
    csv += row.key[0] + ',' + row.key[1] + ',' +
           std::to_string(std::stoll(row.key[2])) + ',' + row.rest[0] + ',' +
           row.rest[1] + '\n';
  }
  out.csv = std::move(csv);
  return out;
}

ExperimentResult experiment_nse_vs_k(const Scenario& base,
                                     const std::vector<int>& k_list,
                                     const std::vector<int>& n_list) {
  base.validate();
  if (k_list.empty() || n_list.empty()) {
    throw std::invalid_argument("K list and N list must be nonempty");
  }
  const std::vector<Algorithm> algorithms = {
      Algorithm::sample_average, Algorithm::basic, Algorithm::low_complexity};
  ExperimentResult out;
  std::vector<CsvRow> rows;
  for (int n : n_list) {
    Scenario scenario = base;
    scenario.cfg.rf_chains = n;
    scenario.cfg.validate();
    scenario.plan_family = PlanFamily::uniform_spatial_freq;
    scenario.sweep_count = 0;  // identifiability minimum for this N
    scenario.run_music = false;
    for (Algorithm algorithm : algorithms) {
      scenario.algorithm = algorithm;
      for (int k : k_list) {
        if (k < 1) throw std::invalid_argument("K values must be >= 1");
        scenario.samples_per_beam = k;
        const TrialSummary summary = aggregate(run_trials(scenario));
        if (!summary.mean_nse) continue;
        out.any_success = true;
        rows.push_back({{to_string(algorithm), int_key(n), int_key(k)},
                        {format_double(*summary.mean_nse)}});
      }
    }
  }
  std::sort(rows.begin(), rows.end(),
            [](const CsvRow& a, const CsvRow& b) { return a.key < b.key; });
  std::string csv = "algorithm,N,K,mean_nse\n";
  for (const CsvRow& row : rows) {
    csv += row.key[0] + ',' + std::to_string(std::stoll(row.key[1])) + ',' +
           std::to_string(std::stoll(row.key[2])) + ',' + row.rest[0] + '\n';
  }
  out.csv = std::move(csv);
  return out;
}

ExperimentResult experiment_music_mse(const Scenario& base,
                                      const std::vector<double>& snr_list_db,
                                      const std::vector<int>& n_list) {
  base.validate();
  if (snr_list_db.empty() || n_list.empty()) {
    throw std::invalid_argument("SNR list and N list must be nonempty");
  }
  const std::vector<Algorithm> algorithms = {Algorithm::sample_average,
                                             Algorithm::low_complexity};
  ExperimentResult out;
  std::vector<CsvRow> rows;
  for (int n : n_list) {
    Scenario scenario = base;
    scenario.cfg.rf_chains = n;
    scenario.cfg.validate();
    scenario.plan_family = PlanFamily::uniform_spatial_freq;
    scenario.sweep_count = 0;
    scenario.run_music = true;
    for (Algorithm algorithm : algorithms) {
      scenario.algorithm = algorithm;
      for (double snr_db : snr_list_db) {
        scenario.scene = scene_with_snr(base.scene, snr_db);
        const TrialSummary summary = aggregate(run_trials(scenario));
        if (summary.mean_mse_deg2) out.any_success = true;
        rows.push_back(
            {{to_string(algorithm), int_key(n), format_double(snr_db)},
             {summary.mean_mse_deg2 ? format_double(*summary.mean_mse_deg2)
                                    : std::string("nan"),
              std::to_string(summary.degenerate_count)}});
      }
    }
  }
  std::sort(rows.begin(), rows.end(), [](const CsvRow& a, const CsvRow& b) {
    if (a.key[0] != b.key[0]) return a.key[0] < b.key[0];
    if (a.key[1] != b.key[1]) return a.key[1] < b.key[1];
    return std::stod(a.key[2]) < std::stod(b.key[2]);
  });
  std::string csv = "algorithm,N,SNR_dB,mean_mse_deg2,degenerate_count\n";
  for (const CsvRow& row : rows) {
    csv += row.key[0] + ',' + std::to_string(std::stoll(row.key[1])) + ',' +
           row.key[2] + ',' + row.rest[0] + ',' + row.rest[1] + '\n';
  }
  out.csv = std::move(csv);
  return out;
}

ExperimentResult experiment_complexity(const std::vector<ArrayConfig>& configs,
                                       const QRule& q_rule) {
  if (configs.empty()) {
    throw std::invalid_argument("configuration list is empty");
  }
  ExperimentResult out;
  std::vector<CsvRow> rows;
  for (const ArrayConfig& cfg : configs) {
    cfg.validate();
    const int q = q_rule ? q_rule(cfg) : 2 * cfg.antennas_per_chain() - 1;
    rows.push_back(
        {{int_key(cfg.antennas), int_key(cfg.rf_chains), int_key(q)},
         {std::to_string(multiplication_count(cfg, q, Algorithm::basic)),
          std::to_string(
              multiplication_count(cfg, q, Algorithm::low_complexity))}});
  }
  std::sort(rows.begin(), rows.end(),
            [](const CsvRow& a, const CsvRow& b) { return a.key < b.key; });
  std::string csv = "M,N,Q,basic_count,low_complexity_count\n";
  for (const CsvRow& row : rows) {
    csv += std::to_string(std::stoll(row.key[0])) + ',' +
           std::to_string(std::stoll(row.key[1])) + ',' +
           std::to_string(std::stoll(row.key[2])) + ',' + row.rest[0] + ',' +
           row.rest[1] + '\n';
  }
  out.any_success = true;
  out.csv = std::move(csv);
  return out;
}

}  // namespace scmsweep
