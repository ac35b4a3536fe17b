#include "scmsweep/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "scmsweep/array_model.hpp"
#include "scmsweep/beam_sweep.hpp"
#include "scmsweep/config.hpp"
#include "scmsweep/io.hpp"
#include "scmsweep/music.hpp"
#include "scmsweep/rng.hpp"
#include "scmsweep/scm_reconstruct.hpp"

namespace scmsweep {

namespace {

namespace fs = std::filesystem;

constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  }
  out << text;
}

struct SimulateArgs {
  std::string config_path;
  std::string out_dir = ".";
  std::string what = "correlations";
  std::uint64_t seed = 0;
  bool seed_set = false;
};

int run_simulate(const SimulateArgs& args) {
  RunConfig config = load_config(args.config_path);
  Scenario scenario = config.base;
  if (args.seed_set) scenario.seed = args.seed;
  scenario.validate();
  fs::create_directories(args.out_dir);
  const std::uint64_t trial_seed = mix_seed(scenario.seed, 0);
  if (args.what == "snapshots") {
    const SnapshotBatch batch =
        generate_snapshots(scenario.cfg, scenario.scene, scenario.samples_per_beam,
                           mix_seed(trial_seed, 0));
    const fs::path path = fs::path(args.out_dir) / "snapshots.txt";
    save_snapshots(path.string(), batch);
    std::cout << "wrote " << path.string() << "\n";
    return 0;
  }
  const SweepPlan plan = plan_for(scenario);
  const CorrelationSet correlations =
      scenario.measurement == MeasurementMode::oracle
          ? oracle_correlations(scenario.cfg, true_scm(scenario.cfg, scenario.scene),
                                plan)
          : measure_correlations(scenario.cfg, plan, scenario.scene,
                                 scenario.samples_per_beam, trial_seed);
  const fs::path plan_path = fs::path(args.out_dir) / "plan.txt";
  const fs::path corr_path = fs::path(args.out_dir) / "correlations.txt";
  save_plan(plan_path.string(), plan);
  save_correlations(corr_path.string(), scenario.cfg, correlations);
  std::cout << "wrote " << plan_path.string() << "\n"
            << "wrote " << corr_path.string() << "\n";
  return 0;
}

struct ReconstructArgs {
  std::string correlations_path;
  std::string plan_path;
  std::string algorithm = "low_complexity";
  std::string out_path = "scm.txt";
  double diagonal_loading = 1.0;
};

int run_reconstruct(const ReconstructArgs& args) {
  const auto [cfg, correlations] = load_correlations(args.correlations_path);
  const SweepPlan plan = load_plan(args.plan_path);
  const Algorithm algorithm = algorithm_from_string(args.algorithm);
  const Reconstructor solver(cfg, plan, algorithm,
                             Reconstructor::Options{args.diagonal_loading, false});
  const CovarianceEstimate estimate = solver.reconstruct(correlations);
  save_covariance(args.out_path, estimate);
  std::cout << "wrote " << args.out_path << "\n";
  return 0;
}

struct MusicArgs {
  std::string scm_path;
  int sources = 0;
  double grid_step_deg = 0.1;
  double spacing_wavelengths = 0.5;
  std::string out_dir = ".";
};

int run_music(const MusicArgs& args) {
  const CovarianceEstimate estimate = load_covariance(args.scm_path);
  // The chain partition is irrelevant to the DOA stage; a single-chain
  // config carries the geometry.
  ArrayConfig cfg;
  cfg.antennas = estimate.dim();
  cfg.rf_chains = 1;
  cfg.spacing_wavelengths = args.spacing_wavelengths;
  const EigenDecomposition eig = hermitian_eig(estimate);
  const CMatrix basis = noise_subspace(eig, args.sources);
  const MusicSpectrum spectrum =
      pseudospectrum(cfg, basis, make_angle_grid(args.grid_step_deg));
  const DoaEstimate doas = estimate_doas(spectrum, args.sources);
  fs::create_directories(args.out_dir);
  const fs::path spectrum_path = fs::path(args.out_dir) / "spectrum.csv";
  const fs::path doa_path = fs::path(args.out_dir) / "doas.csv";
  write_text(spectrum_path, spectrum_csv(spectrum));
  write_text(doa_path, doa_csv(doas));
  std::cout << "wrote " << spectrum_path.string() << "\n"
            << "wrote " << doa_path.string() << "\n";
  if (doas.degenerate) {
    std::cerr << "warning: fewer spectrum peaks than sources; output padded\n";
  }
  return 0;
}

struct ExperimentArgs {
  std::string name;
  std::string config_path;
  std::string out_dir = ".";
  std::uint64_t seed = 0;
  bool seed_set = false;
  int trials = 0;
};

int run_experiment(const ExperimentArgs& args) {
  RunConfig config = load_config(args.config_path);
  Scenario base = config.base;
  if (args.seed_set) base.seed = args.seed;
  if (args.trials > 0) base.trials = args.trials;

  ExperimentResult result;
  if (args.name == "nse_vs_q") {
    if (config.nse_vs_q_list.empty()) {
      throw ConfigError("config " + args.config_path + ": missing 'nse_vs_q' section");
    }
    result = experiment_nse_vs_q(base, config.nse_vs_q_list);
  } else if (args.name == "nse_vs_k") {
    if (config.nse_vs_k_klist.empty()) {
      throw ConfigError("config " + args.config_path + ": missing 'nse_vs_k' section");
    }
    result = experiment_nse_vs_k(base, config.nse_vs_k_klist, config.nse_vs_k_nlist);
  } else if (args.name == "music_mse") {
    if (config.music_mse_snr_list.empty()) {
      throw ConfigError("config " + args.config_path + ": missing 'music_mse' section");
    }
    result = experiment_music_mse(base, config.music_mse_snr_list,
                                  config.music_mse_nlist);
  } else if (args.name == "complexity") {
    if (config.complexity_antennas.empty()) {
      throw ConfigError("config " + args.config_path + ": missing 'complexity' section");
    }
    std::vector<ArrayConfig> configs;
    for (int antennas : config.complexity_antennas) {
      for (int chains : config.complexity_nlist) {
        ArrayConfig cfg = base.cfg;
        cfg.antennas = antennas;
        cfg.rf_chains = chains;
        cfg.validate();
        configs.push_back(cfg);
      }
    }
    QRule rule;
    if (config.complexity_sweep_count > 0) {
      const int fixed_q = config.complexity_sweep_count;
      rule = [fixed_q](const ArrayConfig&) { return fixed_q; };
    }
    result = experiment_complexity(configs, rule);
  } else {
    throw CLI::ValidationError(
        "experiment", "unknown experiment '" + args.name +
                          "' (expected nse_vs_q, nse_vs_k, music_mse, complexity)");
  }

  fs::create_directories(args.out_dir);
  const fs::path csv_path = fs::path(args.out_dir) / (args.name + ".csv");
  write_text(csv_path, result.csv);
  std::cout << "wrote " << csv_path.string() << "\n";
  if (!result.any_success) {
    std::cerr << "error: every trial was degenerate; no estimate succeeded\n";
    return kExitDegenerate;
  }
  return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args) {
  CLI::App app{"Hybrid-array covariance reconstruction and MUSIC DOA estimation"};
  app.require_subcommand(1);

  SimulateArgs simulate_args;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Generate a sweep plan plus correlations (or raw snapshots)");
  simulate->add_option("--config", simulate_args.config_path, "Run configuration (JSON)")
      ->required();
  simulate->add_option("--out", simulate_args.out_dir, "Output directory");
  simulate->add_option("--what", simulate_args.what, "correlations or snapshots")
      ->check(CLI::IsMember({"correlations", "snapshots"}));
  simulate->add_option("--seed", simulate_args.seed, "Master seed override")
      ->each([&](const std::string&) { simulate_args.seed_set = true; });

  ReconstructArgs reconstruct_args;
  CLI::App* reconstruct = app.add_subcommand(
      "reconstruct", "Reconstruct a covariance estimate from correlations");
  reconstruct->add_option("--correlations", reconstruct_args.correlations_path,
                          "Correlation file from 'simulate'")
      ->required();
  reconstruct->add_option("--plan", reconstruct_args.plan_path, "Sweep plan file")
      ->required();
  reconstruct->add_option("--algorithm", reconstruct_args.algorithm,
                          "basic, low_complexity, or fast_diagonal");
  reconstruct->add_option("--loading", reconstruct_args.diagonal_loading,
                          "Diagonal loading for the basic solver");
  reconstruct->add_option("--out", reconstruct_args.out_path, "Output covariance file");

  MusicArgs music_args;
  CLI::App* music = app.add_subcommand(
      "music", "Run MUSIC on a stored covariance estimate");
  music->add_option("--scm", music_args.scm_path, "Covariance file")->required();
  music->add_option("--sources", music_args.sources, "Number of sources")
      ->required()
      ->check(CLI::PositiveNumber);
  music->add_option("--grid-step", music_args.grid_step_deg, "Scan grid step, degrees");
  music->add_option("--spacing", music_args.spacing_wavelengths,
                    "Element spacing in wavelengths");
  music->add_option("--out", music_args.out_dir, "Output directory");

  ExperimentArgs experiment_args;
  CLI::App* experiment = app.add_subcommand(
      "experiment", "Run a Monte Carlo experiment and write its CSV");
  experiment->add_option("name", experiment_args.name,
                         "nse_vs_q, nse_vs_k, music_mse, or complexity")
      ->required();
  experiment->add_option("--config", experiment_args.config_path,
                         "Run configuration (JSON)")
      ->required();
  experiment->add_option("--out", experiment_args.out_dir, "Output directory");
  experiment->add_option("--trials", experiment_args.trials,
                         "Trial count override");
  experiment->add_option("--seed", experiment_args.seed, "Master seed override")
      ->each([&](const std::string&) { experiment_args.seed_set = true; });

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("scmsweep");
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (app.got_subcommand(simulate)) return run_simulate(simulate_args);
    if (app.got_subcommand(reconstruct)) return run_reconstruct(reconstruct_args);
    if (app.got_subcommand(music)) return run_music(music_args);
    return run_experiment(experiment_args);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kExitUsage;
  } catch (const IllConditionedError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitDegenerate;
  } catch (const ConfigError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
}

}  // namespace scmsweep
