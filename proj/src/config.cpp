#include "scmsweep/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace scmsweep {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
  throw ConfigError("config " + origin + ": " + what);
}

template <typename T>
T get_or(const json& node, const char* key, T fallback) {
  if (!node.contains(key)) return fallback;
  return node.at(key).get<T>();
}

Scenario parse_scenario(const json& root, const std::string& origin) {
  Scenario scenario;
  if (!root.contains("array")) fail(origin, "missing 'array' section");
  const json& array = root.at("array");
  scenario.cfg.antennas = get_or(array, "antennas", 0);
  scenario.cfg.rf_chains = get_or(array, "rf_chains", 1);
  scenario.cfg.spacing_wavelengths = get_or(array, "spacing_wavelengths", 0.5);

  if (!root.contains("scene")) fail(origin, "missing 'scene' section");
  const json& scene = root.at("scene");
  if (scene.contains("doas_deg")) {
    scenario.scene.doas_deg = scene.at("doas_deg").get<std::vector<double>>();
    scenario.scene.powers = get_or(scene, "powers", std::vector<double>(
                                                        scenario.scene.doas_deg.size(), 1.0));
    if (!scene.contains("noise_power")) {
      fail(origin, "explicit scenes need 'noise_power'");
    }
    scenario.scene.noise_power = scene.at("noise_power").get<double>();
  } else {
    const int sources = get_or(scene, "sources", 0);
    const double power = get_or(scene, "power", 1.0);
    const double snr_db = get_or(scene, "snr_db", 0.0);
    if (sources < 1) fail(origin, "scene needs 'sources' or 'doas_deg'");
    scenario.scene = equispaced_scene(sources, power, snr_db);
  }

  const json run = root.contains("run") ? root.at("run") : json::object();
  scenario.samples_per_beam = get_or(run, "samples_per_beam", 500);
  scenario.trials = get_or(run, "trials", 20);
  scenario.seed = get_or(run, "seed", std::uint64_t{1});
  scenario.sweep_count = get_or(run, "sweep_count", 0);
  scenario.diagonal_loading = get_or(run, "diagonal_loading", 1.0);
  scenario.music_grid_step_deg = get_or(run, "music_grid_step_deg", 0.1);
  scenario.run_music = get_or(run, "run_music", false);
  scenario.algorithm = algorithm_from_string(
      get_or(run, "algorithm", std::string("low_complexity")));
  scenario.plan_family = plan_family_from_string(
      get_or(run, "plan_family", std::string("uniform_spatial_freq")));
  scenario.measurement = measurement_mode_from_string(
      get_or(run, "measurement", std::string("measured")));
  return scenario;
}

}  // namespace

RunConfig parse_config(const std::string& text, const std::string& origin) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& err) {
    fail(origin, err.what());
  }
  RunConfig config;
  try {
    config.base = parse_scenario(root, origin);
    if (root.contains("nse_vs_q")) {
      config.nse_vs_q_list =
          root.at("nse_vs_q").at("q_list").get<std::vector<int>>();
    }
    if (root.contains("nse_vs_k")) {
      const json& section = root.at("nse_vs_k");
      config.nse_vs_k_klist = section.at("k_list").get<std::vector<int>>();
      config.nse_vs_k_nlist = get_or(
          section, "n_list", std::vector<int>{config.base.cfg.rf_chains});
    }
    if (root.contains("music_mse")) {
      const json& section = root.at("music_mse");
      config.music_mse_snr_list =
          section.at("snr_list_db").get<std::vector<double>>();
      config.music_mse_nlist = get_or(
          section, "n_list", std::vector<int>{config.base.cfg.rf_chains});
    }
    if (root.contains("complexity")) {
      const json& section = root.at("complexity");
      config.complexity_antennas =
          section.at("antennas_list").get<std::vector<int>>();
      config.complexity_nlist = get_or(
          section, "n_list", std::vector<int>{config.base.cfg.rf_chains});
      config.complexity_sweep_count = get_or(section, "sweep_count", 0);
    }
  } catch (const json::exception& err) {
    fail(origin, err.what());
  }
  try {
    config.base.validate();
  } catch (const std::invalid_argument& err) {
    fail(origin, err.what());
  }
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("config " + path + ": cannot open file");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), path);
}

}  // namespace scmsweep
