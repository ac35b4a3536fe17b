// JSON run configuration shared by all CLI subcommands.
#pragma once

#include <string>
#include <vector>

#include "scmsweep/harness.hpp"

namespace scmsweep {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Base scenario plus the per-experiment sweep lists. Lists are empty when
/// their section is absent; the experiment runners require their own.
struct RunConfig {
  Scenario base;
  std::vector<int> nse_vs_q_list;
  std::vector<int> nse_vs_k_klist;
  std::vector<int> nse_vs_k_nlist;
  std::vector<double> music_mse_snr_list;
  std::vector<int> music_mse_nlist;
  std::vector<int> complexity_antennas;
  std::vector<int> complexity_nlist;
  int complexity_sweep_count = 0;  // 0 selects 2 M/N - 1 per config
};

RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& text, const std::string& origin);

}  // namespace scmsweep
