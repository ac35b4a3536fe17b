// Accuracy metrics and per-trial bookkeeping for the simulation harness.
#pragma once

#include "scmsweep/types.hpp"

namespace scmsweep {

/// Outcome of one Monte Carlo trial. Refused reconstructions leave `nse`
/// unset; trials without a DOA stage leave `doa_mse_deg2` unset.
struct TrialResult {
  std::optional<double> nse;
  std::optional<double> doa_mse_deg2;
  std::vector<double> estimates_deg;
  std::vector<double> truths_deg;
  bool degenerate = false;
  std::string reason;
};

/// Aggregate over trials. Means are arithmetic; the MSE mean excludes
/// degenerate trials, and either mean is unset when no trial contributed.
struct TrialSummary {
  std::optional<double> mean_nse;
  std::optional<double> mean_mse_deg2;
  int trial_count = 0;
  int nse_count = 0;
  int mse_count = 0;
  int degenerate_count = 0;
};

/// Normalized squared error ||estimate - reference||_F^2 / ||reference||_F^2.
double nse(const CovarianceEstimate& estimate, const CovarianceEstimate& reference);

/// Mean squared DOA error in squared degrees after sorting both lists and
/// pairing index-wise, which minimizes the MSE over all pairings.
double doa_mse(std::vector<double> estimates_deg, std::vector<double> truths_deg);

TrialSummary aggregate(const std::vector<TrialResult>& trials);

}  // namespace scmsweep
