#include "scmsweep/metrics.hpp"

#include <algorithm>

namespace scmsweep {

double nse(const CovarianceEstimate& estimate, const CovarianceEstimate& reference) {
  if (estimate.matrix.rows() != reference.matrix.rows() ||
      estimate.matrix.cols() != reference.matrix.cols()) {
    throw std::invalid_argument("estimate and reference dimensions differ");
  }
  const double denom = reference.matrix.squaredNorm();
  if (!(denom > 0.0)) {
    throw std::invalid_argument("reference covariance has zero norm");
  }
  return (estimate.matrix - reference.matrix).squaredNorm() / denom;
}

double doa_mse(std::vector<double> estimates_deg, std::vector<double> truths_deg) {
  if (estimates_deg.empty() || estimates_deg.size() != truths_deg.size()) {
    throw std::invalid_argument("DOA lists must be nonempty and equally long");
  }
  std::sort(estimates_deg.begin(), estimates_deg.end());
  std::sort(truths_deg.begin(), truths_deg.end());
  double acc = 0.0;
  for (std::size_t i = 0; i < truths_deg.size(); ++i) {
    const double diff = estimates_deg[i] - truths_deg[i];
    acc += diff * diff;
  }
  return acc / static_cast<double>(truths_deg.size());
}

TrialSummary aggregate(const std::vector<TrialResult>& trials) {
  if (trials.empty()) {
    throw std::invalid_argument("cannot aggregate zero trials");
  }
  TrialSummary summary;
  summary.trial_count = static_cast<int>(trials.size());
  double nse_acc = 0.0;
  double mse_acc = 0.0;
  for (const TrialResult& trial : trials) {
    if (trial.degenerate) ++summary.degenerate_count;
    if (trial.nse) {
      nse_acc += *trial.nse;
      ++summary.nse_count;
    }
    if (trial.doa_mse_deg2 && !trial.degenerate) {
      mse_acc += *trial.doa_mse_deg2;
      ++summary.mse_count;
    }
  }
  if (summary.nse_count > 0) summary.mean_nse = nse_acc / summary.nse_count;
  if (summary.mse_count > 0) summary.mean_mse_deg2 = mse_acc / summary.mse_count;
  return summary;
}

}  // namespace scmsweep
