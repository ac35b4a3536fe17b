// Shared value types for hybrid-array covariance reconstruction.
#pragma once

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace scmsweep {

using cxd = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Raised when a compressed-system Gram matrix is unusable: fewer sweep
/// beams than unknowns, or condition number beyond the 1e12 cutoff.
class IllConditionedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Geometry of a hybrid uniform linear array: `antennas` elements split
/// evenly across `rf_chains` analog combining chains.
struct ArrayConfig {
  int antennas = 0;
  int rf_chains = 1;
  double spacing_wavelengths = 0.5;

  int antennas_per_chain() const { return antennas / rf_chains; }
  void validate() const;
};

/// L independent far-field narrowband sources plus spatially white noise.
struct SourceScene {
  std::vector<double> doas_deg;
  std::vector<double> powers;
  double noise_power = 0.0;

  int source_count() const { return static_cast<int>(doas_deg.size()); }
  void validate() const;
};

/// A batch of full-array snapshots, one per column.
struct SnapshotBatch {
  CMatrix data;  // antennas x samples

  int sample_count() const { return static_cast<int>(data.cols()); }
};

enum class PlanFamily { uniform_theta, uniform_spatial_freq };

std::string to_string(PlanFamily family);
PlanFamily plan_family_from_string(const std::string& name);

/// Ordered list of predetermined beam DOAs the analog combiners sweep.
struct SweepPlan {
  std::vector<double> angles_deg;
  PlanFamily family = PlanFamily::uniform_theta;

  int size() const { return static_cast<int>(angles_deg.size()); }
};

enum class CorrelationSource { measured, oracle };

std::string to_string(CorrelationSource source);

/// Pairwise chain-output correlations P_{n1,n2} for every sweep beam.
struct CorrelationSet {
  std::vector<CMatrix> beams;  // one rf_chains x rf_chains Hermitian matrix per beam
  int samples_per_beam = 0;    // 0 for oracle sets
  CorrelationSource source = CorrelationSource::measured;

  int sweep_count() const { return static_cast<int>(beams.size()); }
  int chains() const {
    return beams.empty() ? 0 : static_cast<int>(beams.front().rows());
  }
  cxd value(int chain1, int chain2, int beam) const {
    return beams.at(beam)(chain1, chain2);
  }
  /// All beams of one chain pair, the right-hand side of one block system.
  CVector pair_values(int chain1, int chain2) const;
};

enum class Provenance { truth, sample_average, basic, low_complexity, fast_diagonal };

std::string to_string(Provenance provenance);
Provenance provenance_from_string(const std::string& name);

/// Reconstruction algorithms selectable in the simulation harness.
enum class Algorithm { sample_average, basic, low_complexity, fast_diagonal };

std::string to_string(Algorithm algorithm);
Algorithm algorithm_from_string(const std::string& name);

/// An M x M spatial covariance matrix together with how it was produced.
struct CovarianceEstimate {
  CMatrix matrix;
  Provenance provenance = Provenance::truth;

  // Provenance metadata; zero or unset where not applicable.
  int rf_chains = 0;
  int sweep_count = 0;
  int samples_per_beam = 0;
  std::optional<PlanFamily> plan_family;
  double diagonal_loading = 0.0;

  int dim() const { return static_cast<int>(matrix.rows()); }
};

}  // namespace scmsweep
