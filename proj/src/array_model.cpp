#include "scmsweep/array_model.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace scmsweep {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

void check_doa(double theta_deg) {
  if (!(theta_deg >= -90.0 && theta_deg <= 90.0)) {
    throw std::invalid_argument("DOA " + std::to_string(theta_deg) +
                                " outside [-90, 90] degrees");
  }
}

}  // namespace

CVector steering_subvector(const ArrayConfig& cfg, int chain, double theta_deg) {
  cfg.validate();
  if (chain < 0 || chain >= cfg.rf_chains) {
    throw std::invalid_argument("chain index " + std::to_string(chain) +
                                " out of range");
  }
  check_doa(theta_deg);
  const int sub = cfg.antennas_per_chain();
  const double phase_step = 2.0 * std::numbers::pi * cfg.spacing_wavelengths *
                            std::sin(theta_deg * kDegToRad);
  CVector a(sub);
  for (int m = 0; m < sub; ++m) {
    a(m) = std::polar(1.0, phase_step * (chain * sub + m));
  }
  return a;
}

CVector steering_vector(const ArrayConfig& cfg, double theta_deg) {
  cfg.validate();
  check_doa(theta_deg);
  const int sub = cfg.antennas_per_chain();
  CVector a(cfg.antennas);
  for (int n = 0; n < cfg.rf_chains; ++n) {
    a.segment(n * sub, sub) = steering_subvector(cfg, n, theta_deg);
  }
  return a;
}

CovarianceEstimate true_scm(const ArrayConfig& cfg, const SourceScene& scene) {
  cfg.validate();
  scene.validate();
  CMatrix r = CMatrix::Zero(cfg.antennas, cfg.antennas);
  for (int l = 0; l < scene.source_count(); ++l) {
    const CVector a = steering_vector(cfg, scene.doas_deg[l]);
    r.noalias() += scene.powers[l] * (a * a.adjoint());
  }
  r.diagonal().array() += scene.noise_power;
  CovarianceEstimate est;
  est.matrix = std::move(r);
  est.provenance = Provenance::truth;
  est.rf_chains = cfg.rf_chains;
  return est;
}

SnapshotBatch generate_snapshots(const ArrayConfig& cfg, const SourceScene& scene,
                                 int samples, std::uint64_t seed) {
  cfg.validate();
  scene.validate();
  if (samples < 1) {
    throw std::invalid_argument("snapshot count must be >= 1, got " +
                                std::to_string(samples));
  }
  const int sources = scene.source_count();
  std::vector<CVector> steer(sources);
  std::vector<double> amp(sources);
  for (int l = 0; l < sources; ++l) {
    steer[l] = steering_vector(cfg, scene.doas_deg[l]);
    amp[l] = std::sqrt(scene.powers[l] / 2.0);  // per real dimension
  }
  const double noise_amp = std::sqrt(scene.noise_power / 2.0);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> unit(0.0, 1.0);
  SnapshotBatch batch;
  batch.data.resize(cfg.antennas, samples);
  for (int k = 0; k < samples; ++k) {
    auto col = batch.data.col(k);
    col.setZero();
    for (int l = 0; l < sources; ++l) {
      const cxd waveform(amp[l] * unit(rng), amp[l] * unit(rng));
      col += steer[l] * waveform;
    }
    for (int m = 0; m < cfg.antennas; ++m) {
      col(m) += cxd(noise_amp * unit(rng), noise_amp * unit(rng));
    }
  }
  return batch;
}

}  // namespace scmsweep
