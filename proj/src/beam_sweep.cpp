#include "scmsweep/beam_sweep.hpp"

#include <cmath>
#include <numbers>

#include "scmsweep/array_model.hpp"
#include "scmsweep/rng.hpp"

namespace scmsweep {

namespace {

constexpr double kRadToDeg = 180.0 / std::numbers::pi;

void check_sweep_count(int sweep_count) {
  if (sweep_count < 1) {
    throw std::invalid_argument("sweep plan needs at least 1 beam, got " +
                                std::to_string(sweep_count));
  }
}

void check_beam(const SweepPlan& plan, int beam) {
  if (beam < 0 || beam >= plan.size()) {
    throw std::invalid_argument("beam index " + std::to_string(beam) +
                                " out of range for plan of size " +
                                std::to_string(plan.size()));
  }
}

/// Correlation matrix of one beam, drawn from its own snapshot batch.
/// Only the upper triangle is computed; the lower is the exact conjugate.
CMatrix beam_correlation(const ArrayConfig& cfg, const SweepPlan& plan,
                         const SourceScene& scene, int samples_per_beam,
                         std::uint64_t beam_seed, int beam) {
  const SnapshotBatch batch =
      generate_snapshots(cfg, scene, samples_per_beam, beam_seed);
  const int chains = cfg.rf_chains;
  std::vector<CVector> outputs(chains);
  for (int n = 0; n < chains; ++n) {
    outputs[n] = combine(cfg, plan, beam, n, batch);
  }
  const double k = static_cast<double>(samples_per_beam);
  CMatrix p(chains, chains);
  for (int n1 = 0; n1 < chains; ++n1) {
    for (int n2 = n1; n2 < chains; ++n2) {
      // (1/K) sum_k c_{n1}[k] conj(c_{n2}[k])
      p(n1, n2) = outputs[n2].dot(outputs[n1]) / k;
      if (n2 != n1) p(n2, n1) = std::conj(p(n1, n2));
    }
  }
  return p;
}

void check_measure_args(const ArrayConfig& cfg, const SweepPlan& plan,
                        const SourceScene& scene, int samples_per_beam) {
  cfg.validate();
  scene.validate();
  check_sweep_count(plan.size());
  if (samples_per_beam < 1) {
    throw std::invalid_argument("samples per beam must be >= 1, got " +
                                std::to_string(samples_per_beam));
  }
}

}  // namespace

SweepPlan uniform_theta_plan(int sweep_count) {
  check_sweep_count(sweep_count);
  SweepPlan plan;
  plan.family = PlanFamily::uniform_theta;
  plan.angles_deg.reserve(sweep_count);
  for (int q = 0; q < sweep_count; ++q) {
    plan.angles_deg.push_back(-90.0 + 180.0 * q / sweep_count);
  }
  return plan;
}

SweepPlan uniform_spatial_freq_plan(int sweep_count) {
  check_sweep_count(sweep_count);
  SweepPlan plan;
  plan.family = PlanFamily::uniform_spatial_freq;
  plan.angles_deg.reserve(sweep_count);
  for (int q = 0; q < sweep_count; ++q) {
    plan.angles_deg.push_back(std::asin(-1.0 + 2.0 * q / sweep_count) * kRadToDeg);
  }
  return plan;
}

CVector combine(const ArrayConfig& cfg, const SweepPlan& plan, int beam,
                int chain, const SnapshotBatch& batch) {
  cfg.validate();
  check_beam(plan, beam);
  if (batch.data.rows() != cfg.antennas) {
    throw std::invalid_argument("snapshot batch has " +
                                std::to_string(batch.data.rows()) +
                                " rows, expected " + std::to_string(cfg.antennas));
  }
  const int sub = cfg.antennas_per_chain();
  const CVector a = steering_subvector(cfg, chain, plan.angles_deg[beam]);
  return (a.adjoint() * batch.data.middleRows(chain * sub, sub)).transpose();
}

CorrelationSet measure_correlations(const ArrayConfig& cfg, const SweepPlan& plan,
                                    const SourceScene& scene, int samples_per_beam,
                                    std::uint64_t seed) {
  check_measure_args(cfg, plan, scene, samples_per_beam);
  CorrelationSet set;
  set.samples_per_beam = samples_per_beam;
  set.source = CorrelationSource::measured;
  set.beams.resize(plan.size());
#pragma omp parallel for schedule(dynamic)
  for (int q = 0; q < plan.size(); ++q) {
    set.beams[q] = beam_correlation(cfg, plan, scene, samples_per_beam,
                                    mix_seed(seed, static_cast<std::uint64_t>(q)), q);
  }
  return set;
}

CorrelationSet oracle_correlations(const ArrayConfig& cfg,
                                   const CovarianceEstimate& scm,
                                   const SweepPlan& plan) {
  cfg.validate();
  check_sweep_count(plan.size());
  const CMatrix& r = scm.matrix;
  if (r.rows() != cfg.antennas || r.cols() != cfg.antennas) {
    throw std::invalid_argument("covariance is " + std::to_string(r.rows()) + "x" +
                                std::to_string(r.cols()) + ", expected " +
                                std::to_string(cfg.antennas) + "x" +
                                std::to_string(cfg.antennas));
  }
  if (!r.allFinite()) {
    throw std::invalid_argument("covariance has non-finite entries");
  }
  if ((r - r.adjoint()).norm() > 1e-9 * r.norm()) {
    throw std::invalid_argument("covariance is not Hermitian");
  }
  const int chains = cfg.rf_chains;
  const int sub = cfg.antennas_per_chain();
  CorrelationSet set;
  set.samples_per_beam = 0;
  set.source = CorrelationSource::oracle;
  set.beams.resize(plan.size());
  for (int q = 0; q < plan.size(); ++q) {
    std::vector<CVector> steer(chains);
    for (int n = 0; n < chains; ++n) {
      steer[n] = steering_subvector(cfg, n, plan.angles_deg[q]);
    }
    CMatrix p(chains, chains);
    for (int n1 = 0; n1 < chains; ++n1) {
      for (int n2 = n1; n2 < chains; ++n2) {
        const auto block = r.block(n1 * sub, n2 * sub, sub, sub);
        p(n1, n2) = steer[n1].dot(block * steer[n2]);
        if (n2 != n1) p(n2, n1) = std::conj(p(n1, n2));
      }
    }
    set.beams[q] = std::move(p);
  }
  return set;
}

namespace serial {

CorrelationSet measure_correlations(const ArrayConfig& cfg, const SweepPlan& plan,
                                    const SourceScene& scene, int samples_per_beam,
                                    std::uint64_t seed) {
  check_measure_args(cfg, plan, scene, samples_per_beam);
  const int chains = cfg.rf_chains;
  const double k = static_cast<double>(samples_per_beam);
  CorrelationSet set;
  set.samples_per_beam = samples_per_beam;
  set.source = CorrelationSource::measured;
  set.beams.resize(plan.size());
  for (int q = 0; q < plan.size(); ++q) {
    const SnapshotBatch batch = generate_snapshots(
        cfg, scene, samples_per_beam, mix_seed(seed, static_cast<std::uint64_t>(q)));
    std::vector<CVector> outputs(chains);
    for (int n = 0; n < chains; ++n) {
      outputs[n] = combine(cfg, plan, q, n, batch);
    }
    CMatrix p(chains, chains);
    for (int n1 = 0; n1 < chains; ++n1) {
      for (int n2 = 0; n2 < chains; ++n2) {
        p(n1, n2) = outputs[n2].dot(outputs[n1]) / k;
      }
    }
    set.beams[q] = std::move(p);
  }
  return set;
}

}  // namespace serial

}  // namespace scmsweep
