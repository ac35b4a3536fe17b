// Hybrid ULA geometry: steering vectors, ensemble covariance, snapshots.
#pragma once

#include <cstdint>

#include "scmsweep/types.hpp"

namespace scmsweep {

/// Steering phasors of one chain's antenna group. Entry m belongs to
/// absolute element index chain * M/N + m, so the phase ramp continues
/// seamlessly across chains.
CVector steering_subvector(const ArrayConfig& cfg, int chain, double theta_deg);

/// Full-array steering vector: the N chain subvectors stacked in order.
/// Independent of the chain partition for a fixed element count.
CVector steering_vector(const ArrayConfig& cfg, double theta_deg);

/// Ensemble covariance sum_l sigma_l^2 a(theta_l) a(theta_l)^H + N0 I.
CovarianceEstimate true_scm(const ArrayConfig& cfg, const SourceScene& scene);

/// Draws i.i.d. snapshots with circularly symmetric complex Gaussian source
/// waveforms and noise. Deterministic for a fixed seed.
SnapshotBatch generate_snapshots(const ArrayConfig& cfg, const SourceScene& scene,
                                 int samples, std::uint64_t seed);

}  // namespace scmsweep
