// Analog beam sweeping: plans, combining, and chain-pair correlations.
#pragma once

#include <cstdint>

#include "scmsweep/types.hpp"

namespace scmsweep {

/// Beam DOAs equispaced in angle: theta_q = -90 + 180 q / Q (half-open).
SweepPlan uniform_theta_plan(int sweep_count);

/// Beam DOAs equispaced in spatial frequency: theta_q = asin(-1 + 2q / Q).
/// For half-wavelength spacing the frequencies d/lambda sin(theta_q) cover
/// [-0.5, 0.5) uniformly, which is what makes the compressed Gram diagonal.
SweepPlan uniform_spatial_freq_plan(int sweep_count);

/// Output of one chain's analog combiner for every snapshot in the batch:
/// c[k] = a_n(theta_beam)^H y_n[k].
CVector combine(const ArrayConfig& cfg, const SweepPlan& plan, int beam,
                int chain, const SnapshotBatch& batch);

/// Sweeps every beam in the plan, drawing a fresh batch of
/// `samples_per_beam` snapshots per beam, and averages the pairwise
/// combiner-output products into correlation matrices. Beams are processed
/// in parallel; the per-beam seed is mix_seed(seed, beam), so the result is
/// identical to the serial reference.
CorrelationSet measure_correlations(const ArrayConfig& cfg, const SweepPlan& plan,
                                    const SourceScene& scene, int samples_per_beam,
                                    std::uint64_t seed);

/// Noise-free correlations a_{n1}^H R_{n1,n2} a_{n2} computed directly from
/// a covariance matrix, bypassing snapshot noise entirely.
CorrelationSet oracle_correlations(const ArrayConfig& cfg,
                                   const CovarianceEstimate& scm,
                                   const SweepPlan& plan);

namespace serial {

/// Single-threaded reference for the parallel sweep above. Computes every
/// chain pair directly instead of mirroring the upper triangle; the two
/// must agree bit for bit.
CorrelationSet measure_correlations(const ArrayConfig& cfg, const SweepPlan& plan,
                                    const SourceScene& scene, int samples_per_beam,
                                    std::uint64_t seed);

}  // namespace serial

}  // namespace scmsweep
