// Covariance reconstruction from beam-swept correlations: the basic
// Kronecker least-squares solver, the Toeplitz-compressed low-complexity
// solver, and the diagonal fast path for uniform-spatial-frequency plans.
#pragma once

#include "scmsweep/types.hpp"

namespace scmsweep {

/// Condition-number cutoff beyond which compressed systems are refused.
inline constexpr double kConditionLimit = 1e12;

enum class SystemKind { basic, compressed };

/// One chain pair's linear model: matrix * unknowns = rhs, with one row per
/// sweep beam. Basic systems have (M/N)^2 unknowns (the vectorized
/// sub-SCM); compressed systems have 2 M/N - 1 (its Toeplitz lags).
struct LinearSystem {
  CMatrix matrix;
  CVector rhs;
  SystemKind kind = SystemKind::basic;
};

/// Plain covariance estimate (1/K) sum_k y[k] y[k]^H from full-array
/// snapshots. The digital-array baseline the hybrid schemes are measured
/// against.
CovarianceEstimate sample_average_scm(const SnapshotBatch& batch);

/// Basic per-pair system: row q is (a_{n2} kron conj(a_{n1}))^T under the
/// column-major vec convention, rhs is the beam correlations of the pair.
LinearSystem build_basic_system(const ArrayConfig& cfg, const SweepPlan& plan,
                                int chain1, int chain2,
                                const CorrelationSet& correlations);

/// Diagonally loaded least squares
/// (A^H A + loading I)^{-1} A^H p, unvectorized back to an M/N x M/N block.
CMatrix solve_basic(const LinearSystem& system, double diagonal_loading);

/// Selection matrix E mapping the 2 M/N - 1 Toeplitz lags of a sub-SCM to
/// its (M/N)^2 vectorized entries: vec(sub-SCM) = E * lags.
Eigen::MatrixXd build_selection_matrix(const ArrayConfig& cfg);

/// One row of the compressed system, computed directly as the linear
/// convolution of the two chains' steering phasors. Equals the basic row
/// times E without ever forming the Kronecker product.
CVector build_compressed_row(const ArrayConfig& cfg, const SweepPlan& plan,
                             int beam, int chain1, int chain2);

/// Stacks build_compressed_row over all beams with the pair's correlations
/// as rhs.
LinearSystem build_compressed_system(const ArrayConfig& cfg, const SweepPlan& plan,
                                     int chain1, int chain2,
                                     const CorrelationSet& correlations);

/// Ordinary least squares on a compressed system followed by the Toeplitz
/// fill. Throws IllConditionedError when the system has fewer beams than
/// lags or the Gram condition number exceeds kConditionLimit.
CMatrix solve_low_complexity(const LinearSystem& system);

/// Closed-form diagonal of the compressed Gram for uniform-spatial-frequency
/// plans: entry m is Q c_m^2 with c_m the lag occupancy count M/N - |m - (M/N - 1)|.
/// Valid only for half-wavelength spacing.
RVector gram_diagonal_closed_form(const ArrayConfig& cfg, int sweep_count);

/// Low-complexity solve specialized to uniform-spatial-frequency plans:
/// the Gram is diagonal and known in closed form, so no system is inverted.
CMatrix solve_fast_diagonal(const ArrayConfig& cfg, const SweepPlan& plan,
                            const CVector& rhs, int chain1, int chain2);

/// Places per-pair blocks into the full M x M matrix, filling any missing
/// block from the adjoint of its mirror pair, then symmetrizes. Blocks are
/// indexed row-major: grid[n1 * N + n2] is the (n1, n2) block.
CovarianceEstimate assemble_overall(const ArrayConfig& cfg,
                                    const std::vector<std::optional<CMatrix>>& grid);

/// Online complex multiplications one chain pair costs after offline
/// precomputation: Q (M/N)^2 for basic, Q (2 M/N - 1) for low_complexity.
long long multiplication_count(const ArrayConfig& cfg, int sweep_count,
                               Algorithm algorithm);

/// Reusable reconstruction engine. Precomputes one solve operator per chain
/// offset (the design matrix depends on the pair only through n2 - n1), so
/// repeated trials and all chain pairs share the offline work.
class Reconstructor {
 public:
  struct Options {
    double diagonal_loading = 1.0;  // basic algorithm only
    bool all_blocks = false;        // solve every pair instead of mirroring
  };

  Reconstructor(const ArrayConfig& cfg, SweepPlan plan, Algorithm algorithm);
  Reconstructor(const ArrayConfig& cfg, SweepPlan plan, Algorithm algorithm,
                Options options);

  CovarianceEstimate reconstruct(const CorrelationSet& correlations) const;

  const SweepPlan& plan() const { return plan_; }
  Algorithm algorithm() const { return algorithm_; }

 private:
  const CMatrix& op_for_offset(int offset) const;

  ArrayConfig cfg_;
  SweepPlan plan_;
  Algorithm algorithm_;
  Options options_;
  // Indexed by offset + N - 1. Basic / low_complexity: maps rhs to the
  // solution directly. Fast diagonal: holds B^H; the closed-form diagonal
  // below finishes the solve.
  std::vector<CMatrix> ops_;
  RVector fast_diagonal_;
};

}  // namespace scmsweep
