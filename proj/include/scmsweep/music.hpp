// MUSIC direction finding on a covariance estimate: eigendecomposition,
// noise subspace, pseudospectrum, and refined peak extraction.
#pragma once

#include "scmsweep/types.hpp"

namespace scmsweep {

/// Ceiling applied to pseudospectrum values where the noise-subspace
/// projection underflows (exact grid hits on noise-free covariances).
inline constexpr double kSpectrumCeiling = 1e12;

/// Eigenpairs sorted by descending eigenvalue; column j of `eigenvectors`
/// pairs with `eigenvalues(j)`.
struct EigenDecomposition {
  RVector eigenvalues;
  CMatrix eigenvectors;
};

struct MusicSpectrum {
  std::vector<double> grid_deg;   // strictly increasing scan angles
  std::vector<double> values;     // pseudospectrum, finite and positive
  int source_count = 0;
};

struct DoaEstimate {
  std::vector<double> angles_deg;  // ascending, source_count entries
  bool degenerate = false;         // fewer spectrum peaks than sources
};

/// Hermitian eigendecomposition of a covariance estimate. The input may
/// carry up to 1e-9 relative asymmetry; anything worse is rejected.
EigenDecomposition hermitian_eig(const CovarianceEstimate& scm);

/// Eigenvectors of the M - L smallest eigenvalues, the estimated noise
/// subspace for L sources.
CMatrix noise_subspace(const EigenDecomposition& eig, int source_count);

/// Scan grid over [-90, 90] with (approximately) the requested step; the
/// endpoints are always included and the step is rounded so the grid is
/// exactly uniform.
std::vector<double> make_angle_grid(double step_deg);

/// p(theta) = 1 / || U_n^H a(theta) ||^2 on the given grid, clamped at
/// kSpectrumCeiling. Grid points are evaluated in parallel.
MusicSpectrum pseudospectrum(const ArrayConfig& cfg, const CMatrix& noise_basis,
                             const std::vector<double>& grid_deg);

/// Takes the source_count tallest local maxima, each refined by a 3-point
/// parabolic fit in sin(theta). When fewer peaks exist, the output is
/// padded with the largest remaining grid values and flagged degenerate.
DoaEstimate estimate_doas(const MusicSpectrum& spectrum, int source_count);

namespace serial {

/// Single-threaded reference for the parallel pseudospectrum; must agree
/// bit for bit.
MusicSpectrum pseudospectrum(const ArrayConfig& cfg, const CMatrix& noise_basis,
                             const std::vector<double>& grid_deg);

}  // namespace serial

}  // namespace scmsweep
