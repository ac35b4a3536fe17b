#include "scmsweep/music.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "scmsweep/array_model.hpp"

namespace scmsweep {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kRadToDeg = 180.0 / std::numbers::pi;

void check_grid(const std::vector<double>& grid_deg) {
  if (grid_deg.empty()) {
    throw std::invalid_argument("scan grid is empty");
  }
  for (std::size_t i = 0; i < grid_deg.size(); ++i) {
    if (!(grid_deg[i] >= -90.0 && grid_deg[i] <= 90.0)) {
      throw std::invalid_argument("scan angle " + std::to_string(grid_deg[i]) +
                                  " outside [-90, 90] degrees");
    }
    if (i > 0 && !(grid_deg[i] > grid_deg[i - 1])) {
      throw std::invalid_argument("scan grid must be strictly increasing");
    }
  }
}

void check_spectrum_args(const ArrayConfig& cfg, const CMatrix& noise_basis,
                         const std::vector<double>& grid_deg) {
  cfg.validate();
  check_grid(grid_deg);
  if (noise_basis.rows() != cfg.antennas) {
    throw std::invalid_argument("noise basis has " +
                                std::to_string(noise_basis.rows()) +
                                " rows, expected " +
                                std::to_string(cfg.antennas));
  }
  if (noise_basis.cols() < 0 || noise_basis.cols() > cfg.antennas) {
    throw std::invalid_argument("noise basis is wider than the array");
  }
}

double spectrum_point(const ArrayConfig& cfg, const CMatrix& noise_basis,
                      double theta_deg) {
  const CVector a = steering_vector(cfg, theta_deg);
  const double denom = (noise_basis.adjoint() * a).squaredNorm();
  if (!(denom * kSpectrumCeiling > 1.0)) return kSpectrumCeiling;
  return 1.0 / denom;
}

/// Vertex of the parabola through three points, abscissae in sin(theta).
/// Falls back to the middle point when the fit degenerates or the vertex
/// escapes the bracket.
struct Vertex {
  double x;
  double y;
};

Vertex parabolic_vertex(double x0, double y0, double x1, double y1, double x2,
                        double y2) {
  const double d1 = x1 - x0;
  const double d2 = x1 - x2;
  const double num = d1 * d1 * (y1 - y2) - d2 * d2 * (y1 - y0);
  const double den = d1 * (y1 - y2) - d2 * (y1 - y0);
  if (den == 0.0 || !std::isfinite(num / den)) return {x1, y1};
  const double xv = x1 - 0.5 * num / den;
  if (!(xv > x0 && xv < x2)) return {x1, y1};
  const double l0 = ((xv - x1) * (xv - x2)) / ((x0 - x1) * (x0 - x2));
  const double l1 = ((xv - x0) * (xv - x2)) / ((x1 - x0) * (x1 - x2));
  const double l2 = ((xv - x0) * (xv - x1)) / ((x2 - x0) * (x2 - x1));
  return {xv, y0 * l0 + y1 * l1 + y2 * l2};
}

}  // namespace

EigenDecomposition hermitian_eig(const CovarianceEstimate& scm) {
  const CMatrix& r = scm.matrix;
  if (r.rows() < 1 || r.rows() != r.cols()) {
    throw std::invalid_argument("covariance must be square and nonempty");
  }
  if (!r.allFinite()) {
    throw std::invalid_argument("covariance has non-finite entries");
  }
  if ((r - r.adjoint()).norm() > 1e-9 * r.norm() && r.norm() > 0.0) {
    throw std::invalid_argument("covariance is not Hermitian");
  }
  const CMatrix sym = ((r + r.adjoint()) / 2.0).eval();
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition did not converge");
  }
  EigenDecomposition out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

CMatrix noise_subspace(const EigenDecomposition& eig, int source_count) {
  const int dim = static_cast<int>(eig.eigenvalues.size());
  if (eig.eigenvectors.rows() != dim || eig.eigenvectors.cols() != dim) {
    throw std::invalid_argument("eigendecomposition is inconsistent");
  }
  if (source_count < 1 || source_count >= dim) {
    throw std::invalid_argument("source count must satisfy 1 <= L < M, got " +
                                std::to_string(source_count));
  }
  return eig.eigenvectors.rightCols(dim - source_count);
}

std::vector<double> make_angle_grid(double step_deg) {
  if (!(step_deg > 0.0) || !(step_deg <= 180.0)) {
    throw std::invalid_argument("grid step must lie in (0, 180] degrees");
  }
  const long intervals = std::max(1L, std::lround(180.0 / step_deg));
  std::vector<double> grid(intervals + 1);
  for (long i = 0; i <= intervals; ++i) {
    grid[i] = -90.0 + (180.0 * i) / intervals;
  }
  return grid;
}

MusicSpectrum pseudospectrum(const ArrayConfig& cfg, const CMatrix& noise_basis,
                             const std::vector<double>& grid_deg) {
  check_spectrum_args(cfg, noise_basis, grid_deg);
  MusicSpectrum spectrum;
  spectrum.grid_deg = grid_deg;
  spectrum.values.resize(grid_deg.size());
  spectrum.source_count = cfg.antennas - static_cast<int>(noise_basis.cols());
  const int points = static_cast<int>(grid_deg.size());
#pragma omp parallel for schedule(static)
  for (int i = 0; i < points; ++i) {
    spectrum.values[i] = spectrum_point(cfg, noise_basis, grid_deg[i]);
  }
  return spectrum;
}

DoaEstimate estimate_doas(const MusicSpectrum& spectrum, int source_count) {
  const int points = static_cast<int>(spectrum.values.size());
  if (points == 0 || spectrum.grid_deg.size() != spectrum.values.size()) {
    throw std::invalid_argument("spectrum is empty or inconsistent");
  }
  check_grid(spectrum.grid_deg);
  if (source_count < 1) {
    throw std::invalid_argument("source count must be >= 1");
  }
  if (source_count > points) {
    throw std::invalid_argument("source count exceeds the grid size");
  }
  const auto& y = spectrum.values;
  const auto& grid = spectrum.grid_deg;
  auto sin_at = [&](int i) { return std::sin(grid[i] * kDegToRad); };

  struct Peak {
    double angle_deg;
    double height;
    int index;
  };
  std::vector<Peak> peaks;
  std::vector<char> is_peak(points, 0);
  for (int i = 0; i < points; ++i) {
    bool peak = false;
    if (points == 1) {
      peak = true;
    } else if (i == 0) {
      peak = y[0] > y[1];
    } else if (i == points - 1) {
      peak = y[i] > y[i - 1];
    } else {
      peak = y[i] > y[i - 1] && y[i] > y[i + 1];
    }
    if (!peak) continue;
    is_peak[i] = 1;
    double angle = grid[i];
    double height = y[i];
    if (i > 0 && i < points - 1) {
      const Vertex v = parabolic_vertex(sin_at(i - 1), y[i - 1], sin_at(i), y[i],
                                        sin_at(i + 1), y[i + 1]);
      angle = std::asin(std::clamp(v.x, -1.0, 1.0)) * kRadToDeg;
      height = v.y;
    }
    peaks.push_back({angle, height, i});
  }
  std::sort(peaks.begin(), peaks.end(), [](const Peak& a, const Peak& b) {
    if (a.height != b.height) return a.height > b.height;
    return a.index < b.index;
  });

  DoaEstimate out;
  const int from_peaks = std::min<int>(source_count, static_cast<int>(peaks.size()));
  for (int i = 0; i < from_peaks; ++i) {
    out.angles_deg.push_back(peaks[i].angle_deg);
  }
  if (from_peaks < source_count) {
    // Not enough local maxima: pad from the tallest non-peak grid points so
    // the caller always gets source_count angles back.
    out.degenerate = true;
    std::vector<int> rest;
    for (int i = 0; i < points; ++i) {
      if (!is_peak[i]) rest.push_back(i);
    }
    std::sort(rest.begin(), rest.end(), [&](int a, int b) {
      if (y[a] != y[b]) return y[a] > y[b];
      return a < b;
    });
    for (int i = 0; i < source_count - from_peaks; ++i) {
      out.angles_deg.push_back(grid[rest[i]]);
    }
  }
  std::sort(out.angles_deg.begin(), out.angles_deg.end());
  return out;
}

namespace serial {

MusicSpectrum pseudospectrum(const ArrayConfig& cfg, const CMatrix& noise_basis,
                             const std::vector<double>& grid_deg) {
  check_spectrum_args(cfg, noise_basis, grid_deg);
  MusicSpectrum spectrum;
  spectrum.grid_deg = grid_deg;
  spectrum.values.resize(grid_deg.size());
  spectrum.source_count = cfg.antennas - static_cast<int>(noise_basis.cols());
  for (std::size_t i = 0; i < grid_deg.size(); ++i) {
    spectrum.values[i] = spectrum_point(cfg, noise_basis, grid_deg[i]);
  }
  return spectrum;
}

}  // namespace serial

}  // namespace scmsweep
