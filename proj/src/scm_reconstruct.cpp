#include "scmsweep/scm_reconstruct.hpp"

#include <cmath>

#include "scmsweep/array_model.hpp"

namespace scmsweep {

namespace {

void check_chain(const ArrayConfig& cfg, int chain) {
  if (chain < 0 || chain >= cfg.rf_chains) {
    throw std::invalid_argument("chain index " + std::to_string(chain) +
                                " out of range");
  }
}

void check_correlations(const ArrayConfig& cfg, const SweepPlan& plan,
                        const CorrelationSet& correlations) {
  if (correlations.sweep_count() != plan.size()) {
    throw std::invalid_argument("correlation set has " +
                                std::to_string(correlations.sweep_count()) +
                                " beams but the plan has " +
                                std::to_string(plan.size()));
  }
  if (correlations.chains() != cfg.rf_chains) {
    throw std::invalid_argument("correlation set is for " +
                                std::to_string(correlations.chains()) +
                                " chains, expected " +
                                std::to_string(cfg.rf_chains));
  }
}

/// Sub-block width M/N recovered from an unknown count, basic systems.
int sub_from_unknowns(int unknowns) {
  const int sub = static_cast<int>(std::lround(std::sqrt(double(unknowns))));
  if (sub < 2 || sub * sub != unknowns) {
    throw std::invalid_argument("basic system width " + std::to_string(unknowns) +
                                " is not a square >= 4");
  }
  return sub;
}

/// Sub-block width M/N recovered from a lag count, compressed systems.
int sub_from_lags(int lags) {
  const int sub = (lags + 1) / 2;
  if (sub < 2 || 2 * sub - 1 != lags) {
    throw std::invalid_argument("compressed system width " + std::to_string(lags) +
                                " is not of the form 2 M/N - 1");
  }
  return sub;
}

CMatrix toeplitz_from_lags(const CVector& lags, int sub) {
  CMatrix block(sub, sub);
  for (int m1 = 0; m1 < sub; ++m1) {
    for (int m2 = 0; m2 < sub; ++m2) {
      block(m1, m2) = lags(m1 - m2 + sub - 1);
    }
  }
  return block;
}

CMatrix basic_design(const ArrayConfig& cfg, const SweepPlan& plan, int chain1,
                     int chain2) {
  const int sub = cfg.antennas_per_chain();
  CMatrix design(plan.size(), sub * sub);
  for (int q = 0; q < plan.size(); ++q) {
    const CVector a1 = steering_subvector(cfg, chain1, plan.angles_deg[q]);
    const CVector a2 = steering_subvector(cfg, chain2, plan.angles_deg[q]);
    for (int m2 = 0; m2 < sub; ++m2) {
      for (int m1 = 0; m1 < sub; ++m1) {
        design(q, m2 * sub + m1) = a2(m2) * std::conj(a1(m1));
      }
    }
  }
  return design;
}

CMatrix compressed_design(const ArrayConfig& cfg, const SweepPlan& plan,
                          int chain1, int chain2) {
  const int width = 2 * cfg.antennas_per_chain() - 1;
  CMatrix design(plan.size(), width);
  for (int q = 0; q < plan.size(); ++q) {
    design.row(q) = build_compressed_row(cfg, plan, q, chain1, chain2).transpose();
  }
  return design;
}

void check_compressed_conditioning(const CMatrix& gram) {
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(gram);
  if (eig.info() != Eigen::Success) {
    throw std::runtime_error("compressed Gram eigendecomposition failed");
  }
  const double lo = eig.eigenvalues()(0);
  const double hi = eig.eigenvalues()(gram.rows() - 1);
  if (!(lo > 0.0) || hi > kConditionLimit * lo) {
    throw IllConditionedError(
        "compressed Gram condition number exceeds 1e12; the sweep plan does "
        "not excite all Toeplitz lags");
  }
}

}  // namespace

CovarianceEstimate sample_average_scm(const SnapshotBatch& batch) {
  if (batch.sample_count() < 1) {
    throw std::invalid_argument("sample average needs at least one snapshot");
  }
  const int dim = static_cast<int>(batch.data.rows());
  CMatrix r = CMatrix::Zero(dim, dim);
  r.selfadjointView<Eigen::Lower>().rankUpdate(batch.data,
                                               1.0 / batch.sample_count());
  r.triangularView<Eigen::StrictlyUpper>() =
      r.triangularView<Eigen::StrictlyLower>().adjoint();
  CovarianceEstimate est;
  est.matrix = std::move(r);
  est.provenance = Provenance::sample_average;
  est.samples_per_beam = batch.sample_count();
  return est;
}

LinearSystem build_basic_system(const ArrayConfig& cfg, const SweepPlan& plan,
                                int chain1, int chain2,
                                const CorrelationSet& correlations) {
  cfg.validate();
  check_chain(cfg, chain1);
  check_chain(cfg, chain2);
  check_correlations(cfg, plan, correlations);
  LinearSystem system;
  system.kind = SystemKind::basic;
  system.matrix = basic_design(cfg, plan, chain1, chain2);
  system.rhs = correlations.pair_values(chain1, chain2);
  return system;
}

CMatrix solve_basic(const LinearSystem& system, double diagonal_loading) {
  if (system.kind != SystemKind::basic) {
    throw std::invalid_argument("solve_basic needs a basic system");
  }
  if (!(diagonal_loading > 0.0) || !std::isfinite(diagonal_loading)) {
    throw std::invalid_argument("diagonal loading must be positive and finite");
  }
  if (system.rhs.size() != system.matrix.rows()) {
    throw std::invalid_argument("system rhs length does not match its row count");
  }
  const int sub = sub_from_unknowns(static_cast<int>(system.matrix.cols()));
  CMatrix gram = system.matrix.adjoint() * system.matrix;
  gram.diagonal().array() += diagonal_loading;
  const CVector solution =
      Eigen::LDLT<CMatrix>(gram).solve(system.matrix.adjoint() * system.rhs);
  return Eigen::Map<const CMatrix>(solution.data(), sub, sub);
}

Eigen::MatrixXd build_selection_matrix(const ArrayConfig& cfg) {
  cfg.validate();
  const int sub = cfg.antennas_per_chain();
  Eigen::MatrixXd e = Eigen::MatrixXd::Zero(sub * sub, 2 * sub - 1);
  // vec index m2 * M/N + m1 holds sub-SCM entry (m1, m2), which under the
  // Toeplitz assumption is the lag m1 - m2. Lags run 1 - M/N .. M/N - 1.
  for (int m2 = 0; m2 < sub; ++m2) {
    for (int m1 = 0; m1 < sub; ++m1) {
      e(m2 * sub + m1, m1 - m2 + sub - 1) = 1.0;
    }
  }
  return e;
}

CVector build_compressed_row(const ArrayConfig& cfg, const SweepPlan& plan,
                             int beam, int chain1, int chain2) {
  cfg.validate();
  check_chain(cfg, chain1);
  check_chain(cfg, chain2);
  if (beam < 0 || beam >= plan.size()) {
    throw std::invalid_argument("beam index " + std::to_string(beam) +
                                " out of range");
  }
  const int sub = cfg.antennas_per_chain();
  const CVector a1 = steering_subvector(cfg, chain1, plan.angles_deg[beam]);
  const CVector a2 = steering_subvector(cfg, chain2, plan.angles_deg[beam]);
  CVector row(2 * sub - 1);
  for (int m0 = 0; m0 < 2 * sub - 1; ++m0) {
    cxd acc(0.0, 0.0);
    for (int m = 0; m < sub; ++m) {
      const int i = sub - 1 - m0 + m;
      if (i < 0 || i >= sub) continue;
      acc += a2(i) * std::conj(a1(m));
    }
    row(m0) = acc;
  }
  return row;
}

LinearSystem build_compressed_system(const ArrayConfig& cfg, const SweepPlan& plan,
                                     int chain1, int chain2,
                                     const CorrelationSet& correlations) {
  cfg.validate();
  check_chain(cfg, chain1);
  check_chain(cfg, chain2);
  check_correlations(cfg, plan, correlations);
  LinearSystem system;
  system.kind = SystemKind::compressed;
  system.matrix = compressed_design(cfg, plan, chain1, chain2);
  system.rhs = correlations.pair_values(chain1, chain2);
  return system;
}

CMatrix solve_low_complexity(const LinearSystem& system) {
  if (system.kind != SystemKind::compressed) {
    throw std::invalid_argument("solve_low_complexity needs a compressed system");
  }
  if (system.rhs.size() != system.matrix.rows()) {
    throw std::invalid_argument("system rhs length does not match its row count");
  }
  const int width = static_cast<int>(system.matrix.cols());
  const int sub = sub_from_lags(width);
  if (system.matrix.rows() < width) {
    throw IllConditionedError("compressed system needs at least " +
                              std::to_string(width) + " sweep beams, got " +
                              std::to_string(system.matrix.rows()));
  }
  const CMatrix gram = system.matrix.adjoint() * system.matrix;
  check_compressed_conditioning(gram);
  const CVector lags =
      Eigen::LDLT<CMatrix>(gram).solve(system.matrix.adjoint() * system.rhs);
  return toeplitz_from_lags(lags, sub);
}

RVector gram_diagonal_closed_form(const ArrayConfig& cfg, int sweep_count) {
  cfg.validate();
  if (cfg.spacing_wavelengths != 0.5) {
    throw std::invalid_argument(
        "closed-form Gram diagonal requires half-wavelength spacing");
  }
  const int sub = cfg.antennas_per_chain();
  const int width = 2 * sub - 1;
  if (sweep_count < width) {
    throw std::invalid_argument("closed form needs at least " +
                                std::to_string(width) + " beams, got " +
                                std::to_string(sweep_count));
  }
  RVector diagonal(width);
  for (int m = 0; m < width; ++m) {
    const int occupancy = (m <= sub - 1) ? m + 1 : 2 * sub - 1 - m;
    diagonal(m) = static_cast<double>(sweep_count) * occupancy * occupancy;
  }
  return diagonal;
}

CMatrix solve_fast_diagonal(const ArrayConfig& cfg, const SweepPlan& plan,
                            const CVector& rhs, int chain1, int chain2) {
  cfg.validate();
  check_chain(cfg, chain1);
  check_chain(cfg, chain2);
  if (plan.family != PlanFamily::uniform_spatial_freq) {
    throw std::invalid_argument(
        "fast diagonal solve requires a uniform-spatial-frequency plan");
  }
  if (rhs.size() != plan.size()) {
    throw std::invalid_argument("rhs has " + std::to_string(rhs.size()) +
                                " entries for a plan of " +
                                std::to_string(plan.size()) + " beams");
  }
  const int sub = cfg.antennas_per_chain();
  const int width = 2 * sub - 1;
  if (plan.size() < width) {
    throw IllConditionedError("fast diagonal solve needs at least " +
                              std::to_string(width) + " sweep beams, got " +
                              std::to_string(plan.size()));
  }
  const RVector diagonal = gram_diagonal_closed_form(cfg, plan.size());
  CVector bh_rhs = CVector::Zero(width);
  for (int q = 0; q < plan.size(); ++q) {
    bh_rhs += build_compressed_row(cfg, plan, q, chain1, chain2).conjugate() * rhs(q);
  }
  const CVector lags = bh_rhs.array() / diagonal.array().cast<cxd>();
  return toeplitz_from_lags(lags, sub);
}

CovarianceEstimate assemble_overall(const ArrayConfig& cfg,
                                    const std::vector<std::optional<CMatrix>>& grid) {
  cfg.validate();
  const int chains = cfg.rf_chains;
  const int sub = cfg.antennas_per_chain();
  if (static_cast<int>(grid.size()) != chains * chains) {
    throw std::invalid_argument("block grid has " + std::to_string(grid.size()) +
                                " entries, expected " +
                                std::to_string(chains * chains));
  }
  CMatrix r(cfg.antennas, cfg.antennas);
  for (int n1 = 0; n1 < chains; ++n1) {
    for (int n2 = 0; n2 < chains; ++n2) {
      const auto& block = grid[n1 * chains + n2];
      const auto& mirror = grid[n2 * chains + n1];
      auto target = r.block(n1 * sub, n2 * sub, sub, sub);
      if (block) {
        if (block->rows() != sub || block->cols() != sub) {
          throw std::invalid_argument("block (" + std::to_string(n1) + ", " +
                                      std::to_string(n2) + ") is not " +
                                      std::to_string(sub) + "x" +
                                      std::to_string(sub));
        }
        target = *block;
      } else if (mirror) {
        target = mirror->adjoint();
      } else {
        throw std::invalid_argument("chain pair (" + std::to_string(n1) + ", " +
                                    std::to_string(n2) +
                                    ") has neither a block nor a mirror");
      }
    }
  }
  CovarianceEstimate est;
  est.matrix = ((r + r.adjoint()) / 2.0).eval();
  est.rf_chains = chains;
  return est;
}

long long multiplication_count(const ArrayConfig& cfg, int sweep_count,
                               Algorithm algorithm) {
  cfg.validate();
  if (sweep_count < 1) {
    throw std::invalid_argument("sweep count must be >= 1");
  }
  const long long sub = cfg.antennas_per_chain();
  switch (algorithm) {
    case Algorithm::basic:
      return static_cast<long long>(sweep_count) * sub * sub;
    case Algorithm::low_complexity:
      return static_cast<long long>(sweep_count) * (2 * sub - 1);
    default:
      throw std::invalid_argument(
          "multiplication count is defined for basic and low_complexity only");
  }
}

Reconstructor::Reconstructor(const ArrayConfig& cfg, SweepPlan plan,
                             Algorithm algorithm)
    : Reconstructor(cfg, std::move(plan), algorithm, Options{}) {}

Reconstructor::Reconstructor(const ArrayConfig& cfg, SweepPlan plan,
                             Algorithm algorithm, Options options)
    : cfg_(cfg), plan_(std::move(plan)), algorithm_(algorithm), options_(options) {
  cfg_.validate();
  if (plan_.size() < 1) {
    throw std::invalid_argument("sweep plan is empty");
  }
  if (algorithm_ == Algorithm::sample_average) {
    throw std::invalid_argument(
        "sample_average does not reconstruct from correlations");
  }
  if (algorithm_ == Algorithm::basic &&
      (!(options_.diagonal_loading > 0.0) ||
       !std::isfinite(options_.diagonal_loading))) {
    throw std::invalid_argument("diagonal loading must be positive and finite");
  }
  const int chains = cfg_.rf_chains;
  ops_.resize(2 * chains - 1);
  const int lo = options_.all_blocks ? -(chains - 1) : 0;
  for (int offset = lo; offset <= chains - 1; ++offset) {
    // Any pair with this chain offset yields the same design matrix.
    const int chain1 = offset >= 0 ? 0 : -offset;
    const int chain2 = offset >= 0 ? offset : 0;
    CMatrix& op = ops_[offset + chains - 1];
    switch (algorithm_) {
      case Algorithm::basic: {
        const CMatrix design = basic_design(cfg_, plan_, chain1, chain2);
        CMatrix gram = design.adjoint() * design;
        gram.diagonal().array() += options_.diagonal_loading;
        op = Eigen::LDLT<CMatrix>(gram).solve(design.adjoint());
        break;
      }
      case Algorithm::low_complexity: {
        const CMatrix design = compressed_design(cfg_, plan_, chain1, chain2);
        const int width = static_cast<int>(design.cols());
        if (design.rows() < width) {
          throw IllConditionedError("compressed system needs at least " +
                                    std::to_string(width) + " sweep beams, got " +
                                    std::to_string(design.rows()));
        }
        const CMatrix gram = design.adjoint() * design;
        check_compressed_conditioning(gram);
        op = Eigen::LDLT<CMatrix>(gram).solve(design.adjoint());
        break;
      }
      case Algorithm::fast_diagonal: {
        if (plan_.family != PlanFamily::uniform_spatial_freq) {
          throw std::invalid_argument(
              "fast diagonal solve requires a uniform-spatial-frequency plan");
        }
        const int width = 2 * cfg_.antennas_per_chain() - 1;
        if (plan_.size() < width) {
          throw IllConditionedError("fast diagonal solve needs at least " +
                                    std::to_string(width) + " sweep beams, got " +
                                    std::to_string(plan_.size()));
        }
        fast_diagonal_ = gram_diagonal_closed_form(cfg_, plan_.size());
        op = compressed_design(cfg_, plan_, chain1, chain2).adjoint();
        break;
      }
      case Algorithm::sample_average:
        break;  // rejected above
    }
  }
}

const CMatrix& Reconstructor::op_for_offset(int offset) const {
  return ops_[offset + cfg_.rf_chains - 1];
}

CovarianceEstimate Reconstructor::reconstruct(const CorrelationSet& correlations) const {
  check_correlations(cfg_, plan_, correlations);
  const int chains = cfg_.rf_chains;
  const int sub = cfg_.antennas_per_chain();
  std::vector<std::optional<CMatrix>> grid(chains * chains);
  for (int n1 = 0; n1 < chains; ++n1) {
    const int n2_lo = options_.all_blocks ? 0 : n1;
    for (int n2 = n2_lo; n2 < chains; ++n2) {
      const CVector rhs = correlations.pair_values(n1, n2);
      const CVector solution = op_for_offset(n2 - n1) * rhs;
      if (algorithm_ == Algorithm::basic) {
        grid[n1 * chains + n2] = Eigen::Map<const CMatrix>(solution.data(), sub, sub);
      } else if (algorithm_ == Algorithm::low_complexity) {
        grid[n1 * chains + n2] = toeplitz_from_lags(solution, sub);
      } else {
        const CVector lags = solution.array() / fast_diagonal_.array().cast<cxd>();
        grid[n1 * chains + n2] = toeplitz_from_lags(lags, sub);
      }
    }
  }
  CovarianceEstimate est = assemble_overall(cfg_, grid);
  switch (algorithm_) {
    case Algorithm::basic: est.provenance = Provenance::basic; break;
    case Algorithm::low_complexity: est.provenance = Provenance::low_complexity; break;
    case Algorithm::fast_diagonal: est.provenance = Provenance::fast_diagonal; break;
    case Algorithm::sample_average: break;
  }
  est.sweep_count = plan_.size();
  est.samples_per_beam = correlations.samples_per_beam;
  est.plan_family = plan_.family;
  if (algorithm_ == Algorithm::basic) {
    est.diagonal_loading = options_.diagonal_loading;
  }
  return est;
}

}  // namespace scmsweep
