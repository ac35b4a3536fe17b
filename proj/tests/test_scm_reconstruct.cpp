#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>

#include "scmsweep/array_model.hpp"
#include "scmsweep/beam_sweep.hpp"
#include "scmsweep/metrics.hpp"
#include "scmsweep/scm_reconstruct.hpp"

using namespace scmsweep;

namespace {

const ArrayConfig kSmall{4, 2, 0.5};
const ArrayConfig kMedium{8, 2, 0.5};

SourceScene test_scene() {
  SourceScene scene;
  scene.doas_deg = {-33.0, 12.0, 55.0};
  scene.powers = {1.0, 0.7, 1.4};
  scene.noise_power = 0.2;
  return scene;
}

CVector vec_of(const CMatrix& block) {
  CMatrix copy = block;
  return Eigen::Map<const CVector>(copy.data(), copy.size());
}

/// Basic design row assembled the long way, via the explicit Kronecker
/// product of the two steering subvectors.
CVector kron_row(const ArrayConfig& cfg, const SweepPlan& plan, int beam,
                 int chain1, int chain2) {
  const CVector a1 = steering_subvector(cfg, chain1, plan.angles_deg[beam]);
  const CVector a2 = steering_subvector(cfg, chain2, plan.angles_deg[beam]);
  const int sub = cfg.antennas_per_chain();
  CVector row(sub * sub);
  for (int m2 = 0; m2 < sub; ++m2) {
    for (int m1 = 0; m1 < sub; ++m1) {
      row(m2 * sub + m1) = a2(m2) * std::conj(a1(m1));
    }
  }
  return row;
}

}  // namespace

TEST_SUITE("scm_reconstruct") {

TEST_CASE("sample average closed forms") {
  SnapshotBatch one;
  one.data.resize(2, 1);
  one.data << cxd(1, 0), cxd(0, 1);
  const CovarianceEstimate est = sample_average_scm(one);
  CHECK(est.provenance == Provenance::sample_average);
  CHECK(est.samples_per_beam == 1);
  CHECK(std::abs(est.matrix(0, 0) - cxd(1, 0)) <= 1e-15);
  CHECK(std::abs(est.matrix(0, 1) - cxd(0, -1)) <= 1e-15);
  CHECK(std::abs(est.matrix(1, 0) - cxd(0, 1)) <= 1e-15);
  CHECK(std::abs(est.matrix(1, 1) - cxd(1, 0)) <= 1e-15);

  SnapshotBatch zeros;
  zeros.data = CMatrix::Zero(3, 5);
  CHECK(sample_average_scm(zeros).matrix.norm() == 0.0);

  SnapshotBatch empty;
  empty.data.resize(2, 0);
  CHECK_THROWS_AS(sample_average_scm(empty), std::invalid_argument);
}

TEST_CASE("sample average is exactly Hermitian") {
  SnapshotBatch batch;
  batch.data = CMatrix::Random(6, 40);
  const CMatrix r = sample_average_scm(batch).matrix;
  CHECK((r - r.adjoint()).norm() == 0.0);
}

TEST_CASE("basic system matches the oracle correlations") {
  const SweepPlan plan = uniform_spatial_freq_plan(6);
  const CovarianceEstimate truth = true_scm(kSmall, test_scene());
  const CorrelationSet oracle = oracle_correlations(kSmall, truth, plan);
  for (int n1 = 0; n1 < 2; ++n1) {
    for (int n2 = 0; n2 < 2; ++n2) {
      const LinearSystem sys = build_basic_system(kSmall, plan, n1, n2, oracle);
      CHECK(sys.kind == SystemKind::basic);
      REQUIRE(sys.matrix.rows() == 6);
      REQUIRE(sys.matrix.cols() == 4);
      for (int q = 0; q < 6; ++q) {
        for (int c = 0; c < 4; ++c) {
          CHECK(std::abs(std::abs(sys.matrix(q, c)) - 1.0) <= 1e-12);
        }
      }
      const CMatrix block = truth.matrix.block(n1 * 2, n2 * 2, 2, 2);
      CHECK((sys.matrix * vec_of(block) - sys.rhs).norm() <= 1e-10);
    }
  }
}

TEST_CASE("basic rows are Kronecker rows") {
  const SweepPlan plan = uniform_theta_plan(5);
  const ArrayConfig cfg{12, 3, 0.5};
  const CorrelationSet oracle =
      oracle_correlations(cfg, true_scm(cfg, test_scene()), plan);
  for (int n1 = 0; n1 < 3; ++n1) {
    for (int n2 = 0; n2 < 3; ++n2) {
      const LinearSystem sys = build_basic_system(cfg, plan, n1, n2, oracle);
      for (int q = 0; q < plan.size(); ++q) {
        CHECK((sys.matrix.row(q).transpose() - kron_row(cfg, plan, q, n1, n2))
                  .norm() <= 1e-12);
      }
    }
  }
}

TEST_CASE("solve_basic edge behavior") {
  const SweepPlan plan = uniform_spatial_freq_plan(8);
  const CorrelationSet oracle =
      oracle_correlations(kSmall, true_scm(kSmall, test_scene()), plan);
  LinearSystem sys = build_basic_system(kSmall, plan, 0, 1, oracle);

  SUBCASE("zero rhs gives the zero block") {
    sys.rhs.setZero();
    CHECK(solve_basic(sys, 1.0).norm() == 0.0);
  }

  SUBCASE("heavy loading shrinks toward A^H p / loading") {
    const double loading = 1e6;
    const CMatrix block = solve_basic(sys, loading);
    const CVector expected = sys.matrix.adjoint() * sys.rhs;
    CHECK((loading * vec_of(block) - expected).norm() <= 1e-4 * expected.norm());
  }

  SUBCASE("argument errors") {
    CHECK_THROWS_AS(solve_basic(sys, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(solve_basic(sys, -1.0), std::invalid_argument);
    sys.kind = SystemKind::compressed;
    CHECK_THROWS_AS(solve_basic(sys, 1.0), std::invalid_argument);
  }
}

TEST_CASE("solve_basic reproduces a consistent rhs") {
  // Oracle rhs generated from a Hermitian Toeplitz sub-SCM; with near-zero
  // loading the residual of the fitted system collapses.
  const SweepPlan plan = uniform_spatial_freq_plan(8);
  const cxd lag1(0.3, -0.4);
  CMatrix sub(2, 2);
  sub << cxd(1.7, 0), std::conj(lag1),
         lag1, cxd(1.7, 0);
  LinearSystem sys;
  sys.kind = SystemKind::basic;
  sys.matrix.resize(8, 4);
  for (int q = 0; q < 8; ++q) {
    sys.matrix.row(q) = kron_row(kSmall, plan, q, 0, 1).transpose();
  }
  sys.rhs = sys.matrix * vec_of(sub);
  const CMatrix fitted = solve_basic(sys, 1e-9);
  CHECK((sys.matrix * vec_of(fitted) - sys.rhs).norm() <= 1e-6 * sys.rhs.norm());
}

TEST_CASE("selection matrix layout") {
  const Eigen::MatrixXd e = build_selection_matrix(kSmall);
  REQUIRE(e.rows() == 4);
  REQUIRE(e.cols() == 3);
  Eigen::MatrixXd expected(4, 3);
  expected << 0, 1, 0,
              0, 0, 1,
              1, 0, 0,
              0, 1, 0;
  CHECK((e - expected).norm() == 0.0);

  for (int chains : {2, 3, 4}) {
    const ArrayConfig cfg{2 * chains * chains, chains, 0.5};  // sub = 2 chains
    const int sub = cfg.antennas_per_chain();
    const Eigen::MatrixXd big = build_selection_matrix(cfg);
    REQUIRE(big.rows() == sub * sub);
    REQUIRE(big.cols() == 2 * sub - 1);
    for (int row = 0; row < big.rows(); ++row) {
      CHECK(big.row(row).sum() == 1.0);
      CHECK(big.row(row).maxCoeff() == 1.0);
    }
    // E^T E counts the occupancy of each lag.
    const Eigen::MatrixXd gram = big.transpose() * big;
    for (int lag = 0; lag < gram.rows(); ++lag) {
      const int occupancy = sub - std::abs(lag - (sub - 1));
      CHECK(gram(lag, lag) == static_cast<double>(occupancy));
      CHECK(gram.row(lag).sum() == gram(lag, lag));  // diagonal matrix
    }
  }
}

TEST_CASE("compressed rows compress the Kronecker rows") {
  for (int sub : {2, 3, 4}) {
    const ArrayConfig cfg{2 * sub, 2, 0.5};
    const SweepPlan plan = uniform_spatial_freq_plan(2 * sub + 1);
    const Eigen::MatrixXd e = build_selection_matrix(cfg);
    for (int q = 0; q < plan.size(); ++q) {
      for (int n1 = 0; n1 < 2; ++n1) {
        for (int n2 = 0; n2 < 2; ++n2) {
          const CVector direct = build_compressed_row(cfg, plan, q, n1, n2);
          const CVector via_e =
              (kron_row(cfg, plan, q, n1, n2).transpose() * e).transpose();
          CHECK((direct - via_e).norm() <= 1e-12);
        }
      }
    }
  }
}

TEST_CASE("compressed row closed form at broadside") {
  const SweepPlan plan = uniform_theta_plan(2);  // beam 1 is broadside
  const CVector row = build_compressed_row(kSmall, plan, 1, 0, 0);
  REQUIRE(row.size() == 3);
  CHECK(std::abs(row(0) - cxd(1, 0)) <= 1e-12);
  CHECK(std::abs(row(1) - cxd(2, 0)) <= 1e-12);
  CHECK(std::abs(row(2) - cxd(1, 0)) <= 1e-12);
}

TEST_CASE("low-complexity solve recovers Toeplitz blocks exactly") {
  const SweepPlan plan = uniform_spatial_freq_plan(7);
  const CovarianceEstimate truth = true_scm(kMedium, test_scene());
  const CorrelationSet oracle = oracle_correlations(kMedium, truth, plan);
  for (int n1 = 0; n1 < 2; ++n1) {
    for (int n2 = 0; n2 < 2; ++n2) {
      const LinearSystem sys = build_compressed_system(kMedium, plan, n1, n2, oracle);
      CHECK(sys.kind == SystemKind::compressed);
      const CMatrix block = solve_low_complexity(sys);
      const CMatrix expected = truth.matrix.block(n1 * 4, n2 * 4, 4, 4);
      CHECK((block - expected).norm() <= 1e-10 * expected.norm());
      // The output is Toeplitz by construction.
      for (int i = 0; i + 1 < 4; ++i) {
        for (int j = 0; j + 1 < 4; ++j) {
          CHECK(block(i, j) == block(i + 1, j + 1));
        }
      }
    }
  }
}

TEST_CASE("low-complexity solve refuses deficient systems") {
  const CovarianceEstimate truth = true_scm(kMedium, test_scene());

  // One beam short of identifiability.
  const SweepPlan short_plan = uniform_spatial_freq_plan(6);
  const CorrelationSet short_corr = oracle_correlations(kMedium, truth, short_plan);
  CHECK_THROWS_AS(
      solve_low_complexity(build_compressed_system(kMedium, short_plan, 0, 1, short_corr)),
      IllConditionedError);

  // Enough beams, but all at the same angle: the Gram is rank one.
  SweepPlan stuck;
  stuck.family = PlanFamily::uniform_theta;
  stuck.angles_deg.assign(7, 10.0);
  const CorrelationSet stuck_corr = oracle_correlations(kMedium, truth, stuck);
  CHECK_THROWS_AS(
      solve_low_complexity(build_compressed_system(kMedium, stuck, 0, 1, stuck_corr)),
      IllConditionedError);

  LinearSystem wrong = build_compressed_system(
      kMedium, uniform_spatial_freq_plan(7), 0, 1,
      oracle_correlations(kMedium, truth, uniform_spatial_freq_plan(7)));
  wrong.kind = SystemKind::basic;
  CHECK_THROWS_AS(solve_low_complexity(wrong), std::invalid_argument);
}

TEST_CASE("closed-form Gram diagonal") {
  const RVector three = gram_diagonal_closed_form(kSmall, 3);
  REQUIRE(three.size() == 3);
  CHECK(three(0) == 3.0);
  CHECK(three(1) == 12.0);
  CHECK(three(2) == 3.0);

  const ArrayConfig six{6, 2, 0.5};
  const RVector five = gram_diagonal_closed_form(six, 5);
  REQUIRE(five.size() == 5);
  CHECK(five(0) == 5.0);
  CHECK(five(1) == 20.0);
  CHECK(five(2) == 45.0);
  CHECK(five(3) == 20.0);
  CHECK(five(4) == 5.0);

  CHECK_THROWS_AS(gram_diagonal_closed_form(kSmall, 2), std::invalid_argument);
  CHECK_THROWS_AS(gram_diagonal_closed_form(ArrayConfig{4, 2, 0.4}, 5),
                  std::invalid_argument);
}

TEST_CASE("uniform-frequency Grams are diagonal and match the closed form") {
  for (int sub : {2, 3, 4}) {
    const ArrayConfig cfg{2 * sub, 2, 0.5};
    for (int q_count : {2 * sub - 1, 2 * sub + 3}) {
      const SweepPlan plan = uniform_spatial_freq_plan(q_count);
      const RVector closed = gram_diagonal_closed_form(cfg, q_count);
      for (int n1 = 0; n1 < 2; ++n1) {
        for (int n2 = 0; n2 < 2; ++n2) {
          CMatrix design(q_count, 2 * sub - 1);
          for (int q = 0; q < q_count; ++q) {
            design.row(q) =
                build_compressed_row(cfg, plan, q, n1, n2).transpose();
          }
          const CMatrix gram = design.adjoint() * design;
          for (int i = 0; i < gram.rows(); ++i) {
            for (int j = 0; j < gram.cols(); ++j) {
              if (i == j) {
                CHECK(std::abs(gram(i, i) - cxd(closed(i), 0)) <=
                      1e-9 * closed(i));
              } else {
                CHECK(std::abs(gram(i, j)) <= 1e-9 * q_count);
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("fast diagonal solve agrees with the general solver") {
  const SweepPlan plan = uniform_spatial_freq_plan(9);
  const CovarianceEstimate truth = true_scm(kMedium, test_scene());
  const CorrelationSet oracle = oracle_correlations(kMedium, truth, plan);
  for (int n1 = 0; n1 < 2; ++n1) {
    for (int n2 = 0; n2 < 2; ++n2) {
      const CVector rhs = oracle.pair_values(n1, n2);
      const CMatrix fast = solve_fast_diagonal(kMedium, plan, rhs, n1, n2);
      const CMatrix general =
          solve_low_complexity(build_compressed_system(kMedium, plan, n1, n2, oracle));
      CHECK((fast - general).norm() <= 1e-10 * general.norm());
      const CMatrix expected = truth.matrix.block(n1 * 4, n2 * 4, 4, 4);
      CHECK((fast - expected).norm() <= 1e-10 * expected.norm());
    }
  }
}

TEST_CASE("fast diagonal solve argument errors") {
  const CorrelationSet oracle = oracle_correlations(
      kMedium, true_scm(kMedium, test_scene()), uniform_spatial_freq_plan(7));
  const CVector rhs = oracle.pair_values(0, 1);

  CHECK_THROWS_AS(
      solve_fast_diagonal(kMedium, uniform_theta_plan(7), rhs, 0, 1),
      std::invalid_argument);
  CHECK_THROWS_AS(
      solve_fast_diagonal(kMedium, uniform_spatial_freq_plan(6), rhs.head(6), 0, 1),
      IllConditionedError);
  CHECK_THROWS_AS(
      solve_fast_diagonal(kMedium, uniform_spatial_freq_plan(7), rhs.head(6), 0, 1),
      std::invalid_argument);
}

TEST_CASE("assemble_overall") {
  const CovarianceEstimate truth = true_scm(kMedium, test_scene());
  const int sub = 4;

  SUBCASE("full grid reassembles the partition") {
    std::vector<std::optional<CMatrix>> grid(4);
    for (int n1 = 0; n1 < 2; ++n1) {
      for (int n2 = 0; n2 < 2; ++n2) {
        grid[n1 * 2 + n2] = CMatrix(truth.matrix.block(n1 * sub, n2 * sub, sub, sub));
      }
    }
    const CovarianceEstimate whole = assemble_overall(kMedium, grid);
    CHECK((whole.matrix - truth.matrix).norm() <= 1e-15 * truth.matrix.norm());
  }

  SUBCASE("missing lower blocks fill from the mirror and stay Hermitian") {
    std::vector<std::optional<CMatrix>> grid(4);
    for (int n1 = 0; n1 < 2; ++n1) {
      for (int n2 = n1; n2 < 2; ++n2) {
        grid[n1 * 2 + n2] = CMatrix(truth.matrix.block(n1 * sub, n2 * sub, sub, sub));
      }
    }
    const CMatrix r = assemble_overall(kMedium, grid).matrix;
    CHECK((r - truth.matrix).norm() <= 1e-12 * truth.matrix.norm());
    CHECK((r - r.adjoint()).norm() == 0.0);
  }

  SUBCASE("argument errors") {
    std::vector<std::optional<CMatrix>> none(4);
    CHECK_THROWS_AS(assemble_overall(kMedium, none), std::invalid_argument);
    std::vector<std::optional<CMatrix>> short_grid(2);
    CHECK_THROWS_AS(assemble_overall(kMedium, short_grid), std::invalid_argument);
    std::vector<std::optional<CMatrix>> bad(4);
    for (auto& cell : bad) cell = CMatrix::Identity(3, 3);
    CHECK_THROWS_AS(assemble_overall(kMedium, bad), std::invalid_argument);
  }
}

TEST_CASE("multiplication counts") {
  const ArrayConfig wide{64, 4, 0.5};
  CHECK(multiplication_count(wide, 31, Algorithm::basic) == 7936);
  CHECK(multiplication_count(wide, 31, Algorithm::low_complexity) == 961);

  const ArrayConfig desk{16, 2, 0.5};
  CHECK(multiplication_count(desk, 15, Algorithm::basic) == 960);
  CHECK(multiplication_count(desk, 15, Algorithm::low_complexity) == 225);

  double previous_ratio = 0.0;
  for (int sub : {2, 4, 8, 16, 32}) {
    const ArrayConfig cfg{2 * sub, 2, 0.5};
    const int q = 2 * sub - 1;
    const double ratio =
        static_cast<double>(multiplication_count(cfg, q, Algorithm::basic)) /
        static_cast<double>(multiplication_count(cfg, q, Algorithm::low_complexity));
    CHECK(ratio > previous_ratio);
    previous_ratio = ratio;
  }

  CHECK_THROWS_AS(multiplication_count(desk, 15, Algorithm::sample_average),
                  std::invalid_argument);
  CHECK_THROWS_AS(multiplication_count(desk, 15, Algorithm::fast_diagonal),
                  std::invalid_argument);
  CHECK_THROWS_AS(multiplication_count(desk, 0, Algorithm::basic),
                  std::invalid_argument);
}

TEST_CASE("reconstructor recovers the truth from oracle correlations") {
  const ArrayConfig cfg{12, 3, 0.5};
  const SweepPlan plan = uniform_spatial_freq_plan(9);
  const CovarianceEstimate truth = true_scm(cfg, test_scene());
  const CorrelationSet oracle = oracle_correlations(cfg, truth, plan);

  for (Algorithm algorithm :
       {Algorithm::low_complexity, Algorithm::fast_diagonal}) {
    const Reconstructor solver(cfg, plan, algorithm);
    const CovarianceEstimate est = solver.reconstruct(oracle);
    CHECK(nse(est, truth) <= 1e-20);
    CHECK(est.sweep_count == 9);
    CHECK(est.samples_per_beam == 0);
    CHECK(est.plan_family == PlanFamily::uniform_spatial_freq);
    CHECK((est.matrix - est.matrix.adjoint()).norm() == 0.0);
  }
  const CovarianceEstimate low =
      Reconstructor(cfg, plan, Algorithm::low_complexity).reconstruct(oracle);
  CHECK(low.provenance == Provenance::low_complexity);
  const CovarianceEstimate fast =
      Reconstructor(cfg, plan, Algorithm::fast_diagonal).reconstruct(oracle);
  CHECK(fast.provenance == Provenance::fast_diagonal);

  // The basic path is limited by the loading: the regularizer biases the
  // solution and amplifies rounding noise in the null directions by
  // 1 / loading, so exact recovery is out of reach by design.
  Reconstructor::Options light;
  light.diagonal_loading = 1e-9;
  const Reconstructor basic(cfg, plan, Algorithm::basic, light);
  const CovarianceEstimate basic_est = basic.reconstruct(oracle);
  CHECK(basic_est.provenance == Provenance::basic);
  CHECK(basic_est.diagonal_loading == 1e-9);
  CHECK(nse(basic_est, truth) <= 1e-10);
}

TEST_CASE("reconstructor matches the per-pair free functions") {
  const SweepPlan plan = uniform_spatial_freq_plan(7);
  const CovarianceEstimate truth = true_scm(kMedium, test_scene());
  const CorrelationSet oracle = oracle_correlations(kMedium, truth, plan);

  std::vector<std::optional<CMatrix>> grid(4);
  for (int n1 = 0; n1 < 2; ++n1) {
    for (int n2 = n1; n2 < 2; ++n2) {
      grid[n1 * 2 + n2] =
          solve_low_complexity(build_compressed_system(kMedium, plan, n1, n2, oracle));
    }
  }
  const CovarianceEstimate by_hand = assemble_overall(kMedium, grid);
  const CovarianceEstimate by_engine =
      Reconstructor(kMedium, plan, Algorithm::low_complexity).reconstruct(oracle);
  CHECK((by_hand.matrix - by_engine.matrix).norm() <=
        1e-12 * by_hand.matrix.norm());
}

TEST_CASE("reconstructor all-blocks mode agrees with mirroring") {
  const SweepPlan plan = uniform_spatial_freq_plan(8);
  const ArrayConfig cfg{12, 3, 0.5};
  const CorrelationSet oracle =
      oracle_correlations(cfg, true_scm(cfg, test_scene()), plan);
  Reconstructor::Options all;
  all.all_blocks = true;
  for (Algorithm algorithm :
       {Algorithm::basic, Algorithm::low_complexity, Algorithm::fast_diagonal}) {
    const CovarianceEstimate mirrored =
        Reconstructor(cfg, plan, algorithm).reconstruct(oracle);
    const CovarianceEstimate full =
        Reconstructor(cfg, plan, algorithm, all).reconstruct(oracle);
    CHECK((mirrored.matrix - full.matrix).norm() <=
          1e-12 * mirrored.matrix.norm());
  }
}

TEST_CASE("reconstruction is invariant to beam order") {
  const ArrayConfig cfg = kMedium;
  const SweepPlan plan = uniform_spatial_freq_plan(9);
  const CovarianceEstimate truth = true_scm(cfg, test_scene());
  const CorrelationSet oracle = oracle_correlations(cfg, truth, plan);

  // Rotate the beams: same set of angles, different order.
  SweepPlan rotated = plan;
  std::rotate(rotated.angles_deg.begin(), rotated.angles_deg.begin() + 4,
              rotated.angles_deg.end());
  CorrelationSet rotated_corr = oracle;
  std::rotate(rotated_corr.beams.begin(), rotated_corr.beams.begin() + 4,
              rotated_corr.beams.end());

  for (Algorithm algorithm :
       {Algorithm::basic, Algorithm::low_complexity, Algorithm::fast_diagonal}) {
    const CovarianceEstimate a =
        Reconstructor(cfg, plan, algorithm).reconstruct(oracle);
    const CovarianceEstimate b =
        Reconstructor(cfg, rotated, algorithm).reconstruct(rotated_corr);
    CHECK((a.matrix - b.matrix).norm() <= 1e-12 * a.matrix.norm());
  }
}

TEST_CASE("reconstruction is linear in the correlations") {
  const SweepPlan plan = uniform_spatial_freq_plan(7);
  const CovarianceEstimate truth = true_scm(kMedium, test_scene());
  const CorrelationSet oracle = oracle_correlations(kMedium, truth, plan);

  CorrelationSet doubled = oracle;
  CorrelationSet scaled = oracle;
  for (auto& beam : doubled.beams) beam *= 2.0;
  for (auto& beam : scaled.beams) beam *= 1.7;

  for (Algorithm algorithm :
       {Algorithm::basic, Algorithm::low_complexity, Algorithm::fast_diagonal}) {
    const Reconstructor solver(kMedium, plan, algorithm);
    const CMatrix base = solver.reconstruct(oracle).matrix;
    // Powers of two commute with rounding, so doubling is exact.
    CHECK((solver.reconstruct(doubled).matrix - 2.0 * base).norm() == 0.0);
    CHECK((solver.reconstruct(scaled).matrix - 1.7 * base).norm() <=
          1e-12 * base.norm());
  }
}

TEST_CASE("reconstructor argument errors") {
  const SweepPlan plan = uniform_spatial_freq_plan(7);
  CHECK_THROWS_AS(Reconstructor(kMedium, plan, Algorithm::sample_average),
                  std::invalid_argument);
  CHECK_THROWS_AS(Reconstructor(kMedium, uniform_theta_plan(7), Algorithm::fast_diagonal),
                  std::invalid_argument);
  CHECK_THROWS_AS(Reconstructor(kMedium, uniform_spatial_freq_plan(6),
                                Algorithm::low_complexity),
                  IllConditionedError);
  Reconstructor::Options bad;
  bad.diagonal_loading = 0.0;
  CHECK_THROWS_AS(Reconstructor(kMedium, plan, Algorithm::basic, bad),
                  std::invalid_argument);

  const Reconstructor solver(kMedium, plan, Algorithm::low_complexity);
  const CorrelationSet mismatched = oracle_correlations(
      kMedium, true_scm(kMedium, test_scene()), uniform_spatial_freq_plan(8));
  CHECK_THROWS_AS(solver.reconstruct(mismatched), std::invalid_argument);
}

}  // TEST_SUITE
