#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "pbt/gue.hpp"
#include "pbt/statistics.hpp"

namespace {

double trace_sq(const pbt::HermitianMatrix& g) { return (g * g).trace().real(); }

}  // namespace

TEST(Gue0Sampler, HermitianAndTraceless) {
  for (int d = 1; d <= 6; ++d) {
    const pbt::Gue0Sampler sampler(d, 42);
    for (std::uint64_t i = 0; i < 200; ++i) {
      const auto g = sampler.sample(i);
      ASSERT_EQ(g.rows(), d);
      EXPECT_LE((g - g.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
      EXPECT_LE(std::abs(g.trace()), 1e-12);
    }
  }
}

TEST(Gue0Sampler, OneDimensionalIsZero) {
  const pbt::Gue0Sampler sampler(1, 5);
  for (std::uint64_t i = 0; i < 50; ++i) EXPECT_EQ(sampler.sample(i)(0, 0), 0.0);
  const auto stats = pbt::lambda_max_mean(1, 5, 100);
  EXPECT_EQ(stats.mean_lambda_max, 0.0);
}

TEST(Gue0Sampler, IndexedAndReproducible) {
  const pbt::Gue0Sampler a(3, 7);
  const pbt::Gue0Sampler b(3, 7);
  const pbt::Gue0Sampler c(3, 8);
  EXPECT_EQ(a.sample(123), b.sample(123));
  EXPECT_NE(a.sample(123), a.sample(124));
  EXPECT_NE(a.sample(123), c.sample(123));
}

TEST(Gue0Sampler, MeanTraceSquare) {
  // E tr G^2 = d^2 - 1.
  EXPECT_NEAR(pbt::lambda_max_mean(2, 11, 1000000).mean_trace_sq, 3.0, 0.01);
  EXPECT_NEAR(pbt::lambda_max_mean(3, 12, 1000000).mean_trace_sq, 8.0, 0.02);
}

TEST(Eigenvalues, JacobiMatchesEigen) {
  const pbt::Gue0Sampler sampler(5, 3);
  for (std::uint64_t i = 0; i < 100; ++i) {
    const auto g = sampler.sample(i);
    Eigen::SelfAdjointEigenSolver<pbt::HermitianMatrix> es(g, Eigen::EigenvaluesOnly);
    const auto ours = pbt::hermitian_eigenvalues(g);
    ASSERT_EQ(ours.size(), 5u);
    for (int k = 0; k < 5; ++k) EXPECT_NEAR(ours[static_cast<std::size_t>(k)], es.eigenvalues()(k), 1e-10);
    EXPECT_NEAR(pbt::lambda_max(g), es.eigenvalues()(4), 1e-10);
  }
  Eigen::MatrixXd a(2, 2);
  a << 2.0, 1.0, 1.0, 2.0;
  const auto ev = pbt::jacobi_eigenvalues(a);
  EXPECT_NEAR(ev[0], 1.0, 1e-14);
  EXPECT_NEAR(ev[1], 3.0, 1e-14);
}

TEST(Eigenvalues, TwoByTwoShortcutMatchesSolver) {
  const pbt::Gue0Sampler sampler(2, 99);
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const auto g = sampler.sample(i);
    EXPECT_NEAR(pbt::lambda_max(g), pbt::hermitian_eigenvalues(g).back(), 1e-10);
    EXPECT_NEAR(pbt::lambda_max(g), std::sqrt(trace_sq(g) / 2.0), 1e-12);
  }
}

TEST(LambdaMax, MeanAtTwoMatchesClosedForm) {
  EXPECT_NEAR(pbt::lambda_max_exact_d2(), 2.0 / std::sqrt(std::numbers::pi), 1e-15);
  const auto stats = pbt::lambda_max_mean(2, 2024, 200000);
  EXPECT_GT(stats.standard_error, 0.0);
  EXPECT_EQ(stats.sample_count, 200000u);
  EXPECT_LE(std::abs(stats.mean_lambda_max - pbt::lambda_max_exact_d2()), 5.0 * stats.standard_error);
}

TEST(LambdaMax, ChiThreeLaw) {
  auto samples = pbt::lambda_max_samples(2, 31, 20000);
  for (auto& x : samples) x *= std::sqrt(2.0);
  const auto ks = pbt::ks_test(samples, pbt::chi3_cdf);
  EXPECT_GT(ks.p_value, 0.001) << ks.statistic;
}

TEST(LambdaMax, IndependentOfThreadCount) {
  ::setenv("PBT_THREADS", "1", 1);
  const auto one = pbt::lambda_max_mean(3, 5, 20000);
  ::setenv("PBT_THREADS", "4", 1);
  const auto four = pbt::lambda_max_mean(3, 5, 20000);
  ::unsetenv("PBT_THREADS");
  EXPECT_EQ(one.mean_lambda_max, four.mean_lambda_max);
  EXPECT_EQ(one.standard_error, four.standard_error);
  EXPECT_EQ(one.mean_trace_sq, four.mean_trace_sq);
  EXPECT_THROW(pbt::lambda_max_mean(3, 5, 1), std::invalid_argument);
}

TEST(LambdaMax, SemicircleRatio) {
  pbt::GueSampleStats s;
  s.d = 2;
  s.mean_lambda_max = 1.12838;
  EXPECT_NEAR(pbt::semicircle_ratio(2, s), 0.3990, 1e-4);
  EXPECT_THROW(pbt::semicircle_ratio(3, s), std::invalid_argument);
  // Target constants for d = 2..5 give an increasing ratio.
  const double targets[] = {1.12838, 1.90414, 2.52811, 3.06311};
  double previous = 0.0;
  for (int d = 2; d <= 5; ++d) {
    s.d = d;
    s.mean_lambda_max = targets[d - 2];
    const double r = pbt::semicircle_ratio(d, s);
    EXPECT_GT(r, previous);
    EXPECT_LT(r, 1.0);
    previous = r;
  }
}
