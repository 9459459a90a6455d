#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "pbt/bounds.hpp"

TEST(Converse, NonasymptoticValues) {
  EXPECT_NEAR(pbt::converse_nonasymptotic(2, 1), 13.0 / 16.0, 1e-15);
  EXPECT_NEAR(pbt::converse_nonasymptotic(3, 3), 37.0 / 39.0, 1e-15);
  EXPECT_THROW(pbt::converse_nonasymptotic(1, 3), std::invalid_argument);
  EXPECT_THROW(pbt::converse_nonasymptotic(2, 0), std::invalid_argument);
}

TEST(Converse, RootFidelityValues) {
  EXPECT_NEAR(pbt::converse_rootfid(2, 1), 0.5, 1e-15);
  EXPECT_NEAR(pbt::converse_rootfid(2, 4), std::sqrt(7.0 / 64.0) + std::sqrt(27.0 / 64.0), 1e-15);
  EXPECT_NEAR(pbt::converse_rootfid(2, 4), 0.98023797, 1e-8);
}

TEST(Converse, RootFidelityBelowRelaxation) {
  for (int d = 2; d <= 5; ++d) {
    for (int N = 1; N <= 200; ++N) {
      EXPECT_LE(pbt::converse_rootfid(d, N), pbt::converse_nonasymptotic(d, N) + 1e-15)
          << d << " " << N;
    }
  }
}

TEST(Converse, PiecewiseBranches) {
  const auto large = pbt::converse_piecewise(2, 10);
  EXPECT_FALSE(large.small_n_branch);
  EXPECT_NEAR(large.fidelity, 0.998125, 1e-15);
  EXPECT_NEAR(large.error, 3.0 / 800.0, 1e-15);

  const auto small = pbt::converse_piecewise(4, 8);
  EXPECT_TRUE(small.small_n_branch);
  EXPECT_NEAR(small.fidelity, std::sqrt(8.0) / 4.0, 1e-15);
  EXPECT_NEAR(small.error, 2.0 * (1.0 - small.fidelity), 1e-15);

  EXPECT_FALSE(pbt::converse_piecewise(4, 9).small_n_branch);
  EXPECT_TRUE(pbt::converse_piecewise(3, 4).small_n_branch);
  EXPECT_FALSE(pbt::converse_piecewise(3, 5).small_n_branch);
}

TEST(Converse, IshizakaLeadingOrder) {
  EXPECT_NEAR(pbt::ishizaka_converse(2, 10), 0.9975, 1e-15);
  EXPECT_NEAR(pbt::ishizaka_converse(5, 10), 1.0 - 1.0 / 1600.0, 1e-15);
  // Past the small-N branch the piecewise bound is the stronger one once
  // (d^2 - 1)(d - 1) > 4, i.e. d >= 3. At d = 2 the order flips.
  for (int d = 3; d <= 5; ++d) {
    for (int N = d * d / 2 + 1; N <= 200; ++N) {
      EXPECT_LT(pbt::converse_piecewise(d, N).fidelity, pbt::ishizaka_converse(d, N));
    }
  }
  for (int N = 3; N <= 200; ++N) {
    EXPECT_GT(pbt::converse_piecewise(2, N).fidelity, pbt::ishizaka_converse(2, N));
  }
}

TEST(Converse, PortTeleportation) {
  EXPECT_DOUBLE_EQ(pbt::porttele_bound(2, 1), 0.5);
  EXPECT_DOUBLE_EQ(pbt::porttele_bound(3, 4), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(pbt::porttele_bound(2, 4), 1.0);
  EXPECT_DOUBLE_EQ(pbt::porttele_bound(2, 50), 1.0);
  EXPECT_DOUBLE_EQ(pbt::porttele_bound(1, 1), 1.0);
}

TEST(CommBounds, Values) {
  const auto exact = pbt::comm_bounds(4, 0.0);
  EXPECT_DOUBLE_EQ(exact.dq_min, 4.0);
  EXPECT_DOUBLE_EQ(exact.dc_min, 16.0);
  EXPECT_DOUBLE_EQ(exact.imax_lower, 4.0);
  EXPECT_DOUBLE_EQ(exact.imax_upper, 4.0);

  const auto half = pbt::comm_bounds(3, 0.5);
  EXPECT_DOUBLE_EQ(half.dq_min, 9.0 / 4.0);
  EXPECT_DOUBLE_EQ(half.dc_min, 81.0 / 16.0);
  EXPECT_NEAR(half.imax_lower, 2.0 * std::log2(9.0 / 4.0), 1e-15);
  EXPECT_NEAR(half.imax_upper, 2.0 * std::log2(3.0), 1e-15);

  const auto none = pbt::comm_bounds(2, 1.0);
  EXPECT_EQ(none.dq_min, 0.0);
  EXPECT_EQ(none.dc_min, 0.0);
  EXPECT_EQ(none.imax_lower, -std::numeric_limits<double>::infinity());
  EXPECT_EQ(none.imax_upper, -std::numeric_limits<double>::infinity());

  EXPECT_THROW(pbt::comm_bounds(2, -0.1), std::invalid_argument);
  EXPECT_THROW(pbt::comm_bounds(2, 1.1), std::invalid_argument);
  EXPECT_THROW(pbt::comm_bounds(0, 0.1), std::invalid_argument);
}

TEST(CommBounds, MonotoneInError) {
  for (int d = 1; d <= 8; ++d) {
    auto previous = pbt::comm_bounds(d, 0.0);
    for (int k = 1; k <= 100; ++k) {
      const auto now = pbt::comm_bounds(d, k / 100.0);
      EXPECT_LE(now.dq_min, previous.dq_min);
      EXPECT_LE(now.dc_min, previous.dc_min);
      EXPECT_LE(now.imax_lower, previous.imax_lower);
      EXPECT_LE(now.imax_upper, previous.imax_upper);
      EXPECT_LE(now.imax_lower, now.imax_upper);
      previous = now;
    }
  }
}

TEST(Simplex, Volumes) {
  const auto two = pbt::simplex_volumes(2);
  EXPECT_EQ(two.coefficient, 1);
  EXPECT_NEAR(two.volume, 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_DOUBLE_EQ(two.inradius, 0.25);

  const auto three = pbt::simplex_volumes(3);
  EXPECT_EQ(three.coefficient, pbt::BigRational(1, 4));
  EXPECT_NEAR(three.volume, 1.0 / (4.0 * std::sqrt(3.0)), 1e-15);
  const double facets = 12.0 / std::sqrt(2.0) + std::sqrt(3.0) * std::pow(2.0, 1.5) +
                        2.0 * std::sqrt(2.0);
  EXPECT_NEAR(three.boundary_volume, three.volume * facets, 1e-14);
  // The triangle with vertices (1,0,0), (1/2,1/2,0), (1/3,1/3,1/3).
  const double perimeter = std::sqrt(0.5) + std::sqrt(6.0) / 3.0 + std::sqrt(6.0) / 6.0;
  EXPECT_GE(three.boundary_volume, perimeter);
  EXPECT_DOUBLE_EQ(three.inradius, 1.0 / 9.0);

  EXPECT_THROW(pbt::simplex_volumes(1), std::invalid_argument);
}

TEST(Simplex, VolumeRecursionExact) {
  // vol_d = sqrt((d-1)/d) vol_{d-1} / (d-1)^2, i.e. c_d = c_{d-1} / (d-1)^2.
  for (int d = 3; d <= 8; ++d) {
    const auto now = pbt::simplex_volumes(d);
    const auto before = pbt::simplex_volumes(d - 1);
    EXPECT_EQ(now.coefficient, before.coefficient / pbt::BigRational((d - 1) * (d - 1)));
    const double step = std::sqrt((d - 1.0) / d) * before.volume / ((d - 1.0) * (d - 1.0));
    EXPECT_NEAR(now.volume, step, 1e-15 * step);
  }
}

TEST(Laplacian, EigenvalueBound) {
  const double ball = 0.5 * std::pow(std::sqrt(1.5) + 1.0, 2);
  const double d2 = ball * 4.0 * (2.0 / std::sqrt(2.0) + std::sqrt(2.0) + std::sqrt(2.0));
  EXPECT_NEAR(pbt::lambda1_upper(2), d2, 1e-12);
  EXPECT_NEAR(pbt::achievability_laplacian(2, 100).clamped, 1.0 - d2 / 2e4, 1e-15);
}

TEST(Laplacian, LargeDimensionRatio) {
  const auto ratio = [](int d) {
    return pbt::lambda1_upper(d) / d / (std::pow(d, 5) / (4.0 * std::sqrt(2.0)));
  };
  EXPECT_NEAR(ratio(20), 1.7490, 1e-3);
  EXPECT_NEAR(ratio(50), 1.4473, 1e-3);
  EXPECT_NEAR(ratio(100), 1.3067, 1e-3);
  double previous = ratio(10);
  for (int d : {20, 50, 100, 1000, 10000}) {
    const double r = ratio(d);
    EXPECT_LT(r, previous);
    EXPECT_GT(r, 1.0);
    previous = r;
  }
}

TEST(Achievability, ClampingKeepsRaw) {
  const auto low = pbt::achievability_laplacian(2, 1);
  EXPECT_LT(low.raw, 0.0);
  EXPECT_EQ(low.clamped, 0.0);
  const auto std_low = pbt::achievability_std(5, 6);
  EXPECT_EQ(std_low.raw, 1.0 - 24.0 / 6.0);
  EXPECT_EQ(std_low.clamped, 0.0);
  EXPECT_DOUBLE_EQ(pbt::achievability_std(3, 100).clamped, 0.92);
  EXPECT_NEAR(pbt::achievability_appendix_b(2, 100).clamped, 1.0 - 16.0 * 5.0 / 2e4, 1e-15);
}

TEST(BoundReport, FieldsAndErrorBound) {
  const auto r = pbt::make_bound_report(3, 40);
  EXPECT_EQ(r.converse_full, pbt::converse_nonasymptotic(3, 40));
  EXPECT_EQ(r.converse_piecewise, pbt::converse_piecewise(3, 40).fidelity);
  EXPECT_EQ(r.porttele, 1.0);
  EXPECT_NEAR(r.diamond_error_from_F, 2.0 * 8.0 / 40.0, 1e-15);
  EXPECT_NEAR(pbt::make_bound_report(5, 2).diamond_error_from_F, 2.0, 0.0);
  EXPECT_THROW(pbt::make_bound_report(1, 4), std::invalid_argument);
}
