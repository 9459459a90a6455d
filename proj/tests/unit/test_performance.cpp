#include <gtest/gtest.h>

#include <cmath>

#include "pbt/dimension.hpp"
#include "pbt/performance.hpp"

using pbt::BigInt;
using pbt::BigRational;

namespace {

// Straight evaluation from exact dimensions in long double, no log domain.
long double f_std_direct(int d, int N) {
  long double total = 0.0L;
  for (const auto& alpha : pbt::enumerate_diagrams(d, N - 1)) {
    long double inner = 0.0L;
    for (std::size_t i = 0; i < static_cast<std::size_t>(d); ++i) {
      if (!alpha.can_add(i)) continue;
      const auto mu = alpha.add_box(i);
      const BigInt w = pbt::specht_dim(mu) * pbt::weyl_dim(d, mu);
      inner += std::sqrt(static_cast<long double>(w.get_d()));
    }
    total += inner * inner;
  }
  return total / std::pow(static_cast<long double>(d), N + 2);
}

BigRational p_epr_exact(int d, int N) {
  BigRational total = 0;
  for (const auto& alpha : pbt::enumerate_diagrams(d, N - 1)) {
    const auto mu = alpha.add_box(0);
    const BigInt m = pbt::weyl_dim(d, alpha);
    total += BigRational(m * m * pbt::specht_dim(mu), pbt::weyl_dim(d, mu));
  }
  BigInt power;
  mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(N));
  total /= power;
  total.canonicalize();
  return total;
}

}  // namespace

TEST(FStd, SmallValues) {
  EXPECT_DOUBLE_EQ(pbt::f_std(2, 1).value, 0.25);
  EXPECT_NEAR(pbt::f_std(2, 2).value, (4.0 + 2.0 * std::sqrt(3.0)) / 16.0, 1e-15);
  EXPECT_NEAR(pbt::f_std(2, 3).value, 0.625, 1e-15);
  for (int d = 1; d <= 6; ++d) EXPECT_NEAR(pbt::f_std(d, 1).value, 1.0 / (d * d), 1e-15);
  for (int N = 1; N <= 20; ++N) EXPECT_NEAR(pbt::f_std(1, N).value, 1.0, 1e-14);
  EXPECT_THROW(pbt::f_std(2, 0), std::invalid_argument);
}

TEST(FStd, LogDomainMatchesExactDimensions) {
  for (int d = 2; d <= 5; ++d) {
    for (int N = 1; N <= 30; ++N) {
      EXPECT_NEAR(pbt::f_std(d, N).value, static_cast<double>(f_std_direct(d, N)), 1e-12)
          << d << " " << N;
    }
  }
}

TEST(FStd, AsymptoteColumn) {
  EXPECT_DOUBLE_EQ(pbt::f_std_asymptote(3, 100), 0.98);
  EXPECT_EQ(*pbt::f_std(3, 100).asymptote, pbt::f_std_asymptote(3, 100));
  const auto clamped = pbt::f_std_asymptote_raw(5, 1);
  EXPECT_LT(clamped.raw, 0.0);
  EXPECT_EQ(clamped.clamped, 0.0);
}

TEST(FStd, IncreasesWithPortsAndStaysInUnitInterval) {
  for (int d = 2; d <= 4; ++d) {
    double previous = 0.0;
    for (int N = 1; N <= 80; ++N) {
      const double f = pbt::f_std(d, N).value;
      EXPECT_GT(f, previous);
      EXPECT_LE(f, 1.0);
      EXPECT_GE(f, 1.0 - (d * d - 1.0) / N - 1e-12);
      previous = f;
    }
  }
}

TEST(PEpr, SmallValuesAndExactPath) {
  EXPECT_NEAR(pbt::p_epr(2, 2).value, 1.0 / 3.0, 1e-15);
  for (int d = 1; d <= 4; ++d) EXPECT_NEAR(pbt::p_epr(d, 1).value, 1.0 / (d * d), 1e-15);
  for (int d = 2; d <= 4; ++d) {
    for (int N = 1; N <= 25; ++N) {
      EXPECT_NEAR(pbt::p_epr(d, N).value, p_epr_exact(d, N).get_d(), 1e-13) << d << " " << N;
    }
  }
}

TEST(PEpr, DirectAndExpectationFormsAgree) {
  for (int d = 2; d <= 5; ++d) {
    for (int N : {2, 7, 40, 150}) {
      const double a = pbt::p_epr_direct(d, N);
      const double b = pbt::p_epr_expectation(d, N);
      EXPECT_NEAR(a, b, 1e-12 * a) << d << " " << N;
    }
  }
}

TEST(PEpr, BelowOptimalProbabilistic) {
  for (int d = 2; d <= 4; ++d) {
    for (int N = 1; N <= 60; ++N) {
      EXPECT_LE(pbt::p_epr(d, N).value, pbt::p_star(d, N).value + 1e-14);
    }
  }
}

TEST(PEpr, Asymptote) {
  EXPECT_NEAR(pbt::p_epr_asymptote(3, 500, 1.90414), 1.0 - std::sqrt(3.0 / 499.0) * 1.90414,
              1e-15);
  EXPECT_THROW(pbt::p_epr_asymptote(2, 1, 1.0), std::invalid_argument);
  EXPECT_EQ(pbt::p_epr_asymptote(3, 2, 3.0), 0.0);
  EXPECT_LT(pbt::p_epr_asymptote_raw(3, 2, 3.0).raw, 0.0);
}

TEST(PStar, ExactRationalValues) {
  EXPECT_DOUBLE_EQ(pbt::p_star(2, 3).value, 0.5);
  EXPECT_DOUBLE_EQ(pbt::p_star(2, 2).value, 0.4);
  EXPECT_DOUBLE_EQ(pbt::p_star(1, 0).value, 1.0);
  EXPECT_DOUBLE_EQ(pbt::p_star(3, 0).value, 0.0);
  EXPECT_THROW(pbt::p_star(2, -1), std::invalid_argument);
}

TEST(Conversion, Endpoints) {
  EXPECT_DOUBLE_EQ(pbt::f_from_prob_conversion(1.0, 3), 1.0);
  EXPECT_DOUBLE_EQ(pbt::f_from_prob_conversion(0.0, 2), 0.25);
  EXPECT_DOUBLE_EQ(pbt::f_from_prob_conversion(0.4, 2), 0.55);
  EXPECT_THROW(pbt::f_from_prob_conversion(1.5, 2), std::invalid_argument);
}

TEST(PerfKind, Names) {
  EXPECT_EQ(pbt::to_string(pbt::PerfKind::FStd), "F_std");
  EXPECT_EQ(pbt::to_string(pbt::PerfKind::PEpr), "p_epr");
}
