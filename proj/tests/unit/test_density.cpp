#include <gtest/gtest.h>

#include <cmath>

#include "pbt/bounds.hpp"
#include "pbt/density.hpp"
#include "pbt/performance.hpp"

TEST(DiagramDensity, ValidateRejectsBadWeights) {
  auto q = pbt::uniform_density(2, 4);
  EXPECT_NO_THROW(q.validate());
  q.weights[0] = -0.1;
  EXPECT_THROW(q.validate(), std::invalid_argument);

  auto short_q = pbt::uniform_density(2, 4);
  short_q.weights.pop_back();
  EXPECT_THROW(short_q.validate(), std::invalid_argument);

  auto heavy = pbt::uniform_density(3, 5);
  heavy.weights[0] += 0.01;
  EXPECT_THROW(heavy.validate(), std::invalid_argument);
  EXPECT_THROW(pbt::fidelity_of_density(heavy), std::invalid_argument);
}

TEST(DiagramDensity, SchurWeylDensityGivesStandardFidelity) {
  for (int d = 1; d <= 5; ++d) {
    for (int N : {1, 2, 5, 17, 60}) {
      EXPECT_NEAR(pbt::fidelity_of_density(pbt::schur_weyl_density(d, N)).value,
                  pbt::f_std(d, N).value, 1e-12)
          << d << " " << N;
    }
  }
}

TEST(DiagramDensity, FidelityInUnitInterval) {
  for (int d = 2; d <= 4; ++d) {
    for (int N = 1; N <= 20; ++N) {
      const double f = pbt::fidelity_of_density(pbt::uniform_density(d, N)).value;
      EXPECT_GE(f, 0.0);
      EXPECT_LE(f, 1.0 + 1e-14);
    }
  }
}

TEST(AppendixBDensity, DomainAndTruncation) {
  EXPECT_THROW(pbt::appendix_b_density(2, 3), std::invalid_argument);
  EXPECT_THROW(pbt::appendix_b_density(3, 8), std::invalid_argument);
  const auto t = pbt::appendix_b_density(2, 10);
  EXPECT_EQ(t.requested_N, 10);
  EXPECT_EQ(t.effective_N, 8);
  EXPECT_EQ(t.density.N, 8);
  EXPECT_EQ(pbt::appendix_b_density(3, 27).effective_N, 27);
  EXPECT_EQ(pbt::appendix_b_density(3, 35).effective_N, 27);
}

TEST(AppendixBDensity, NormalizedAndSupportedInBall) {
  for (int d = 2; d <= 4; ++d) {
    for (int N : {d * d, 3 * d * d, 5 * d * d + 1}) {
      const auto t = pbt::appendix_b_density(d, N);
      EXPECT_NO_THROW(t.density.validate(1e-12));
      const int n = t.effective_N;
      const double step = static_cast<double>(n) / (d * d);
      const double r2 = 2.0 * step * step;
      const auto diagrams = pbt::enumerate_diagrams(d, n);
      for (std::size_t k = 0; k < diagrams.size(); ++k) {
        double dist2 = 0.0;
        for (int i = 0; i < d; ++i) {
          const double c = (2 * d - 2 * i - 1) * step;
          const double x = diagrams[k][static_cast<std::size_t>(i)] - c;
          dist2 += x * x;
        }
        if (dist2 >= r2) {
          EXPECT_EQ(t.density.weights[k], 0.0) << diagrams[k].to_string();
        } else if (dist2 < r2 - 1e-9) {
          EXPECT_GT(t.density.weights[k], 0.0) << diagrams[k].to_string();
        }
      }
    }
  }
}

TEST(AppendixBDensity, FrozenSmallValues) {
  // At N = d^2 the ball holds only the center diagram.
  EXPECT_NEAR(pbt::fidelity_of_density(pbt::appendix_b_density(2, 4).density).value, 0.5, 1e-14);
  EXPECT_NEAR(pbt::fidelity_of_density(pbt::appendix_b_density(2, 8).density).value,
              0.8529411765, 1e-10);
}

TEST(AppendixBDensity, AboveClosedFormLowerBound) {
  for (int d = 2; d <= 4; ++d) {
    for (int k = 1; k <= 8; ++k) {
      const int N = k * d * d;
      const double f = pbt::fidelity_of_density(pbt::appendix_b_density(d, N).density).value;
      EXPECT_GE(f, pbt::achievability_appendix_b(d, N).clamped) << d << " " << N;
    }
  }
}

TEST(AppendixBDensity, ApproachesOneQuadratically) {
  // N^2 (1 - F) stays bounded as N grows.
  for (int N : {40, 80, 160, 200}) {
    const double f = pbt::fidelity_of_density(pbt::appendix_b_density(2, N).density).value;
    EXPECT_LT(N * N * (1.0 - f), 12.0) << N;
  }
}
