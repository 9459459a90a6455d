#pragma once

#include <string>
#include <vector>

#include "pbt/performance.hpp"
#include "pbt/young.hpp"

namespace pbt {

/// Probability weights q(mu) = c_mu p_{d,N}(mu) over mu |-_d N, aligned with
/// enumerate_diagrams(d, N).
struct DiagramDensity {
  int d = 0;
  int N = 0;
  std::vector<double> weights;
  std::string label = "custom";

  /// Throws std::invalid_argument on a negative weight, a size mismatch, or a
  /// total further than `tolerance` from 1.
  void validate(double tolerance = 1e-8) const;
};

/// q = p_{d,N}, i.e. c_mu = 1; reproduces the standard protocol.
DiagramDensity schur_weyl_density(int d, int N);
/// Equal weight on every diagram.
DiagramDensity uniform_density(int d, int N);

/// F(q) = (1/d^2) sum_{alpha |-_d N-1} (sum_{mu = alpha + box} sqrt(q(mu)))^2.
/// Throws std::invalid_argument if q is not normalized to within 1e-8.
PerfPoint fidelity_of_density(const DiagramDensity& q);
/// Same, reusing an index for (q.d, q.N).
PerfPoint fidelity_of_density(const DiagramDensity& q, const DiagramIndex& index);

struct TruncatedDensity {
  DiagramDensity density;  // defined at effective_N ports
  int requested_N = 0;
  int effective_N = 0;
};

/// Explicit protocol density q(mu) proportional to (R^2 - |mu - center|^2)^2
/// inside the ball of radius R = sqrt(2) N/d^2 about
/// center = ((2d-1), (2d-3), ..., 1) * N/d^2, zero outside. Uses only
/// d^2 floor(N/d^2) ports when d^2 does not divide N. Throws if N < d^2.
TruncatedDensity appendix_b_density(int d, int N);

}  // namespace pbt
