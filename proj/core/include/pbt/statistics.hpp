#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace pbt {

struct ChiSquareResult {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 0.0;
};

/// Pearson goodness of fit of `observed` counts against `probabilities`.
/// Bins with zero probability are skipped; a count in one gives p = 0 and an
/// infinite statistic.
ChiSquareResult chi_square_test(std::span<const std::uint64_t> observed,
                                std::span<const double> probabilities);

struct KsResult {
  double statistic = 0.0;  // sup |F_n - F|
  double p_value = 0.0;    // asymptotic Kolmogorov tail
};

/// One-sample Kolmogorov-Smirnov test. `samples` is copied and sorted.
KsResult ks_test(std::vector<double> samples, const std::function<double(double)>& cdf);

/// P(K > x) for the Kolmogorov distribution.
double kolmogorov_tail(double x);

/// CDF of the chi distribution with 3 degrees of freedom.
double chi3_cdf(double x);

}  // namespace pbt
