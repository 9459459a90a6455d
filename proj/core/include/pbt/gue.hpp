#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <vector>

namespace pbt {

using HermitianMatrix = Eigen::MatrixXcd;

/// Traceless GUE: X with X_ii ~ N(0,1) and off-diagonal real and imaginary
/// parts each N(0,1/2), then Y = X - tr(X)/d I. Sample i depends only on
/// (seed, i).
class Gue0Sampler {
 public:
  Gue0Sampler(int d, std::uint64_t seed);
  HermitianMatrix sample(std::uint64_t index) const;
  int d() const { return d_; }

 private:
  int d_;
  std::uint64_t seed_;
};

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi, ascending.
std::vector<double> jacobi_eigenvalues(Eigen::MatrixXd a, double tol = 1e-12);

/// Eigenvalues of a Hermitian matrix via Jacobi on the real embedding
/// [[Re, -Im], [Im, Re]], whose spectrum is that of h with each value doubled.
std::vector<double> hermitian_eigenvalues(const HermitianMatrix& h, double tol = 1e-12);

/// Largest eigenvalue; uses sqrt(tr(G^2)/2) when d = 2 and G is traceless.
double lambda_max(const HermitianMatrix& g);

struct GueSampleStats {
  int d = 0;
  std::uint64_t sample_count = 0;
  std::uint64_t seed = 0;
  double mean_lambda_max = 0.0;
  double standard_error = 0.0;  // sample sd / sqrt(count)
  double mean_trace_sq = 0.0;
};

/// Monte-Carlo mean of lambda_max over `count` samples. Samples are grouped
/// into fixed blocks merged in order, so the result does not depend on the
/// number of threads. Needs d >= 1, count >= 2.
GueSampleStats lambda_max_mean(int d, std::uint64_t seed, std::uint64_t count);

/// Raw lambda_max samples 0..count-1.
std::vector<double> lambda_max_samples(int d, std::uint64_t seed, std::uint64_t count);

/// 2/sqrt(pi).
double lambda_max_exact_d2();

/// mean_lambda_max / (2 sqrt(d)); throws if stats.d != d.
double semicircle_ratio(int d, const GueSampleStats& stats);

}  // namespace pbt
