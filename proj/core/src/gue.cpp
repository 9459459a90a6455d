#include "pbt/gue.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "pbt/parallel.hpp"
#include "pbt/random.hpp"
#include "pbt/summation.hpp"

namespace pbt {

Gue0Sampler::Gue0Sampler(int d, std::uint64_t seed) : d_(d), seed_(seed) {
  if (d < 1) throw std::invalid_argument("Gue0Sampler: need d >= 1");
}

HermitianMatrix Gue0Sampler::sample(std::uint64_t index) const {
  KeyedRng rng(seed_, index);
  std::normal_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> half(0.0, std::sqrt(0.5));
  HermitianMatrix x(d_, d_);
  for (int i = 0; i < d_; ++i) {
    x(i, i) = unit(rng);
    for (int j = i + 1; j < d_; ++j) {
      const double re = half(rng);
      const double im = half(rng);
      x(i, j) = {re, im};
      x(j, i) = {re, -im};
    }
  }
  const double shift = x.diagonal().real().sum() / d_;
  for (int i = 0; i < d_; ++i) x(i, i) -= shift;
  return x;
}

std::vector<double> jacobi_eigenvalues(Eigen::MatrixXd a, double tol) {
  const auto n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("jacobi_eigenvalues: matrix not square");
  const double scale = std::max(a.norm(), 1e-300);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (std::sqrt(off) <= tol * scale) break;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> values(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = a(i, i);
  std::sort(values.begin(), values.end());
  return values;
}

std::vector<double> hermitian_eigenvalues(const HermitianMatrix& h, double tol) {
  const auto n = h.rows();
  Eigen::MatrixXd embed(2 * n, 2 * n);
  embed << h.real(), -h.imag(), h.imag(), h.real();
  const auto doubled = jacobi_eigenvalues(std::move(embed), tol);
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < doubled.size(); i += 2) values.push_back(doubled[i]);
  return values;
}

double lambda_max(const HermitianMatrix& g) {
  if (g.rows() == 1) return g(0, 0).real();
  if (g.rows() == 2) return std::sqrt(g.squaredNorm() / 2.0);
  return hermitian_eigenvalues(g).back();
}

namespace {

constexpr std::uint64_t kBlock = 4096;

struct BlockSums {
  KahanSum lambda;
  KahanSum lambda_sq;
  KahanSum trace_sq;
};

}  // namespace

GueSampleStats lambda_max_mean(int d, std::uint64_t seed, std::uint64_t count) {
  if (d < 1 || count < 2) throw std::invalid_argument("lambda_max_mean: need d >= 1, count >= 2");
  const Gue0Sampler sampler(d, seed);
  const std::uint64_t blocks = (count + kBlock - 1) / kBlock;
  std::vector<BlockSums> sums(blocks);
  parallel_for(blocks, [&](std::size_t b) {
    const std::uint64_t end = std::min<std::uint64_t>(count, (b + 1) * kBlock);
    BlockSums& s = sums[b];
    for (std::uint64_t i = b * kBlock; i < end; ++i) {
      const HermitianMatrix g = sampler.sample(i);
      const double l = lambda_max(g);
      s.lambda += l;
      s.lambda_sq += l * l;
      s.trace_sq += g.squaredNorm();
    }
  });
  BlockSums total;
  for (const auto& s : sums) {
    total.lambda += s.lambda;
    total.lambda_sq += s.lambda_sq;
    total.trace_sq += s.trace_sq;
  }
  const double n = static_cast<double>(count);
  GueSampleStats out;
  out.d = d;
  out.sample_count = count;
  out.seed = seed;
  out.mean_lambda_max = total.lambda.value() / n;
  const double var = std::max(
      0.0, (total.lambda_sq.value() - n * out.mean_lambda_max * out.mean_lambda_max) / (n - 1));
  out.standard_error = std::sqrt(var / n);
  out.mean_trace_sq = total.trace_sq.value() / n;
  return out;
}

std::vector<double> lambda_max_samples(int d, std::uint64_t seed, std::uint64_t count) {
  const Gue0Sampler sampler(d, seed);
  std::vector<double> out(count);
  parallel_for(count, [&](std::size_t i) { out[i] = lambda_max(sampler.sample(i)); });
  return out;
}

double lambda_max_exact_d2() { return 2.0 / std::sqrt(std::numbers::pi); }

double semicircle_ratio(int d, const GueSampleStats& stats) {
  if (stats.d != d) throw std::invalid_argument("semicircle_ratio: stats are for another d");
  return stats.mean_lambda_max / (2.0 * std::sqrt(static_cast<double>(d)));
}

}  // namespace pbt
