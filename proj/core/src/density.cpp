#include "pbt/density.hpp"

#include <cmath>
#include <stdexcept>

#include "pbt/schur_weyl.hpp"
#include "pbt/summation.hpp"

namespace pbt {

void DiagramDensity::validate(double tolerance) const {
  if (d < 1 || N < 1) {
    throw std::invalid_argument("DiagramDensity: need d >= 1 and N >= 1");
  }
  KahanSum total;
  for (double w : weights) {
    if (!(w >= 0.0)) {
      throw std::invalid_argument("DiagramDensity: negative or NaN weight");
    }
    total += w;
  }
  if (std::fabs(total.value() - 1.0) > tolerance) {
    throw std::invalid_argument("DiagramDensity: weights sum to " +
                                std::to_string(total.value()) + ", not 1");
  }
}

DiagramDensity schur_weyl_density(int d, int N) {
  DiagramDensity q{d, N, {}, "uniform-schur-weyl"};
  for_each_diagram(d, N, [&](std::span<const int> mu) {
    q.weights.push_back(std::exp(log_schur_weyl_probability(mu)));
  });
  return q;
}

DiagramDensity uniform_density(int d, int N) {
  DiagramDensity q{d, N, {}, "uniform"};
  for_each_diagram(d, N, [&](std::span<const int>) { q.weights.push_back(1.0); });
  const double w = 1.0 / static_cast<double>(q.weights.size());
  for (auto& x : q.weights) x = w;
  return q;
}

PerfPoint fidelity_of_density(const DiagramDensity& q, const DiagramIndex& index) {
  q.validate();
  if (index.d() != q.d || index.n() != q.N || index.size() != q.weights.size()) {
    throw std::invalid_argument("fidelity_of_density: index does not match density");
  }
  KahanSum total;
  std::vector<int> mu(static_cast<std::size_t>(q.d));
  for_each_diagram(q.d, q.N - 1, [&](std::span<const int> alpha) {
    KahanSum inner;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (i > 0 && alpha[i] == alpha[i - 1]) continue;
      std::copy(alpha.begin(), alpha.end(), mu.begin());
      ++mu[i];
      inner += std::sqrt(q.weights[*index.find(mu)]);
    }
    const double s = inner.value();
    total += s * s;
  });
  const double dd = q.d;
  return PerfPoint{q.d, q.N, total.value() / (dd * dd), PerfKind::FDensity,
                   std::nullopt};
}

PerfPoint fidelity_of_density(const DiagramDensity& q) {
  return fidelity_of_density(q, DiagramIndex(q.d, q.N));
}

TruncatedDensity appendix_b_density(int d, int N) {
  if (d < 1 || N < d * d) {
    throw std::invalid_argument("appendix_b_density: need N >= d^2");
  }
  const int step = N / (d * d);  // N' / d^2
  const int effective = step * d * d;
  const double radius_sq = 2.0 * step * step;

  TruncatedDensity out;
  out.requested_N = N;
  out.effective_N = effective;
  out.density = DiagramDensity{d, effective, {}, "appendix-b"};
  auto& w = out.density.weights;

  KahanSum total;
  for_each_diagram(d, effective, [&](std::span<const int> mu) {
    // The center has integer coordinates (2d - 2i - 1) * step (0-based i), so r^2 is exact.
    long r_sq = 0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
      const long c = static_cast<long>(2 * d - 2 * static_cast<int>(i) - 1) * step;
      const long diff = mu[i] - c;
      r_sq += diff * diff;
    }
    double weight = 0.0;
    if (static_cast<double>(r_sq) <= radius_sq) {
      const double gap = radius_sq - static_cast<double>(r_sq);
      weight = gap * gap;
    }
    w.push_back(weight);
    total += weight;
  });
  const double norm = total.value();
  for (auto& x : w) x /= norm;
  return out;
}

}  // namespace pbt
