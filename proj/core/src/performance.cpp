#include "pbt/performance.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "pbt/dimension.hpp"
#include "pbt/schur_weyl.hpp"
#include "pbt/summation.hpp"
#include "pbt/young.hpp"

namespace pbt {

std::string_view to_string(PerfKind kind) {
  switch (kind) {
    case PerfKind::FStd: return "F_std";
    case PerfKind::FStarSpectral: return "F_star_spectral";
    case PerfKind::FDensity: return "F_density";
    case PerfKind::PEpr: return "p_epr";
    case PerfKind::PStar: return "p_star";
    case PerfKind::FFromProbConversion: return "F_from_prob_conversion";
  }
  return "unknown";
}

Asymptote clamp_asymptote(double raw) {
  return {raw, std::clamp(raw, 0.0, 1.0)};
}

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

PerfPoint f_std(int d, int N) {
  require(d >= 1 && N >= 1, "f_std: need d >= 1 and N >= 1");
  KahanSum total;
  std::vector<int> mu(static_cast<std::size_t>(d));
  for_each_diagram(d, N - 1, [&](std::span<const int> alpha) {
    KahanSum inner;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (i > 0 && alpha[i] == alpha[i - 1]) continue;  // alpha + e_i invalid
      std::copy(alpha.begin(), alpha.end(), mu.begin());
      ++mu[i];
      inner += std::exp(0.5 * log_schur_weyl_probability(mu));
    }
    const double s = inner.value();
    total += s * s;
  });
  PerfPoint out{d, N, total.value() / (static_cast<double>(d) * d),
                PerfKind::FStd, f_std_asymptote(d, N)};
  return out;
}

Asymptote f_std_asymptote_raw(int d, int N) {
  require(N >= 1, "f_std_asymptote: need N >= 1");
  const double dd = d;
  return clamp_asymptote(1.0 - (dd * dd - 1.0) / (4.0 * N));
}

double f_std_asymptote(int d, int N) { return f_std_asymptote_raw(d, N).clamped; }

double p_epr_direct(int d, int N) {
  require(d >= 1 && N >= 1, "p_epr: need d >= 1 and N >= 1");
  const double log_d = std::log(static_cast<double>(d));
  KahanSum total;
  std::vector<int> mu(static_cast<std::size_t>(d));
  for_each_diagram(d, N - 1, [&](std::span<const int> alpha) {
#ifndef NDEBUG
    // gamma is maximized by the first row.
    const YoungDiagram a(std::vector<int>(alpha.begin(), alpha.end()));
    const int best = gamma_ratio(a, FormulaRow{1});
    for (int i = 2; i <= d; ++i) {
      if (a.can_add(static_cast<std::size_t>(i - 1))) {
        assert(best >= gamma_ratio(a, FormulaRow{i}));
      }
    }
#endif
    std::copy(alpha.begin(), alpha.end(), mu.begin());
    ++mu[0];
    const double log_term = 2.0 * log_weyl_dim(alpha) + log_specht_dim(mu) -
                            log_weyl_dim(mu) - N * log_d;
    total += std::exp(log_term);
  });
  return total.value();
}

double p_epr_expectation(int d, int N) {
  require(d >= 1 && N >= 1, "p_epr: need d >= 1 and N >= 1");
  KahanSum total;
  for_each_diagram(d, N - 1, [&](std::span<const int> alpha) {
    const double p = std::exp(log_schur_weyl_probability(alpha));
    total += p * static_cast<double>(N) / (alpha[0] + d);
  });
  return total.value() / d;
}

PerfPoint p_epr(int d, int N) {
  PerfPoint out{d, N, p_epr_direct(d, N), PerfKind::PEpr, std::nullopt};
  return out;
}

Asymptote p_epr_asymptote_raw(int d, int N, double lambda_max_mean) {
  require(N >= 2, "p_epr_asymptote: need N >= 2");
  return clamp_asymptote(1.0 - std::sqrt(static_cast<double>(d) / (N - 1)) *
                                   lambda_max_mean);
}

double p_epr_asymptote(int d, int N, double lambda_max_mean) {
  return p_epr_asymptote_raw(d, N, lambda_max_mean).clamped;
}

PerfPoint p_star(int d, int N) {
  require(d >= 1 && N >= 0, "p_star: need d >= 1 and N >= 0");
  const BigRational c = BigRational(d) * d - 1;
  BigRational value = 1;  // d = 1, N = 0: a trivial system always arrives
  if (c + N != 0) value = 1 - c / (c + N);
  PerfPoint out{d, N, value.get_d(), PerfKind::PStar, std::nullopt};
  return out;
}

double f_from_prob_conversion(double p, int d) {
  require(p >= 0.0 && p <= 1.0, "f_from_prob_conversion: need p in [0, 1]");
  return p + (1.0 - p) / (static_cast<double>(d) * d);
}

}  // namespace pbt
