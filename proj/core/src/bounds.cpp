#include "pbt/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace pbt {

namespace {

void require_converse_domain(int d, int N, const char* what) {
  if (d < 2 || N < 1) throw std::invalid_argument(std::string(what) + ": need d >= 2, N >= 1");
}

}  // namespace

double converse_nonasymptotic(int d, int N) {
  require_converse_domain(d, N, "converse_nonasymptotic");
  const double c = static_cast<double>(d) * d;
  const double n = N;
  return 1.0 - (c - 1.0) / (8.0 * n * n) / (1.0 + (c - 2.0) / (2.0 * n));
}

double converse_rootfid(int d, int N) {
  require_converse_domain(d, N, "converse_rootfid");
  const double x = 1.0 / (static_cast<double>(d) * d);
  const double y = 1.0 / N + (1.0 - 1.0 / N) * x;
  return std::sqrt(x * y) + std::sqrt((1.0 - x) * (1.0 - y));
}

PiecewiseBound converse_piecewise(int d, int N) {
  require_converse_domain(d, N, "converse_piecewise");
  const double c = static_cast<double>(d) * d;
  PiecewiseBound out;
  // N <= d^2/2 compared in integers.
  if (2 * static_cast<long>(N) <= static_cast<long>(d) * d) {
    out.fidelity = std::sqrt(static_cast<double>(N)) / d;
    out.small_n_branch = true;
  } else {
    out.fidelity = 1.0 - (c - 1.0) / (16.0 * N * static_cast<double>(N));
  }
  out.error = 2.0 * (1.0 - out.fidelity);
  return out;
}

double ishizaka_converse(int d, int N) {
  require_converse_domain(d, N, "ishizaka_converse");
  return 1.0 - 1.0 / (4.0 * (d - 1) * N * static_cast<double>(N));
}

double porttele_bound(int d, int N) {
  if (d < 1 || N < 1) throw std::invalid_argument("porttele_bound: need d >= 1, N >= 1");
  return std::min(1.0, std::sqrt(static_cast<double>(N)) / d);
}

CommBounds comm_bounds(int d, double eps) {
  if (d < 1 || !(eps >= 0.0 && eps <= 1.0)) {
    throw std::invalid_argument("comm_bounds: need d >= 1 and eps in [0, 1]");
  }
  const double shrink = 1.0 - eps * eps;
  CommBounds out;
  out.dq_min = d * shrink;
  out.dc_min = out.dq_min * out.dq_min;
  const double neg_inf = -std::numeric_limits<double>::infinity();
  out.imax_lower = out.dq_min > 0.0 ? 2.0 * std::log2(out.dq_min) : neg_inf;
  // Absorb rounding so that e.g. 4 * (1 - 0) does not ceil to 5.
  const double ceiling = std::ceil(out.dq_min - 1e-12 * std::max(1.0, out.dq_min));
  out.imax_upper = ceiling > 0.0 ? 2.0 * std::log2(ceiling) : neg_inf;
  return out;
}

SimplexVolumes simplex_volumes(int d) {
  if (d < 2) throw std::invalid_argument("simplex_volumes: need d >= 2");
  SimplexVolumes out;
  out.d = d;
  BigInt fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(d - 1));
  out.coefficient = BigRational(BigInt(1), fact * fact);
  out.coefficient.canonicalize();
  const double dd = d;
  out.volume = out.coefficient.get_d() / std::sqrt(dd);
  const double facets = dd * (dd - 1) * (dd - 1) / std::sqrt(2.0) +
                        std::sqrt(dd) * std::pow(dd - 1, 1.5) + std::sqrt(2.0) * (dd - 1);
  out.boundary_volume = out.volume * facets;
  out.inradius = 1.0 / (dd * dd);
  return out;
}

double lambda1_upper(int d) {
  if (d < 2) throw std::invalid_argument("lambda1_upper: need d >= 2");
  const double dd = d;
  const double ball = (dd - 1) / 2.0 * std::pow(std::sqrt((dd + 1) / 2.0) + 1.0, 2);
  const double shape =
      dd * (dd - 1) / std::sqrt(2.0) + std::sqrt(dd * (dd - 1)) + std::sqrt(2.0);
  return ball * dd * dd * shape;
}

Asymptote achievability_laplacian(int d, int N) {
  require_converse_domain(d, N, "achievability_laplacian");
  return clamp_asymptote(1.0 - lambda1_upper(d) / (d * N * static_cast<double>(N)));
}

Asymptote achievability_appendix_b(int d, int N) {
  require_converse_domain(d, N, "achievability_appendix_b");
  const double d4 = std::pow(static_cast<double>(d), 4);
  return clamp_asymptote(1.0 - d4 * (d + 3) / (2.0 * N * static_cast<double>(N)));
}

Asymptote achievability_std(int d, int N) {
  if (d < 1 || N < 1) throw std::invalid_argument("achievability_std: need d >= 1, N >= 1");
  return clamp_asymptote(1.0 - (static_cast<double>(d) * d - 1.0) / N);
}

BoundReport make_bound_report(int d, int N) {
  require_converse_domain(d, N, "make_bound_report");
  BoundReport r;
  r.d = d;
  r.N = N;
  r.converse_full = converse_nonasymptotic(d, N);
  const PiecewiseBound pw = converse_piecewise(d, N);
  r.converse_piecewise = pw.fidelity;
  r.converse_piecewise_eps = pw.error;
  r.converse_rootfid = converse_rootfid(d, N);
  r.ishizaka_converse_asym = ishizaka_converse(d, N);
  r.porttele = porttele_bound(d, N);
  r.achievability_std = achievability_std(d, N);
  r.achievability_laplacian_asym = achievability_laplacian(d, N);
  r.achievability_appB_asym = achievability_appendix_b(d, N);
  r.diamond_error_from_F = 2.0 * (1.0 - r.achievability_std.clamped);
  return r;
}

}  // namespace pbt
