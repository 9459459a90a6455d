#pragma once

#include "pbt/dimension.hpp"
#include "pbt/performance.hpp"

namespace pbt {

/// 1 - (d^2-1)/(8N^2) * 1/(1 + (d^2-2)/(2N)). Needs d >= 2, N >= 1.
double converse_nonasymptotic(int d, int N);

/// sqrt(xy) + sqrt((1-x)(1-y)) at x = 1/d^2, y = 1/N + (1 - 1/N)/d^2.
/// Never exceeds converse_nonasymptotic.
double converse_rootfid(int d, int N);

struct PiecewiseBound {
  double fidelity = 0.0;  // F* <= fidelity
  double error = 0.0;     // diamond-norm error >= error, = 2(1 - fidelity)
  bool small_n_branch = false;
};

/// sqrt(N)/d when N <= d^2/2, else 1 - (d^2-1)/(16N^2).
PiecewiseBound converse_piecewise(int d, int N);

/// Leading-order converse 1 - 1/(4(d-1)N^2); the O(N^-3) correction is dropped.
double ishizaka_converse(int d, int N);

/// min(1, sqrt(N)/d).
double porttele_bound(int d, int N);

struct CommBounds {
  double dq_min = 0.0;  // quantum dimension d(1 - eps^2)
  double dc_min = 0.0;  // classical dimension d^2 (1 - eps^2)^2
  /// 2 log2(d(1 - eps^2)); -infinity when eps = 1 (no lower bound).
  double imax_lower = 0.0;
  /// 2 log2(ceil(d(1 - eps^2))); -infinity when the ceiling is 0.
  double imax_upper = 0.0;
};

/// Needs d >= 1 and eps in [0, 1].
CommBounds comm_bounds(int d, double eps);

struct SimplexVolumes {
  int d = 0;
  /// vol(OS_{d-1}) = coefficient / sqrt(d), coefficient = 1/((d-1)!)^2.
  BigRational coefficient;
  double volume = 0.0;
  double boundary_volume = 0.0;
  double inradius = 0.0;  // 1/d^2
};

/// Ordered simplex of nonincreasing probability vectors in R^d. Needs d >= 2.
SimplexVolumes simplex_volumes(int d);

/// Closed-form upper bound on the first Dirichlet eigenvalue of OS_{d-1}:
/// ((d-1)/2)(sqrt((d+1)/2)+1)^2 d^2 (d(d-1)/sqrt2 + sqrt(d(d-1)) + sqrt2).
double lambda1_upper(int d);

/// 1 - lambda1_upper(d)/(d N^2), O(N^-3) dropped.
Asymptote achievability_laplacian(int d, int N);

/// Closed form for the explicit ball density: 1 - d^4 (d+3)/(2N^2), O(N^-3) dropped.
Asymptote achievability_appendix_b(int d, int N);

/// 1 - (d^2-1)/N, the standard-protocol lower bound.
Asymptote achievability_std(int d, int N);

struct BoundReport {
  int d = 0;
  int N = 0;
  double converse_full = 0.0;
  double converse_piecewise = 0.0;
  double converse_piecewise_eps = 0.0;
  double converse_rootfid = 0.0;
  double ishizaka_converse_asym = 0.0;
  double porttele = 0.0;
  Asymptote achievability_std;
  Asymptote achievability_laplacian_asym;
  Asymptote achievability_appB_asym;
  /// Upper bound on the optimal diamond error from the standard protocol,
  /// 2(1 - max(0, achievability_std)).
  double diamond_error_from_F = 0.0;
};

/// Needs d >= 2, N >= 1.
BoundReport make_bound_report(int d, int N);

}  // namespace pbt
