#pragma once

#include <optional>
#include <string_view>

namespace pbt {

enum class PerfKind {
  FStd,
  FStarSpectral,
  FDensity,
  PEpr,
  PStar,
  FFromProbConversion,
};

std::string_view to_string(PerfKind kind);

/// A performance number of one protocol variant at (d, N).
struct PerfPoint {
  int d = 0;
  int N = 0;
  double value = 0.0;
  PerfKind kind = PerfKind::FStd;
  /// Matching first-order formula where one is defined (clamped to [0, 1]).
  std::optional<double> asymptote;
};

/// An asymptotic formula evaluated raw and clamped to [0, 1].
struct Asymptote {
  double raw = 0.0;
  double clamped = 0.0;
};

Asymptote clamp_asymptote(double raw);

/// Entanglement fidelity of the standard protocol (EPR resource with the
/// pretty good measurement):
///   d^{-N-2} sum_{alpha |-_d N-1} (sum_{mu = alpha + box} sqrt(d_mu m_mu))^2.
/// Evaluated as (1/d^2) sum_alpha (sum_mu sqrt(p_{d,N}(mu)))^2 in log domain.
PerfPoint f_std(int d, int N);

/// 1 - (d^2 - 1) / (4N).
Asymptote f_std_asymptote_raw(int d, int N);
double f_std_asymptote(int d, int N);

/// Success probability of the EPR protocol for probabilistic teleportation,
/// d^{-N} sum_alpha m_alpha^2 d_{mu*} / m_{mu*} with mu* = alpha + e_1.
PerfPoint p_epr(int d, int N);
/// Direct sum form.
double p_epr_direct(int d, int N);
/// (1/d) E_alpha[N / (alpha_1 + d)] with alpha ~ p_{d,N-1}.
double p_epr_expectation(int d, int N);

/// 1 - sqrt(d / (N-1)) * lambda_max_mean.
Asymptote p_epr_asymptote_raw(int d, int N, double lambda_max_mean);
double p_epr_asymptote(int d, int N, double lambda_max_mean);

/// Optimal probabilistic success 1 - (d^2-1)/(d^2-1+N).
PerfPoint p_star(int d, int N);

/// p + (1 - p)/d^2: fidelity of a deterministic protocol that sends a random
/// port index whenever a probabilistic one fails.
double f_from_prob_conversion(double p, int d);

}  // namespace pbt
