#include "pbt/oracle.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "pbt/dimension.hpp"
#include "pbt/young.hpp"

namespace pbt {

namespace {

std::size_t checked_dim(int d, int N, std::size_t cap) {
  if (d < 1 || N < 1) throw std::invalid_argument("oracle: need d >= 1 and N >= 1");
  std::size_t dim = 1;
  for (int k = 0; k <= N; ++k) {
    dim *= static_cast<std::size_t>(d);
    if (dim > cap) {
      throw DimensionCapExceeded("oracle: d^(N+1) exceeds the cap of " + std::to_string(cap));
    }
  }
  return dim;
}

// Digit k of x in base d; k = 0 is the most significant of N + 1 digits.
struct Digits {
  std::size_t d;
  std::vector<std::size_t> place;  // d^(N - k)

  Digits(int d_, int N) : d(static_cast<std::size_t>(d_)), place(static_cast<std::size_t>(N) + 1) {
    std::size_t p = 1;
    for (int k = N; k >= 0; --k) {
      place[static_cast<std::size_t>(k)] = p;
      p *= d;
    }
  }
  std::size_t get(std::size_t x, std::size_t k) const { return (x / place[k]) % d; }
  std::size_t set(std::size_t x, std::size_t k, std::size_t v) const {
    return x + (v - get(x, k)) * place[k];
  }
};

// Adds weight * phi+_{0,k} (x) I, where phi+ = (1/d) sum_{a,c} |aa><cc|.
void add_pair_projector(Eigen::MatrixXd& m, const Digits& digits, std::size_t k, double weight) {
  const auto dim = static_cast<std::size_t>(m.rows());
  const double entry = weight / static_cast<double>(digits.d);
  for (std::size_t x = 0; x < dim; ++x) {
    if (digits.get(x, 0) != digits.get(x, k)) continue;
    for (std::size_t c = 0; c < digits.d; ++c) {
      const std::size_t y = digits.set(digits.set(x, 0, c), k, c);
      m(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) += entry;
    }
  }
}

}  // namespace

DenseOperator build_T(int d, int N, std::size_t cap) {
  const std::size_t dim = checked_dim(d, N, cap);
  const Digits digits(d, N);
  DenseOperator t{dim, Eigen::MatrixXd::Zero(Eigen::Index(dim), Eigen::Index(dim))};
  for (int k = 1; k <= N; ++k) {
    add_pair_projector(t.entries, digits, static_cast<std::size_t>(k), 1.0 / N);
  }
  return t;
}

DenseOperator build_eta(int d, int N, int i, std::size_t cap) {
  const std::size_t dim = checked_dim(d, N, cap);
  if (i < 0 || i >= N) throw std::invalid_argument("build_eta: port index out of range");
  const Digits digits(d, N);
  DenseOperator eta{dim, Eigen::MatrixXd::Zero(Eigen::Index(dim), Eigen::Index(dim))};
  add_pair_projector(eta.entries, digits, static_cast<std::size_t>(i) + 1,
                     std::pow(static_cast<double>(d), -(N - 1)));
  return eta;
}

PgmResult pgm_fidelity(int d, int N, std::size_t cap) {
  const std::size_t dim = checked_dim(d, N, cap);
  std::vector<Eigen::MatrixXd> eta;
  eta.reserve(static_cast<std::size_t>(N));
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(Eigen::Index(dim), Eigen::Index(dim));
  for (int i = 0; i < N; ++i) {
    eta.push_back(build_eta(d, N, i, cap).entries);
    s += eta.back() / N;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s);
  const Eigen::VectorXd& w = es.eigenvalues();
  const double cutoff = 1e-12 * w.maxCoeff();
  PgmResult out;
  out.min_eigenvalue = w.minCoeff();
  if (out.min_eigenvalue < -1e-10) {
    throw std::runtime_error("pgm_fidelity: average state is not PSD");
  }
  Eigen::VectorXd inv_sqrt = Eigen::VectorXd::Zero(w.size());
  Eigen::VectorXd support = Eigen::VectorXd::Zero(w.size());
  for (Eigen::Index k = 0; k < w.size(); ++k) {
    if (w(k) > cutoff) {
      inv_sqrt(k) = 1.0 / std::sqrt(w(k));
      support(k) = 1.0;
      ++out.support_rank;
    }
  }
  const Eigen::MatrixXd& u = es.eigenvectors();
  const Eigen::MatrixXd root = u * inv_sqrt.asDiagonal() * u.transpose();
  const Eigen::MatrixXd projector = u * support.asDiagonal() * u.transpose();

  Eigen::MatrixXd povm_sum = Eigen::MatrixXd::Zero(s.rows(), s.cols());
  double success = 0.0;
  for (const auto& e : eta) {
    const Eigen::MatrixXd element = root * (e / N) * root;
    povm_sum += element;
    success += (element * e).trace() / N;
  }
  out.completeness_error = (povm_sum - projector).cwiseAbs().maxCoeff();
  out.success = success;
  out.fidelity = success * N / (static_cast<double>(d) * d);
  return out;
}

SpectrumReport predicted_spectrum(int d, int N) {
  SpectrumReport r;
  r.d = d;
  r.N = N;
  std::size_t dim = 1;
  for (int k = 0; k <= N; ++k) dim *= static_cast<std::size_t>(d);
  r.dim = dim;

  std::map<long, long> by_gamma;  // gamma -> multiplicity
  long accounted = 0;
  BigInt zero_from_weights = 0;
  for (const auto& mu : enumerate_diagrams(d, N)) {
    const BigInt dmu = specht_dim(mu);
    for (int i = 0; i < d; ++i) {
      const auto row = static_cast<std::size_t>(i);
      // mu_i > mu_{i+1}, with mu_{d+1} taken as -infinity.
      if (i + 1 < d && mu[row] == mu[row + 1]) continue;
      std::vector<int> weight(mu.parts().begin(), mu.parts().end());
      --weight[row];
      if (weight[row] >= 0) {
        const YoungDiagram alpha(weight);
        const BigInt mult = weyl_dim(d, alpha) * dmu;
        by_gamma[gamma_ratio(alpha, FormulaRow{i + 1})] += mult.get_si();
        accounted += mult.get_si();
      } else {
        zero_from_weights += weyl_dim_product(weight) * dmu;
      }
    }
  }
  for (auto [gamma, mult] : by_gamma) {
    r.predicted.push_back({static_cast<double>(gamma) / (static_cast<double>(d) * N), mult});
  }
  r.zero_multiplicity = static_cast<long>(dim) - accounted;
  r.zero_multiplicity_from_weights = zero_from_weights.get_si();
  return r;
}

SpectrumReport spectrum_check(int d, int N, double tol, std::size_t cap) {
  const DenseOperator t = build_T(d, N, cap);
  SpectrumReport r = predicted_spectrum(d, N);
  r.hermiticity_error = (t.entries - t.entries.transpose()).cwiseAbs().maxCoeff();
  r.trace = t.entries.trace();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t.entries, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& w = es.eigenvalues();  // ascending
  r.min_eigenvalue = w.minCoeff();
  r.operator_norm = w.maxCoeff();

  std::vector<double> expected;
  expected.reserve(t.dim);
  if (r.zero_multiplicity >= 0) expected.assign(static_cast<std::size_t>(r.zero_multiplicity), 0.0);
  for (const auto& e : r.predicted) expected.insert(expected.end(), std::size_t(e.multiplicity), e.value);

  if (expected.size() != t.dim || r.zero_multiplicity < 0) {
    r.max_mismatch = std::numeric_limits<double>::infinity();
  } else {
    for (std::size_t k = 0; k < t.dim; ++k) {
      r.max_mismatch = std::max(r.max_mismatch, std::fabs(w(Eigen::Index(k)) - expected[k]));
    }
  }
  r.passed = r.max_mismatch <= tol && r.zero_multiplicity == r.zero_multiplicity_from_weights &&
             r.hermiticity_error <= 1e-12 && r.min_eigenvalue >= -1e-10;
  if (!r.passed) {
    throw SpectrumMismatch("spectrum_check: T(N) spectrum differs from the prediction at d=" +
                               std::to_string(d) + ", N=" + std::to_string(N),
                           r);
  }
  return r;
}

}  // namespace pbt
