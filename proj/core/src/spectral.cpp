#include "pbt/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>

#include "pbt/summation.hpp"

namespace pbt {

SparseSymmetric overlap_matrix(const DiagramIndex& index) {
  const auto n = static_cast<Eigen::Index>(index.size());
  const auto d = static_cast<std::size_t>(index.d());
  SparseSymmetric m(n, n);
  if (index.n() == 0) return m;
  m.reserve(Eigen::VectorXi::Constant(n, static_cast<int>(d * d)));

  std::vector<int> alpha(d);
  std::vector<int> other(d);
  for (Eigen::Index row = 0; row < n; ++row) {
    const auto mu = index[static_cast<std::size_t>(row)].parts();
    int removable = 0;
    for (std::size_t j = 0; j < d; ++j) {
      if (mu[j] == 0 || (j + 1 < d && mu[j] == mu[j + 1])) continue;
      ++removable;
      std::copy(mu.begin(), mu.end(), alpha.begin());
      --alpha[j];
      // mu' = alpha + e_i for i != j; alpha is uniquely mu - e_j.
      for (std::size_t i = 0; i < d; ++i) {
        if (i == j || (i > 0 && alpha[i] == alpha[i - 1])) continue;
        other = alpha;
        ++other[i];
        m.insert(row, static_cast<Eigen::Index>(*index.find(other))) = 1.0;
      }
    }
    m.insert(row, row) = removable;
  }
  m.makeCompressed();
  return m;
}

SparseSymmetric incidence_matrix(const DiagramIndex& parents, const DiagramIndex& children) {
  if (parents.d() != children.d() || parents.n() + 1 != children.n()) {
    throw std::invalid_argument("incidence_matrix: indices do not differ by one box");
  }
  const auto d = static_cast<std::size_t>(parents.d());
  SparseSymmetric b(static_cast<Eigen::Index>(parents.size()),
                    static_cast<Eigen::Index>(children.size()));
  b.reserve(Eigen::VectorXi::Constant(b.rows(), static_cast<int>(d)));
  std::vector<int> mu(d);
  for (std::size_t row = 0; row < parents.size(); ++row) {
    const auto alpha = parents[row].parts();
    for (std::size_t i = 0; i < d; ++i) {
      if (i > 0 && alpha[i] == alpha[i - 1]) continue;
      std::copy(alpha.begin(), alpha.end(), mu.begin());
      ++mu[i];
      b.insert(Eigen::Index(row), Eigen::Index(*children.find(mu))) = 1.0;
    }
  }
  b.makeCompressed();
  return b;
}

namespace {

Eigen::VectorXd project_out(Eigen::VectorXd v, const Eigen::VectorXd* deflate) {
  if (deflate) v -= deflate->dot(v) * *deflate;
  return v;
}

EigenPair power_iteration(const SymmetricOperator& m, Eigen::Index n,
                          const SpectralOptions& opt) {
  Eigen::VectorXd v = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(double(n)));
  double theta = 0.0;
  double residual = std::numeric_limits<double>::infinity();
  for (int it = 1; it <= opt.max_iters; ++it) {
    Eigen::VectorXd w = m(v);
    const double next = v.dot(w);
    residual = (w - next * v).norm();
    const bool settled = std::fabs(next - theta) <= opt.tol * std::fabs(next) &&
                         residual <= std::sqrt(opt.tol) * std::fabs(next);
    theta = next;
    if (settled || residual == 0.0) return {theta, v, it, residual};
    v = w / w.norm();
  }
  throw ConvergenceError("power iteration did not converge", v, residual);
}

// Restarted Lanczos. With `deflate` set, runs on the complement of that unit
// vector and returns after `cycle_limit` cycles without requiring convergence.
EigenPair lanczos(const SymmetricOperator& m, Eigen::Index n, Eigen::VectorXd start,
                  const SpectralOptions& opt, const Eigen::VectorXd* deflate,
                  int cycle_limit) {
  const auto k_max =
      static_cast<Eigen::Index>(std::max(2, std::min<int>(opt.krylov_dim, int(n))));
  Eigen::MatrixXd basis(n, k_max);
  Eigen::VectorXd alpha(k_max);
  Eigen::VectorXd beta(k_max);

  Eigen::VectorXd v = project_out(std::move(start), deflate);
  v.normalize();
  double theta_prev = std::numeric_limits<double>::quiet_NaN();
  int matvecs = 0;
  double residual = std::numeric_limits<double>::infinity();

  for (int cycle = 1;; ++cycle) {
    basis.col(0) = v;
    Eigen::Index used = k_max;
    bool invariant = false;
    double tail = 0.0;
    for (Eigen::Index j = 0; j < k_max; ++j) {
      Eigen::VectorXd w = project_out(m(basis.col(j)), deflate);
      ++matvecs;
      alpha(j) = basis.col(j).dot(w);
      auto done = basis.leftCols(j + 1);
      const double before = w.norm();
      w -= done * (done.transpose() * w);
      if (w.norm() < 0.7 * before) w -= done * (done.transpose() * w);
      w = project_out(std::move(w), deflate);
      const double b = w.norm();
      if (j + 1 == k_max) {
        tail = b;
        break;
      }
      if (b <= 1e-13 * std::max(1.0, std::fabs(alpha(0)))) {
        used = j + 1;
        invariant = true;
        break;
      }
      beta(j) = b;
      basis.col(j + 1) = w / b;
    }

    Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(used, used);
    for (Eigen::Index j = 0; j < used; ++j) {
      tri(j, j) = alpha(j);
      if (j + 1 < used) tri(j, j + 1) = tri(j + 1, j) = beta(j);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(tri);
    const double theta = small.eigenvalues()(used - 1);
    const Eigen::VectorXd y = small.eigenvectors().col(used - 1);
    v = basis.leftCols(used) * y;
    v.normalize();
    residual = invariant ? 0.0 : std::fabs(tail * y(used - 1));

    const bool settled =
        invariant || (std::fabs(theta - theta_prev) <= opt.tol * std::fabs(theta) &&
                      residual <= std::sqrt(opt.tol) * std::fabs(theta));
    if (settled || (cycle_limit > 0 && cycle >= cycle_limit)) {
      return {theta, v, matvecs, residual};
    }
    if (matvecs >= opt.max_iters) {
      throw ConvergenceError("Lanczos did not converge", v, residual);
    }
    theta_prev = theta;
  }
}

}  // namespace

EigenPair largest_eigenpair(const SymmetricOperator& apply, Eigen::Index n,
                            const SpectralOptions& opt) {
  if (n == 0) throw std::invalid_argument("largest_eigenpair: empty operator");
  if (n == 1) {
    const Eigen::VectorXd one = Eigen::VectorXd::Ones(1);
    return {apply(one)(0), one, 1, 0.0};
  }
  if (opt.method == EigenMethod::Power) return power_iteration(apply, n, opt);
  return lanczos(apply, n, Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(double(n))), opt,
                 nullptr, 0);
}

EigenPair largest_eigenpair(const SparseSymmetric& m, const SpectralOptions& opt) {
  return largest_eigenpair([&m](const Eigen::VectorXd& v) -> Eigen::VectorXd { return m * v; },
                           m.rows(), opt);
}

SpectralResult optimal_fidelity_spectral(int d, int N, const SpectralOptions& opt) {
  if (d < 1 || N < 1) {
    throw std::invalid_argument("optimal_fidelity_spectral: need d >= 1 and N >= 1");
  }
  const DiagramIndex index(d, N);
  const SparseSymmetric b = incidence_matrix(DiagramIndex(d, N - 1), index);
  const SymmetricOperator m = [&b](const Eigen::VectorXd& v) -> Eigen::VectorXd {
    return b.transpose() * (b * v);
  };
  const auto n = static_cast<Eigen::Index>(index.size());
  EigenPair top = largest_eigenpair(m, n, opt);

  Eigen::VectorXd& v = top.vector;
  if (v.sum() < 0) v = -v;  // Perron vector is nonnegative up to sign

  SpectralResult out;
  out.lambda_max = top.value;
  out.iterations = top.iterations;
  out.residual = top.residual;
  out.min_entry = v.minCoeff();
  const double dd = d;
  out.point = PerfPoint{d, N, top.value / (dd * dd), PerfKind::FStarSpectral,
                        std::nullopt};

  out.density = DiagramDensity{d, N, {}, "optimal-spectral"};
  out.density.weights.resize(index.size());
  KahanSum total;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double x = std::max(0.0, v(i));
    out.density.weights[static_cast<std::size_t>(i)] = x * x;
    total += x * x;
  }
  for (auto& w : out.density.weights) w /= total.value();

  if (opt.check_degeneracy && n > 1) {
    // Deterministic start with no special symmetry, deflated against v.
    Eigen::VectorXd start(n);
    for (Eigen::Index i = 0; i < start.size(); ++i) {
      start(i) = std::sin(1.0 + 0.7548776662 * double(i));
    }
    const Eigen::VectorXd unit = v.normalized();
    start -= unit.dot(start) * unit;
    if (start.norm() > 1e-12) {
      SpectralOptions second = opt;
      second.max_iters = std::numeric_limits<int>::max();
      const EigenPair next = lanczos(m, n, start, second, &unit, 2);
      out.lambda_second = next.value;
      out.density_unique =
          (top.value - next.value) > opt.degeneracy_gap * std::fabs(top.value);
    }
  }
  return out;
}

}  // namespace pbt
