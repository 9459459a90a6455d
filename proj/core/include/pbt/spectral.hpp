#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <functional>
#include <stdexcept>
#include <string>

#include "pbt/density.hpp"
#include "pbt/performance.hpp"
#include "pbt/young.hpp"

namespace pbt {

using SparseSymmetric = Eigen::SparseMatrix<double, Eigen::RowMajor>;

/// M[mu, mu'] = #{alpha |-_d N-1 : alpha + box = mu and alpha + box = mu'},
/// indexed by `index` (diagrams of N boxes). The density objective is
/// F(q) = v^T M v / d^2 with v = sqrt(q), so the optimum over densities is
/// lambda_max(M) / d^2 with a nonnegative Perron eigenvector.
SparseSymmetric overlap_matrix(const DiagramIndex& index);

/// B[alpha, mu] = 1 when mu = alpha + box, rows indexed by diagrams of N-1
/// boxes and columns by `children`. M = B^T B.
SparseSymmetric incidence_matrix(const DiagramIndex& parents, const DiagramIndex& children);

/// v -> M v for a symmetric operator M.
using SymmetricOperator = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

enum class EigenMethod {
  Lanczos,  // restarted Lanczos with full reorthogonalization per cycle
  Power,    // plain power iteration
};

struct SpectralOptions {
  /// Relative change in the eigenvalue estimate between checks.
  double tol = 1e-12;
  /// Budget in matrix-vector products.
  int max_iters = 100000;
  EigenMethod method = EigenMethod::Lanczos;
  /// Krylov dimension per Lanczos cycle.
  int krylov_dim = 24;
  /// Estimate the second eigenvalue by a deflated run and flag near-degeneracy.
  bool check_degeneracy = true;
  double degeneracy_gap = 1e-9;
};

struct SpectralResult {
  PerfPoint point;
  double lambda_max = 0.0;
  /// Lower estimate of the second eigenvalue, when check_degeneracy was set.
  double lambda_second = 0.0;
  /// q = v^2 for the optimizing eigenvector v.
  DiagramDensity density;
  /// False when the top eigenvalue looked degenerate; `density` is then one of
  /// several optimizers.
  bool density_unique = true;
  int iterations = 0;
  double residual = 0.0;
  /// Most negative entry of the eigenvector before clipping (ideally ~0).
  double min_entry = 0.0;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, Eigen::VectorXd last_iterate,
                   double residual)
      : std::runtime_error(what),
        last_iterate_(std::move(last_iterate)),
        residual_(residual) {}
  const Eigen::VectorXd& last_iterate() const { return last_iterate_; }
  double residual() const { return residual_; }

 private:
  Eigen::VectorXd last_iterate_;
  double residual_;
};

struct EigenPair {
  double value = 0.0;
  Eigen::VectorXd vector;
  int iterations = 0;
  double residual = 0.0;
};

/// Largest eigenpair of a symmetric matrix with nonnegative spectrum.
/// Throws ConvergenceError when the budget runs out.
EigenPair largest_eigenpair(const SparseSymmetric& m, const SpectralOptions& options);
EigenPair largest_eigenpair(const SymmetricOperator& apply, Eigen::Index size,
                            const SpectralOptions& options);

/// Optimal fidelity over all densities at (d, N), as lambda_max(M) / d^2.
SpectralResult optimal_fidelity_spectral(int d, int N, const SpectralOptions& options = {});

}  // namespace pbt
