#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace pbt {

inline constexpr std::size_t kOracleDimensionCap = 4096;

/// All operators built here have real entries in the computational basis, so
/// they are stored as real symmetric matrices.
struct DenseOperator {
  std::size_t dim = 0;
  Eigen::MatrixXd entries;
};

class DimensionCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Basis ordering: system A (or B_0) is the most significant digit, followed
/// by ports 1..N.
/// T(N) = (1/N) sum_k phi+_{A B_k} (x) I. Throws if d^{N+1} > cap.
DenseOperator build_T(int d, int N, std::size_t cap = kOracleDimensionCap);

/// eta_i = phi+_{A_i B_0} (x) I / d^{N-1}, i in [0, N).
DenseOperator build_eta(int d, int N, int i, std::size_t cap = kOracleDimensionCap);

struct PgmResult {
  double fidelity = 0.0;
  double success = 0.0;  // q
  /// max |sum_i E_i - P_supp(S)|, entrywise.
  double completeness_error = 0.0;
  double min_eigenvalue = 0.0;  // of S
  std::size_t support_rank = 0;
};

/// Pretty-good-measurement fidelity of the standard protocol, F = qN/d^2.
PgmResult pgm_fidelity(int d, int N, std::size_t cap = kOracleDimensionCap);

struct SpectrumEntry {
  double value = 0.0;
  long multiplicity = 0;
};

struct SpectrumReport {
  int d = 0;
  int N = 0;
  std::size_t dim = 0;
  /// Nonzero eigenvalues predicted from diagrams, merged by value.
  std::vector<SpectrumEntry> predicted;
  long zero_multiplicity = 0;
  /// Zero multiplicity from the weights mu - e_i that are not diagrams.
  long zero_multiplicity_from_weights = 0;
  double max_mismatch = 0.0;
  double operator_norm = 0.0;
  double trace = 0.0;
  double min_eigenvalue = 0.0;
  double hermiticity_error = 0.0;
  bool passed = false;
};

class SpectrumMismatch : public std::runtime_error {
 public:
  SpectrumMismatch(const std::string& what, SpectrumReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const SpectrumReport& report() const { return report_; }

 private:
  SpectrumReport report_;
};

/// Predicted spectrum of T(N) without building it.
SpectrumReport predicted_spectrum(int d, int N);

/// Eigensolves T(N) and compares the sorted spectrum with the prediction.
/// Throws SpectrumMismatch when any eigenvalue differs by more than tol.
SpectrumReport spectrum_check(int d, int N, double tol = 1e-10,
                              std::size_t cap = kOracleDimensionCap);

}  // namespace pbt
