#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pbt/dimension.hpp"
#include "pbt/young.hpp"

namespace pbt {

inline constexpr int kDefaultExactThreshold = 60;

struct SchurWeylEntry {
  YoungDiagram diagram;
  double probability = 0.0;
  /// d_alpha m_{d,alpha} / d^n, present when the table was built exactly.
  std::optional<BigRational> exact;
};

/// The Schur-Weyl distribution p_{d,n}(alpha) = d_alpha m_{d,alpha} / d^n over
/// all diagrams with n boxes and at most d rows. Immutable once built.
class SchurWeylTable {
 public:
  /// Exact rationals are used when n <= exact_threshold, log-domain doubles
  /// otherwise.
  SchurWeylTable(int d, int n, int exact_threshold = kDefaultExactThreshold);

  int d() const { return d_; }
  int n() const { return n_; }
  bool exact() const { return exact_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<SchurWeylEntry>& entries() const { return entries_; }
  const SchurWeylEntry& operator[](std::size_t i) const { return entries_[i]; }

  /// Inclusive prefix sums of the probabilities (last entry is the total).
  const std::vector<double>& cumulative() const { return cumulative_; }

  /// Compensated sum of the double probabilities.
  double total() const { return cumulative_.empty() ? 0.0 : cumulative_.back(); }
  /// Exact sum; only meaningful when exact().
  BigRational exact_total() const;

  /// Position of the entry an inverse-CDF draw u in [0, 1) lands on.
  std::size_t locate(double u) const;

 private:
  int d_;
  int n_;
  bool exact_;
  std::vector<SchurWeylEntry> entries_;
  std::vector<double> cumulative_;
};

/// Inverse-CDF sampling; reproducible for a given seed.
std::vector<YoungDiagram> sample_schur_weyl(const SchurWeylTable& table,
                                            std::uint64_t seed,
                                            std::size_t count);

/// Same draws as sample_schur_weyl, returned as table positions.
std::vector<std::size_t> sample_schur_weyl_indices(const SchurWeylTable& table,
                                                   std::uint64_t seed,
                                                   std::size_t count);

/// log p_{d,n}(alpha) from log-domain dimensions; `rows` has length d.
double log_schur_weyl_probability(std::span<const int> rows);

}  // namespace pbt
