#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pbt {

/// A partition of `boxes()` into at most `rows()` parts, stored with trailing
/// zeros so that every diagram indexed by the same (d, n) has length d.
///
/// Storage is 0-based. Functions that follow the usual formula convention
/// (row 1 is the longest row) say so explicitly and take a `FormulaRow`.
class YoungDiagram {
 public:
  YoungDiagram() = default;

  /// Throws std::invalid_argument if `rows` is not non-increasing or has a
  /// negative entry.
  explicit YoungDiagram(std::vector<int> rows);

  static YoungDiagram empty(int d);

  int rows() const { return static_cast<int>(rows_.size()); }
  int boxes() const { return boxes_; }
  /// Number of nonzero rows.
  int height() const;

  int operator[](std::size_t i) const { return rows_[i]; }
  std::span<const int> parts() const { return rows_; }

  bool can_add(std::size_t i) const;
  bool can_remove(std::size_t i) const;
  YoungDiagram add_box(std::size_t i) const;
  YoungDiagram remove_box(std::size_t i) const;

  /// Same diagram with `d` rows; throws if more than `d` rows are nonzero.
  YoungDiagram padded(int d) const;

  std::string to_string() const;

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
  friend auto operator<=>(const YoungDiagram& a, const YoungDiagram& b) {
    return a.rows_ <=> b.rows_;
  }

 private:
  std::vector<int> rows_;
  int boxes_ = 0;
};

/// 1-based row index used where a formula is written against row numbers.
struct FormulaRow {
  int value;
  std::size_t storage() const { return static_cast<std::size_t>(value - 1); }
};

/// Calls `visit(rows)` for every partition of n into at most d parts in
/// descending lexicographic order, without materializing the list. The span
/// is only valid during the call.
void for_each_diagram(int d, int n,
                      const std::function<void(std::span<const int>)>& visit);

/// All partitions of n into at most d parts, descending lexicographic order.
std::vector<YoungDiagram> enumerate_diagrams(int d, int n);

/// Enumerated diagrams of fixed (d, n) with O(d log size) position lookup.
class DiagramIndex {
 public:
  DiagramIndex(int d, int n);

  int d() const { return d_; }
  int n() const { return n_; }
  std::size_t size() const { return diagrams_.size(); }
  const YoungDiagram& operator[](std::size_t i) const { return diagrams_[i]; }
  const std::vector<YoungDiagram>& diagrams() const { return diagrams_; }

  std::optional<std::size_t> find(std::span<const int> rows) const;

 private:
  int d_;
  int n_;
  std::vector<YoungDiagram> diagrams_;
};

/// gamma_mu(alpha) = alpha_i - i + d + 1 for mu = alpha + e_i. The diagram
/// length is taken as d. Throws std::invalid_argument when the box cannot be
/// added.
int gamma_ratio(const YoungDiagram& alpha, FormulaRow row);

/// A_i = (alpha_i - n/d) / sqrt(n/d).
struct CenteredDiagram {
  std::vector<double> values;
  int boxes = 0;
};

CenteredDiagram center(const YoungDiagram& alpha);
/// Inverts `center`; rounds to the nearest integer row length.
YoungDiagram reconstruct(const CenteredDiagram& centered);

}  // namespace pbt
