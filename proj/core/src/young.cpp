#include "pbt/young.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace pbt {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] < 0) {
      throw std::invalid_argument("YoungDiagram: negative row length");
    }
    if (i > 0 && rows_[i] > rows_[i - 1]) {
      throw std::invalid_argument("YoungDiagram: rows must be non-increasing");
    }
  }
  boxes_ = std::accumulate(rows_.begin(), rows_.end(), 0);
}

YoungDiagram YoungDiagram::empty(int d) {
  return YoungDiagram(std::vector<int>(static_cast<std::size_t>(d), 0));
}

int YoungDiagram::height() const {
  return static_cast<int>(
      std::count_if(rows_.begin(), rows_.end(), [](int r) { return r > 0; }));
}

bool YoungDiagram::can_add(std::size_t i) const {
  if (i >= rows_.size()) return false;
  return i == 0 || rows_[i] < rows_[i - 1];
}

bool YoungDiagram::can_remove(std::size_t i) const {
  if (i >= rows_.size() || rows_[i] == 0) return false;
  return i + 1 == rows_.size() || rows_[i] > rows_[i + 1];
}

YoungDiagram YoungDiagram::add_box(std::size_t i) const {
  if (!can_add(i)) {
    throw std::invalid_argument("YoungDiagram: cannot add a box at row " +
                                std::to_string(i + 1) + " of " + to_string());
  }
  YoungDiagram out = *this;
  ++out.rows_[i];
  ++out.boxes_;
  return out;
}

YoungDiagram YoungDiagram::remove_box(std::size_t i) const {
  if (!can_remove(i)) {
    throw std::invalid_argument("YoungDiagram: cannot remove a box at row " +
                                std::to_string(i + 1) + " of " + to_string());
  }
  YoungDiagram out = *this;
  --out.rows_[i];
  --out.boxes_;
  return out;
}

YoungDiagram YoungDiagram::padded(int d) const {
  if (height() > d) {
    throw std::invalid_argument("YoungDiagram: " + to_string() +
                                " has more than " + std::to_string(d) +
                                " nonzero rows");
  }
  std::vector<int> rows(static_cast<std::size_t>(d), 0);
  std::copy_n(rows_.begin(), std::min<std::size_t>(rows_.size(), rows.size()),
              rows.begin());
  return YoungDiagram(std::move(rows));
}

std::string YoungDiagram::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(rows_[i]);
  }
  return s + ")";
}

namespace {

void enumerate_rec(std::vector<int>& rows, std::size_t pos, int remaining,
                   int cap,
                   const std::function<void(std::span<const int>)>& visit) {
  const std::size_t d = rows.size();
  if (pos + 1 == d) {
    if (remaining <= cap) {
      rows[pos] = remaining;
      visit(rows);
    }
    return;
  }
  const int slots = static_cast<int>(d - pos);
  // rows[pos] must be large enough that the rest can still hold `remaining`.
  const int lo = (remaining + slots - 1) / slots;
  for (int r = std::min(cap, remaining); r >= lo; --r) {
    rows[pos] = r;
    enumerate_rec(rows, pos + 1, remaining - r, r, visit);
  }
}

}  // namespace

void for_each_diagram(int d, int n,
                      const std::function<void(std::span<const int>)>& visit) {
  if (d < 1 || n < 0) {
    throw std::invalid_argument("for_each_diagram: need d >= 1 and n >= 0");
  }
  std::vector<int> rows(static_cast<std::size_t>(d), 0);
  enumerate_rec(rows, 0, n, n, visit);
}

std::vector<YoungDiagram> enumerate_diagrams(int d, int n) {
  std::vector<YoungDiagram> out;
  for_each_diagram(d, n, [&](std::span<const int> rows) {
    out.emplace_back(std::vector<int>(rows.begin(), rows.end()));
  });
  return out;
}

DiagramIndex::DiagramIndex(int d, int n)
    : d_(d), n_(n), diagrams_(enumerate_diagrams(d, n)) {}

std::optional<std::size_t> DiagramIndex::find(std::span<const int> rows) const {
  if (rows.size() != static_cast<std::size_t>(d_)) return std::nullopt;
  // Diagrams are sorted in descending lexicographic order.
  auto it = std::partition_point(
      diagrams_.begin(), diagrams_.end(), [&](const YoungDiagram& y) {
        auto p = y.parts();
        return std::lexicographical_compare(rows.begin(), rows.end(), p.begin(),
                                            p.end());
      });
  if (it == diagrams_.end()) return std::nullopt;
  auto p = it->parts();
  if (!std::equal(p.begin(), p.end(), rows.begin(), rows.end())) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - diagrams_.begin());
}

int gamma_ratio(const YoungDiagram& alpha, FormulaRow row) {
  if (row.value < 1 || row.value > alpha.rows()) {
    throw std::invalid_argument("gamma_ratio: row index out of range");
  }
  if (!alpha.can_add(row.storage())) {
    throw std::invalid_argument("gamma_ratio: adding a box at row " +
                                std::to_string(row.value) + " of " +
                                alpha.to_string() +
                                " is not a Young diagram");
  }
  return alpha[row.storage()] - row.value + alpha.rows() + 1;
}

CenteredDiagram center(const YoungDiagram& alpha) {
  CenteredDiagram out;
  out.boxes = alpha.boxes();
  out.values.assign(static_cast<std::size_t>(alpha.rows()), 0.0);
  if (alpha.boxes() == 0) return out;
  const double mean = static_cast<double>(alpha.boxes()) / alpha.rows();
  const double scale = std::sqrt(mean);
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    out.values[i] = (alpha[i] - mean) / scale;
  }
  return out;
}

YoungDiagram reconstruct(const CenteredDiagram& centered) {
  const auto d = centered.values.size();
  std::vector<int> rows(d, 0);
  if (centered.boxes > 0) {
    const double mean = static_cast<double>(centered.boxes) / d;
    const double scale = std::sqrt(mean);
    for (std::size_t i = 0; i < d; ++i) {
      rows[i] = static_cast<int>(std::lround(centered.values[i] * scale + mean));
    }
  }
  return YoungDiagram(std::move(rows));
}

}  // namespace pbt
