#include "pbt/schur_weyl.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "pbt/random.hpp"
#include "pbt/summation.hpp"

namespace pbt {

double log_schur_weyl_probability(std::span<const int> rows) {
  int n = 0;
  for (int r : rows) n += r;
  const auto d = static_cast<double>(rows.size());
  return log_specht_dim(rows) + log_weyl_dim(rows) - n * std::log(d);
}

SchurWeylTable::SchurWeylTable(int d, int n, int exact_threshold)
    : d_(d), n_(n), exact_(n <= exact_threshold) {
  if (d < 1 || n < 0) {
    throw std::invalid_argument("SchurWeylTable: need d >= 1 and n >= 0");
  }
  BigInt denominator;
  mpz_ui_pow_ui(denominator.get_mpz_t(), static_cast<unsigned long>(d),
                static_cast<unsigned long>(n));

  for (auto& alpha : enumerate_diagrams(d, n)) {
    SchurWeylEntry entry{std::move(alpha), 0.0, std::nullopt};
    if (exact_) {
      BigRational p(specht_dim(entry.diagram) * weyl_dim(d, entry.diagram),
                    denominator);
      p.canonicalize();
      entry.probability = p.get_d();
      entry.exact = std::move(p);
    } else {
      entry.probability =
          std::exp(log_schur_weyl_probability(entry.diagram.parts()));
    }
    entries_.push_back(std::move(entry));
  }

  cumulative_.reserve(entries_.size());
  if (exact_) {
    BigRational running = 0;
    for (const auto& e : entries_) {
      running += *e.exact;
      cumulative_.push_back(running.get_d());
    }
  } else {
    KahanSum running;
    for (const auto& e : entries_) {
      running += e.probability;
      cumulative_.push_back(running.value());
    }
  }
}

BigRational SchurWeylTable::exact_total() const {
  if (!exact_) throw std::logic_error("SchurWeylTable: table is not exact");
  BigRational total = 0;
  for (const auto& e : entries_) total += *e.exact;
  return total;
}

std::size_t SchurWeylTable::locate(double u) const {
  const double target = u * total();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
  if (it == cumulative_.end()) --it;
  return static_cast<std::size_t>(it - cumulative_.begin());
}

std::vector<std::size_t> sample_schur_weyl_indices(const SchurWeylTable& table,
                                                   std::uint64_t seed,
                                                   std::size_t count) {
  KeyedRng rng(seed, 0);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::vector<std::size_t> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(table.locate(uniform(rng)));
  return out;
}

std::vector<YoungDiagram> sample_schur_weyl(const SchurWeylTable& table,
                                            std::uint64_t seed,
                                            std::size_t count) {
  std::vector<YoungDiagram> out;
  out.reserve(count);
  for (auto i : sample_schur_weyl_indices(table, seed, count)) {
    out.push_back(table[i].diagram);
  }
  return out;
}

}  // namespace pbt
