#pragma once

#include <gmpxx.h>

#include <span>

#include "pbt/young.hpp"

namespace pbt {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Dimension of the Specht module [mu] via the hook length formula
/// n! / prod h(i,j).
BigInt specht_dim(const YoungDiagram& mu);

/// Dimension of the Weyl module V^d_mu via Stanley's content/hook formula
/// prod (d + c(i,j)) / h(i,j). Throws std::invalid_argument if mu has more than
/// d nonzero rows.
BigInt weyl_dim(int d, const YoungDiagram& mu);

/// Same quantity via the Weyl product over pairs of rows. Accepts any
/// non-increasing integer weight of length d (entries may be negative), which
/// the oracle uses for the non-polynomial weights mu - e_d.
BigInt weyl_dim_product(std::span<const int> weight);
BigInt weyl_dim_product(int d, const YoungDiagram& mu);

/// log d_mu as a sum of log hook lengths, evaluated row by row: the hooks in
/// row i multiply to l_i! / prod_{j>i} (l_i - l_j) with l_i = mu_i + k - i.
double log_specht_dim(std::span<const int> rows);
double log_specht_dim(const YoungDiagram& mu);

/// log m_{d,mu}; `rows` must already have length d.
double log_weyl_dim(std::span<const int> rows);
double log_weyl_dim(int d, const YoungDiagram& mu);

/// Explicit box-by-box sum of log h(i,j); slow, used to validate the row form.
double log_hook_product_boxwise(const YoungDiagram& mu);

struct DimensionRecord {
  BigInt specht;
  BigInt weyl;
  double log_specht = 0.0;
  double log_weyl = 0.0;
};

DimensionRecord dimensions(int d, const YoungDiagram& mu);

/// log of a positive big integer, accurate far beyond the double range.
double log_big(const BigInt& x);

}  // namespace pbt
