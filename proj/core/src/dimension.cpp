#include "pbt/dimension.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace pbt {

namespace {

// Column lengths of mu (the conjugate partition).
std::vector<int> conjugate(const YoungDiagram& mu) {
  const int width = mu.rows() > 0 ? mu[0] : 0;
  std::vector<int> cols(static_cast<std::size_t>(width), 0);
  for (int i = 0; i < mu.rows(); ++i) {
    for (int j = 0; j < mu[static_cast<std::size_t>(i)]; ++j) {
      ++cols[static_cast<std::size_t>(j)];
    }
  }
  return cols;
}

int hook(const YoungDiagram& mu, const std::vector<int>& cols, int i, int j) {
  return (mu[static_cast<std::size_t>(i)] - j - 1) +
         (cols[static_cast<std::size_t>(j)] - i - 1) + 1;
}

BigInt factorial(int n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigInt exact_quotient(const BigInt& num, const BigInt& den, const char* what) {
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) {
    throw std::logic_error(std::string(what) + ": quotient is not an integer");
  }
  return q;
}

}  // namespace

BigInt specht_dim(const YoungDiagram& mu) {
  const auto cols = conjugate(mu);
  BigInt hooks = 1;
  for (int i = 0; i < mu.rows(); ++i) {
    for (int j = 0; j < mu[static_cast<std::size_t>(i)]; ++j) {
      hooks *= hook(mu, cols, i, j);
    }
  }
  return exact_quotient(factorial(mu.boxes()), hooks, "specht_dim");
}

BigInt weyl_dim(int d, const YoungDiagram& mu) {
  if (mu.height() > d) {
    throw std::invalid_argument("weyl_dim: " + mu.to_string() +
                                " has more than d = " + std::to_string(d) +
                                " rows");
  }
  const auto cols = conjugate(mu);
  BigInt contents = 1;
  BigInt hooks = 1;
  for (int i = 0; i < mu.rows(); ++i) {
    for (int j = 0; j < mu[static_cast<std::size_t>(i)]; ++j) {
      contents *= d + (j - i);
      hooks *= hook(mu, cols, i, j);
    }
  }
  return exact_quotient(contents, hooks, "weyl_dim");
}

BigInt weyl_dim_product(std::span<const int> weight) {
  const auto d = weight.size();
  BigInt num = 1;
  BigInt den = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (i + 1 < d && weight[i] < weight[i + 1]) {
      throw std::invalid_argument("weyl_dim_product: weight not dominant");
    }
    for (std::size_t j = i + 1; j < d; ++j) {
      num *= weight[i] - weight[j] + static_cast<int>(j - i);
      den *= static_cast<int>(j - i);
    }
  }
  return exact_quotient(num, den, "weyl_dim_product");
}

BigInt weyl_dim_product(int d, const YoungDiagram& mu) {
  const auto padded = mu.padded(d);
  return weyl_dim_product(padded.parts());
}

double log_specht_dim(std::span<const int> rows) {
  const int k = static_cast<int>(rows.size());
  int n = 0;
  for (int r : rows) n += r;
  double log_hooks = 0.0;
  for (int i = 0; i < k; ++i) {
    const int li = rows[static_cast<std::size_t>(i)] + k - 1 - i;
    log_hooks += std::lgamma(li + 1.0);
    for (int j = i + 1; j < k; ++j) {
      const int lj = rows[static_cast<std::size_t>(j)] + k - 1 - j;
      log_hooks -= std::log(static_cast<double>(li - lj));
    }
  }
  return std::lgamma(n + 1.0) - log_hooks;
}

double log_specht_dim(const YoungDiagram& mu) { return log_specht_dim(mu.parts()); }

double log_weyl_dim(std::span<const int> rows) {
  const auto d = rows.size();
  double out = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const auto gap = static_cast<double>(j - i);
      out += std::log((rows[i] - rows[j] + gap) / gap);
    }
  }
  return out;
}

double log_weyl_dim(int d, const YoungDiagram& mu) {
  if (mu.rows() == d) return log_weyl_dim(mu.parts());
  return log_weyl_dim(mu.padded(d).parts());
}

double log_hook_product_boxwise(const YoungDiagram& mu) {
  const auto cols = conjugate(mu);
  double out = 0.0;
  for (int i = 0; i < mu.rows(); ++i) {
    for (int j = 0; j < mu[static_cast<std::size_t>(i)]; ++j) {
      out += std::log(static_cast<double>(hook(mu, cols, i, j)));
    }
  }
  return out;
}

double log_big(const BigInt& x) {
  if (x <= 0) throw std::domain_error("log_big: non-positive argument");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, x.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

DimensionRecord dimensions(int d, const YoungDiagram& mu) {
  const auto padded = mu.padded(d);
  DimensionRecord rec;
  rec.specht = specht_dim(padded);
  rec.weyl = weyl_dim(d, padded);
  rec.log_specht = log_specht_dim(padded);
  rec.log_weyl = log_weyl_dim(padded.parts());
  return rec;
}

}  // namespace pbt
