#include "zetalab/arith_sieve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace zetalab {

namespace {

// mangoldt + mobius + liouville + prime bit + three prefix columns
constexpr double kBytesPerEntry = 8 + 1 + 1 + 0.125 + 8 + 8 + 8;

std::int64_t checked_floor(const ArithTable& t, double x, const char* where) {
  if (!(x >= 0.0)) throw std::domain_error(std::string(where) + ": x must be >= 0");
  if (x > static_cast<double>(t.limit))
    throw range_error(std::string(where) + ": x exceeds table limit " + std::to_string(t.limit));
  return static_cast<std::int64_t>(std::floor(x));
}

// k^m <= x without overflow; k, m small enough that the product stays exact
bool ipow_le(std::int64_t k, int m, double x) {
  long double p = 1.0L;
  for (int i = 0; i < m; ++i) {
    p *= static_cast<long double>(k);
    if (p > static_cast<long double>(x)) return false;
  }
  return true;
}

double powk(double b, int k) {
  double p = b;
  for (int i = 1; i < k; ++i) p *= b;
  return p;
}

}  // namespace

ArithTable build_table(std::int64_t n_max, std::uint64_t budget_bytes) {
  if (n_max < 1) throw std::domain_error("build_table: n_max must be >= 1");
  if (static_cast<double>(n_max) * kBytesPerEntry > static_cast<double>(budget_bytes))
    throw capacity_error("build_table: n_max=" + std::to_string(n_max) +
                         " exceeds the memory budget of " + std::to_string(budget_bytes) +
                         " bytes");

  ArithTable t;
  t.limit = n_max;
  const std::size_t n = static_cast<std::size_t>(n_max);
  t.mangoldt.assign(n + 1, 0.0);
  t.mobius.assign(n + 1, 0);
  t.liouville.assign(n + 1, 0);
  t.is_prime.assign(n + 1, false);
  t.mobius[1] = 1;
  t.liouville[1] = 1;

  // linear sieve: each composite is struck exactly once, via its smallest
  // prime factor, which gives mobius and liouville directly
  std::vector<std::int32_t> lp(n + 1, 0);
  std::vector<std::int32_t> primes;
  if (n >= 2)
    primes.reserve(static_cast<std::size_t>(1.3 * n / std::max(1.0, std::log(double(n))) + 16));
  for (std::size_t i = 2; i <= n; ++i) {
    if (lp[i] == 0) {
      lp[i] = static_cast<std::int32_t>(i);
      primes.push_back(static_cast<std::int32_t>(i));
      t.is_prime[i] = true;
      t.mobius[i] = -1;
      t.liouville[i] = -1;
    }
    for (std::int32_t p : primes) {
      if (p > lp[i]) break;
      const std::uint64_t ip = static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(p);
      if (ip > n) break;
      lp[ip] = p;
      t.liouville[ip] = static_cast<std::int8_t>(-t.liouville[i]);
      t.mobius[ip] = (p == lp[i]) ? std::int8_t{0} : static_cast<std::int8_t>(-t.mobius[i]);
      if (p == lp[i]) break;
    }
  }

  // Lambda(p^m) = log p, stored once per prime power
  for (std::int32_t p : primes) {
    const double lg = std::log(static_cast<double>(p));
    std::uint64_t q = static_cast<std::uint64_t>(p);
    for (;;) {
      t.mangoldt[q] = lg;
      if (q > n / static_cast<std::uint64_t>(p)) break;
      q *= static_cast<std::uint64_t>(p);
    }
  }

  t.psi_prefix.assign(n + 1, 0.0);
  t.theta_prefix.assign(n + 1, 0.0);
  t.pi_prefix.assign(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    t.psi_prefix[i] = t.psi_prefix[i - 1] + t.mangoldt[i];
    t.theta_prefix[i] = t.theta_prefix[i - 1] + (t.is_prime[i] ? t.mangoldt[i] : 0.0);
    t.pi_prefix[i] = t.pi_prefix[i - 1] + (t.is_prime[i] ? 1 : 0);
  }
  return t;
}

double chebyshev_psi(const ArithTable& t, double x) {
  const std::int64_t i = checked_floor(t, x, "chebyshev_psi");
  return i >= 1 ? t.psi_prefix[static_cast<std::size_t>(i)] : 0.0;
}

double chebyshev_theta(const ArithTable& t, double x) {
  const std::int64_t i = checked_floor(t, x, "chebyshev_theta");
  return i >= 1 ? t.theta_prefix[static_cast<std::size_t>(i)] : 0.0;
}

double psi_via_theta(const ArithTable& t, double x) {
  checked_floor(t, x, "psi_via_theta");
  if (x < 2.0) return 0.0;
  double acc = 0.0;
  for (int m = 1;; ++m) {
    if (std::exp2(static_cast<double>(m)) > x) break;  // x^{1/m} < 2: nothing left
    std::int64_t k;
    if (m == 1) {
      k = static_cast<std::int64_t>(std::floor(x));
    } else {
      // integer floor of x^{1/m}; pow alone can land one off at boundaries
      k = static_cast<std::int64_t>(std::floor(std::pow(x, 1.0 / m)));
      while (k > 1 && !ipow_le(k, m, x)) --k;
      while (ipow_le(k + 1, m, x)) ++k;
    }
    acc += t.theta_prefix[static_cast<std::size_t>(k)];
  }
  return acc;
}

std::int64_t prime_pi(const ArithTable& t, double x) {
  const std::int64_t i = checked_floor(t, x, "prime_pi");
  return i >= 1 ? t.pi_prefix[static_cast<std::size_t>(i)] : 0;
}

double psi1(const ArithTable& t, double x) {
  const std::int64_t fx = checked_floor(t, x, "psi1");
  double acc = 0.0;
  for (std::int64_t n = 2; n <= fx; ++n) {
    const double lg = t.mangoldt[static_cast<std::size_t>(n)];
    if (lg != 0.0) acc += (x - static_cast<double>(n)) * lg;
  }
  return acc;
}

double abel_identity_check(const ArithTable& t, double x, int k) {
  if (k < 1 || k > 3) throw std::domain_error("abel_identity_check: k must be in {1,2,3}");
  const std::int64_t fx = checked_floor(t, x, "abel_identity_check");
  if (fx < 1) return 0.0;
  double lhs = 0.0;
  for (std::int64_t n = 2; n <= fx; ++n) {
    const double lg = t.mangoldt[static_cast<std::size_t>(n)];
    if (lg != 0.0) lhs += lg * powk(static_cast<double>(n), k);
  }
  // k int_1^x psi(u) u^{k-1} du, exact over the unit steps of psi
  double integral = 0.0;
  for (std::int64_t m = 1; m < fx; ++m)
    integral += t.psi_prefix[static_cast<std::size_t>(m)] *
                (powk(static_cast<double>(m + 1), k) - powk(static_cast<double>(m), k));
  integral += t.psi_prefix[static_cast<std::size_t>(fx)] *
              (powk(x, k) - powk(static_cast<double>(fx), k));
  const double rhs = t.psi_prefix[static_cast<std::size_t>(fx)] * powk(x, k) - integral;
  return std::abs(lhs - rhs);
}

bool tauberian_inequality_check(const ArithTable& t, double x, double beta) {
  if (!(beta > 1.0)) throw std::domain_error("tauberian_inequality_check: beta must be > 1");
  if (!(x >= 0.0)) throw std::domain_error("tauberian_inequality_check: x must be >= 0");
  if (beta * x > static_cast<double>(t.limit))
    throw range_error("tauberian_inequality_check: beta*x exceeds table limit");
  const double lhs = psi1(t, beta * x) - psi1(t, x);
  const double rhs = x * (beta - 1.0) * chebyshev_psi(t, x);
  const double slack = 1e-12 * std::max({std::abs(lhs), std::abs(rhs), 1.0});
  return lhs >= rhs - slack;
}

ChebyshevValues chebyshev_values(const ArithTable& t, double x) {
  ChebyshevValues v;
  v.x = x;
  v.psi = chebyshev_psi(t, x);
  v.theta = chebyshev_theta(t, x);
  v.psi1 = psi1(t, x);
  v.pi = prime_pi(t, x);
  return v;
}

}  // namespace zetalab
