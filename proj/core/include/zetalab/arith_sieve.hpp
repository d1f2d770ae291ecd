#pragma once

#include <cstdint>
#include <vector>

#include "zetalab/errors.hpp"

namespace zetalab {

// Sieve-built tables of the von Mangoldt, Moebius and Liouville functions
// plus primality on 1..limit, with prefix caches for the Chebyshev summatory
// functions.  A built table is immutable and safe for concurrent readers.
struct ArithTable {
  static constexpr std::uint64_t kDefaultBudgetBytes = std::uint64_t{2} << 30;

  std::int64_t limit = 0;
  std::vector<double> mangoldt;        // mangoldt[n] = log p if n = p^m, else 0
  std::vector<std::int8_t> mobius;     // in {-1, 0, +1}
  std::vector<std::int8_t> liouville;  // (-1)^Omega(n), Omega counted with multiplicity
  std::vector<bool> is_prime;

  // built once per table: psi_prefix[n] = sum_{k<=n} mangoldt[k], etc.
  std::vector<double> psi_prefix;
  std::vector<double> theta_prefix;
  std::vector<std::int64_t> pi_prefix;
};

// Point values of the Chebyshev-type summatory functions at one x.
struct ChebyshevValues {
  double x = 0;
  double psi = 0;
  double theta = 0;
  double psi1 = 0;
  std::int64_t pi = 0;
};

// Linear sieve over 1..n_max.  Throws capacity_error when the tables would
// exceed budget_bytes.
ArithTable build_table(std::int64_t n_max,
                       std::uint64_t budget_bytes = ArithTable::kDefaultBudgetBytes);

// psi(x) = sum_{n<=x} Lambda(n); zero for x < 2.
double chebyshev_psi(const ArithTable& t, double x);

// theta(x) = sum_{p<=x} log p over primes only.
double chebyshev_theta(const ArithTable& t, double x);

// psi(x) recovered as sum_{m <= log2 x} theta(x^{1/m}).
double psi_via_theta(const ArithTable& t, double x);

// Number of primes <= x.
std::int64_t prime_pi(const ArithTable& t, double x);

// psi1(x) = sum_{n<=x} (x - n) Lambda(n), the integral of psi over [1, x].
double psi1(const ArithTable& t, double x);

// |sum_{n<=x} Lambda(n) n^k - (psi(x) x^k - k int_1^x psi(u) u^{k-1} du)|
// with the integral evaluated exactly over the unit steps of psi; k in {1,2,3}.
double abel_identity_check(const ArithTable& t, double x, int k);

// psi1(beta x) - psi1(x) >= x (beta - 1) psi(x): the monotone differencing
// step behind the Tauberian argument.  beta > 1, beta x <= limit.
bool tauberian_inequality_check(const ArithTable& t, double x, double beta);

ChebyshevValues chebyshev_values(const ArithTable& t, double x);

}  // namespace zetalab
