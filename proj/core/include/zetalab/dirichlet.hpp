#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "zetalab/arith_sieve.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

// Finite Dirichlet-series coefficient vector f(1..n_max).  Coefficients are
// complex so the same algebra serves character twists; index 0 is unused.
struct CoeffTable {
  std::int64_t n_max = 0;
  std::vector<std::complex<double>> coeffs;  // size n_max + 1

  static CoeffTable zeros(std::int64_t n_max);
  static CoeffTable identity(std::int64_t n_max);  // (1, 0, 0, ...)
  static CoeffTable ones(std::int64_t n_max);

  std::complex<double>& operator[](std::int64_t n) {
    return coeffs[static_cast<std::size_t>(n)];
  }
  const std::complex<double>& operator[](std::int64_t n) const {
    return coeffs[static_cast<std::size_t>(n)];
  }
};

// (f*g)(n) = sum_{d|n} f(d) g(n/d) by harmonic enumeration, O(n log n).
CoeffTable convolve(const CoeffTable& f, const CoeffTable& g);

// f^{-1} with (f * f^{-1}) = identity-at-1; requires f(1) != 0.
CoeffTable dirichlet_inverse(const CoeffTable& f);

// (f' * f^{-1})(n) with f'(n) = f(n) log n; for f = 1 this is Lambda(n).
CoeffTable log_derivative_coeffs(const CoeffTable& f);

// Truncated G(s) = sum_{n=2}^{n_max} Lambda(n)/log(n) n^{-s} for sigma > 1,
// so that zeta(s) = e^{G(s)} up to the truncation tail.
std::complex<double> g_series(ComplexPoint s, std::int64_t n_max, const ArithTable& table);

// Tail model: Lambda(n)/log n <= 1, so |tail| <= n_max^{1-sigma}/(sigma-1).
double g_series_tail_bound(double sigma, std::int64_t n_max);

}  // namespace zetalab
