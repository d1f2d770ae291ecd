#pragma once

#include <complex>
#include <cstdint>

#include "zetalab/arith_sieve.hpp"
#include "zetalab/errors.hpp"

namespace zetalab {

struct ComplexPoint {
  double sigma = 0.0;  // Re s
  double t = 0.0;      // Im s
  std::complex<double> cplx() const { return {sigma, t}; }
};

inline ComplexPoint to_point(std::complex<double> s) { return {s.real(), s.imag()}; }

// A value plus the truncation parameters that produced it.  err_bound is an
// absolute bound: rigorous for the zeta/Hurwitz values (classical remainder
// bound of the Bernoulli correction series), heuristic for derivatives, as
// documented on each evaluator.
struct EvalResult {
  std::complex<double> value;
  double err_bound = 0.0;
  std::int64_t n_cutoff = 1;     // terms of the leading finite sum
  std::int64_t extra_terms = 0;  // sawtooth intervals summed in closed form
};

// zeta(s) for sigma > 0, s != 1:
//   sum_{n=1}^{N} n^{-s} + N^{1-s}/(s-1) - s I(N),
//   I(N) = int_N^inf (x - floor x) x^{-s-1} dx.
// I is summed interval-wise in closed form for extra_terms intervals; the
// remaining tail is evaluated by a Bernoulli (Euler-Maclaurin) correction
// series whose dropped remainder is bounded rigorously and folded into
// err_bound.
EvalResult zeta_em(ComplexPoint s, std::int64_t n_cutoff, std::int64_t extra_terms);

// d/ds of the same representation: all five terms, the two sawtooth
// integrals treated interval-wise exactly like zeta_em.  err_bound here is
// heuristic (remainder bound scaled by log of the truncation base).
EvalResult zeta_prime_em(ComplexPoint s, std::int64_t n_cutoff, std::int64_t extra_terms);

struct ZetaPair {
  EvalResult zeta;
  EvalResult zeta_prime;
};
// One shared pass for zeta and zeta'; cheaper than two calls.
ZetaPair zeta_pair_em(ComplexPoint s, std::int64_t n_cutoff, std::int64_t extra_terms);

// Default truncation policy: n_cutoff = max(30, ceil(2|t|)).
std::int64_t default_cutoff(double t);
EvalResult zeta_auto(ComplexPoint s, double tol = 1e-12);
EvalResult zeta_prime_auto(ComplexPoint s, double tol = 1e-12);
ZetaPair zeta_pair_auto(ComplexPoint s, double tol = 1e-12);

// Hurwitz zeta(s, a), 0 < a <= 1, sigma > 0, s != 1: the zeta_em scheme with
// n + a in place of n.  This extension of the sawtooth representation to
// general a is ours, not classical source material for a != 1.
EvalResult hurwitz_zeta(ComplexPoint s, double a, std::int64_t n_cutoff,
                        std::int64_t extra_terms);
EvalResult hurwitz_zeta_auto(ComplexPoint s, double a, double tol = 1e-12);

// Periodic zeta F(x, s) = sum_{n>=1} e^{2 pi i n x} n^{-s}, truncated after
// n_terms; requires sigma > 1.  err_bound = n_terms^{1-sigma}/(sigma-1).
EvalResult periodic_zeta(double x, ComplexPoint s, std::int64_t n_terms);

// Complex gamma via the Lanczos approximation (g = 7, 9 coefficients),
// reflection for Re s < 1/2.  Relative accuracy ~1e-13 on the strip
// -1 <= sigma <= 4, |t| <= 30 used by the residual checks.
std::complex<double> gamma_fn(std::complex<double> s);

// |zeta(1-s) - 2 (2 pi)^{-s} Gamma(s) cos(pi s / 2) zeta(s)| with both zeta
// values from zeta_em at tightened cutoffs; requires 0 < sigma < 1.
double functional_equation_residual(ComplexPoint s);

// Two-sided Richardson extrapolation of Hurwitz's formula onto the line
// sigma = 1: the left side is only computable for sigma < 1 and the right
// side only for sigma > 1, so both are extrapolated to the line and
// compared there.  Reported diagnostic; never asserted.
double hurwitz_formula_residual(double a, ComplexPoint s);

// prod_{p <= p_max} (1 - p^{-s})^{-1} over sieved primes; sigma > 1.
std::complex<double> euler_product_partial(ComplexPoint s, std::int64_t p_max,
                                           const ArithTable& table);

}  // namespace zetalab
