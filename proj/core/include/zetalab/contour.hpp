#pragma once

#include <complex>
#include <cstdint>

#include "zetalab/arith_sieve.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

// Vertical-line quadrature control.  dt is an upper bound on the step; the
// rules additionally resolve the e^{it log x} oscillation by clamping the
// effective step to min(0.25, pi / (4 log x)).
struct LineQuadSpec {
  double c = 1.0;
  double T = 1000.0;
  double dt = 0.25;
  bool adaptive = false;
};

struct QuadReport {
  double estimate = 0.0;
  double truncation_tail_bound = 0.0;
  double discretization_estimate = 0.0;
  std::int64_t evaluations = 0;
};

// QuadReport plus the sieve side of the identity being reconstructed.
struct ReconstructReport {
  QuadReport quad;
  double lhs_sieve = 0.0;
  double abs_deviation = 0.0;
  double estimate_imag = 0.0;  // structural parity leak of the estimate
};

// (1/2 pi) int_{-T}^{T} u^{-(c+it)} / prod_{j=0}^{k}(c+it+j) dt for
// k in {1, 2}; the line integral of the Mellin cutoff kernel, equal to
// (1-u)^k / k! for 0 < u <= 1 and 0 for u > 1.  truncation_tail_bound is
// the integrand-modulus bound u^{-c} 2 / (k T^k).
QuadReport kernel_integral(double u, int k, const LineQuadSpec& spec);
double kernel_closed_form(double u, int k);

// h(s) = (1/(s(s+1))) (-zeta'(s)/zeta(s) - 1/(s-1)).  The singularity at
// s = 1 is removable; within |s-1| < 1e-3 the bracket is evaluated by
// even symmetric differences plus one Richardson step, which avoids the
// catastrophic pole cancellation.
std::complex<double> h_function(ComplexPoint s);

// Truncated line quadrature of
//   psi1(x)/x^2 - (1/2)(1 - 1/x)^2 = (x^{c-1}/2 pi) int h(c+it) e^{it log x} dt
// at abscissa spec.c >= 1, reported against the sieve-computed left side.
ReconstructReport reconstruct_psi1(double x, const LineQuadSpec& spec, const ArithTable& table);

// Direct Mellin route at abscissa c > 1:
//   psi1(x)/x^2 = (1/2 pi i) int x^{s-1}/(s(s+1)) (-zeta'/zeta)(s) ds,
// reported against the sieve.
ReconstructReport mellin_psi1_direct(double x, double c, const LineQuadSpec& spec,
                                     const ArithTable& table);

// Effective quadrature step used for a given spec and x (CLI integrand dumps
// reuse it so the dumped grid matches the quadrature grid).
double line_quad_step(const LineQuadSpec& spec, double x);

// Empirical envelope constant: max |h(sigma+it)| t^2 / (log t)^9 over a
// log-spaced grid t in [t_lo, t_hi].  Cached per argument tuple.
double h_envelope_constant(double sigma, double t_lo, double t_hi, int n);

// Tail of the reconstruct quadrature beyond T, integrated from the
// Chat (log t)^9 / t^2 envelope fitted on [T, 4T].
double reconstruct_tail_bound(double x, double c, double T);

// Mhat x^{c-1} (log T)^9 (c-1) / T^2 with the empirical envelope constant
// for |zeta'/zeta(1+it)| / (log t)^9; the horizontal-segment estimate that
// justifies shifting the abscissa to 1.
double horizontal_segment_bound(double T, double c, double x);

}  // namespace zetalab
