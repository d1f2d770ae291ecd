#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "internal_util.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

using detail::kPi;
using detail::pow_neg;

namespace {

// B_{2j}/(2j)!, j = 0..14, for the Euler-Maclaurin correction series
constexpr double kBernRatio[15] = {
    1.0,
    8.3333333333333333e-02,
    -1.3888888888888889e-03,
    3.3068783068783069e-05,
    -8.2671957671957672e-07,
    2.0876756987868099e-08,
    -5.2841901386874932e-10,
    1.3382536530684679e-11,
    -3.3896802963225829e-13,
    8.5860620562778446e-15,
    -2.1748686985580619e-16,
    5.5090028283602295e-18,
    -1.3954464685812523e-19,
    3.5347070396294675e-21,
    -8.9535174270375469e-23,
};
constexpr int kMaxCorrection = 13;  // usable m with a remainder term left to bound

constexpr std::size_t kLogCacheSize = 1 << 16;
const std::vector<double>& log_cache() {
  static const std::vector<double> cache = [] {
    std::vector<double> v(kLogCacheSize, 0.0);
    for (std::size_t i = 1; i < kLogCacheSize; ++i) v[i] = std::log(static_cast<double>(i));
    return v;
  }();
  return cache;
}

inline double log_base(double b, bool integer_base) {
  if (integer_base) {
    const std::size_t i = static_cast<std::size_t>(b);
    if (i < kLogCacheSize) return log_cache()[i];
  }
  return std::log(b);
}

struct EmOut {
  std::complex<double> val{};
  std::complex<double> dval{};
  double err = 0.0;
  double derr = 0.0;
};

// Core of the sigma > 0 continuation of zeta(s, a):
//   sum_{n=0}^{n0} (n+a)^{-s} + (n0+a)^{1-s}/(s-1) - s I(n0),
//   I(n0) = int_{n0}^inf (x - floor x) (x+a)^{-s-1} dx.
// m_iv sawtooth intervals of I are summed in closed form; the rest, at base
// beta = n0 + m_iv + a, is the Bernoulli correction series
//   s I(beta) = beta^{-s}/2 - sum_r B_{2r}/(2r)! prod_{j=0}^{2r-2}(s+j) beta^{1-s-2r} - R_m
// with the classical remainder bound
//   |R_m| <= |s+2m+1|/(sigma+2m+1) * |next term|.
EmOut em_core(std::complex<double> s, double a, std::int64_t n0, std::int64_t m_iv,
              bool want_deriv) {
  EmOut out;
  const double sigma = s.real();
  const bool integer_base = (a == 1.0);

  std::complex<double> sum = 0.0, dsum = 0.0;
  for (std::int64_t n = 0; n <= n0; ++n) {
    const double b = static_cast<double>(n) + a;
    const double lb = log_base(b, integer_base);
    const std::complex<double> pw = std::polar(std::exp(-sigma * lb), -s.imag() * lb);
    sum += pw;
    if (want_deriv) dsum -= lb * pw;
  }

  const std::complex<double> sm1 = s - 1.0;
  {
    const double b = static_cast<double>(n0) + a;
    const double lb = log_base(b, integer_base);
    const std::complex<double> p1s = b * pow_neg(b, s);  // b^{1-s}
    sum += p1s / sm1;
    if (want_deriv) dsum -= p1s * (lb * sm1 + 1.0) / (sm1 * sm1);
  }

  if (m_iv > 0) {
    const std::complex<double> om_s = 1.0 - s;
    std::complex<double> iv = 0.0, div = 0.0;
    double lo = static_cast<double>(n0) + a;
    double llo = log_base(lo, integer_base);
    std::complex<double> plo = pow_neg(lo, s);
    for (std::int64_t k = 0; k < m_iv; ++k) {
      const double hi = lo + 1.0;
      const double lhi = log_base(hi, integer_base);
      const std::complex<double> phi = pow_neg(hi, s);
      const std::complex<double> hi1s = hi * phi;
      const std::complex<double> lo1s = lo * plo;
      iv += (hi1s - lo1s) / om_s + lo * (phi - plo) / s;
      if (want_deriv) {
        div += (hi1s * (1.0 - lhi * om_s) - lo1s * (1.0 - llo * om_s)) / (om_s * om_s);
        div += lo * (plo * (s * llo + 1.0) - phi * (s * lhi + 1.0)) / (s * s);
      }
      lo = hi;
      llo = lhi;
      plo = phi;
    }
    sum -= s * iv;
    if (want_deriv) dsum -= iv + s * div;
  }

  const double beta = static_cast<double>(n0 + m_iv) + a;
  const double lbeta = log_base(beta, integer_base);
  const std::complex<double> pb = pow_neg(beta, s);
  sum -= 0.5 * pb;
  if (want_deriv) dsum += 0.5 * lbeta * pb;

  std::complex<double> terms[15];
  std::complex<double> hsums[15];
  double tmag[15];
  {
    std::complex<double> q = beta * pb;  // beta^{1-s}
    const double invb2 = 1.0 / (beta * beta);
    std::complex<double> prod = s;        // prod_{j=0}^{2r-2}(s+j), r = 1
    std::complex<double> hsum = 1.0 / s;  // sum_{j=0}^{2r-2} 1/(s+j), r = 1
    for (int r = 1; r <= 14; ++r) {
      q *= invb2;
      terms[r] = kBernRatio[r] * prod * q;
      hsums[r] = hsum;
      tmag[r] = std::abs(terms[r]);
      const std::complex<double> f1 = s + (2.0 * r - 1.0);
      const std::complex<double> f2 = s + (2.0 * r);
      prod *= f1 * f2;
      hsum += 1.0 / f1 + 1.0 / f2;
    }
  }
  int best_m = 0;
  double best = std::numeric_limits<double>::infinity();
  for (int m = 0; m <= kMaxCorrection; ++m) {
    const double bnd =
        std::abs(s + (2.0 * m + 1.0)) / (sigma + 2.0 * m + 1.0) * tmag[m + 1];
    if (std::isfinite(bnd) && bnd < best) {
      best = bnd;
      best_m = m;
    }
  }
  for (int r = 1; r <= best_m; ++r) {
    sum += terms[r];
    if (want_deriv) dsum += terms[r] * (hsums[r] - lbeta);
  }

  const double spec_model = std::abs(s) * std::pow(beta, -sigma) / sigma;
  double err = std::min(best, spec_model);
  out.val = sum;
  out.err = err + 1e-15 * std::max(1.0, std::abs(sum));
  if (want_deriv) {
    out.dval = dsum;
    out.derr = err * (lbeta + 2.0 * best_m + 3.0) + 1e-15 * std::max(1.0, std::abs(dsum));
  }
  return out;
}

void validate_s(ComplexPoint s, const char* where) {
  if (!(s.sigma > 0.0)) throw std::domain_error(std::string(where) + ": requires sigma > 0");
  if (s.sigma == 1.0 && s.t == 0.0)
    throw std::domain_error(std::string(where) + ": pole at s = 1");
}

void validate_cutoffs(std::int64_t n_cutoff, std::int64_t extra_terms, const char* where) {
  if (n_cutoff < 1) throw std::domain_error(std::string(where) + ": n_cutoff must be >= 1");
  if (extra_terms < 0) throw std::domain_error(std::string(where) + ": extra_terms must be >= 0");
}

}  // namespace

EvalResult zeta_em(ComplexPoint s, std::int64_t n_cutoff, std::int64_t extra_terms) {
  validate_s(s, "zeta_em");
  validate_cutoffs(n_cutoff, extra_terms, "zeta_em");
  const EmOut o = em_core(s.cplx(), 1.0, n_cutoff - 1, extra_terms, false);
  return {o.val, o.err, n_cutoff, extra_terms};
}

EvalResult zeta_prime_em(ComplexPoint s, std::int64_t n_cutoff, std::int64_t extra_terms) {
  validate_s(s, "zeta_prime_em");
  validate_cutoffs(n_cutoff, extra_terms, "zeta_prime_em");
  const EmOut o = em_core(s.cplx(), 1.0, n_cutoff - 1, extra_terms, true);
  return {o.dval, o.derr, n_cutoff, extra_terms};
}

ZetaPair zeta_pair_em(ComplexPoint s, std::int64_t n_cutoff, std::int64_t extra_terms) {
  validate_s(s, "zeta_pair_em");
  validate_cutoffs(n_cutoff, extra_terms, "zeta_pair_em");
  const EmOut o = em_core(s.cplx(), 1.0, n_cutoff - 1, extra_terms, true);
  return {{o.val, o.err, n_cutoff, extra_terms}, {o.dval, o.derr, n_cutoff, extra_terms}};
}

std::int64_t default_cutoff(double t) {
  return static_cast<std::int64_t>(std::max(30.0, std::ceil(2.0 * std::abs(t))));
}

namespace {

// Grow extra_terms geometrically until the reported bound meets tol.
template <class Eval, class Err>
auto auto_tune(ComplexPoint s, double tol, Eval&& eval, Err&& err_of) {
  const std::int64_t n = default_cutoff(s.t);
  std::int64_t extra = 0;
  auto r = eval(s, n, extra);
  for (int round = 0; round < 10 && err_of(r) > tol; ++round) {
    extra = extra > 0 ? 2 * extra : n;
    r = eval(s, n, extra);
  }
  return r;
}

}  // namespace

EvalResult zeta_auto(ComplexPoint s, double tol) {
  return auto_tune(
      s, tol, [](ComplexPoint p, std::int64_t n, std::int64_t m) { return zeta_em(p, n, m); },
      [](const EvalResult& r) { return r.err_bound; });
}

EvalResult zeta_prime_auto(ComplexPoint s, double tol) {
  return auto_tune(
      s, tol,
      [](ComplexPoint p, std::int64_t n, std::int64_t m) { return zeta_prime_em(p, n, m); },
      [](const EvalResult& r) { return r.err_bound; });
}

ZetaPair zeta_pair_auto(ComplexPoint s, double tol) {
  return auto_tune(
      s, tol, [](ComplexPoint p, std::int64_t n, std::int64_t m) { return zeta_pair_em(p, n, m); },
      [](const ZetaPair& r) { return std::max(r.zeta.err_bound, r.zeta_prime.err_bound); });
}

EvalResult hurwitz_zeta(ComplexPoint s, double a, std::int64_t n_cutoff,
                        std::int64_t extra_terms) {
  validate_s(s, "hurwitz_zeta");
  validate_cutoffs(n_cutoff, extra_terms, "hurwitz_zeta");
  if (!(a > 0.0 && a <= 1.0))
    throw std::domain_error("hurwitz_zeta: requires 0 < a <= 1");
  const EmOut o = em_core(s.cplx(), a, n_cutoff, extra_terms, false);
  return {o.val, o.err, n_cutoff, extra_terms};
}

EvalResult hurwitz_zeta_auto(ComplexPoint s, double a, double tol) {
  const std::int64_t n = default_cutoff(s.t);
  std::int64_t extra = 0;
  EvalResult r = hurwitz_zeta(s, a, n, extra);
  for (int round = 0; round < 10 && r.err_bound > tol; ++round) {
    extra = extra > 0 ? 2 * extra : n;
    r = hurwitz_zeta(s, a, n, extra);
  }
  return r;
}

EvalResult periodic_zeta(double x, ComplexPoint s, std::int64_t n_terms) {
  if (!(s.sigma > 1.0)) throw std::domain_error("periodic_zeta: requires sigma > 1");
  if (n_terms < 1) throw std::domain_error("periodic_zeta: n_terms must be >= 1");
  const double xr = x - std::floor(x);
  const std::complex<double> sc = s.cplx();
  std::complex<double> sum = 0.0;
  for (std::int64_t n = 1; n <= n_terms; ++n) {
    const double ph = 2.0 * kPi * std::fmod(static_cast<double>(n) * xr, 1.0);
    sum += std::polar(1.0, ph) * pow_neg(static_cast<double>(n), sc);
  }
  const double tail =
      std::pow(static_cast<double>(n_terms), 1.0 - s.sigma) / (s.sigma - 1.0);
  return {sum, tail, n_terms, 0};
}

double functional_equation_residual(ComplexPoint s) {
  if (!(s.sigma > 0.0 && s.sigma < 1.0))
    throw std::domain_error("functional_equation_residual: requires 0 < sigma < 1");
  const std::complex<double> sc = s.cplx();
  const std::complex<double> lhs = zeta_auto(to_point(1.0 - sc), 1e-9).value;
  const std::complex<double> z = zeta_auto(s, 1e-9).value;
  const std::complex<double> chi =
      2.0 * std::exp(-sc * std::log(2.0 * kPi)) * gamma_fn(sc) * std::cos(kPi * sc / 2.0);
  return std::abs(lhs - chi * z);
}

namespace {

// F(x, s) with the tail resummed by repeated Abel summation by parts,
// T_L(M) = sum_{n>=M} z^n D^L(n) = f (z^M D^L(M) + T_{L+1}(M+1)),
// z = e^{2 pi i x}, f = 1/(1-z), D^L the L-th backward difference of n^{-s}.
// Valid for sigma > 0 with x not an integer; internal to the Hurwitz-formula
// diagnostic (the public periodic_zeta keeps its sigma > 1 contract).
std::complex<double> periodic_zeta_accel(double x, std::complex<double> s) {
  const double xr = x - std::floor(x);
  const std::complex<double> z = std::polar(1.0, 2.0 * kPi * xr);
  const std::complex<double> f = 1.0 / (1.0 - z);
  const std::int64_t nd = 512;
  auto zn = [&](std::int64_t n) {
    return std::polar(1.0, 2.0 * kPi * std::fmod(static_cast<double>(n) * xr, 1.0));
  };
  auto b = [&](std::int64_t n) { return pow_neg(static_cast<double>(n), s); };
  auto diff = [&](std::int64_t n, int lev) {
    std::complex<double> acc = 0.0;
    double c = 1.0;  // (-1)^i C(lev, i)
    for (int i = 0; i <= lev; ++i) {
      acc += c * b(n - i);
      c *= -static_cast<double>(lev - i) / static_cast<double>(i + 1);
    }
    return acc;
  };

  std::complex<double> sum = 0.0;
  for (std::int64_t n = 1; n < nd; ++n) sum += zn(n) * b(n);

  std::complex<double> tail = 0.0;
  {
    const std::int64_t m4 = nd + 4;
    for (std::int64_t j = 0; j < 4000; ++j) {
      const std::complex<double> term = zn(m4 + j) * diff(m4 + j, 4);
      tail += term;
      if (j > 8 && std::abs(term) < 1e-18 * (1.0 + std::abs(tail))) break;
    }
  }
  for (int lev = 3; lev >= 0; --lev) {
    const std::int64_t m = nd + lev;
    tail = f * (zn(m) * diff(m, lev) + tail);
  }
  return sum + tail;
}

std::complex<double> neville_to_zero(const double* xs, const std::complex<double>* ys, int n) {
  std::vector<std::complex<double>> p(ys, ys + n);
  for (int j = 1; j < n; ++j)
    for (int i = n - 1; i >= j; --i)
      p[i] = (xs[i - j] * p[i] - xs[i] * p[i - 1]) / (xs[i - j] - xs[i]);
  return p[n - 1];
}

}  // namespace

double hurwitz_formula_residual(double a, ComplexPoint s) {
  if (!(a > 0.0 && a < 1.0))
    throw std::domain_error("hurwitz_formula_residual: requires 0 < a < 1");
  const double t = s.t;
  const double eps0 = std::clamp(std::abs(s.sigma - 1.0), 0.02, 0.4);
  constexpr int kLevels = 5;
  double eps[kLevels];
  std::complex<double> lv[kLevels], rv[kLevels];
  for (int k = 0; k < kLevels; ++k) {
    const double e = eps0 / static_cast<double>(1 << k);
    eps[k] = e;
    // left side zeta(1 - s_k, a) at s_k = (1 - e) + i t, so the Hurwitz
    // argument has real part e > 0
    lv[k] = hurwitz_zeta_auto({e, -t}, a, 1e-10).value;
    // right side at s_k = (1 + e) + i t, where F converges
    const std::complex<double> sp(1.0 + e, t);
    const std::complex<double> f1 = periodic_zeta_accel(a, sp);
    const std::complex<double> f2 = periodic_zeta_accel(1.0 - a, sp);  // F(-a, s) = F(1-a, s)
    const std::complex<double> pref = gamma_fn(sp) * std::exp(-sp * std::log(2.0 * kPi));
    const std::complex<double> rot = std::exp(std::complex<double>(0.0, -kPi / 2.0) * sp);
    rv[k] = pref * (rot * f1 + f2 / rot);
  }
  const std::complex<double> lhs = neville_to_zero(eps, lv, kLevels);
  const std::complex<double> rhs = neville_to_zero(eps, rv, kLevels);
  const double res = std::abs(lhs - rhs);
  if (!std::isfinite(res))
    throw std::runtime_error("hurwitz_formula_residual: extrapolation diverged");
  return res;
}

std::complex<double> euler_product_partial(ComplexPoint s, std::int64_t p_max,
                                           const ArithTable& table) {
  if (!(s.sigma > 1.0)) throw std::domain_error("euler_product_partial: requires sigma > 1");
  if (p_max < 0 || p_max > table.limit)
    throw range_error("euler_product_partial: p_max outside table range");
  const std::complex<double> sc = s.cplx();
  std::complex<double> prod = 1.0;
  for (std::int64_t p = 2; p <= p_max; ++p)
    if (table.is_prime[static_cast<std::size_t>(p)])
      prod /= 1.0 - pow_neg(static_cast<double>(p), sc);
  return prod;
}

}  // namespace zetalab
