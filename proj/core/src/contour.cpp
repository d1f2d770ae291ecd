#include "zetalab/contour.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "internal_util.hpp"
#include "zetalab/parallel.hpp"

namespace zetalab {

using detail::kE;
using detail::kPi;
using detail::pow_neg;

namespace {

struct TrapezoidOut {
  std::complex<double> integral;  // over [-T, T] at the fine step
  double coarse = 0.0;            // real part at the doubled step
  std::int64_t evaluations = 0;
};

// Composite trapezoid of f over [-T, T] for integrands with
// f(-t) = conj(f(t)): nodes t_j = j h, j = 0..n,
//   int = h (f(0) + 2 sum_{j=1}^{n-1} Re f_j + Re f_n).
// The doubled-step sum over the even nodes comes out of the same pass and
// feeds the Richardson discretization estimate.  Chunked deterministically.
template <class F>
TrapezoidOut symmetric_trapezoid(double T, double dt, F&& f) {
  std::int64_t n = std::max<std::int64_t>(2, static_cast<std::int64_t>(std::ceil(T / dt)));
  if (n % 2) ++n;  // keep the half-step subgrid aligned
  const double h = T / static_cast<double>(n);

  struct Part {
    double fine = 0.0;
    double coarse = 0.0;
  };
  auto parts = map_chunks<Part>(n, 512, [&](std::int64_t b, std::int64_t e) {
    Part p;
    for (std::int64_t j = b + 1; j <= e; ++j) {
      const double re = f(static_cast<double>(j) * h).real();
      p.fine += (j == n) ? 0.5 * re : re;
      if (j % 2 == 0) p.coarse += (j == n) ? 0.5 * re : re;
    }
    return p;
  });
  double fine = 0.0, coarse = 0.0;
  for (const Part& p : parts) {
    fine += p.fine;
    coarse += p.coarse;
  }
  const std::complex<double> f0 = f(0.0);
  TrapezoidOut out;
  out.integral = h * (f0 + 2.0 * fine);
  out.coarse = 2.0 * h * (f0.real() + 2.0 * coarse);
  out.evaluations = n + 1;
  return out;
}

// Run the trapezoid with optional step halving until the Richardson estimate
// clears the target (or the halving budget runs out).
template <class F>
TrapezoidOut refine_trapezoid(double T, double dt, bool adaptive, double disc_target, F&& f,
                              double* disc_out) {
  TrapezoidOut out = symmetric_trapezoid(T, dt, f);
  double disc = std::abs(out.integral.real() - out.coarse) / 3.0;
  if (adaptive) {
    for (int halvings = 0; halvings < 6 && disc > disc_target; ++halvings) {
      dt *= 0.5;
      const std::int64_t done = out.evaluations;
      out = symmetric_trapezoid(T, dt, f);
      out.evaluations += done;
      disc = std::abs(out.integral.real() - out.coarse) / 3.0;
    }
  }
  *disc_out = disc;
  return out;
}

std::complex<double> h_bracket(std::complex<double> s) {
  const ZetaPair pr = zeta_pair_auto(to_point(s), 1e-11);
  return -pr.zeta_prime.value / pr.zeta.value - 1.0 / (s - 1.0);
}

double upper_gamma10_over_exp(double L) {
  // Gamma(10, L) e^{L} / 9! = sum_{k=0}^{9} L^k / k!
  double sum = 0.0, term = 1.0;
  for (int k = 0; k <= 9; ++k) {
    sum += term;
    term *= L / static_cast<double>(k + 1);
  }
  return sum;
}

}  // namespace

double line_quad_step(const LineQuadSpec& spec, double x) {
  double dt = std::min(spec.dt, 0.25);
  const double lx = x > 1.0 ? std::log(x) : 0.0;
  if (lx > 0.0) dt = std::min(dt, kPi / (4.0 * lx));
  return dt;
}

double kernel_closed_form(double u, int k) {
  if (u > 1.0) return 0.0;
  const double v = 1.0 - u;
  return k == 1 ? v : 0.5 * v * v;
}

QuadReport kernel_integral(double u, int k, const LineQuadSpec& spec) {
  if (!(u > 0.0)) throw std::domain_error("kernel_integral: requires u > 0");
  if (!(spec.c > 0.0)) throw std::domain_error("kernel_integral: requires c > 0");
  if (k != 1 && k != 2) throw std::domain_error("kernel_integral: k must be 1 or 2");
  if (!(spec.T > 0.0) || !(spec.dt > 0.0))
    throw std::domain_error("kernel_integral: requires T > 0 and dt > 0");

  const double c = spec.c;
  auto f = [&](double t) {
    const std::complex<double> s(c, t);
    std::complex<double> den = s;
    for (int j = 1; j <= k; ++j) den *= s + static_cast<double>(j);
    return pow_neg(u, s) / den;
  };

  double dt = std::min(spec.dt, 0.25);
  const double osc = std::abs(std::log(u));
  if (osc > 0.0) dt = std::min(dt, kPi / (4.0 * osc));

  QuadReport rep;
  rep.truncation_tail_bound =
      std::pow(u, -c) * 2.0 / (static_cast<double>(k) * std::pow(spec.T, static_cast<double>(k)));
  double disc = 0.0;
  const double target = std::max(1e-9, rep.truncation_tail_bound / 8.0);
  const TrapezoidOut out = refine_trapezoid(spec.T, dt, spec.adaptive, 2.0 * kPi * target, f, &disc);
  rep.estimate = out.integral.real() / (2.0 * kPi);
  rep.discretization_estimate = disc / (2.0 * kPi);
  rep.evaluations = out.evaluations;
  return rep;
}

std::complex<double> h_function(ComplexPoint s) {
  if (!(s.sigma >= 1.0 - 1e-9)) throw std::domain_error("h_function: requires sigma >= 1");
  const std::complex<double> sc = s.cplx();
  if (sc == std::complex<double>{0.0, 0.0} || sc == std::complex<double>{-1.0, 0.0})
    throw std::domain_error("h_function: poles of the kernel factor at s = 0, -1");
  std::complex<double> bracket;
  if (std::abs(sc - 1.0) < 1e-3) {
    // the even average kills the odd Taylor terms of the bracket around s;
    // one Richardson step then removes the delta^2 term
    const double d = 1e-3;
    const std::complex<double> e1 = 0.5 * (h_bracket(sc + d) + h_bracket(sc - d));
    const std::complex<double> e2 = 0.5 * (h_bracket(sc + d / 2.0) + h_bracket(sc - d / 2.0));
    bracket = (4.0 * e2 - e1) / 3.0;
  } else {
    bracket = h_bracket(sc);
  }
  return bracket / (sc * (sc + 1.0));
}

double h_envelope_constant(double sigma, double t_lo, double t_hi, int n) {
  t_lo = std::max(t_lo, kE);
  if (!(t_hi > t_lo) || n < 2) throw std::domain_error("h_envelope_constant: bad window");

  using Key = std::tuple<double, double, double, int>;
  static std::mutex mu;
  static std::map<Key, double> cache;
  const Key key{sigma, t_lo, t_hi, n};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  const double step = std::log(t_hi / t_lo) / static_cast<double>(n - 1);
  auto parts = map_chunks<double>(n, 16, [&](std::int64_t b, std::int64_t e) {
    double mx = 0.0;
    for (std::int64_t i = b; i < e; ++i) {
      const double t = t_lo * std::exp(step * static_cast<double>(i));
      const double v =
          std::abs(h_function({sigma, t})) * t * t / std::pow(std::log(t), 9.0);
      mx = std::max(mx, v);
    }
    return mx;
  });
  double mx = 0.0;
  for (double v : parts) mx = std::max(mx, v);

  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, mx);
  return mx;
}

double reconstruct_tail_bound(double x, double c, double T) {
  // (1/2 pi) * 2 * int_T^inf Chat (log t)^9 / t^2 dt
  //   = (Chat / pi) (9!/T) sum_{k=0}^{9} (log T)^k / k!
  const double chat = 2.0 * h_envelope_constant(c, T, 4.0 * T, 48);  // factor 2 window margin
  const double L = std::log(T);
  return std::pow(x, c - 1.0) * (chat / kPi) * (362880.0 / T) * upper_gamma10_over_exp(L);
}

ReconstructReport reconstruct_psi1(double x, const LineQuadSpec& spec, const ArithTable& table) {
  if (!(x >= 1.0)) throw std::domain_error("reconstruct_psi1: requires x >= 1");
  if (!(spec.c >= 1.0 - 1e-12)) throw std::domain_error("reconstruct_psi1: requires c >= 1");
  if (!(spec.T >= kE)) throw std::domain_error("reconstruct_psi1: requires T >= e");
  if (x > static_cast<double>(table.limit))
    throw range_error("reconstruct_psi1: x exceeds table limit");

  const double c = spec.c;
  const double lx = std::log(x);
  auto f = [&](double t) { return h_function({c, t}) * std::polar(1.0, t * lx); };
  const double pref = std::pow(x, c - 1.0) / (2.0 * kPi);

  ReconstructReport rep;
  rep.quad.truncation_tail_bound = reconstruct_tail_bound(x, c, spec.T);
  double disc = 0.0;
  const double target = std::max(1e-9, rep.quad.truncation_tail_bound / 8.0) / pref;
  const TrapezoidOut out =
      refine_trapezoid(spec.T, line_quad_step(spec, x), spec.adaptive, target, f, &disc);
  const std::complex<double> est = pref * out.integral;
  rep.quad.estimate = est.real();
  rep.estimate_imag = est.imag();
  rep.quad.discretization_estimate = pref * disc;
  rep.quad.evaluations = out.evaluations;
  rep.lhs_sieve = psi1(table, x) / (x * x) - 0.5 * (1.0 - 1.0 / x) * (1.0 - 1.0 / x);
  rep.abs_deviation = std::abs(rep.quad.estimate - rep.lhs_sieve);
  return rep;
}

ReconstructReport mellin_psi1_direct(double x, double c, const LineQuadSpec& spec,
                                     const ArithTable& table) {
  if (!(x >= 1.0)) throw std::domain_error("mellin_psi1_direct: requires x >= 1");
  if (!(c > 1.0)) throw std::domain_error("mellin_psi1_direct: requires c > 1");
  if (!(spec.T >= kE)) throw std::domain_error("mellin_psi1_direct: requires T >= e");
  if (x > static_cast<double>(table.limit))
    throw range_error("mellin_psi1_direct: x exceeds table limit");

  const double lx = std::log(x);
  auto f = [&](double t) {
    const std::complex<double> s(c, t);
    const ZetaPair pr = zeta_pair_auto({c, t}, 1e-11);
    return (-pr.zeta_prime.value / pr.zeta.value) / (s * (s + 1.0)) * std::polar(1.0, t * lx);
  };
  const double pref = std::pow(x, c - 1.0) / (2.0 * kPi);

  // |zeta'/zeta(c+it)| <= -zeta'(c)/zeta(c) termwise on the Dirichlet series
  const ZetaPair at_c = zeta_pair_auto({c, 0.0}, 1e-13);
  const double mc = (-at_c.zeta_prime.value / at_c.zeta.value).real();

  ReconstructReport rep;
  rep.quad.truncation_tail_bound = std::pow(x, c - 1.0) * mc / (kPi * spec.T);
  double disc = 0.0;
  const double target = std::max(1e-9, rep.quad.truncation_tail_bound / 8.0) / pref;
  const TrapezoidOut out =
      refine_trapezoid(spec.T, line_quad_step(spec, x), spec.adaptive, target, f, &disc);
  const std::complex<double> est = pref * out.integral;
  rep.quad.estimate = est.real();
  rep.estimate_imag = est.imag();
  rep.quad.discretization_estimate = pref * disc;
  rep.quad.evaluations = out.evaluations;
  rep.lhs_sieve = psi1(table, x) / (x * x);
  rep.abs_deviation = std::abs(rep.quad.estimate - rep.lhs_sieve);
  return rep;
}

double horizontal_segment_bound(double T, double c, double x) {
  if (!(T >= kE)) throw std::domain_error("horizontal_segment_bound: requires T >= e");
  if (!(c >= 1.0)) throw std::domain_error("horizontal_segment_bound: requires c >= 1");
  if (!(x >= 1.0)) throw std::domain_error("horizontal_segment_bound: requires x >= 1");

  // empirical Mhat for |zeta'/zeta(1+it)| / (log t)^9 on a fixed grid
  static std::once_flag once;
  static double mhat = 0.0;
  std::call_once(once, [] {
    const int n = 256;
    const double lo = kE, hi = 1000.0;
    const double step = std::log(hi / lo) / static_cast<double>(n - 1);
    auto parts = map_chunks<double>(n, 16, [&](std::int64_t b, std::int64_t e) {
      double mx = 0.0;
      for (std::int64_t i = b; i < e; ++i) {
        const double t = lo * std::exp(step * static_cast<double>(i));
        const ZetaPair pr = zeta_pair_auto({1.0, t}, 1e-11);
        const double v =
            std::abs(pr.zeta_prime.value / pr.zeta.value) / std::pow(std::log(t), 9.0);
        mx = std::max(mx, v);
      }
      return mx;
    });
    for (double v : parts) mhat = std::max(mhat, v);
  });
  return mhat * std::pow(x, c - 1.0) * std::pow(std::log(T), 9.0) * (c - 1.0) / (T * T);
}

}  // namespace zetalab
