#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "test_util.hpp"
#include "zetalab/contour.hpp"
#include "zetalab/zeta.hpp"

using namespace zetalab;
using cplx = std::complex<double>;

namespace {
constexpr double kE = std::numbers::e;
}

TEST_CASE("kernel integral against the closed form") {
  {
    const QuadReport r = kernel_integral(1.0, 1, {2.0, 2000.0, 0.25, false});
    CHECK(std::abs(r.estimate) <=
          r.truncation_tail_bound + r.discretization_estimate + 1e-9);
  }
  {
    const QuadReport r = kernel_integral(0.5, 2, {2.0, 2000.0, 0.25, false});
    CHECK(std::abs(r.estimate - 0.125) < 1e-4);
    CHECK(r.evaluations >= 1);
  }
  {
    const QuadReport r = kernel_integral(2.0, 2, {2.0, 2000.0, 0.25, false});
    CHECK(std::abs(r.estimate) <=
          r.truncation_tail_bound + r.discretization_estimate + 1e-9);
  }
  CHECK_THROWS_AS(kernel_integral(-1.0, 1, {2.0, 100.0, 0.25, false}), std::domain_error);
  CHECK_THROWS_AS(kernel_integral(0.5, 3, {2.0, 100.0, 0.25, false}), std::domain_error);
  CHECK_THROWS_AS(kernel_integral(0.5, 1, {-1.0, 100.0, 0.25, false}), std::domain_error);
}

TEST_CASE("kernel error decays as T grows") {
  for (double u : {0.25, 0.5, 0.75, 2.0}) {
    for (int k : {1, 2}) {
      double prev = 1e18;
      for (double T : {100.0, 1000.0, 10000.0}) {
        const QuadReport r = kernel_integral(u, k, {2.0, T, 0.25, false});
        const double err = std::abs(r.estimate - kernel_closed_form(u, k));
        CAPTURE(u);
        CAPTURE(k);
        CAPTURE(T);
        CHECK(err < prev + 1e-15);
        prev = err;
      }
    }
  }
}

TEST_CASE("h at the removable singularity") {
  // oracle: Richardson extrapolation of the bracket at 1 +- 2^{-k} 1e-2,
  // built directly on zeta_em / zeta_prime_em, independent of h_function's
  // own near-pole path
  std::vector<double> deltas;
  std::vector<cplx> brackets;
  for (int k = 0; k < 5; ++k) {
    const double d = 1e-2 * std::pow(2.0, -k);
    auto bracket_at = [](double sigma) {
      const cplx z = zeta_auto({sigma, 0.0}, 1e-13).value;
      const cplx zp = zeta_prime_auto({sigma, 0.0}, 1e-13).value;
      return -zp / z - 1.0 / cplx(sigma - 1.0, 0.0);
    };
    deltas.push_back(d * d);  // even function of delta
    brackets.push_back(0.5 * (bracket_at(1.0 + d) + bracket_at(1.0 - d)));
  }
  const cplx bracket0 = testutil::neville0(deltas, brackets);
  const cplx h1 = h_function({1.0, 0.0});
  CHECK(std::abs(h1 - bracket0 / 2.0) < 1e-9);
  // the extrapolated bracket is -euler_gamma, so h(1) = -gamma/2
  CHECK(std::abs(h1.real() + 0.2886078) < 1e-6);
  CHECK(std::abs(h1.imag()) < 1e-10);
}

TEST_CASE("h is conjugate-symmetric on sigma = 1") {
  for (double t : {0.5, 2.0, 14.1, 77.7}) {
    const cplx a = h_function({1.0, t});
    const cplx b = h_function({1.0, -t});
    CHECK(std::abs(b - std::conj(a)) <= 1e-10 * std::max(1.0, std::abs(a)));
  }
}

TEST_CASE("h envelope at t = 100, reported") {
  const double ah = std::abs(h_function({1.0, 100.0}));
  const double envelope = 10.0 * std::pow(std::log(100.0), 9.0) / 1e4;
  MESSAGE("h(1+100i) magnitude ", ah, " vs log-power envelope scale ", envelope);
  CHECK(std::isfinite(ah));
  CHECK(ah < envelope);  // far below the worst-case scale
}

TEST_CASE("reconstruction of psi1/x^2 at small sizes") {
  const ArithTable table = build_table(2000);
  {
    const ReconstructReport r = reconstruct_psi1(1.0, {1.0, 300.0, 0.25, false}, table);
    CHECK(r.lhs_sieve == 0.0);
    CHECK(std::abs(r.quad.estimate) <=
          r.quad.truncation_tail_bound + r.quad.discretization_estimate + 1e-8);
  }
  {
    const ReconstructReport r1 = reconstruct_psi1(10.0, {1.0, 1000.0, 0.2, false}, table);
    const ReconstructReport r2 = reconstruct_psi1(10.0, {1.0, 2000.0, 0.2, false}, table);
    CHECK(r1.abs_deviation <=
          std::max(0.05 * std::abs(r1.lhs_sieve), r1.quad.truncation_tail_bound));
    CHECK(r2.abs_deviation < r1.abs_deviation + 1e-12);
    CHECK(std::abs(r1.estimate_imag) <= 1e-8 * std::max(1.0, std::abs(r1.quad.estimate)));
  }
  CHECK_THROWS_AS(reconstruct_psi1(0.5, {1.0, 300.0, 0.25, false}, table), std::domain_error);
  CHECK_THROWS_AS(reconstruct_psi1(10.0, {0.5, 300.0, 0.25, false}, table), std::domain_error);
  CHECK_THROWS_AS(reconstruct_psi1(1e7, {1.0, 300.0, 0.25, false}, table), range_error);
}

TEST_CASE("direct Mellin route and abscissa independence") {
  const ArithTable table = build_table(2000);
  const double lhs = psi1(table, 10.0) / 100.0;
  {
    const ReconstructReport r = mellin_psi1_direct(10.0, 2.0, {2.0, 2000.0, 0.25, false}, table);
    CHECK(r.lhs_sieve == doctest::Approx(lhs).epsilon(1e-14));
    CHECK(r.abs_deviation <= std::max(0.02 * lhs, r.quad.truncation_tail_bound));
  }
  {
    const ReconstructReport r = mellin_psi1_direct(1.0, 2.0, {2.0, 2000.0, 0.25, false}, table);
    CHECK(r.lhs_sieve == 0.0);
    CHECK(std::abs(r.quad.estimate) <=
          r.quad.truncation_tail_bound + r.quad.discretization_estimate + 1e-8);
  }
  {
    const ReconstructReport a = mellin_psi1_direct(10.0, 1.5, {1.5, 2000.0, 0.25, false}, table);
    const ReconstructReport b = mellin_psi1_direct(10.0, 2.0, {2.0, 2000.0, 0.25, false}, table);
    CHECK(a.abs_deviation <= std::max(0.02 * lhs, a.quad.truncation_tail_bound));
    CHECK(b.abs_deviation <= std::max(0.02 * lhs, b.quad.truncation_tail_bound));
  }
  CHECK_THROWS_AS(mellin_psi1_direct(10.0, 1.0, {1.0, 300.0, 0.25, false}, table),
                  std::domain_error);
}

TEST_CASE("reconstruction deviation shrinks when T doubles") {
  const ArithTable table = build_table(200);
  double prev = 1e18;
  for (double T : {500.0, 1000.0, 2000.0}) {
    const ReconstructReport r = reconstruct_psi1(50.0, {1.0, T, 0.2, false}, table);
    CAPTURE(T);
    CHECK(r.abs_deviation < prev + 1e-12);
    prev = r.abs_deviation;
  }
}

TEST_CASE("horizontal segment bound") {
  const double b1 = horizontal_segment_bound(1000.0, 1.5, 10.0);
  CHECK(b1 > 0.0);
  CHECK(std::isfinite(b1));
  const double b2 = horizontal_segment_bound(2000.0, 1.5, 10.0);
  const double ratio_cap = std::pow(std::log(2000.0) / std::log(1000.0), 9.0) / 4.0;
  CHECK(ratio_cap < 1.0);
  CHECK(b2 <= b1 * ratio_cap * (1.0 + 1e-12));
  CHECK(horizontal_segment_bound(1000.0, 1.0, 10.0) == 0.0);
  CHECK_THROWS_AS(horizontal_segment_bound(1.0, 1.5, 10.0), std::domain_error);
}

TEST_CASE("line_quad_step resolves the oscillation") {
  CHECK(line_quad_step({1.0, 100.0, 0.25, false}, 1.0) == 0.25);
  const double step50 = line_quad_step({1.0, 100.0, 0.25, false}, 50.0);
  CHECK(step50 <= std::numbers::pi / (4.0 * std::log(50.0)) + 1e-15);
  CHECK(line_quad_step({1.0, 100.0, 0.05, false}, 50.0) == 0.05);
}

TEST_CASE("adaptive halving tightens the discretization estimate") {
  const ArithTable table = build_table(200);
  const ReconstructReport fixed = reconstruct_psi1(10.0, {1.0, kE * 40.0, 0.25, false}, table);
  const ReconstructReport adapt = reconstruct_psi1(10.0, {1.0, kE * 40.0, 0.25, true}, table);
  CHECK(adapt.quad.evaluations >= fixed.quad.evaluations);
  CHECK(adapt.quad.discretization_estimate <= fixed.quad.discretization_estimate + 1e-12);
}
