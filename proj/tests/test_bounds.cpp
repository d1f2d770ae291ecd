#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "test_util.hpp"
#include "zetalab/bounds.hpp"

using namespace zetalab;

namespace {
constexpr double kE = std::numbers::e;
}

TEST_CASE("trig identity 3 + 4 cos + cos 2theta = 2 (1 + cos)^2") {
  // endpoint values first
  CHECK(3.0 + 4.0 * std::cos(0.0) + std::cos(0.0) == doctest::Approx(8.0));
  CHECK(std::abs(3.0 + 4.0 * std::cos(std::numbers::pi) + std::cos(2.0 * std::numbers::pi)) <
        1e-12);
  const TrigIdentityReport rep = trig_identity_check(10000);
  CHECK(rep.max_residual <= 1e-12);
  CHECK(rep.min_value >= -1e-12);
  CHECK_THROWS_AS(trig_identity_check(0), std::domain_error);
}

TEST_CASE("3-4-1 product at spot points") {
  {
    const ScanReport rep = scan_341({3.0, 3.0 + 1e-9, 10.0, 10.0 + 1e-9, 2, 2});
    CHECK(rep.extremum >= 1.0);
  }
  {
    // all three factors near 1 for sigma = 8
    const ScanReport rep = scan_341({8.0, 8.0 + 1e-9, kE, 50.0, 2, 40});
    CHECK(std::abs(rep.extremum - 1.0) < 1e-2);
  }
}

TEST_CASE("3-4-1 grid scan stays above 1") {
  const ScanReport rep = scan_341({1.01, 2.0, kE, 50.0, 50, 50});
  CHECK(rep.extremum >= 1.0 - 1e-9);
  CHECK(rep.samples == 2500);
  CHECK(rep.arg_extremum.sigma >= 1.01);
  CHECK(rep.arg_extremum.sigma <= 2.0);
  CHECK_THROWS_AS(scan_341({0.9, 2.0, kE, 50.0, 4, 4}), std::domain_error);
}

TEST_CASE("nonvanishing scan on sigma = 1") {
  const ScanReport rep = nonvanishing_scan(kE, 100.0, 2000);
  CHECK(rep.extremum > 1e-3);
  CHECK(rep.extremum > 0.0);
  CHECK(rep.empirical_constant > 0.0);
  // conjugate symmetry pins |zeta(1 + i e)| = |zeta(1 - i e)|
  const double a = std::abs(zeta_auto({1.0, kE}, 1e-12).value);
  const double b = std::abs(zeta_auto({1.0, -kE}, 1e-12).value);
  CHECK(a == doctest::Approx(b).epsilon(1e-13));
  // empirical constant stays put under refinement
  const ScanReport fine = nonvanishing_scan(kE, 100.0, 4000);
  CHECK(fine.empirical_constant <= 2.0 * rep.empirical_constant);
  CHECK(rep.empirical_constant <= 2.0 * fine.empirical_constant);
  CHECK_THROWS_AS(nonvanishing_scan(1.0, 100.0, 100), std::domain_error);
}

TEST_CASE("growth scan reports finite stable envelopes") {
  const GridSpec grid{0.5, 2.0, kE, 1000.0, 8, 24};
  const auto [rz, rzp] = growth_scan(1.0, 1000.0, grid);
  CHECK(std::isfinite(rz.extremum));
  CHECK(std::isfinite(rzp.extremum));
  CHECK(rz.extremum > 0.0);
  CHECK(rzp.extremum > 0.0);
  const auto [rz2, rzp2] = growth_scan(1.0, 1000.0, {0.5, 2.0, kE, 1000.0, 16, 48});
  CHECK(rz2.extremum <= 1.5 * rz.extremum);
  CHECK(rz.extremum <= 1.5 * rz2.extremum);
  CHECK(rzp2.extremum <= 1.5 * rzp.extremum);
  CHECK(rzp.extremum <= 1.5 * rzp2.extremum);
  // the sigma = 2 row obeys |zeta| <= zeta(2), so the ratio caps at zeta(2)
  const auto [row2, row2p] = growth_scan(1.0, 200.0, {2.0, 2.0 + 1e-9, kE, 200.0, 2, 40});
  CHECK(row2.extremum <= 1.6449340668482264 + 1e-9);
  CHECK(row2p.extremum > 0.0);
  CHECK_THROWS_AS(growth_scan(-1.0, 1000.0, grid), std::domain_error);
  CHECK_THROWS_AS(growth_scan(1.0, 1000.0, GridSpec{0.1, 0.2, kE, 1000.0, 4, 4}),
                  std::domain_error);
}

TEST_CASE("inverse-zeta scan rows") {
  const auto [rinv, rratio] = inverse_zeta_scan(1000.0, 400);
  CHECK(std::isfinite(rinv.extremum));
  CHECK(std::isfinite(rratio.extremum));
  const auto [rinv2, rratio2] = inverse_zeta_scan(1000.0, 800);
  CHECK(rinv2.extremum <= 1.5 * rinv.extremum);
  CHECK(rinv.extremum <= 1.5 * rinv2.extremum);
  CHECK(rratio2.extremum <= 1.5 * rratio.extremum);
  CHECK(rratio.extremum <= 1.5 * rratio2.extremum);
  // proof-side inequality on the sigma = 2 row: |1/zeta(2+it)| <= zeta(2)
  for (double t : {kE, 10.0, 100.0, 900.0}) {
    const double inv_abs = 1.0 / std::abs(zeta_auto({2.0, t}, 1e-12).value);
    CHECK(inv_abs <= 1.6449340668482264 + 1e-9);
  }
}

TEST_CASE("PNT ratio table over four decades") {
  const ArithTable table = build_table(1000000);
  const PntTable tab = pnt_ratio_table(table, {1e3, 1e4, 1e5, 1e6});
  REQUIRE(tab.rows.size() == 4);
  const PntRow& last = tab.rows.back();
  CHECK(std::abs(last.psi_over_x - 1.0) < 0.03);
  CHECK(std::abs(last.psi1_ratio - 1.0) < 0.02);
  CHECK(last.theta_ratio >= 0.9);
  CHECK(last.theta_ratio <= 1.0);
  CHECK(tab.monotone_trend);  // one non-monotone step per column is allowed
}
