#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "test_util.hpp"
#include "zetalab/arith_sieve.hpp"

using namespace zetalab;

TEST_CASE("n = 1 table is forced by the definitions") {
  const ArithTable t = build_table(1);
  CHECK(t.limit == 1);
  CHECK(t.mangoldt[1] == 0.0);
  CHECK(t.mobius[1] == 1);
  CHECK(t.liouville[1] == 1);
  CHECK_FALSE(t.is_prime[1]);
}

TEST_CASE("small-n table values") {
  const ArithTable t = build_table(10);
  CHECK(t.mobius[6] == 1);
  CHECK(t.mobius[4] == 0);
  CHECK(t.mobius[7] == -1);
  CHECK(t.mangoldt[8] == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(t.mangoldt[6] == 0.0);
}

TEST_CASE("sieve columns match trial division up to 3000") {
  const ArithTable t = build_table(3000);
  for (std::int64_t n = 1; n <= 3000; ++n) {
    CAPTURE(n);
    CHECK(t.mobius[n] == testutil::mobius_slow(n));
    CHECK(t.liouville[n] == (testutil::big_omega(n) % 2 ? -1 : 1));
    CHECK(t.is_prime[n] == testutil::is_prime_slow(n));
    CHECK(t.mangoldt[n] == doctest::Approx(testutil::mangoldt_slow(n)).epsilon(1e-14));
  }
}

TEST_CASE("sum of mu over divisors is the unit") {
  const ArithTable t = build_table(5000);
  for (std::int64_t n = 1; n <= 5000; ++n) {
    int s = 0;
    for (std::int64_t d : testutil::divisors(n)) s += t.mobius[d];
    CHECK(s == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("sum of Lambda over divisors is log n") {
  const ArithTable t = build_table(2000);
  for (std::int64_t n = 1; n <= 2000; ++n) {
    double s = 0.0;
    for (std::int64_t d : testutil::divisors(n)) s += t.mangoldt[d];
    CHECK(std::abs(s - std::log(static_cast<double>(n))) < 1e-9);
  }
}

TEST_CASE("chebyshev_psi examples") {
  const ArithTable t = build_table(100);
  CHECK(chebyshev_psi(t, 1.0) == 0.0);
  // direct enumeration of prime powers <= 10
  const double expect = 3 * std::log(2.0) + 2 * std::log(3.0) + std::log(5.0) + std::log(7.0);
  CHECK(chebyshev_psi(t, 10.0) == doctest::Approx(expect).epsilon(1e-14));
  CHECK(std::abs(expect - 7.8320) < 1e-4);
}

TEST_CASE("chebyshev_theta examples") {
  const ArithTable t = build_table(100);
  CHECK(chebyshev_theta(t, 1.9) == 0.0);
  CHECK(chebyshev_theta(t, 10.0) ==
        doctest::Approx(std::log(2.0 * 3.0 * 5.0 * 7.0)).epsilon(1e-14));
  CHECK(std::abs(chebyshev_theta(t, 10.0) - 5.3471) < 1e-4);
}

TEST_CASE("psi recovered from theta at prime-power roots") {
  const ArithTable t = build_table(4000);
  CHECK(psi_via_theta(t, 1.0) == 0.0);
  CHECK(psi_via_theta(t, 3.0) ==
        doctest::Approx(std::log(2.0) + std::log(3.0)).epsilon(1e-14));
  CHECK(psi_via_theta(t, 100.0) == doctest::Approx(chebyshev_psi(t, 100.0)).epsilon(1e-12));
  std::mt19937 rng(11u);
  std::uniform_real_distribution<double> ux(1.0, 4000.0);
  for (int i = 0; i < 500; ++i) {
    const double x = ux(rng);
    const double a = psi_via_theta(t, x), b = chebyshev_psi(t, x);
    CAPTURE(x);
    CHECK(std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)));
  }
  // exact k-th power boundaries are the risky inputs for the root finder
  for (std::int64_t k = 2; k <= 62; ++k) {
    const double x = static_cast<double>(k) * k;
    CHECK(psi_via_theta(t, x) == doctest::Approx(chebyshev_psi(t, x)).epsilon(1e-12));
  }
}

TEST_CASE("prime_pi examples") {
  const ArithTable t = build_table(100);
  CHECK(prime_pi(t, 1.0) == 0);
  CHECK(prime_pi(t, 10.0) == 4);
  CHECK(prime_pi(t, 100.0) == 25);
}

TEST_CASE("psi1 examples and the integral identity") {
  const ArithTable t = build_table(10000);
  CHECK(psi1(t, 2.0) == 0.0);
  const double expect4 = 2 * std::log(2.0) + std::log(3.0);  // n in {2,3,4}
  CHECK(psi1(t, 4.0) == doctest::Approx(expect4).epsilon(1e-14));
  CHECK(std::abs(expect4 - 2.4849) < 1e-4);

  std::mt19937 rng(22u);
  std::uniform_real_distribution<double> ux(1.0, 10000.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = ux(rng);
    const double direct = psi1(t, x);
    const double integral = testutil::psi1_piecewise(t, x);
    CAPTURE(x);
    CHECK(std::abs(direct - integral) <= 1e-9 * std::max(1.0, std::abs(integral)));
  }
}

TEST_CASE("abel identity residuals") {
  const ArithTable t = build_table(2000);
  CHECK(abel_identity_check(t, 1.0, 1) == 0.0);
  CHECK(abel_identity_check(t, 1.0, 3) == 0.0);
  CHECK(abel_identity_check(t, 10.0, 1) < 1e-9);
  const double scale = 1000.0 * 1000.0 * 1000.0;  // x^k * psi(x) scale at k = 2
  CHECK(abel_identity_check(t, 1000.0, 2) < 1e-6 * scale);
  CHECK_THROWS_AS(abel_identity_check(t, 10.0, 4), std::domain_error);
}

TEST_CASE("tauberian differencing inequality") {
  const ArithTable t = build_table(20000);
  CHECK(tauberian_inequality_check(t, 10.0, 2.0));
  CHECK(tauberian_inequality_check(t, 1.0, 1.5));
  CHECK(tauberian_inequality_check(t, 10000.0, 1.1));
  std::mt19937 rng(33u);
  std::uniform_real_distribution<double> ub(1.01, 3.0);
  for (int i = 0; i < 200; ++i) {
    const double beta = ub(rng);
    std::uniform_real_distribution<double> ux(1.0, 20000.0 / beta);
    const double x = ux(rng);
    CAPTURE(x);
    CAPTURE(beta);
    CHECK(tauberian_inequality_check(t, x, beta));
  }
}

TEST_CASE("monotonicity of the summatory functions") {
  const ArithTable t = build_table(5000);
  double psi_prev = -1, theta_prev = -1, psi1_prev = -1;
  std::int64_t pi_prev = -1;
  for (double x = 1.0; x <= 5000.0; x += 13.7) {
    const ChebyshevValues v = chebyshev_values(t, x);
    CHECK(v.psi >= psi_prev);
    CHECK(v.theta >= theta_prev);
    CHECK(v.psi1 >= psi1_prev);
    CHECK(v.pi >= pi_prev);
    CHECK(v.theta <= v.psi + 1e-12);
    if (x >= 2.0) CHECK(static_cast<double>(v.pi) * std::log(2.0) <= v.psi + 1.0);
    psi_prev = v.psi;
    theta_prev = v.theta;
    psi1_prev = v.psi1;
    pi_prev = v.pi;
  }
}

TEST_CASE("desk-scale ratios at one million") {
  const ArithTable t = build_table(1000000);
  const double x = 1e6;
  CHECK(std::abs(chebyshev_psi(t, x) / x - 1.0) < 0.03);
  CHECK(chebyshev_theta(t, x) <= chebyshev_psi(t, x));
  CHECK(std::abs(2.0 * psi1(t, x) / (x * x) - 1.0) < 0.02);
  const double ratio =
      chebyshev_theta(t, x) / (static_cast<double>(prime_pi(t, x)) * std::log(x));
  CHECK(std::abs(ratio - 1.0) < 0.1);
}

TEST_CASE("errors: range, domain, capacity") {
  const ArithTable t = build_table(100);
  CHECK_THROWS_AS(chebyshev_psi(t, 101.0), range_error);
  CHECK_THROWS_AS(psi1(t, 1e9), range_error);
  CHECK_THROWS_AS(chebyshev_psi(t, -1.0), std::domain_error);
  CHECK_THROWS_AS(build_table(0), std::domain_error);
  CHECK_THROWS_AS(build_table(1000000, 1024), capacity_error);
  CHECK_THROWS_AS(tauberian_inequality_check(t, 60.0, 2.0), range_error);
  CHECK_THROWS_AS(tauberian_inequality_check(t, 10.0, 0.5), std::domain_error);
}
