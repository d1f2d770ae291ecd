#include "zetalab/certify.hpp"

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "internal_util.hpp"
#include "zetalab/arith_sieve.hpp"
#include "zetalab/bounds.hpp"
#include "zetalab/contour.hpp"
#include "zetalab/dirichlet.hpp"
#include "zetalab/format.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

using detail::kE;
using detail::kPi;

namespace {

struct Ctx {
  bool quick = false;
  ArithTable table;  // limit 1e6 full, 1e5 quick

  explicit Ctx(bool q) : quick(q), table(build_table(q ? 100000 : 1000000)) {}
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

CheckResult make(const std::string& name, bool pass, const std::string& detail) {
  return {name, pass, detail};
}

// 1. zeta(2) = pi^2/6 within 1e-9
CheckResult check_basel(const Ctx&) {
  const EvalResult r = zeta_auto({2.0, 0.0}, 1e-12);
  const double dev = std::abs(r.value - std::complex<double>(kPi * kPi / 6.0, 0.0));
  return make("basel", dev <= 1e-9, "dev=" + fmt_g15(dev) + " err_bound=" + fmt_g15(r.err_bound));
}

// 2. zeta_prime_em vs central finite differences of zeta_em, 50 points
CheckResult check_em_derivative(const Ctx& ctx) {
  std::mt19937 rng(20240612u);
  std::uniform_real_distribution<double> us(0.5, 3.0), ut(-50.0, 50.0);
  const int points = ctx.quick ? 10 : 50;
  const double h = 1e-5;
  double worst = 0.0;
  for (int i = 0; i < points; ++i) {
    double sigma, t;
    do {
      sigma = us(rng);
      t = ut(rng);
    } while (std::abs(std::complex<double>(sigma - 1.0, t)) < 0.2);
    const EvalResult ref = zeta_auto({sigma, t}, 1e-12);
    const std::int64_t n = ref.n_cutoff, m = ref.extra_terms;
    const std::complex<double> fd =
        (zeta_em({sigma + h, t}, n, m).value - zeta_em({sigma - h, t}, n, m).value) / (2.0 * h);
    const std::complex<double> an = zeta_prime_em({sigma, t}, n, m).value;
    worst = std::max(worst, std::abs(fd - an));
  }
  return make("euler-maclaurin-derivative", worst <= 1e-6,
              "points=" + std::to_string(points) + " max_dev=" + fmt_g15(worst));
}

// 3. functional equation residual on sigma = 1/2, |t| <= 20
CheckResult check_functional_equation(const Ctx& ctx) {
  const int points = ctx.quick ? 6 : 20;
  double worst = 0.0;
  for (int i = 0; i < points; ++i) {
    const double t = -20.0 + 40.0 * static_cast<double>(i) / static_cast<double>(points - 1);
    worst = std::max(worst, functional_equation_residual({0.5, t}));
  }
  return make("functional-equation", worst <= 1e-6,
              "points=" + std::to_string(points) + " max_residual=" + fmt_g15(worst));
}

// 4. |zeta(1/2 + 14.134725 i)| <= 1e-3
CheckResult check_first_zero(const Ctx&) {
  const double az = std::abs(zeta_auto({0.5, 14.134725}, 1e-10).value);
  return make("first-zero", az <= 1e-3, "abs_zeta=" + fmt_g15(az));
}

// 5. convolution-derived Lambda vs sieve Lambda, n <= 1e4
CheckResult check_lambda_identity(const Ctx& ctx) {
  const std::int64_t limit = ctx.quick ? 2000 : 10000;
  const CoeffTable lam = log_derivative_coeffs(CoeffTable::ones(limit));
  double worst = 0.0;
  for (std::int64_t n = 1; n <= limit; ++n)
    worst = std::max(worst,
                     std::abs(lam[n] - ctx.table.mangoldt[static_cast<std::size_t>(n)]));
  return make("lambda-identity", worst <= 1e-9,
              "limit=" + std::to_string(limit) + " max_abs_dev=" + fmt_g15(worst));
}

// 6. |e^{G(s)} - zeta(s)| within combined truncation bounds
CheckResult check_zeta_exp_g(const Ctx& ctx) {
  const std::int64_t n_max = ctx.quick ? 100000 : 1000000;
  const std::vector<ComplexPoint> pts =
      ctx.quick ? std::vector<ComplexPoint>{{2.0, 0.0}, {2.0, 5.0}}
                : std::vector<ComplexPoint>{{2.0, 0.0}, {3.0, 0.0}, {2.0, 5.0}};
  bool pass = true;
  std::string detail;
  for (const ComplexPoint& s : pts) {
    const std::complex<double> g = g_series(s, n_max, ctx.table);
    const EvalResult z = zeta_auto(s, 1e-12);
    const double tail = g_series_tail_bound(s.sigma, n_max);
    const double dev = std::abs(std::exp(g) - z.value);
    const double budget = std::abs(std::exp(g)) * std::expm1(tail) + z.err_bound + 1e-12;
    pass = pass && dev <= budget;
    if (!detail.empty()) detail += " ";
    detail += "dev=" + fmt_g15(dev) + "/bud=" + fmt_g15(budget);
  }
  return make("zeta-exp-g", pass, detail);
}

// 7. Mellin kernel vs closed form, plus decrease under T doubling
CheckResult check_mellin_kernel(const Ctx& ctx) {
  const std::vector<double> us = ctx.quick ? std::vector<double>{0.5, 2.0}
                                           : std::vector<double>{0.25, 0.5, 0.75, 2.0, 3.0};
  const double T = ctx.quick ? 2000.0 : 10000.0;
  bool pass = true;
  double worst_ratio = 0.0;  // err / tol, should stay <= 1
  for (double u : us) {
    for (int k = 1; k <= 2; ++k) {
      const QuadReport r1 = kernel_integral(u, k, {2.0, T, 0.25, false});
      const QuadReport r2 = kernel_integral(u, k, {2.0, 2.0 * T, 0.25, false});
      const double closed = kernel_closed_form(u, k);
      const double e1 = std::abs(r1.estimate - closed);
      const double e2 = std::abs(r2.estimate - closed);
      const double tol = std::max(k == 1 ? 1e-2 : 1e-4, r1.truncation_tail_bound);
      pass = pass && e1 <= tol && (e2 < e1 || e2 <= 1e-12);
      worst_ratio = std::max(worst_ratio, e1 / tol);
    }
  }
  return make("mellin-kernel", pass, "worst_err_over_tol=" + fmt_g15(worst_ratio));
}

// 8. Perron reconstruction of psi1/x^2 against the sieve
CheckResult check_perron_reconstruction(const Ctx& ctx) {
  const std::vector<double> xs = ctx.quick ? std::vector<double>{10.0}
                                           : std::vector<double>{10.0, 50.0, 100.0};
  const double T1 = ctx.quick ? 1000.0 : 5000.0;
  const double T2 = 2.0 * T1;
  const double rel = ctx.quick ? 0.05 : 0.02;
  bool pass = true;
  std::string detail;
  for (double x : xs) {
    const double dt = std::min(0.25, kPi / (8.0 * std::log(x)));
    const ReconstructReport r1 = reconstruct_psi1(x, {1.0, T1, dt, false}, ctx.table);
    const ReconstructReport r2 = reconstruct_psi1(x, {1.0, T2, dt, false}, ctx.table);
    const double tol = std::max(rel * std::abs(r1.lhs_sieve), r1.quad.truncation_tail_bound);
    pass = pass && r1.abs_deviation <= tol && r2.abs_deviation < r1.abs_deviation + 1e-12;
    if (!detail.empty()) detail += " ";
    detail += "x=" + fmt_g15(x) + ":dev=" + fmt_g15(r1.abs_deviation) + "/tol=" + fmt_g15(tol);
  }
  // abscissa independence at x = 10
  for (double c : {1.5, 2.0}) {
    const double dt = std::min(0.25, kPi / (8.0 * std::log(10.0)));
    const ReconstructReport r = reconstruct_psi1(10.0, {c, T1, dt, false}, ctx.table);
    const double tol = std::max(rel * std::abs(r.lhs_sieve), r.quad.truncation_tail_bound);
    pass = pass && r.abs_deviation <= tol;
    detail += " c=" + fmt_g15(c) + ":dev=" + fmt_g15(r.abs_deviation) + "/tol=" + fmt_g15(tol);
  }
  return make("perron-reconstruction", pass, detail);
}

// 9. 3-4-1 inequality over the grid
CheckResult check_three_four_one(const Ctx& ctx) {
  const std::int64_t n = ctx.quick ? 50 : 200;
  const ScanReport rep = scan_341({1.01, 2.0, kE, 50.0, n, n});
  return make("three-four-one", rep.extremum >= 1.0 - 1e-9,
              "min=" + fmt_g15(rep.extremum) + " at sigma=" + fmt_g15(rep.arg_extremum.sigma) +
                  " t=" + fmt_g15(rep.arg_extremum.t));
}

// 10. min |zeta(1+it)| > 1e-3 on [e, 100]
CheckResult check_nonvanishing(const Ctx& ctx) {
  const std::int64_t n = ctx.quick ? 1000 : 10000;
  const ScanReport rep = nonvanishing_scan(kE, 100.0, n);
  return make("nonvanishing", rep.extremum > 1e-3,
              "min=" + fmt_g15(rep.extremum) + " at t=" + fmt_g15(rep.arg_extremum.t) +
                  " c7=" + fmt_g15(rep.empirical_constant));
}

// 11. growth and inverse scans: finite, stable within 1.5x under doubling
CheckResult check_scan_stability(const Ctx& ctx) {
  const double t_max = ctx.quick ? 200.0 : 1000.0;
  const GridSpec g1{0.5, 2.0, kE, t_max, ctx.quick ? 8 : 16, ctx.quick ? 32 : 64};
  const GridSpec g2{0.5, 2.0, kE, t_max, 2 * g1.n_sigma, 2 * g1.n_t};
  const auto [a1, b1] = growth_scan(1.0, t_max, g1);
  const auto [a2, b2] = growth_scan(1.0, t_max, g2);
  const std::int64_t n1 = ctx.quick ? 400 : 1500;
  const auto [c1, d1] = inverse_zeta_scan(t_max, n1);
  const auto [c2, d2] = inverse_zeta_scan(t_max, 2 * n1);
  auto stable = [](double v1, double v2) {
    return std::isfinite(v1) && std::isfinite(v2) && v2 <= 1.5 * v1 && v1 <= 1.5 * v2;
  };
  const bool pass = stable(a1.extremum, a2.extremum) && stable(b1.extremum, b2.extremum) &&
                    stable(c1.extremum, c2.extremum) && stable(d1.extremum, d2.extremum);
  return make("scan-stability", pass,
              "Mz=" + fmt_g15(a2.extremum) + " Mzp=" + fmt_g15(b2.extremum) +
                  " Minv=" + fmt_g15(c2.extremum) + " Mratio=" + fmt_g15(d2.extremum));
}

// 12. PNT ratio columns at the table limit
CheckResult check_pnt_ratios(const Ctx& ctx) {
  const double x = static_cast<double>(ctx.table.limit);
  const auto t0 = std::chrono::steady_clock::now();
  const PntTable tab = pnt_ratio_table(ctx.table, {x});
  const double elapsed = seconds_since(t0);
  const PntRow& r = tab.rows.front();
  const bool pass = std::abs(r.psi_over_x - 1.0) < 0.03 && std::abs(r.psi1_ratio - 1.0) < 0.02 &&
                    r.theta_ratio >= 0.9 && r.theta_ratio <= 1.0 && elapsed < 60.0;
  return make("pnt-ratios", pass,
              "psi/x=" + fmt_g15(r.psi_over_x) + " 2psi1/x^2=" + fmt_g15(r.psi1_ratio) +
                  " theta_ratio=" + fmt_g15(r.theta_ratio));
}

// 13. Tauberian differencing inequality at 100 random (x, beta)
CheckResult check_tauberian(const Ctx& ctx) {
  std::mt19937 rng(777u);
  std::uniform_real_distribution<double> ub(1.01, 3.0);
  int failures = 0;
  for (int i = 0; i < 100; ++i) {
    const double beta = ub(rng);
    std::uniform_real_distribution<double> ux(1.0, static_cast<double>(ctx.table.limit) / beta);
    const double x = ux(rng);
    if (!tauberian_inequality_check(ctx.table, x, beta)) ++failures;
  }
  return make("tauberian-differencing", failures == 0, "failures=" + std::to_string(failures));
}

// deterministic sub-suite used by the in-process determinism variant
std::string quick_fingerprint() {
  std::ostringstream os;
  os << fmt_g15(zeta_auto({2.0, 0.0}, 1e-12).value.real()) << "\n";
  os << fmt_g15(std::abs(zeta_auto({0.5, 14.134725}, 1e-10).value)) << "\n";
  const QuadReport k = kernel_integral(0.5, 2, {2.0, 500.0, 0.25, false});
  os << fmt_g15(k.estimate) << " " << fmt_g15(k.discretization_estimate) << "\n";
  const ScanReport s = scan_341({1.05, 2.0, kE, 30.0, 20, 20});
  os << fmt_g15(s.extremum) << " " << fmt_g15(s.arg_extremum.t) << "\n";
  const ArithTable t = build_table(10000);
  os << fmt_g15(psi1(t, 9999.5)) << " " << fmt_g15(chebyshev_theta(t, 10000.0)) << "\n";
  return os.str();
}

// 14. two certify --quick runs produce byte-identical report files
CheckResult check_determinism(const Ctx&, const CertifyOptions& opt) {
  if (opt.cli_path.empty()) {
    const std::string a = quick_fingerprint();
    const std::string b = quick_fingerprint();
    return make("determinism", !a.empty() && a == b, "mode=in-process");
  }
  namespace fs = std::filesystem;
  const std::string pid = std::to_string(static_cast<long>(::getpid()));
  const fs::path p1 = fs::temp_directory_path() / ("zetalab_det_" + pid + "_a.txt");
  const fs::path p2 = fs::temp_directory_path() / ("zetalab_det_" + pid + "_b.txt");
  auto run_once = [&](const fs::path& p) {
    const std::string cmd = "\"" + opt.cli_path + "\" certify --quick --out \"" + p.string() +
                            "\" >/dev/null 2>&1";
    return std::system(cmd.c_str());
  };
  const int rc1 = run_once(p1);
  const int rc2 = run_once(p2);
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  };
  const std::string a = slurp(p1), b = slurp(p2);
  std::error_code ec;
  fs::remove(p1, ec);
  fs::remove(p2, ec);
  const bool ran = rc1 != -1 && rc2 != -1 && !a.empty();
  return make("determinism", ran && a == b,
              "mode=spawn bytes=" + std::to_string(a.size()) +
                  (a == b ? " identical" : " DIFFER"));
}

}  // namespace

std::vector<CheckResult> run_certify(const CertifyOptions& opt) {
  Ctx ctx(opt.quick);
  std::vector<CheckResult> out;
  auto run = [&](const char* name, auto&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = fn();
    } catch (const std::exception& e) {
      r = make(name, false, std::string("exception: ") + e.what());
    }
    std::fprintf(stderr, "[certify] %-28s %s  (%.1fs)\n", r.name.c_str(),
                 r.pass ? "pass" : "FAIL", seconds_since(t0));
    out.push_back(std::move(r));
  };
  run("basel", [&] { return check_basel(ctx); });
  run("euler-maclaurin-derivative", [&] { return check_em_derivative(ctx); });
  run("functional-equation", [&] { return check_functional_equation(ctx); });
  run("first-zero", [&] { return check_first_zero(ctx); });
  run("lambda-identity", [&] { return check_lambda_identity(ctx); });
  run("zeta-exp-g", [&] { return check_zeta_exp_g(ctx); });
  run("mellin-kernel", [&] { return check_mellin_kernel(ctx); });
  run("perron-reconstruction", [&] { return check_perron_reconstruction(ctx); });
  run("three-four-one", [&] { return check_three_four_one(ctx); });
  run("nonvanishing", [&] { return check_nonvanishing(ctx); });
  run("scan-stability", [&] { return check_scan_stability(ctx); });
  run("pnt-ratios", [&] { return check_pnt_ratios(ctx); });
  run("tauberian-differencing", [&] { return check_tauberian(ctx); });
  run("determinism", [&] { return check_determinism(ctx, opt); });
  return out;
}

std::string render_certify_report(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  int passed = 0;
  for (const CheckResult& r : results) {
    os << (r.pass ? "PASS" : "FAIL") << " " << r.name << " " << r.detail << "\n";
    if (r.pass) ++passed;
  }
  os << "SUMMARY passed=" << passed << " failed=" << results.size() - static_cast<std::size_t>(passed)
     << " total=" << results.size() << "\n";
  return os.str();
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace zetalab
