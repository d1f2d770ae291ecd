// zetalab: sieve tables, zeta evaluation, Dirichlet-series algebra, line
// quadrature and inequality scans behind one deterministic command line.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "emit.hpp"
#include "zetalab/arith_sieve.hpp"
#include "zetalab/bounds.hpp"
#include "zetalab/certify.hpp"
#include "zetalab/contour.hpp"
#include "zetalab/dirichlet.hpp"
#include "zetalab/format.hpp"
#include "zetalab/parallel.hpp"
#include "zetalab/zeta.hpp"

namespace {

constexpr const char* kVersion = "zetalab 0.1.0";
constexpr double kEuler = 2.718281828459045;

struct RunConfig {
  std::int64_t sieve_limit = 1000000;
  double tol = 1e-9;
  std::string output_format = "json";
  std::string output_path;
  int threads = 0;  // 0 = hardware default
};

struct Emitted {
  std::string path;
  std::string checksum;
};

struct Session {
  RunConfig cfg;
  std::string manifest_path;
  std::string command_line;
  std::vector<Emitted> emitted;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  int exit_code = 0;

  // Reports go to --out when given, stdout otherwise.
  void deliver(const std::string& content) { write_to(cfg.output_path, content); }

  void write_to(const std::string& path, const std::string& content) {
    if (path.empty()) {
      std::fwrite(content.data(), 1, content.size(), stdout);
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output path: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
    emitted.push_back({path, zetalab::fnv1a64_hex(content)});
  }

  void write_manifest() {
    if (manifest_path.empty()) return;
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream os;
    os << "{\"command_line\":\"" << command_line << "\",\"config\":{\"sieve_limit\":"
       << cfg.sieve_limit << ",\"tol\":" << zetalab::fmt_g15(cfg.tol) << ",\"output_format\":\""
       << cfg.output_format << "\",\"output_path\":\"" << cfg.output_path
       << "\",\"threads\":" << cfg.threads << "},\"version\":\"" << kVersion
       << "\",\"wall_time_s\":" << zetalab::fmt_g15(wall) << ",\"outputs\":[";
    for (std::size_t i = 0; i < emitted.size(); ++i) {
      if (i) os << ",";
      os << "{\"path\":\"" << emitted[i].path << "\",\"fnv1a64\":\"" << emitted[i].checksum
         << "\"}";
    }
    os << "]}\n";
    std::ofstream out(manifest_path, std::ios::binary);
    out << os.str();
  }
};

std::vector<double> parse_limits(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stod(item));
  }
  if (out.empty()) throw std::domain_error("pnt-table: empty --limits list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace zetalab;

  Session ses;
  const std::string argv0 = argc > 0 ? argv[0] : "zetalab";
  for (int i = 0; i < argc; ++i) {
    if (i) ses.command_line += " ";
    ses.command_line += argv[i];
  }

  CLI::App app{"Chebyshev sums, zeta evaluation and contour reconstruction toolkit"};
  app.set_version_flag("--version", kVersion);
  app.set_config("--config", "", "Config file, key=value lines");
  app.require_subcommand(1);
  // globals are assigned before any subcommand callback fires
  app.parse_complete_callback([&] { zetalab::set_threads(ses.cfg.threads); });

  app.add_option("--sieve-limit", ses.cfg.sieve_limit, "Default sieve table limit")
      ->configurable(true);
  app.add_option("--tol", ses.cfg.tol, "Default evaluation tolerance")->configurable(true);
  app.add_option("--format", ses.cfg.output_format, "Default output format (csv|json)")
      ->configurable(true);
  app.add_option("--out", ses.cfg.output_path, "Write the report here instead of stdout")
      ->configurable(true);
  app.add_option("--threads", ses.cfg.threads, "Worker threads (0 = hardware)")
      ->envname("ZETALAB_THREADS")
      ->configurable(true);
  app.add_option("--manifest", ses.manifest_path, "Write a run manifest (JSON) here")
      ->configurable(true);

  // table --limit N --emit csv
  auto* c_table = app.add_subcommand("table", "Emit the sieve table as CSV");
  c_table->fallthrough();
  std::int64_t table_limit = 1000;
  std::string table_emit = "csv";
  c_table->add_option("--limit", table_limit, "Sieve limit")->required();
  c_table->add_option("--emit", table_emit, "Output format (csv)");
  c_table->callback([&] {
    if (table_emit != "csv") throw CLI::ValidationError("table", "--emit must be csv");
    ses.deliver(cli::csv_table(build_table(table_limit)));
  });

  // zeta --sigma S --t T [--n N --extra M]
  auto* c_zeta = app.add_subcommand("zeta", "Evaluate zeta(s) in sigma > 0");
  c_zeta->fallthrough();
  double z_sigma = 2.0, z_t = 0.0;
  std::int64_t z_n = 0, z_extra = 0;
  bool z_prime = false;
  c_zeta->add_option("--sigma", z_sigma, "Re s")->required();
  c_zeta->add_option("--t", z_t, "Im s");
  c_zeta->add_option("--n", z_n, "Cutoff N (0 = default policy)");
  c_zeta->add_option("--extra", z_extra, "Closed-form sawtooth intervals");
  c_zeta->add_flag("--prime", z_prime, "Evaluate zeta'(s) instead");
  c_zeta->callback([&] {
    const ComplexPoint s{z_sigma, z_t};
    EvalResult r;
    if (z_n > 0)
      r = z_prime ? zeta_prime_em(s, z_n, z_extra) : zeta_em(s, z_n, z_extra);
    else
      r = z_prime ? zeta_prime_auto(s, ses.cfg.tol) : zeta_auto(s, ses.cfg.tol);
    if (r.err_bound > ses.cfg.tol)
      std::fprintf(stderr, "warning: err_bound %s exceeds tolerance %s\n",
                   fmt_g15(r.err_bound).c_str(), fmt_g15(ses.cfg.tol).c_str());
    ses.deliver(cli::json_eval(r));
  });

  // dirichlet lambda-identity --limit N
  auto* c_dir = app.add_subcommand("dirichlet", "Dirichlet coefficient algebra checks");
  c_dir->fallthrough();
  c_dir->require_subcommand(1);
  auto* c_lam = c_dir->add_subcommand("lambda-identity",
                                      "Max deviation of (log * mu) from the sieve Lambda");
  c_lam->fallthrough();
  std::int64_t lam_limit = 10000;
  c_lam->add_option("--limit", lam_limit, "Coefficient table size");
  c_lam->callback([&] {
    const ArithTable t = build_table(lam_limit);
    const CoeffTable lam = log_derivative_coeffs(CoeffTable::ones(lam_limit));
    double worst = 0.0;
    for (std::int64_t n = 1; n <= lam_limit; ++n)
      worst = std::max(worst, std::abs(lam[n] - t.mangoldt[static_cast<std::size_t>(n)]));
    ses.deliver(cli::json_kv("limit", static_cast<double>(lam_limit), "max_abs_deviation",
                             worst));
    if (worst > 1e-9) ses.exit_code = 2;
  });

  // kernel --u U --k K --c C --T T [--dt D --adaptive]
  auto* c_kernel = app.add_subcommand("kernel", "Mellin cutoff kernel line integral");
  c_kernel->fallthrough();
  double k_u = 0.5, k_c = 2.0, k_T = 10000.0, k_dt = 0.25;
  int k_k = 1;
  bool k_adaptive = false;
  c_kernel->add_option("--u", k_u, "Kernel argument u > 0")->required();
  c_kernel->add_option("--k", k_k, "Kernel order (1 or 2)");
  c_kernel->add_option("--c", k_c, "Abscissa c > 0");
  c_kernel->add_option("--T", k_T, "Truncation height");
  c_kernel->add_option("--dt", k_dt, "Step upper bound");
  c_kernel->add_flag("--adaptive", k_adaptive, "Adaptive step halving");
  c_kernel->callback([&] {
    ses.deliver(cli::json_quad(kernel_integral(k_u, k_k, {k_c, k_T, k_dt, k_adaptive})));
  });

  // reconstruct --x X --c C --T T [--dt D --adaptive --dump-integrand FILE]
  auto* c_rec = app.add_subcommand("reconstruct", "Line quadrature of psi1(x)/x^2 vs the sieve");
  c_rec->fallthrough();
  double r_x = 10.0, r_c = 1.0, r_T = 5000.0, r_dt = 0.25;
  bool r_adaptive = false;
  std::string r_dump;
  c_rec->add_option("--x", r_x, "Evaluation point x >= 1")->required();
  c_rec->add_option("--c", r_c, "Abscissa c >= 1");
  c_rec->add_option("--T", r_T, "Truncation height");
  c_rec->add_option("--dt", r_dt, "Step upper bound");
  c_rec->add_flag("--adaptive", r_adaptive, "Adaptive step halving");
  c_rec->add_option("--dump-integrand", r_dump, "CSV of (t, Re h(c+it), Im h(c+it))");
  c_rec->callback([&] {
    const LineQuadSpec spec{r_c, r_T, r_dt, r_adaptive};
    const ArithTable t = build_table(std::max<std::int64_t>(
        ses.cfg.sieve_limit, static_cast<std::int64_t>(std::ceil(r_x))));
    ses.deliver(cli::json_reconstruct(reconstruct_psi1(r_x, spec, t)));
    if (!r_dump.empty()) {
      const double h = line_quad_step(spec, r_x);
      const auto n = static_cast<std::int64_t>(std::ceil(r_T / h));
      std::ostringstream os;
      os << "t,re_h,im_h\n";
      std::vector<std::complex<double>> pos(static_cast<std::size_t>(n) + 1);
      for (std::int64_t j = 0; j <= n; ++j)
        pos[static_cast<std::size_t>(j)] = h_function({r_c, static_cast<double>(j) * h});
      for (std::int64_t j = -n; j <= n; ++j) {
        const std::complex<double> v = j < 0 ? std::conj(pos[static_cast<std::size_t>(-j)])
                                             : pos[static_cast<std::size_t>(j)];
        os << fmt_g15(static_cast<double>(j) * h) << "," << fmt_g15(v.real()) << ","
           << fmt_g15(v.imag()) << "\n";
      }
      ses.write_to(r_dump, os.str());
    }
  });

  // scan 341|nonvanish|growth|inverse
  auto* c_scan = app.add_subcommand("scan", "Inequality and growth scans");
  c_scan->fallthrough();
  c_scan->require_subcommand(1);

  auto* s341 = c_scan->add_subcommand("341", "3-4-1 inequality minimum over a grid");
  s341->fallthrough();
  GridSpec g341{1.01, 2.0, kEuler, 50.0, 200, 200};
  s341->add_option("--sigma-min", g341.sigma_min);
  s341->add_option("--sigma-max", g341.sigma_max);
  s341->add_option("--t-min", g341.t_min);
  s341->add_option("--t-max", g341.t_max);
  s341->add_option("--n-sigma", g341.n_sigma);
  s341->add_option("--n-t", g341.n_t);
  s341->callback([&] {
    const ScanReport rep = scan_341(g341);
    ses.deliver(cli::json_scan(rep) + "\n");
    if (!(rep.extremum >= 1.0 - 1e-9)) ses.exit_code = 2;
  });

  auto* snv = c_scan->add_subcommand("nonvanish", "min |zeta(1+it)| over a log grid");
  snv->fallthrough();
  double nv_tmin = kEuler, nv_tmax = 100.0;
  std::int64_t nv_n = 10000;
  snv->add_option("--t-min", nv_tmin);
  snv->add_option("--t-max", nv_tmax);
  snv->add_option("--n", nv_n);
  snv->callback([&] {
    const ScanReport rep = nonvanishing_scan(nv_tmin, nv_tmax, nv_n);
    ses.deliver(cli::json_scan(rep) + "\n");
    if (!(rep.extremum > 1e-3)) ses.exit_code = 2;
  });

  auto* sgr = c_scan->add_subcommand("growth", "sup |zeta|/log t and |zeta'|/log^2 t");
  sgr->fallthrough();
  double gr_A = 1.0, gr_tmax = 1000.0;
  GridSpec ggrid{0.5, 2.0, kEuler, 1000.0, 16, 64};
  sgr->add_option("--A", gr_A);
  sgr->add_option("--t-max", gr_tmax);
  sgr->add_option("--sigma-min", ggrid.sigma_min);
  sgr->add_option("--sigma-max", ggrid.sigma_max);
  sgr->add_option("--n-sigma", ggrid.n_sigma);
  sgr->add_option("--n-t", ggrid.n_t);
  sgr->callback([&] {
    ggrid.t_max = gr_tmax;
    const auto [rz, rzp] = growth_scan(gr_A, gr_tmax, ggrid);
    ses.deliver(cli::json_scan_pair("zeta", rz, "zeta_prime", rzp));
    if (!std::isfinite(rz.extremum) || !std::isfinite(rzp.extremum)) ses.exit_code = 2;
  });

  auto* sinv = c_scan->add_subcommand("inverse", "sup |1/zeta| and |zeta'/zeta| envelopes");
  sinv->fallthrough();
  double iv_tmax = 1000.0;
  std::int64_t iv_n = 2000;
  sinv->add_option("--t-max", iv_tmax);
  sinv->add_option("--n", iv_n);
  sinv->callback([&] {
    const auto [ri, rr] = inverse_zeta_scan(iv_tmax, iv_n);
    ses.deliver(cli::json_scan_pair("inv_zeta", ri, "zeta_prime_over_zeta", rr));
    if (!std::isfinite(ri.extremum) || !std::isfinite(rr.extremum)) ses.exit_code = 2;
  });

  // pnt-table --limits 1e3,1e4,1e5,1e6
  auto* c_pnt = app.add_subcommand("pnt-table", "Chebyshev ratio columns as CSV");
  c_pnt->fallthrough();
  std::string pnt_limits = "1e3,1e4,1e5,1e6";
  c_pnt->add_option("--limits", pnt_limits, "Comma-separated x values");
  c_pnt->callback([&] {
    const std::vector<double> xs = parse_limits(pnt_limits);
    double mx = 0.0;
    for (double x : xs) mx = std::max(mx, x);
    const ArithTable t = build_table(static_cast<std::int64_t>(std::ceil(mx)));
    const PntTable tab = pnt_ratio_table(t, xs);
    ses.deliver(cli::csv_pnt(tab));
    if (!tab.monotone_trend) ses.exit_code = 2;
  });

  // certify [--quick]
  auto* c_cert = app.add_subcommand("certify", "Run every named acceptance check");
  c_cert->fallthrough();
  bool cert_quick = false;
  c_cert->add_flag("--quick", cert_quick, "Reduced sizes");
  c_cert->callback([&] {
    CertifyOptions opt;
    opt.quick = cert_quick;
    // quick mode keeps the determinism check in-process so a spawned child
    // cannot recurse
    if (!cert_quick) opt.cli_path = argv0;
    const auto results = run_certify(opt);
    ses.deliver(render_certify_report(results));
    if (!all_passed(results)) ses.exit_code = 2;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "domain error: %s\n", e.what());
    return 1;
  } catch (const zetalab::range_error& e) {
    std::fprintf(stderr, "range error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }

  ses.write_manifest();
  return ses.exit_code;
}
