#include "emit.hpp"

#include <sstream>

#include "zetalab/format.hpp"

namespace zetalab::cli {

namespace {
std::string g(double v) { return fmt_g15(v); }
}  // namespace

std::string json_eval(const EvalResult& r) {
  std::ostringstream os;
  os << "{\"value\":{\"re\":" << g(r.value.real()) << ",\"im\":" << g(r.value.imag())
     << "},\"err_bound\":" << g(r.err_bound) << ",\"n_cutoff\":" << r.n_cutoff
     << ",\"extra_terms\":" << r.extra_terms << "}\n";
  return os.str();
}

std::string json_quad(const QuadReport& r) {
  std::ostringstream os;
  os << "{\"estimate\":" << g(r.estimate) << ",\"truncation_tail_bound\":"
     << g(r.truncation_tail_bound) << ",\"discretization_estimate\":"
     << g(r.discretization_estimate) << ",\"evaluations\":" << r.evaluations << "}\n";
  return os.str();
}

std::string json_reconstruct(const ReconstructReport& r) {
  std::ostringstream os;
  os << "{\"estimate\":" << g(r.quad.estimate) << ",\"truncation_tail_bound\":"
     << g(r.quad.truncation_tail_bound) << ",\"discretization_estimate\":"
     << g(r.quad.discretization_estimate) << ",\"evaluations\":" << r.quad.evaluations
     << ",\"lhs_sieve\":" << g(r.lhs_sieve) << ",\"abs_deviation\":" << g(r.abs_deviation)
     << ",\"estimate_imag\":" << g(r.estimate_imag) << "}\n";
  return os.str();
}

std::string json_scan(const ScanReport& r) {
  std::ostringstream os;
  os << "{\"grid\":{\"sigma_min\":" << g(r.grid.sigma_min) << ",\"sigma_max\":"
     << g(r.grid.sigma_max) << ",\"t_min\":" << g(r.grid.t_min) << ",\"t_max\":"
     << g(r.grid.t_max) << ",\"n_sigma\":" << r.grid.n_sigma << ",\"n_t\":" << r.grid.n_t
     << "},\"extremum\":" << g(r.extremum) << ",\"arg_extremum\":{\"sigma\":"
     << g(r.arg_extremum.sigma) << ",\"t\":" << g(r.arg_extremum.t)
     << "},\"empirical_constant\":" << g(r.empirical_constant) << ",\"samples\":" << r.samples
     << "}";
  return os.str();
}

std::string json_scan_pair(const char* key1, const ScanReport& r1, const char* key2,
                           const ScanReport& r2) {
  std::ostringstream os;
  os << "{\"" << key1 << "\":" << json_scan(r1) << ",\"" << key2 << "\":" << json_scan(r2)
     << "}\n";
  return os.str();
}

std::string json_kv(const std::string& key, double value, const std::string& key2,
                    double value2) {
  std::ostringstream os;
  os << "{\"" << key << "\":" << g(value);
  if (!key2.empty()) os << ",\"" << key2 << "\":" << g(value2);
  os << "}\n";
  return os.str();
}

std::string csv_table(const ArithTable& t) {
  std::ostringstream os;
  os << "n,mangoldt,mobius,liouville,is_prime\n";
  for (std::int64_t n = 1; n <= t.limit; ++n) {
    const auto i = static_cast<std::size_t>(n);
    os << n << "," << g(t.mangoldt[i]) << "," << static_cast<int>(t.mobius[i]) << ","
       << static_cast<int>(t.liouville[i]) << "," << (t.is_prime[i] ? 1 : 0) << "\n";
  }
  return os.str();
}

std::string csv_pnt(const PntTable& t) {
  std::ostringstream os;
  os << "x,psi_over_x,psi1_ratio,theta_ratio\n";
  for (const PntRow& r : t.rows)
    os << g(r.x) << "," << g(r.psi_over_x) << "," << g(r.psi1_ratio) << ","
       << g(r.theta_ratio) << "\n";
  return os.str();
}

}  // namespace zetalab::cli
