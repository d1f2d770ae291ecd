#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "zetalab/arith_sieve.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

// Scan window; t is laid out log-spaced, sigma linearly.
struct GridSpec {
  double sigma_min = 1.0;
  double sigma_max = 2.0;
  double t_min = 2.718281828459045;
  double t_max = 50.0;
  std::int64_t n_sigma = 2;
  std::int64_t n_t = 2;
};

struct ScanReport {
  GridSpec grid;
  double extremum = 0.0;
  ComplexPoint arg_extremum;
  double empirical_constant = 0.0;
  std::int64_t samples = 0;
};

// min over the grid of zeta^3(sigma) |zeta(sigma+it)|^4 |zeta(sigma+2it)|;
// requires sigma_min > 1.
ScanReport scan_341(const GridSpec& grid);

struct TrigIdentityReport {
  double max_residual = 0.0;
  double min_value = 0.0;
};
// 3 + 4 cos(theta) + cos(2 theta) = 2 (1 + cos theta)^2 >= 0 on a uniform
// theta grid; returns the worst identity residual and the expression minimum.
TrigIdentityReport trig_identity_check(std::int64_t theta_samples);

// min |zeta(1+it)| over a log grid t in [t_min, t_max], t_min >= e;
// empirical_constant = min |zeta(1+it)| (log t)^7 (lower-envelope constant).
ScanReport nonvanishing_scan(double t_min, double t_max, std::int64_t n);

// sup |zeta|/log t and sup |zeta'|/log^2 t over sigma >= max(1/2, 1 - A/log t),
// t in [e, t_max].  Rows are clamped to the region, so every sampled point
// satisfies the hypothesis; a row left empty by the clamp is a domain error.
std::pair<ScanReport, ScanReport> growth_scan(double A, double t_max, const GridSpec& grid);

// sup |1/zeta|/(log t)^7 and sup |(zeta'/zeta)|/(log t)^9 on the rows
// sigma in {1, 1.25, 1.5, 2}, t log-spaced in [e, t_max].
std::pair<ScanReport, ScanReport> inverse_zeta_scan(double t_max, std::int64_t n);

struct PntRow {
  double x = 0.0;
  double psi_over_x = 0.0;
  double psi1_ratio = 0.0;   // 2 psi1(x) / x^2
  double theta_ratio = 0.0;  // theta(x) / (pi(x) log x)
};
struct PntTable {
  std::vector<PntRow> rows;
  bool monotone_trend = true;  // deviations from 1 shrink, one slip allowed per column
};
PntTable pnt_ratio_table(const ArithTable& table, const std::vector<double>& xs);

}  // namespace zetalab
