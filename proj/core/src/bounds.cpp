#include "zetalab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "internal_util.hpp"
#include "zetalab/parallel.hpp"

namespace zetalab {

using detail::kE;
using detail::kPi;

namespace {

double log_spaced(double lo, double hi, std::int64_t i, std::int64_t n) {
  if (n <= 1) return lo;
  return lo * std::exp(std::log(hi / lo) * static_cast<double>(i) / static_cast<double>(n - 1));
}

double lin_spaced(double lo, double hi, std::int64_t i, std::int64_t n) {
  if (n <= 1) return lo;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

struct Extremum {
  double value = 0.0;
  double sigma = 0.0;
  double t = 0.0;
  bool set = false;
  void min_with(double v, double s, double tt) {
    if (!set || v < value) {
      value = v;
      sigma = s;
      t = tt;
      set = true;
    }
  }
  void max_with(double v, double s, double tt) {
    if (!set || v > value) {
      value = v;
      sigma = s;
      t = tt;
      set = true;
    }
  }
};

}  // namespace

ScanReport scan_341(const GridSpec& grid) {
  if (!(grid.sigma_min > 1.0))
    throw std::domain_error("scan_341: requires sigma_min > 1 (the inequality holds for sigma > 1)");
  if (!(grid.sigma_max >= grid.sigma_min) || !(grid.t_max > grid.t_min) || !(grid.t_min > 0.0) ||
      grid.n_sigma < 2 || grid.n_t < 2)
    throw std::domain_error("scan_341: malformed grid");

  const std::int64_t total = grid.n_sigma * grid.n_t;
  auto parts = map_chunks<Extremum>(total, 256, [&](std::int64_t b, std::int64_t e) {
    Extremum ex;
    for (std::int64_t i = b; i < e; ++i) {
      const std::int64_t is = i / grid.n_t;
      const std::int64_t it = i % grid.n_t;
      const double sigma = lin_spaced(grid.sigma_min, grid.sigma_max, is, grid.n_sigma);
      const double t = log_spaced(grid.t_min, grid.t_max, it, grid.n_t);
      const double z0 = zeta_auto({sigma, 0.0}, 1e-12).value.real();
      const double z1 = std::abs(zeta_auto({sigma, t}, 1e-12).value);
      const double z2 = std::abs(zeta_auto({sigma, 2.0 * t}, 1e-12).value);
      const double prod = z0 * z0 * z0 * z1 * z1 * z1 * z1 * z2;
      ex.min_with(prod, sigma, t);
    }
    return ex;
  });
  Extremum best;
  for (const Extremum& ex : parts)
    if (ex.set) best.min_with(ex.value, ex.sigma, ex.t);

  ScanReport rep;
  rep.grid = grid;
  rep.extremum = best.value;
  rep.arg_extremum = {best.sigma, best.t};
  rep.empirical_constant = best.value;
  rep.samples = total;
  return rep;
}

TrigIdentityReport trig_identity_check(std::int64_t theta_samples) {
  if (theta_samples < 1) throw std::domain_error("trig_identity_check: samples must be >= 1");
  TrigIdentityReport rep;
  rep.min_value = std::numeric_limits<double>::infinity();
  for (std::int64_t i = 0; i < theta_samples; ++i) {
    const double theta = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(theta_samples);
    const double c = std::cos(theta);
    const double expr = 3.0 + 4.0 * c + std::cos(2.0 * theta);
    const double square_form = 2.0 * (1.0 + c) * (1.0 + c);
    rep.max_residual = std::max(rep.max_residual, std::abs(expr - square_form));
    rep.min_value = std::min(rep.min_value, expr);
  }
  return rep;
}

ScanReport nonvanishing_scan(double t_min, double t_max, std::int64_t n) {
  if (!(t_min >= kE - 1e-12)) throw std::domain_error("nonvanishing_scan: requires t_min >= e");
  if (!(t_max > t_min) || n < 2) throw std::domain_error("nonvanishing_scan: malformed range");

  struct Part {
    Extremum abs_min;
    double c7_min = std::numeric_limits<double>::infinity();
  };
  auto parts = map_chunks<Part>(n, 256, [&](std::int64_t b, std::int64_t e) {
    Part p;
    for (std::int64_t i = b; i < e; ++i) {
      const double t = log_spaced(t_min, t_max, i, n);
      const double az = std::abs(zeta_auto({1.0, t}, 1e-12).value);
      p.abs_min.min_with(az, 1.0, t);
      p.c7_min = std::min(p.c7_min, az * std::pow(std::log(t), 7.0));
    }
    return p;
  });
  Extremum best;
  double c7 = std::numeric_limits<double>::infinity();
  for (const Part& p : parts) {
    if (p.abs_min.set) best.min_with(p.abs_min.value, p.abs_min.sigma, p.abs_min.t);
    c7 = std::min(c7, p.c7_min);
  }

  ScanReport rep;
  rep.grid = {1.0, 1.0, t_min, t_max, 1, n};
  rep.extremum = best.value;
  rep.arg_extremum = {1.0, best.t};
  rep.empirical_constant = c7;
  rep.samples = n;
  return rep;
}

std::pair<ScanReport, ScanReport> growth_scan(double A, double t_max, const GridSpec& grid) {
  if (!(A > 0.0)) throw std::domain_error("growth_scan: requires A > 0");
  const double t_lo = std::max(grid.t_min, kE);
  const double t_hi = std::min(grid.t_max, t_max);
  if (!(t_hi > t_lo) || grid.n_sigma < 2 || grid.n_t < 2)
    throw std::domain_error("growth_scan: malformed grid");
  // every row must intersect the region sigma >= max(1/2, 1 - A/log t)
  {
    const double floor_worst = std::max(0.5, 1.0 - A / std::log(t_hi));
    if (grid.sigma_max < floor_worst)
      throw std::domain_error("growth_scan: grid lies outside the admissible region");
  }

  const std::int64_t total = grid.n_sigma * grid.n_t;
  struct Part {
    Extremum mz, mzp;
  };
  auto parts = map_chunks<Part>(total, 128, [&](std::int64_t b, std::int64_t e) {
    Part p;
    for (std::int64_t i = b; i < e; ++i) {
      const std::int64_t it = i / grid.n_sigma;
      const std::int64_t is = i % grid.n_sigma;
      const double t = log_spaced(t_lo, t_hi, it, grid.n_t);
      const double lt = std::log(t);
      const double sigma_floor = std::max({grid.sigma_min, 0.5, 1.0 - A / lt});
      const double sigma = lin_spaced(sigma_floor, grid.sigma_max, is, grid.n_sigma);
      const ZetaPair pr = zeta_pair_auto({sigma, t}, 1e-11);
      p.mz.max_with(std::abs(pr.zeta.value) / lt, sigma, t);
      p.mzp.max_with(std::abs(pr.zeta_prime.value) / (lt * lt), sigma, t);
    }
    return p;
  });
  Extremum mz, mzp;
  for (const Part& p : parts) {
    if (p.mz.set) mz.max_with(p.mz.value, p.mz.sigma, p.mz.t);
    if (p.mzp.set) mzp.max_with(p.mzp.value, p.mzp.sigma, p.mzp.t);
  }

  GridSpec eff = grid;
  eff.t_min = t_lo;
  eff.t_max = t_hi;
  ScanReport rz{eff, mz.value, {mz.sigma, mz.t}, mz.value, total};
  ScanReport rzp{eff, mzp.value, {mzp.sigma, mzp.t}, mzp.value, total};
  return {rz, rzp};
}

std::pair<ScanReport, ScanReport> inverse_zeta_scan(double t_max, std::int64_t n) {
  if (!(t_max > kE) || n < 2) throw std::domain_error("inverse_zeta_scan: malformed range");
  static constexpr double kRows[4] = {1.0, 1.25, 1.5, 2.0};

  const std::int64_t total = 4 * n;
  struct Part {
    Extremum inv, ratio;
  };
  auto parts = map_chunks<Part>(total, 128, [&](std::int64_t b, std::int64_t e) {
    Part p;
    for (std::int64_t i = b; i < e; ++i) {
      const double sigma = kRows[i / n];
      const double t = log_spaced(kE, t_max, i % n, n);
      const double lt = std::log(t);
      const ZetaPair pr = zeta_pair_auto({sigma, t}, 1e-11);
      p.inv.max_with(1.0 / std::abs(pr.zeta.value) / std::pow(lt, 7.0), sigma, t);
      p.ratio.max_with(std::abs(pr.zeta_prime.value / pr.zeta.value) / std::pow(lt, 9.0), sigma, t);
    }
    return p;
  });
  Extremum inv, ratio;
  for (const Part& p : parts) {
    if (p.inv.set) inv.max_with(p.inv.value, p.inv.sigma, p.inv.t);
    if (p.ratio.set) ratio.max_with(p.ratio.value, p.ratio.sigma, p.ratio.t);
  }

  const GridSpec eff{1.0, 2.0, kE, t_max, 4, n};
  ScanReport rinv{eff, inv.value, {inv.sigma, inv.t}, inv.value, total};
  ScanReport rratio{eff, ratio.value, {ratio.sigma, ratio.t}, ratio.value, total};
  return {rinv, rratio};
}

PntTable pnt_ratio_table(const ArithTable& table, const std::vector<double>& xs) {
  PntTable out;
  out.rows.reserve(xs.size());
  for (double x : xs) {
    const ChebyshevValues v = chebyshev_values(table, x);
    PntRow row;
    row.x = x;
    row.psi_over_x = v.psi / x;
    row.psi1_ratio = 2.0 * v.psi1 / (x * x);
    row.theta_ratio =
        v.pi > 0 ? v.theta / (static_cast<double>(v.pi) * std::log(x)) : 0.0;
    out.rows.push_back(row);
  }
  // trend toward 1 across the rows, one slip allowed per column
  auto column_ok = [&](double PntRow::* col) {
    int slips = 0;
    for (std::size_t i = 1; i < out.rows.size(); ++i) {
      const double prev = std::abs(out.rows[i - 1].*col - 1.0);
      const double cur = std::abs(out.rows[i].*col - 1.0);
      if (cur > prev + 1e-12) ++slips;
    }
    return slips <= 1;
  };
  out.monotone_trend = column_ok(&PntRow::psi_over_x) && column_ok(&PntRow::psi1_ratio) &&
                       column_ok(&PntRow::theta_ratio);
  return out;
}

}  // namespace zetalab
