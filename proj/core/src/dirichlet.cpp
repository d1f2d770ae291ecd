#include "zetalab/dirichlet.hpp"

#include <cmath>
#include <stdexcept>

#include "internal_util.hpp"

namespace zetalab {

using detail::pow_neg;

CoeffTable CoeffTable::zeros(std::int64_t n_max) {
  if (n_max < 1) throw std::domain_error("CoeffTable: n_max must be >= 1");
  CoeffTable t;
  t.n_max = n_max;
  t.coeffs.assign(static_cast<std::size_t>(n_max) + 1, 0.0);
  return t;
}

CoeffTable CoeffTable::identity(std::int64_t n_max) {
  CoeffTable t = zeros(n_max);
  t[1] = 1.0;
  return t;
}

CoeffTable CoeffTable::ones(std::int64_t n_max) {
  CoeffTable t = zeros(n_max);
  for (std::int64_t n = 1; n <= n_max; ++n) t[n] = 1.0;
  return t;
}

CoeffTable convolve(const CoeffTable& f, const CoeffTable& g) {
  if (f.n_max != g.n_max) throw std::invalid_argument("convolve: size mismatch");
  const std::int64_t n = f.n_max;
  CoeffTable out = CoeffTable::zeros(n);
  for (std::int64_t d = 1; d <= n; ++d) {
    const std::complex<double> fd = f[d];
    if (fd == std::complex<double>{}) continue;
    for (std::int64_t q = 1, m = d; m <= n; ++q, m += d) out[m] += fd * g[q];
  }
  return out;
}

CoeffTable dirichlet_inverse(const CoeffTable& f) {
  if (f[1] == std::complex<double>{})
    throw singular_error("dirichlet_inverse: f(1) = 0 has no Dirichlet inverse");
  const std::int64_t n = f.n_max;
  CoeffTable inv = CoeffTable::zeros(n);
  const std::complex<double> inv_f1 = 1.0 / f[1];
  // acc[m] accumulates sum_{d|m, d<m} inv(d) f(m/d) as each inv(d) lands
  std::vector<std::complex<double>> acc(static_cast<std::size_t>(n) + 1, 0.0);
  for (std::int64_t m = 1; m <= n; ++m) {
    inv[m] = (m == 1) ? inv_f1 : -inv_f1 * acc[static_cast<std::size_t>(m)];
    if (inv[m] == std::complex<double>{}) continue;
    for (std::int64_t q = 2, k = 2 * m; k <= n; ++q, k += m)
      acc[static_cast<std::size_t>(k)] += inv[m] * f[q];
  }
  return inv;
}

CoeffTable log_derivative_coeffs(const CoeffTable& f) {
  if (f[1] == std::complex<double>{})
    throw singular_error("log_derivative_coeffs: f(1) = 0 has no Dirichlet inverse");
  const std::int64_t n = f.n_max;
  CoeffTable fprime = CoeffTable::zeros(n);
  for (std::int64_t m = 1; m <= n; ++m)
    fprime[m] = f[m] * std::log(static_cast<double>(m));
  return convolve(fprime, dirichlet_inverse(f));
}

std::complex<double> g_series(ComplexPoint s, std::int64_t n_max, const ArithTable& table) {
  if (!(s.sigma > 1.0)) throw std::domain_error("g_series: requires sigma > 1");
  if (n_max < 2) throw std::domain_error("g_series: n_max must be >= 2");
  if (n_max > table.limit) throw range_error("g_series: n_max exceeds table limit");
  const std::complex<double> sc = s.cplx();
  std::complex<double> sum = 0.0;
  for (std::int64_t n = 2; n <= n_max; ++n) {
    const double lg = table.mangoldt[static_cast<std::size_t>(n)];
    if (lg == 0.0) continue;
    sum += lg / std::log(static_cast<double>(n)) * pow_neg(static_cast<double>(n), sc);
  }
  return sum;
}

double g_series_tail_bound(double sigma, std::int64_t n_max) {
  if (!(sigma > 1.0)) throw std::domain_error("g_series_tail_bound: requires sigma > 1");
  return std::pow(static_cast<double>(n_max), 1.0 - sigma) / (sigma - 1.0);
}

}  // namespace zetalab
