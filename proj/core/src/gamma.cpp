#include <cmath>
#include <string>

#include "internal_util.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

using detail::kPi;

namespace {

// Lanczos approximation, g = 7.
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7,
};

}  // namespace

std::complex<double> gamma_fn(std::complex<double> s) {
  if (s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real()))
    throw pole_error("gamma_fn: pole at s = " + std::to_string(s.real()));
  if (s.real() < 0.5) {
    // reflection: Gamma(s) Gamma(1-s) = pi / sin(pi s)
    return kPi / (std::sin(kPi * s) * gamma_fn(1.0 - s));
  }
  const std::complex<double> z = s - 1.0;
  std::complex<double> x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  const std::complex<double> t = z + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

}  // namespace zetalab
