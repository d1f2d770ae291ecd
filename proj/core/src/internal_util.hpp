#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace zetalab::detail {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kE = std::numbers::e;

// b^{-s} for real b > 0.
inline std::complex<double> pow_neg(double b, std::complex<double> s) {
  const double lb = std::log(b);
  return std::polar(std::exp(-s.real() * lb), -s.imag() * lb);
}

}  // namespace zetalab::detail
