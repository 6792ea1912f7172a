#include "hardy/special.hpp"

#include <array>
#include <cmath>
#include <string>

#include "hardy/errors.hpp"

namespace hardy::special {
namespace {

constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;
constexpr double kLogPi = 1.14472988584940017414342735135305;
constexpr double kStirlingMinModulus = 15.0;

// B_{2k} / (2k (2k-1)), k = 1..10
constexpr std::array<double, 10> kStirling = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

Complex stirling(Complex z) {
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex series = 0.0;
  for (auto it = kStirling.rbegin(); it != kStirling.rend(); ++it) {
    series = series * inv2 + *it;
  }
  return (z - 0.5) * std::log(z) - z + kHalfLog2Pi + series * inv;
}

// Re z >= 1/2.
Complex log_gamma_right(Complex z) {
  Complex shift_log = 0.0;
  while (std::abs(z) < kStirlingMinModulus) {
    shift_log += std::log(z);
    z += 1.0;
  }
  return stirling(z) - shift_log;
}

void check_pole(Complex z) {
  if (is_gamma_pole(z)) {
    throw PoleError("gamma: argument " + std::to_string(z.real()) + "+" +
                    std::to_string(z.imag()) + "i is a pole");
  }
}

}  // namespace

bool is_gamma_pole(Complex z, double tol) {
  if (std::abs(z.imag()) > tol) return false;
  const double nearest = std::round(z.real());
  return nearest <= 0.0 && std::abs(z.real() - nearest) <= tol;
}

Complex csin(Complex z) {
  const double x = z.real();
  const double y = z.imag();
  if (std::abs(y) > 709.0) {
    throw OverflowError("csin: |Im z| too large");
  }
  return {std::sin(x) * std::cosh(y), std::cos(x) * std::sinh(y)};
}

Complex sin_pi(Complex z) {
  // Re z mod 2 is exact in floating point.
  const double reduced = z.real() - 2.0 * std::round(0.5 * z.real());
  return csin(Complex(kPi * reduced, kPi * z.imag()));
}

Complex log_sin_pi(Complex z) {
  const double reduced = z.real() - 2.0 * std::round(0.5 * z.real());
  const Complex w(reduced, z.imag());
  if (z.imag() > 30.0) {
    // sin(pi w) = (i/2) e^{-i pi w} (1 - e^{2 i pi w})
    return -kI * kPi * w + std::log(Complex(0.0, 0.5)) +
           std::log(1.0 - std::exp(2.0 * kI * kPi * w));
  }
  if (z.imag() < -30.0) {
    return kI * kPi * w + std::log(Complex(0.0, -0.5)) +
           std::log(1.0 - std::exp(-2.0 * kI * kPi * w));
  }
  return std::log(sin_pi(w));
}

Complex log_gamma(Complex z) {
  check_pole(z);
  if (z.real() < 0.5) {
    // Gamma(z) Gamma(1 - z) = pi / sin(pi z)
    return kLogPi - log_sin_pi(z) - log_gamma_right(1.0 - z);
  }
  return log_gamma_right(z);
}

Complex gamma(Complex z) {
  const Complex lg = log_gamma(z);
  if (lg.real() > 709.0) {
    throw OverflowError("gamma: result overflows");
  }
  // Real arguments keep an exactly real result.
  if (z.imag() == 0.0) {
    const double magnitude = std::exp(lg.real());
    const bool negative = std::cos(lg.imag()) < 0.0;
    return {negative ? -magnitude : magnitude, 0.0};
  }
  return std::exp(lg);
}

}  // namespace hardy::special
