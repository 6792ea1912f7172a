#pragma once

#include <complex>
#include <numbers>

namespace hardy {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};
inline constexpr double kPi = std::numbers::pi;

namespace special {

/// Complex Gamma function.
///
/// Stirling series after upward shifting to |z| >= 15, with the reflection
/// formula for Re z < 1/2. Relative error is below 1e-12 on
/// |Re z|, |Im z| <= 64 away from the poles.
///
/// Throws PoleError when z is within 1e-14 of a non-positive integer and
/// OverflowError when the value is not representable.
Complex gamma(Complex z);

/// Logarithm of Gamma. Coincides with the principal branch (real on the
/// positive real axis, analytic off the negative real axis) for Re z >= 1/2;
/// for Re z < 1/2 only exp(log_gamma(z)) is meaningful.
Complex log_gamma(Complex z);

/// Complex sine; throws OverflowError when |Im z| would overflow cosh.
Complex csin(Complex z);

/// sin(pi z) with exact reduction of Re z modulo 2 before scaling.
Complex sin_pi(Complex z);

/// log(sin(pi z)), finite for arbitrarily large |Im z|.
Complex log_sin_pi(Complex z);

/// True when z lies within `tol` of {0, -1, -2, ...}.
bool is_gamma_pole(Complex z, double tol = 1e-14);

}  // namespace special
}  // namespace hardy
