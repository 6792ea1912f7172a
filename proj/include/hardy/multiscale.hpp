#pragma once

#include <compare>
#include <vector>

#include "hardy/quadrature.hpp"
#include "hardy/special.hpp"

namespace hardy::multiscale {

/// e^{-2 pi}, the modulus of the zero of G seen from the boundary.
inline const double kQ = std::exp(-2.0 * kPi);

/// sup over real x of |1 - G(x)| / min(1, |x|), attained as x -> 0:
/// 2 pi (1 + q) / (1 - q).
inline const double kOneMinusGConstant = 2.0 * kPi * (1.0 + kQ) / (1.0 - kQ);

/// Above this imaginary part the sine form of G overflows; evaluation is refused.
inline constexpr double kMaxImag = 40.0;

/// G(x) = sin pi(i - x) / sin pi(i + x): inner, 1-periodic, zeros at j + i.
/// Evaluated as (w - q) / (1 - q w) with w = e^{2 i pi x}.
Complex periodic_blaschke(Complex x);

/// G_alpha(x) = sin pi(i alpha - x) / sin pi(i alpha + x), zeros at j + i alpha.
Complex periodic_blaschke_alpha(double alpha, Complex x);

/// G_n(x) = prod_{j <= n} ((j - i)/(j + i)) ((x - j - i)/(x - j + i)), through Gamma ratios.
Complex periodic_blaschke_prefix(long n, Complex x);

/// phi(x) = Gamma(x - 1 + i) / (sqrt(pi) Gamma(x - i)); unit norm, its integer
/// translates are orthonormal.
Complex scaling_atom(Complex x);

struct DeltaSpec {
  /// Product over -scales <= j <= -1.
  int scales = 40;
  /// Also multiply by the j = 0 factor G(x).
  bool include_j0 = false;
};

struct DeltaValue {
  Complex value;
  /// Bound on |truncated - infinite product|: C_G |x| 2^{-scales}.
  double tail_bound;
};

/// Delta(x) = prod_{j<0} G(2^j x), truncated per spec.
DeltaValue dyadic_inner(Complex x, const DeltaSpec& spec = {});

/// Continuous phase of the truncated Delta on the real line, summed from the
/// exact single-factor phases 2 pi y - 2 arg(1 - q e^{2 i pi y}).
double dyadic_phase(double x, const DeltaSpec& spec = {});

/// Xi(t) = sum_{k >= 1} sin(2^{-k} t). With k_max = 0 the cutoff is chosen
/// so that 2^{-k_max} |t| <= 1e-6; the linearized tail 2^{-k_max} t is added.
double dyadic_sine_sum(double t, int k_max = 0);

struct WaveletIndex {
  int n = 0;  // scale
  int j = 0;  // shift

  auto operator<=>(const WaveletIndex&) const = default;
};

/// 2^{n/2} phi(2^n x - j) Delta(2^n x).
Complex wavelet(WaveletIndex idx, Complex x, const DeltaSpec& spec = {});

halfplane::Function wavelet_function(WaveletIndex idx, const DeltaSpec& spec = {});

struct WaveletCoefficient {
  WaveletIndex index;
  Complex value;
};

struct WaveletResidual {
  /// Last index included in the lexicographic prefix.
  WaveletIndex prefix;
  double l2;
};

struct WaveletCoefficients {
  std::vector<WaveletCoefficient> coeffs;  // lexicographic order
  std::vector<WaveletResidual> residuals;
};

/// Coefficients over scales [n_lo, n_hi] x shifts [j_lo, j_hi], with the
/// residual norm of every lexicographic prefix.
WaveletCoefficients wavelet_analyze(const halfplane::Function& f, int n_lo, int n_hi, int j_lo,
                                    int j_hi, const DeltaSpec& spec = {},
                                    const halfplane::QuadratureSpec& quad = {});

}  // namespace hardy::multiscale
