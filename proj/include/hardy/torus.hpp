#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "hardy/special.hpp"

namespace hardy::torus {

inline constexpr std::size_t kDefaultGridSize = 4096;
inline constexpr double kDefaultAnalyticTol = 1e-10;
inline constexpr double kDefaultFloorEps = 1e-12;
inline constexpr double kUnimodularTol = 1e-8;
inline constexpr double kMaxInnerDeviation = 1e-3;

/// N uniform samples of a function on the unit circle, at theta_k = 2 pi k / N.
///
/// N is a power of two >= 8. Fourier coefficients are indexed by
/// k in [-N/2, N/2); analytic functions have (numerically) vanishing
/// coefficients for k < 0. Instances are immutable.
class GridFunction {
 public:
  explicit GridFunction(std::vector<Complex> samples);

  static GridFunction constant(std::size_t n, Complex value);
  static GridFunction monomial(std::size_t n, int power);
  /// sum_m coeffs[m] e^{i (first_index + m) theta}; every index must lie in [-N/2, N/2).
  static GridFunction from_coefficients(std::span<const Complex> coeffs, int first_index,
                                        std::size_t n);
  /// Inverse of coefficients().
  static GridFunction from_spectrum(std::span<const Complex> spectrum);

  /// Samples fn(e^{i theta_k}).
  template <class Fn>
  static GridFunction sample(std::size_t n, Fn&& fn) {
    std::vector<Complex> values(n);
    for (std::size_t k = 0; k < n; ++k) values[k] = fn(point(n, k));
    return GridFunction(std::move(values));
  }

  static Complex point(std::size_t n, std::size_t k);

  std::size_t size() const noexcept { return samples_.size(); }
  std::span<const Complex> samples() const noexcept { return samples_; }
  const Complex& operator[](std::size_t k) const { return samples_[k]; }

  /// Fourier coefficients in DFT slot order (slot k mod N holds index k).
  std::vector<Complex> coefficients() const;
  /// Largest |c_k| over k < 0.
  double negative_spectrum_max() const;
  /// Negative-frequency coefficients below tol * max(1, max|f|).
  bool is_analytic(double tol = kDefaultAnalyticTol) const;
  double max_abs() const;
  /// Largest | |f| - 1 | on the grid.
  double unimodular_deviation() const;

  /// Power-series value sum_{k >= 0} c_k z^k at an interior point.
  Complex eval_interior(Complex z) const;

  GridFunction conj() const;

  friend GridFunction operator+(const GridFunction& a, const GridFunction& b);
  friend GridFunction operator-(const GridFunction& a, const GridFunction& b);
  friend GridFunction operator*(const GridFunction& a, const GridFunction& b);
  friend GridFunction operator/(const GridFunction& a, const GridFunction& b);
  friend GridFunction operator*(Complex s, const GridFunction& a);
  friend GridFunction operator*(const GridFunction& a, Complex s) { return s * a; }

 private:
  std::vector<Complex> samples_;
};

/// Polynomial inputs up to this degree are factored through their roots.
inline constexpr std::size_t kRootDegreeLimit = 160;

enum class FactorMethod {
  /// roots when f is a polynomial of degree <= kRootDegreeLimit, cepstral otherwise.
  automatic,
  /// outer = exp(analytic completion of log|f|); approximate near boundary zeros.
  cepstral,
  /// Companion-matrix roots; zeros with |r| < 1 - 1e-6 go to the inner Blaschke
  /// factor, the rest (including zeros on the circle) stay in the outer part.
  roots,
};

/// Result of the inner-outer factorization f = inner * outer.
struct InnerOuterPair {
  GridFunction inner;
  GridFunction outer;
  /// max | |inner| - 1 | on the grid (nonzero only where |f| was floored).
  double modulus_deviation = 0.0;
  /// max |inner * outer - f| / max |f|.
  double reconstruction_error = 0.0;
  /// max |c_k(inner)| over k < 0; measures how analytic the computed inner part is.
  double inner_negative_spectrum = 0.0;
  FactorMethod method = FactorMethod::cepstral;
};

/// Orthogonal projection of L^2 onto H^2: drops the negative frequencies.
GridFunction riesz_project(const GridFunction& f);

/// Orthogonal projection onto u H^2, i.e. u * riesz_project(conj(u) f).
/// Throws NotInnerError when |u| deviates from 1 by more than 1e-8.
GridFunction project_invariant(const GridFunction& f, const GridFunction& u);

/// Inner-outer factorization of an analytic grid function, normalized so that outer(0) > 0.
///
/// Cepstral: outer = exp(analytic completion of log max(|f|, floor_eps * max|f|)),
/// inner = f / outer. Roots: inner = Blaschke product of the interior zeros, outer = f / inner.
/// Throws ZeroFunctionError when max|f| < 1e-300, IllConditionedError when
/// the inner modulus deviation exceeds 1e-3, DomainError when f is not analytic
/// (or, for FactorMethod::roots, not a polynomial of degree <= kRootDegreeLimit).
InnerOuterPair inner_outer_factor(const GridFunction& f, double floor_eps = kDefaultFloorEps,
                                  FactorMethod method = FactorMethod::automatic);

/// Factorization of f = p / q for a known denominator q (coefficients, lowest
/// order first) without zeros in the closed disk. The inner part comes from the
/// roots of p = f q when that is a polynomial of degree <= kRootDegreeLimit;
/// otherwise this falls back to the cepstral method.
InnerOuterPair inner_outer_factor_rational(const GridFunction& f, std::span<const Complex> denominator,
                                           double floor_eps = kDefaultFloorEps);

/// Degree of f as a polynomial in z when its coefficients vanish beyond some
/// index < N/4; -1 otherwise. "Vanish" means below 1e-13 max|c|, or below 1e3
/// times the median magnitude on [N/4, N/2) when that is larger (at most 1e-11 max|c|).
long polynomial_degree(const GridFunction& f);

/// ((1/N) sum |f_k|^p)^{1/p} for p in [1, inf).
double lp_norm(const GridFunction& f, double p);

/// (1/N) sum f_k conj(g_k).
Complex inner_product(const GridFunction& f, const GridFunction& g);

}  // namespace hardy::torus
