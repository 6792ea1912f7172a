#pragma once

#include <cstddef>
#include <vector>

#include "hardy/special.hpp"

namespace hardy::identities {

/// |e^{2 i pi x} - (q + G(x)) / (1 + q G(x))|, q = e^{-2 pi}.
double recur_residual(double x);

/// Coefficients of G^k, k = 0..terms, in
/// e^{2 i pi x} = q + (1 - q^2) sum_{n >= 0} (-1)^n q^n G(x)^{n+1}.
std::vector<double> pro_unwinding_coefficients(std::size_t terms);

/// Truncated series with `terms` powers of G (terms = 0 gives q).
Complex pro_unwinding_partial(Complex x, std::size_t terms);

/// Geometric tail (1 - q^2) q^terms / (1 - q), valid on the real line.
double pro_unwinding_tail_bound(std::size_t terms);

/// Term k (power G^k, k = 0 is the constant term) of the series multiplied by
/// 1 / (sqrt(pi) (x + i)); the terms are mutually orthogonal in L^2(R).
Complex complete_unwinding_term(std::size_t k, Complex x);

Complex complete_unwinding_partial(Complex x, std::size_t terms);

/// |e^{2 i pi x} - (a + G_alpha(x) (1 - a e^{2 i pi x}))|, a = e^{-2 pi alpha}.
double alpha_identity_residual(double alpha, double x);

/// Positive alpha_1, alpha_2, ... with a_n = e^{-2 pi alpha_n}.
class AlphaSequence {
 public:
  explicit AlphaSequence(std::vector<double> alphas);

  const std::vector<double>& alphas() const noexcept { return alphas_; }
  const std::vector<double>& a() const noexcept { return a_; }
  std::size_t size() const noexcept { return alphas_.size(); }

 private:
  std::vector<double> alphas_;
  std::vector<double> a_;
};

/// c_0 = a_1 and c_n = (-1)^{n+1} a_1...a_{n-1} (1 - a_n a_{n+1}), n = 1..terms.
/// c_n multiplies prod_{k <= n} G_{alpha_k}. Requires terms <= size() - 1.
std::vector<double> alpha_series_coefficients(const AlphaSequence& seq, std::size_t terms);

Complex alpha_series_partial(const AlphaSequence& seq, Complex x, std::size_t terms);

/// 2 a_1 ... a_terms, a bound on the error of alpha_series_partial on the real line.
double alpha_series_remainder_bound(const AlphaSequence& seq, std::size_t terms);

enum class DiracVariant {
  /// e^{-2 i pi / x} against B(x) = G(1/x), as the derivation is printed.
  literal,
  /// e^{-2 i pi / x} against B(x) = G(-1/x); B is inner with zeros -1/(n + i).
  inner,
  /// e^{+2 i pi / x} against B(x) = G(1/x), zeros 1/(n + i) in the lower half-plane.
  reflected,
};

/// Residual of target = (q + B(x)) / (1 + q B(x)). Throws NearSingularError for |x| < 1e-6.
double dirac_inner_residual(double x, DiracVariant variant = DiracVariant::inner);

enum class TorusTarget {
  /// exp(-(1 + e^{i theta}) / (1 - e^{i theta})), bounded by 1 in the disk.
  inner,
  /// exp(+(1 + e^{i theta}) / (1 - e^{i theta})).
  literal,
};

struct TorusSubstitution {
  double residual;
  double tail_bound;
  /// (i / 2 pi) (1 + e^{i theta}) / (1 - e^{i theta}) = -cot(theta / 2) / (2 pi).
  Complex x;
};

/// Series in powers of G at the substituted point against the singular inner
/// function of the disk. Requires theta in [1e-4, 2 pi - 1e-4].
TorusSubstitution torus_substitution_residual(double theta, std::size_t terms,
                                              TorusTarget target = TorusTarget::inner);

}  // namespace hardy::identities
