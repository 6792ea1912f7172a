#include "hardy/identities.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hardy/errors.hpp"
#include "hardy/multiscale.hpp"

namespace hardy::identities {
namespace {

using multiscale::kQ;
using multiscale::periodic_blaschke;

constexpr double kThetaMargin = 1e-4;
constexpr double kSingularRadius = 1e-6;

Complex boundary_exp(double x) {
  const double frac = x - std::round(x);
  return std::exp(2.0 * kPi * kI * frac);
}

Complex recur_rhs(Complex g) { return (kQ + g) / (1.0 + kQ * g); }

Complex power_series(const std::vector<double>& coeffs, Complex g) {
  Complex acc = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * g + coeffs[k];
  return acc;
}

}  // namespace

double recur_residual(double x) {
  return std::abs(boundary_exp(x) - recur_rhs(periodic_blaschke(x)));
}

std::vector<double> pro_unwinding_coefficients(std::size_t terms) {
  std::vector<double> c(terms + 1);
  c[0] = kQ;
  double weight = 1.0 - kQ * kQ;
  for (std::size_t k = 1; k <= terms; ++k) {
    c[k] = weight;
    weight *= -kQ;
  }
  return c;
}

Complex pro_unwinding_partial(Complex x, std::size_t terms) {
  return power_series(pro_unwinding_coefficients(terms), periodic_blaschke(x));
}

double pro_unwinding_tail_bound(std::size_t terms) {
  return (1.0 - kQ * kQ) * std::pow(kQ, static_cast<double>(terms)) / (1.0 - kQ);
}

Complex complete_unwinding_term(std::size_t k, Complex x) {
  const auto c = pro_unwinding_coefficients(k);
  return c[k] * std::pow(periodic_blaschke(x), static_cast<int>(k)) / (std::sqrt(kPi) * (x + kI));
}

Complex complete_unwinding_partial(Complex x, std::size_t terms) {
  return pro_unwinding_partial(x, terms) / (std::sqrt(kPi) * (x + kI));
}

double alpha_identity_residual(double alpha, double x) {
  const double a = std::exp(-2.0 * kPi * alpha);
  const Complex e = boundary_exp(x);
  return std::abs(e - (a + multiscale::periodic_blaschke_alpha(alpha, x) * (1.0 - a * e)));
}

AlphaSequence::AlphaSequence(std::vector<double> alphas) : alphas_(std::move(alphas)) {
  if (alphas_.empty()) throw DomainError("alpha sequence is empty");
  for (double alpha : alphas_) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
      throw DomainError("alpha sequence entries must be positive and finite");
    }
    a_.push_back(std::exp(-2.0 * kPi * alpha));
  }
}

std::vector<double> alpha_series_coefficients(const AlphaSequence& seq, std::size_t terms) {
  if (terms + 1 > seq.size()) {
    throw IndexError("alpha series with " + std::to_string(terms) + " terms needs " +
                     std::to_string(terms + 1) + " alphas, got " + std::to_string(seq.size()));
  }
  const auto& a = seq.a();
  std::vector<double> c(terms + 1);
  c[0] = a[0];
  double prefix = 1.0;  // a_1 ... a_{n-1}
  for (std::size_t n = 1; n <= terms; ++n) {
    const double sign = n % 2 == 1 ? 1.0 : -1.0;
    c[n] = sign * prefix * (1.0 - a[n - 1] * a[n]);
    prefix *= a[n - 1];
  }
  return c;
}

Complex alpha_series_partial(const AlphaSequence& seq, Complex x, std::size_t terms) {
  const auto c = alpha_series_coefficients(seq, terms);
  Complex acc = c[0];
  Complex product = 1.0;
  for (std::size_t n = 1; n <= terms; ++n) {
    product *= multiscale::periodic_blaschke_alpha(seq.alphas()[n - 1], x);
    acc += c[n] * product;
  }
  return acc;
}

double alpha_series_remainder_bound(const AlphaSequence& seq, std::size_t terms) {
  if (terms > seq.size()) throw IndexError("alpha_series_remainder_bound: terms exceeds sequence");
  double bound = 2.0;
  for (std::size_t k = 0; k < terms; ++k) bound *= seq.a()[k];
  return bound;
}

double dirac_inner_residual(double x, DiracVariant variant) {
  if (!(std::abs(x) >= kSingularRadius)) {
    throw NearSingularError("dirac_inner_residual: |x| < 1e-6 is too close to the singularity");
  }
  const double y = 1.0 / x;
  switch (variant) {
    case DiracVariant::literal:
      return std::abs(boundary_exp(-y) - recur_rhs(periodic_blaschke(y)));
    case DiracVariant::inner:
      return std::abs(boundary_exp(-y) - recur_rhs(periodic_blaschke(-y)));
    case DiracVariant::reflected:
      return std::abs(boundary_exp(y) - recur_rhs(periodic_blaschke(y)));
  }
  throw DomainError("dirac_inner_residual: unknown variant");
}

TorusSubstitution torus_substitution_residual(double theta, std::size_t terms,
                                              TorusTarget target) {
  if (!(theta >= kThetaMargin && theta <= 2.0 * kPi - kThetaMargin)) {
    throw DomainError("torus_substitution_residual: theta must lie in [1e-4, 2 pi - 1e-4]");
  }
  const Complex e = std::polar(1.0, theta);
  const Complex w = (1.0 + e) / (1.0 - e);
  Complex x = kI / (2.0 * kPi) * w;
  if (x.imag() < -1e-12) {
    throw DomainError("torus_substitution_residual: substituted point left the upper half-plane");
  }
  x = {x.real(), std::max(x.imag(), 0.0)};
  const Complex series = pro_unwinding_partial(x, terms);
  const Complex exact = target == TorusTarget::inner ? std::exp(-w) : std::exp(w);
  const double g_modulus = std::abs(periodic_blaschke(x));
  return {std::abs(series - exact),
          pro_unwinding_tail_bound(terms) * std::pow(g_modulus, static_cast<double>(terms + 1)), x};
}

}  // namespace hardy::identities
