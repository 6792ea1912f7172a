#include "hardy/multiscale.hpp"

#include <cmath>
#include <string>

#include "hardy/errors.hpp"

namespace hardy::multiscale {
namespace {

void require_upper(Complex x, const char* who) {
  if (x.imag() < 0.0) throw DomainError(std::string(who) + ": Im x < 0");
  if (x.imag() > kMaxImag) {
    throw OverflowError(std::string(who) + ": Im x > 40 overflows the sine form");
  }
}

// (w - q) / (1 - q w), w = e^{2 i pi x}; the real part of x is reduced mod 1
// before scaling so large arguments stay exact.
Complex sine_ratio(double q, Complex x) {
  const double frac = x.real() - std::round(x.real());
  const Complex w = std::exp(2.0 * kPi * kI * Complex(frac, x.imag()));
  return (w - q) / (1.0 - q * w);
}

void require_scales(const DeltaSpec& spec) {
  if (spec.scales < 1) throw DomainError("Delta needs at least one scale");
}

}  // namespace

Complex periodic_blaschke(Complex x) {
  require_upper(x, "periodic_blaschke");
  return sine_ratio(kQ, x);
}

Complex periodic_blaschke_alpha(double alpha, Complex x) {
  if (!(alpha > 0.0)) throw DomainError("periodic_blaschke_alpha: alpha must be positive");
  require_upper(x, "periodic_blaschke_alpha");
  return sine_ratio(std::exp(-2.0 * kPi * alpha), x);
}

Complex periodic_blaschke_prefix(long n, Complex x) {
  const double shift = static_cast<double>(n);
  const Complex lower = x - shift - kI;
  // 1 / Gamma vanishes at the zeros j + i, j <= n.
  if (special::is_gamma_pole(lower, 1e-12)) return 0.0;
  using special::log_gamma;
  const Complex log_value = log_gamma(-kI - shift) - log_gamma(kI - shift) +
                            log_gamma(x - shift + kI) - log_gamma(lower);
  return std::exp(log_value);
}

Complex scaling_atom(Complex x) {
  if (x.imag() < 0.0) throw DomainError("scaling_atom: Im x < 0");
  const Complex denominator_arg = x - kI;
  if (special::is_gamma_pole(denominator_arg, 1e-12)) return 0.0;
  return std::exp(special::log_gamma(x - 1.0 + kI) - special::log_gamma(denominator_arg)) /
         std::sqrt(kPi);
}

DeltaValue dyadic_inner(Complex x, const DeltaSpec& spec) {
  require_scales(spec);
  Complex value = spec.include_j0 ? periodic_blaschke(x) : Complex(1.0);
  for (int j = 1; j <= spec.scales; ++j) value *= periodic_blaschke(std::ldexp(1.0, -j) * x);
  return {value, kOneMinusGConstant * std::abs(x) * std::ldexp(1.0, -spec.scales)};
}

double dyadic_phase(double x, const DeltaSpec& spec) {
  require_scales(spec);
  auto factor_phase = [](double y) {
    const double frac = y - std::round(y);
    const Complex w = std::exp(2.0 * kPi * kI * frac);
    return 2.0 * kPi * y - 2.0 * std::arg(1.0 - kQ * w);
  };
  double phase = spec.include_j0 ? factor_phase(x) : 0.0;
  for (int j = 1; j <= spec.scales; ++j) phase += factor_phase(std::ldexp(x, -j));
  return phase;
}

double dyadic_sine_sum(double t, int k_max) {
  if (k_max < 0) throw DomainError("dyadic_sine_sum: k_max must be non-negative");
  if (t == 0.0) return 0.0;
  if (k_max == 0) {
    k_max = 1;
    while (std::ldexp(std::abs(t), -k_max) > 1e-6) ++k_max;
  }
  double acc = 0.0;
  for (int k = 1; k <= k_max; ++k) acc += std::sin(std::ldexp(t, -k));
  return acc + std::ldexp(t, -k_max);
}

Complex wavelet(WaveletIndex idx, Complex x, const DeltaSpec& spec) {
  const double scale = std::ldexp(1.0, idx.n);
  const Complex y = scale * x;
  return std::sqrt(scale) * scaling_atom(y - static_cast<double>(idx.j)) *
         dyadic_inner(y, spec).value;
}

halfplane::Function wavelet_function(WaveletIndex idx, const DeltaSpec& spec) {
  return {[idx, spec](Complex x) { return wavelet(idx, x, spec); }, 1.0,
          "wavelet(" + std::to_string(idx.n) + "," + std::to_string(idx.j) + ")"};
}

WaveletCoefficients wavelet_analyze(const halfplane::Function& f, int n_lo, int n_hi, int j_lo,
                                    int j_hi, const DeltaSpec& spec,
                                    const halfplane::QuadratureSpec& quad) {
  if (n_lo > n_hi || j_lo > j_hi) throw DomainError("wavelet_analyze: empty index rectangle");
  if (f.decay_exponent < 1.0) {
    throw DomainError("wavelet_analyze: '" + f.label + "' decays slower than 1/|x|");
  }
  const halfplane::Quadrature rule(quad);
  const auto values = rule.sample(f);
  auto residual = values;
  WaveletCoefficients out;
  for (int n = n_lo; n <= n_hi; ++n) {
    for (int j = j_lo; j <= j_hi; ++j) {
      const WaveletIndex idx{n, j};
      const auto basis = rule.sample(wavelet_function(idx, spec));
      const Complex c = rule.inner_product(values, basis);
      for (std::size_t i = 0; i < residual.size(); ++i) residual[i] -= c * basis[i];
      out.coeffs.push_back({idx, c});
      out.residuals.push_back({idx, rule.norm(residual)});
    }
  }
  return out;
}

}  // namespace hardy::multiscale
