#include "hardy/torus.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <tuple>

#include "hardy/errors.hpp"
#include "hardy/fft.hpp"

namespace hardy::torus {
namespace {

void require_same_size(const GridFunction& a, const GridFunction& b) {
  if (a.size() != b.size()) {
    throw GridMismatchError("grid sizes differ: " + std::to_string(a.size()) + " vs " +
                            std::to_string(b.size()));
  }
}

template <class Op>
GridFunction pointwise(const GridFunction& a, const GridFunction& b, Op op) {
  require_same_size(a, b);
  std::vector<Complex> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = op(a[k], b[k]);
  return GridFunction(std::move(out));
}

std::size_t slot(int index, std::size_t n) {
  const auto signed_n = static_cast<long>(n);
  return static_cast<std::size_t>(((index % signed_n) + signed_n) % signed_n);
}

}  // namespace

GridFunction::GridFunction(std::vector<Complex> samples) : samples_(std::move(samples)) {
  const std::size_t n = samples_.size();
  if (n < 8 || !std::has_single_bit(n)) {
    throw DomainError("grid size must be a power of two >= 8, got " + std::to_string(n));
  }
  for (const Complex& v : samples_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw DomainError("grid function has non-finite samples");
    }
  }
}

GridFunction GridFunction::constant(std::size_t n, Complex value) {
  return GridFunction(std::vector<Complex>(n, value));
}

GridFunction GridFunction::monomial(std::size_t n, int power) {
  std::vector<Complex> values(n);
  for (std::size_t k = 0; k < n; ++k) {
    // Reduce the angle exactly before scaling by 2 pi.
    long m = (static_cast<long>(k) * power) % static_cast<long>(n);
    if (m < 0) m += static_cast<long>(n);
    const double theta = 2.0 * kPi * static_cast<double>(m) / static_cast<double>(n);
    values[k] = {std::cos(theta), std::sin(theta)};
  }
  return GridFunction(std::move(values));
}

GridFunction GridFunction::from_coefficients(std::span<const Complex> coeffs, int first_index,
                                             std::size_t n) {
  const long half = static_cast<long>(n / 2);
  std::vector<Complex> spectrum(n);
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    const long index = first_index + static_cast<long>(m);
    if (index < -half || index >= half) {
      throw DomainError("coefficient index " + std::to_string(index) +
                        " not representable on a grid of size " + std::to_string(n));
    }
    spectrum[slot(static_cast<int>(index), n)] += coeffs[m];
  }
  return from_spectrum(spectrum);
}

GridFunction GridFunction::from_spectrum(std::span<const Complex> spectrum) {
  return GridFunction(fft::inverse(spectrum));
}

Complex GridFunction::point(std::size_t n, std::size_t k) {
  const double theta = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
  return {std::cos(theta), std::sin(theta)};
}

std::vector<Complex> GridFunction::coefficients() const {
  auto c = fft::forward(samples_);
  const double scale = 1.0 / static_cast<double>(size());
  for (auto& v : c) v *= scale;
  return c;
}

double GridFunction::negative_spectrum_max() const {
  const auto c = coefficients();
  double worst = 0.0;
  for (std::size_t k = size() / 2; k < size(); ++k) worst = std::max(worst, std::abs(c[k]));
  return worst;
}

bool GridFunction::is_analytic(double tol) const {
  return negative_spectrum_max() <= tol * std::max(1.0, max_abs());
}

double GridFunction::max_abs() const {
  double m = 0.0;
  for (const Complex& v : samples_) m = std::max(m, std::abs(v));
  return m;
}

double GridFunction::unimodular_deviation() const {
  double m = 0.0;
  for (const Complex& v : samples_) m = std::max(m, std::abs(std::abs(v) - 1.0));
  return m;
}

Complex GridFunction::eval_interior(Complex z) const {
  const auto c = coefficients();
  Complex acc = 0.0;
  for (std::size_t k = size() / 2; k-- > 0;) acc = acc * z + c[k];
  return acc;
}

GridFunction GridFunction::conj() const {
  std::vector<Complex> out(size());
  std::transform(samples_.begin(), samples_.end(), out.begin(),
                 [](Complex v) { return std::conj(v); });
  return GridFunction(std::move(out));
}

GridFunction operator+(const GridFunction& a, const GridFunction& b) {
  return pointwise(a, b, std::plus<>{});
}
GridFunction operator-(const GridFunction& a, const GridFunction& b) {
  return pointwise(a, b, std::minus<>{});
}
GridFunction operator*(const GridFunction& a, const GridFunction& b) {
  return pointwise(a, b, std::multiplies<>{});
}
GridFunction operator/(const GridFunction& a, const GridFunction& b) {
  return pointwise(a, b, std::divides<>{});
}
GridFunction operator*(Complex s, const GridFunction& a) {
  std::vector<Complex> out(a.samples().begin(), a.samples().end());
  for (auto& v : out) v *= s;
  return GridFunction(std::move(out));
}

GridFunction riesz_project(const GridFunction& f) {
  auto spectrum = fft::forward(f.samples());
  const std::size_t n = f.size();
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) spectrum[k] = k < n / 2 ? spectrum[k] * scale : 0.0;
  return GridFunction::from_spectrum(spectrum);
}

GridFunction project_invariant(const GridFunction& f, const GridFunction& u) {
  require_same_size(f, u);
  if (const double dev = u.unimodular_deviation(); dev > kUnimodularTol) {
    throw NotInnerError("project_invariant: |u| deviates from 1 by " + detail::sci(dev));
  }
  return u * riesz_project(u.conj() * f);
}

namespace {

constexpr double kPolynomialTailTol = 1e-13;
constexpr double kNoiseFloorFactor = 1e3;
constexpr double kNoiseFloorCap = 1e-11;
constexpr double kBoundaryZeroMargin = 1e-6;

GridFunction cepstral_outer(const GridFunction& f, double floor_eps) {
  const std::size_t n = f.size();
  const double floor = floor_eps * f.max_abs();
  std::vector<Complex> log_modulus(n);
  for (std::size_t k = 0; k < n; ++k) log_modulus[k] = std::log(std::max(std::abs(f[k]), floor));

  // Analytic completion of the real function log|f|: keep c_0 and the
  // Nyquist term, double the positive frequencies, drop the negative ones.
  auto spectrum = fft::forward(log_modulus);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (k == 0 || k == n / 2) {
      spectrum[k] = Complex(spectrum[k].real() * scale, 0.0);
    } else if (k < n / 2) {
      spectrum[k] *= 2.0 * scale;
    } else {
      spectrum[k] = 0.0;
    }
  }
  auto completion = fft::inverse(spectrum);
  for (auto& v : completion) v = std::exp(v);
  return GridFunction(std::move(completion));
}

// Roots of sum_k c[k] z^k (c.back() != 0), polished by Newton steps.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& c) {
  const auto degree = static_cast<Eigen::Index>(c.size() - 1);
  if (degree == 0) return {};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(degree, degree);
  for (Eigen::Index i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < degree; ++i) companion(i, degree - 1) = -c[i] / c.back();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw IllConditionedError("polynomial root finding failed", 1.0);
  std::vector<Complex> roots(solver.eigenvalues().begin(), solver.eigenvalues().end());
  auto eval = [&](Complex z) {
    Complex p = 0.0;
    Complex dp = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) {
      dp = dp * z + p;
      p = p * z + c[k];
    }
    return std::pair{p, dp};
  };
  for (auto& r : roots) {
    for (int iter = 0; iter < 3; ++iter) {
      const auto [p, dp] = eval(r);
      if (dp == 0.0) break;
      const Complex next = r - p / dp;
      if (std::abs(eval(next).first) >= std::abs(p)) break;
      r = next;
    }
  }
  return roots;
}

std::pair<GridFunction, GridFunction> root_factors(const GridFunction& f, std::size_t degree) {
  const std::size_t n = f.size();
  const auto coeffs = f.coefficients();
  std::size_t low = 0;
  const double peak = std::abs(*std::max_element(coeffs.begin(), coeffs.begin() + degree + 1,
                                                 [](Complex a, Complex b) { return std::abs(a) < std::abs(b); }));
  while (std::abs(coeffs[low]) <= kPolynomialTailTol * peak) ++low;
  const std::vector<Complex> reduced(coeffs.begin() + static_cast<long>(low),
                                     coeffs.begin() + static_cast<long>(degree) + 1);
  const auto monomial = GridFunction::monomial(n, static_cast<int>(low));
  std::vector<Complex> blaschke(monomial.samples().begin(), monomial.samples().end());
  for (const Complex& r : polynomial_roots(reduced)) {
    if (std::abs(r) >= 1.0 - kBoundaryZeroMargin) continue;
    for (std::size_t k = 0; k < n; ++k) {
      const Complex z = GridFunction::point(n, k);
      blaschke[k] *= (z - r) / (1.0 - std::conj(r) * z);
    }
  }
  GridFunction inner(std::move(blaschke));
  return {inner, f / inner};
}

}  // namespace

long polynomial_degree(const GridFunction& f) {
  const auto c = f.coefficients();
  const std::size_t half = f.size() / 2;
  double peak = 0.0;
  for (const Complex& v : c) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return -1;
  // On [N/4, N/2) a polynomial has only rounding noise; the median there sets
  // the floor trailing coefficients are compared against, capped so that a
  // slowly decaying series is never truncated above 1e-11.
  std::vector<double> noise;
  for (std::size_t k = half / 2; k < half; ++k) noise.push_back(std::abs(c[k]));
  std::nth_element(noise.begin(), noise.begin() + static_cast<long>(noise.size() / 2), noise.end());
  const double threshold =
      std::max(kPolynomialTailTol * peak,
               std::min(kNoiseFloorFactor * noise[noise.size() / 2], kNoiseFloorCap * peak));
  for (std::size_t k = half; k < c.size(); ++k) {
    if (std::abs(c[k]) > threshold) return -1;
  }
  for (std::size_t k = half; k-- > 0;) {
    if (std::abs(c[k]) > threshold) {
      // A polynomial fills less than half of the analytic band; anything
      // longer is more likely a truncated series.
      return k < half / 2 ? static_cast<long>(k) : -1;
    }
  }
  return -1;
}

namespace {

InnerOuterPair factor(const GridFunction& f, double floor_eps, FactorMethod method,
                      std::span<const Complex> denominator) {
  const double peak = f.max_abs();
  if (peak < 1e-300) throw ZeroFunctionError("inner_outer_factor: zero function");
  if (!f.is_analytic()) {
    throw DomainError("inner_outer_factor: input has negative-frequency content");
  }

  const std::size_t n = f.size();
  GridFunction numerator = f;
  GridFunction q = GridFunction::constant(n, 1.0);
  if (!denominator.empty() && method != FactorMethod::cepstral) {
    q = GridFunction::from_coefficients(denominator, 0, n);
    numerator = f * q;
  }
  const long degree = method == FactorMethod::cepstral ? -1 : polynomial_degree(numerator);
  const bool use_roots = degree >= 0 && degree <= static_cast<long>(kRootDegreeLimit);
  if (method == FactorMethod::roots && !use_roots) {
    throw DomainError("inner_outer_factor: root method needs a polynomial of degree <= " +
                      std::to_string(kRootDegreeLimit));
  }

  GridFunction inner = f;
  GridFunction outer = f;
  if (use_roots) {
    std::tie(inner, outer) = root_factors(numerator, static_cast<std::size_t>(degree));
    outer = outer / q;
    // Rotate the unimodular constant into the inner part so that outer(0) > 0.
    const Complex c0 = outer.coefficients()[0];
    const Complex phase = c0 / std::abs(c0);
    inner = phase * inner;
    outer = std::conj(phase) * outer;
  } else {
    outer = cepstral_outer(f, floor_eps);
    inner = f / outer;
  }

  InnerOuterPair result{inner, outer};
  result.method = use_roots ? FactorMethod::roots : FactorMethod::cepstral;
  result.modulus_deviation = inner.unimodular_deviation();
  double err = 0.0;
  for (std::size_t k = 0; k < n; ++k) err = std::max(err, std::abs(inner[k] * outer[k] - f[k]));
  result.reconstruction_error = err / peak;
  result.inner_negative_spectrum = inner.negative_spectrum_max();
  if (result.modulus_deviation > kMaxInnerDeviation) {
    throw IllConditionedError("inner_outer_factor: inner modulus deviation " +
                                  std::to_string(result.modulus_deviation) +
                                  " exceeds 1e-3; retry with a larger grid",
                              result.modulus_deviation);
  }
  return result;
}

}  // namespace

InnerOuterPair inner_outer_factor(const GridFunction& f, double floor_eps, FactorMethod method) {
  return factor(f, floor_eps, method, {});
}

InnerOuterPair inner_outer_factor_rational(const GridFunction& f, std::span<const Complex> denominator,
                                           double floor_eps) {
  if (denominator.empty()) throw DomainError("inner_outer_factor_rational: empty denominator");
  for (std::size_t k = 0; k < f.size(); ++k) {
    Complex q = 0.0;
    const Complex z = GridFunction::point(f.size(), k);
    for (std::size_t j = denominator.size(); j-- > 0;) q = q * z + denominator[j];
    if (std::abs(q) < 1e-12) throw DomainError("inner_outer_factor_rational: denominator vanishes on the circle");
  }
  return factor(f, floor_eps, FactorMethod::automatic, denominator);
}

double lp_norm(const GridFunction& f, double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("lp_norm: p must lie in [1, inf)");
  const double peak = f.max_abs();
  if (peak == 0.0) return 0.0;
  double acc = 0.0;
  for (const Complex& v : f.samples()) acc += std::pow(std::abs(v) / peak, p);
  return peak * std::pow(acc / static_cast<double>(f.size()), 1.0 / p);
}

Complex inner_product(const GridFunction& f, const GridFunction& g) {
  require_same_size(f, g);
  Complex acc = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) acc += f[k] * std::conj(g[k]);
  return acc / static_cast<double>(f.size());
}

}  // namespace hardy::torus
