#include "hardy/mtbasis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hardy/blaschke.hpp"
#include "hardy/errors.hpp"

namespace hardy::mt {
namespace {

constexpr double kInteriorMargin = 1e-12;

void require_index(const MTSystem& sys, std::size_t n) {
  if (n >= sys.size()) {
    throw IndexError("MT index " + std::to_string(n) + " out of range for a system of " +
                     std::to_string(sys.size()) + " points");
  }
}

void require_count(const MTSystem& sys, std::size_t count) {
  if (count > sys.size()) {
    throw IndexError("requested " + std::to_string(count) + " MT functions from a system of " +
                     std::to_string(sys.size()) + " points");
  }
}

}  // namespace

MTSystem::MTSystem(Domain domain, std::vector<Complex> points)
    : domain_(domain), points_(std::move(points)) {
  for (const Complex& a : points_) {
    const bool ok = domain_ == Domain::disk ? std::abs(a) <= 1.0 - kInteriorMargin
                                            : a.imag() >= kInteriorMargin;
    if (!ok) {
      throw DomainError(domain_ == Domain::disk ? "MT disk point outside the open disk"
                                                : "MT half-plane point not in the upper half-plane");
    }
  }
}

double MTSystem::divergence_indicator(std::size_t prefix) const {
  require_count(*this, prefix);
  double acc = 0.0;
  for (std::size_t j = 0; j < prefix; ++j) {
    const Complex a = points_[j];
    acc += domain_ == Domain::disk ? 1.0 - std::norm(a) : a.imag() / (1.0 + std::norm(a));
  }
  return acc;
}

Complex mt_function(const MTSystem& sys, std::size_t n, Complex x) {
  require_index(sys, n);
  const auto& pts = sys.points();
  const Complex a = pts[n];
  if (sys.domain() == Domain::disk) {
    if (std::abs(x) > 1.0 + 1e-12) throw DomainError("mt_function: |z| > 1");
    Complex prefix = 1.0;
    for (std::size_t j = 0; j < n; ++j) prefix *= blaschke::moebius(pts[j], x);
    return prefix * std::sqrt(1.0 - std::norm(a)) / (1.0 - std::conj(a) * x);
  }
  if (x.imag() < 0.0) throw DomainError("mt_function: Im x < 0");
  Complex prefix = 1.0;
  for (std::size_t j = 0; j < n; ++j) prefix *= (x - pts[j]) / (x - std::conj(pts[j]));
  return prefix * std::sqrt(a.imag() / kPi) / (x - std::conj(a));
}

torus::GridFunction sample_disk(const MTSystem& sys, std::size_t n, std::size_t grid_size) {
  if (sys.domain() != Domain::disk) throw DomainError("sample_disk: system is not a disk system");
  require_index(sys, n);
  return torus::GridFunction::sample(grid_size, [&](Complex z) { return mt_function(sys, n, z); });
}

halfplane::Function mt_halfplane_function(const MTSystem& sys, std::size_t n) {
  if (sys.domain() != Domain::halfplane) {
    throw DomainError("mt_halfplane_function: system is not a half-plane system");
  }
  require_index(sys, n);
  return {[sys, n](Complex x) { return mt_function(sys, n, x); }, 1.0,
          "mt_" + std::to_string(n)};
}

MTCoefficients analyze_disk(const torus::GridFunction& f, const MTSystem& sys, std::size_t count) {
  if (sys.domain() != Domain::disk) throw DomainError("analyze_disk: system is not a disk system");
  require_count(sys, count);
  const std::size_t n = f.size();
  MTCoefficients out;
  out.values.reserve(count);
  out.residual_norms.reserve(count);
  std::vector<Complex> residual(f.samples().begin(), f.samples().end());
  for (std::size_t k = 0; k < count; ++k) {
    const auto basis = sample_disk(sys, k, n);
    const Complex c = torus::inner_product(f, basis);
    out.values.push_back(c);
    for (std::size_t i = 0; i < n; ++i) residual[i] -= c * basis[i];
    out.residual_norms.push_back(torus::lp_norm(torus::GridFunction(residual), 2.0));
  }
  return out;
}

torus::GridFunction synthesize(const MTSystem& sys, const MTCoefficients& coeffs,
                               std::size_t count, std::size_t grid_size) {
  if (count > coeffs.values.size()) {
    throw IndexError("synthesize: only " + std::to_string(coeffs.values.size()) +
                     " coefficients available");
  }
  std::vector<Complex> acc(grid_size, 0.0);
  for (std::size_t k = 0; k < count; ++k) {
    const auto basis = sample_disk(sys, k, grid_size);
    for (std::size_t i = 0; i < grid_size; ++i) acc[i] += coeffs.values[k] * basis[i];
  }
  return torus::GridFunction(std::move(acc));
}

MTCoefficients analyze_halfplane(const halfplane::Function& f, const MTSystem& sys,
                                 std::size_t count, const halfplane::QuadratureSpec& quad) {
  if (sys.domain() != Domain::halfplane) {
    throw DomainError("analyze_halfplane: system is not a half-plane system");
  }
  require_count(sys, count);
  if (f.decay_exponent < 1.0) {
    throw DomainError("analyze_halfplane: '" + f.label + "' decays slower than 1/|x|");
  }

  auto run = [&](const halfplane::QuadratureSpec& spec) {
    const halfplane::Quadrature rule(spec);
    const auto values = rule.sample(f);
    auto residual = values;
    MTCoefficients out;
    for (std::size_t k = 0; k < count; ++k) {
      const auto basis = rule.sample(mt_halfplane_function(sys, k));
      const Complex c = rule.inner_product(values, basis);
      out.values.push_back(c);
      for (std::size_t i = 0; i < residual.size(); ++i) residual[i] -= c * basis[i];
      out.residual_norms.push_back(rule.norm(residual));
    }
    return out;
  };

  auto result = run(quad);
  if (quad.tolerance > 0.0) {
    auto coarse_spec = quad;
    coarse_spec.nodes = quad.nodes / 2;
    const auto coarse = run(coarse_spec);
    double worst = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
      worst = std::max(worst, std::abs(result.values[k] - coarse.values[k]));
    }
    if (worst > quad.tolerance) {
      throw QuadratureError("analyze_halfplane: M vs M/2 discrepancy " + detail::sci(worst),
                            worst);
    }
  }
  return result;
}

}  // namespace hardy::mt
