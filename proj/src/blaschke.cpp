#include "hardy/blaschke.hpp"

#include <cmath>
#include <string>

#include "hardy/errors.hpp"

namespace hardy::blaschke {
namespace {

constexpr double kInteriorMargin = 1e-12;

// Accumulates factor values, switching to a log-space sum for long products.
template <class FactorAt>
Complex product(std::size_t count, FactorAt factor_at) {
  if (count <= kLogSpaceDegree) {
    Complex acc = 1.0;
    for (std::size_t j = 0; j < count; ++j) acc *= factor_at(j);
    return acc;
  }
  Complex log_acc = 0.0;
  for (std::size_t j = 0; j < count; ++j) {
    const Complex f = factor_at(j);
    if (f == 0.0) return 0.0;
    log_acc += std::log(f);
  }
  return std::exp(log_acc);
}

}  // namespace

DiskBlaschke::DiskBlaschke(std::vector<Complex> zeros) : zeros_(std::move(zeros)) {
  for (const Complex& a : zeros_) {
    if (!(std::abs(a) <= 1.0 - kInteriorMargin)) {
      throw DomainError("disk Blaschke zero outside the open disk: |a| = " +
                        std::to_string(std::abs(a)));
    }
  }
}

HalfPlaneBlaschke::HalfPlaneBlaschke(std::vector<Complex> zeros, Convention convention)
    : zeros_(std::move(zeros)), convention_(convention) {
  for (const Complex& a : zeros_) {
    if (!(a.imag() >= kInteriorMargin)) {
      throw DomainError("half-plane Blaschke zero not in the upper half-plane: Im a = " +
                        std::to_string(a.imag()));
    }
  }
}

Complex moebius(Complex a, Complex z) { return (z - a) / (1.0 - std::conj(a) * z); }

Complex standard_factor(Complex a) {
  const Complex s = 1.0 + a * a;
  // 0/0 at a = i is read as 1.
  if (std::abs(s) < 1e-300) return 1.0;
  return std::abs(s) / s;
}

Complex eval_disk(const DiskBlaschke& b, Complex z) {
  if (std::abs(z) > 1.0 + 1e-12) throw DomainError("eval_disk: |z| > 1");
  const auto& zeros = b.zeros();
  return product(zeros.size(), [&](std::size_t j) { return moebius(zeros[j], z); });
}

Complex eval_halfplane(const HalfPlaneBlaschke& b, Complex x, std::size_t truncation) {
  if (x.imag() < 0.0) throw DomainError("eval_halfplane: Im x < 0");
  const auto& zeros = b.zeros();
  if (truncation > zeros.size()) {
    throw IndexError("eval_halfplane: truncation " + std::to_string(truncation) +
                     " exceeds the number of zeros");
  }
  const bool with_factor = b.convention() == Convention::standard_factor;
  return product(truncation, [&](std::size_t j) {
    const Complex a = zeros[j];
    const Complex f = (x - a) / (x - std::conj(a));
    return with_factor ? standard_factor(a) * f : f;
  });
}

Complex eval_halfplane(const HalfPlaneBlaschke& b, Complex x) {
  return eval_halfplane(b, x, b.zeros().size());
}

torus::GridFunction sample(const DiskBlaschke& b, std::size_t n) {
  return torus::GridFunction::sample(n, [&](Complex z) { return eval_disk(b, z); });
}

}  // namespace hardy::blaschke
