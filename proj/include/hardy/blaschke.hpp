#pragma once

#include <cstddef>
#include <vector>

#include "hardy/special.hpp"
#include "hardy/torus.hpp"

namespace hardy::blaschke {

/// Products longer than this are accumulated in log space.
inline constexpr std::size_t kLogSpaceDegree = 128;

/// Finite Blaschke product on the unit disk, prod_j (z - a_j) / (1 - conj(a_j) z).
/// Multiplicities are expressed by repeating a zero.
class DiskBlaschke {
 public:
  DiskBlaschke() = default;
  /// Throws DomainError unless every |a_j| <= 1 - 1e-12.
  explicit DiskBlaschke(std::vector<Complex> zeros);

  const std::vector<Complex>& zeros() const noexcept { return zeros_; }
  std::size_t degree() const noexcept { return zeros_.size(); }

 private:
  std::vector<Complex> zeros_;
};

enum class Convention { standard_factor, none };

/// Blaschke product on the upper half-plane,
/// prod_j c_j (x - a_j) / (x - conj(a_j)) with c_j = |1 + a_j^2| / (1 + a_j^2)
/// under Convention::standard_factor (c_j = 1 when a_j = i) and c_j = 1 otherwise.
class HalfPlaneBlaschke {
 public:
  HalfPlaneBlaschke() = default;
  /// Throws DomainError unless every Im a_j >= 1e-12.
  HalfPlaneBlaschke(std::vector<Complex> zeros, Convention convention);

  const std::vector<Complex>& zeros() const noexcept { return zeros_; }
  Convention convention() const noexcept { return convention_; }

 private:
  std::vector<Complex> zeros_;
  Convention convention_ = Convention::standard_factor;
};

/// Single Moebius factor (z - a) / (1 - conj(a) z).
Complex moebius(Complex a, Complex z);

/// Requires |z| <= 1.
Complex eval_disk(const DiskBlaschke& b, Complex z);

/// Partial product over the first `truncation` zeros; requires Im x >= 0.
Complex eval_halfplane(const HalfPlaneBlaschke& b, Complex x, std::size_t truncation);
Complex eval_halfplane(const HalfPlaneBlaschke& b, Complex x);

/// Convergence factor |1 + a^2| / (1 + a^2), equal to 1 at a = i.
Complex standard_factor(Complex a);

/// Boundary samples of a disk product on an N-point grid.
torus::GridFunction sample(const DiskBlaschke& b, std::size_t n);

}  // namespace hardy::blaschke
