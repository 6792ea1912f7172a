#pragma once

#include <cstddef>
#include <vector>

#include "hardy/quadrature.hpp"
#include "hardy/special.hpp"
#include "hardy/torus.hpp"

namespace hardy::mt {

enum class Domain { disk, halfplane };

/// Ordered pole sequence of a Malmquist-Takenaka system.
class MTSystem {
 public:
  /// Disk points need |a| <= 1 - 1e-12, half-plane points Im a >= 1e-12.
  MTSystem(Domain domain, std::vector<Complex> points);

  Domain domain() const noexcept { return domain_; }
  const std::vector<Complex>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }

  /// Partial sum of 1 - |a|^2 (disk) or Im a / (1 + |a|^2) (half-plane)
  /// over the first `prefix` points. Divergence of the full series is what
  /// makes the system complete; a finite prefix only gives a trend.
  double divergence_indicator(std::size_t prefix) const;
  double divergence_indicator() const { return divergence_indicator(points_.size()); }

 private:
  Domain domain_;
  std::vector<Complex> points_;
};

struct MTCoefficients {
  std::vector<Complex> values;
  /// residual_norms[n] = || f - sum_{k <= n} c_k phi_k ||_2
  std::vector<double> residual_norms;
};

/// n-th basis function.
/// disk: B_n(z) sqrt(1 - |a_n|^2) / (1 - conj(a_n) z) with B_n the product over the first n points.
/// half-plane: sqrt(Im a_n / pi) prod_{j<n} (x - a_j)/(x - conj(a_j)) / (x - conj(a_n)),
/// which has unit norm in L^2(R, dx).
Complex mt_function(const MTSystem& sys, std::size_t n, Complex x);

torus::GridFunction sample_disk(const MTSystem& sys, std::size_t n, std::size_t grid_size);

/// Half-plane basis function as an integrable handle.
halfplane::Function mt_halfplane_function(const MTSystem& sys, std::size_t n);

MTCoefficients analyze_disk(const torus::GridFunction& f, const MTSystem& sys, std::size_t count);

/// sum_{n < count} c_n phi_n on a grid of the given size.
torus::GridFunction synthesize(const MTSystem& sys, const MTCoefficients& coeffs,
                               std::size_t count, std::size_t grid_size);

MTCoefficients analyze_halfplane(const halfplane::Function& f, const MTSystem& sys,
                                 std::size_t count, const halfplane::QuadratureSpec& quad = {});

}  // namespace hardy::mt
