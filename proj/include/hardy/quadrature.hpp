#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hardy/special.hpp"

namespace hardy::halfplane {

/// Function on the closed upper half-plane, used through its boundary values.
/// decay_exponent promises |f(x)| <= C / |x|^decay for large real |x|.
struct Function {
  std::function<Complex(Complex)> eval;
  double decay_exponent = 1.0;
  std::string label;

  Complex operator()(Complex x) const { return eval(x); }
};

enum class Rule {
  /// Composite Gauss-Legendre under a smooth window on [-X, X] plus a
  /// low-pass filtered tail. Handles integrands that oscillate at infinity
  /// (inner factors such as periodic Blaschke products).
  windowed_panels,
  /// x = tan(theta/2), trapezoid in theta. Spectrally accurate for
  /// integrands that are smooth at infinity, slow for oscillating ones.
  cayley_trapezoid,
};

struct QuadratureSpec {
  /// Node count M (power of two, >= 64). For windowed_panels, M nodes cover
  /// [-X, X] with X = M * panel_width / 32; the tail adds a fixed node set.
  std::size_t nodes = 8192;
  Rule rule = Rule::windowed_panels;
  /// When positive, results are compared against the M/2 rule and a
  /// QuadratureError is raised if they differ by more than this.
  double tolerance = 0.0;
  /// Panel width of the windowed rule (16 Gauss nodes per panel).
  double panel_width = 1.0;
  /// Width of the tail smoothing kernel. Oscillations at infinity with
  /// angular frequency >= pi / (filter_width / 2) are suppressed to ~1e-8.
  double filter_width = 2.0;
};

/// Nodes x_i and weights w_i on the real line with
/// integral f(x) dx ~= sum_i w_i f(x_i).
class Quadrature {
 public:
  explicit Quadrature(const QuadratureSpec& spec);

  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return nodes_.size(); }

  std::vector<Complex> sample(const Function& f) const;
  Complex integrate(std::span<const Complex> values) const;
  /// sum_i w_i f_i conj(g_i)
  Complex inner_product(std::span<const Complex> f, std::span<const Complex> g) const;
  double norm(std::span<const Complex> f) const;

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// integral over R of f(x) conj(g(x)) dx. Requires decay exponents summing to >= 2.
Complex hp_inner_product(const Function& f, const Function& g, const QuadratureSpec& spec = {});

/// Gram matrix G[a][b] = <f_a, f_b>; each function is sampled once.
std::vector<std::vector<Complex>> hp_gram(std::span<const Function> fs,
                                          const QuadratureSpec& spec = {});

double hp_norm(const Function& f, const QuadratureSpec& spec = {});

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(std::size_t n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace hardy::halfplane
