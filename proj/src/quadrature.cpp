#include "hardy/quadrature.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "hardy/errors.hpp"

namespace hardy::halfplane {
namespace {

constexpr std::size_t kPanelOrder = 16;
constexpr std::size_t kTailOrder = 16;
constexpr double kKernelSupport = 6.0;  // in units of filter_width

// Septic smoothstep, 1 on (-inf, 0], 0 on [1, inf), three vanishing derivatives.
double window_step(double u) {
  if (u <= 0.0) return 1.0;
  if (u >= 1.0) return 0.0;
  const double u4 = u * u * u * u;
  return 1.0 - u4 * (35.0 - 84.0 * u + 70.0 * u * u - 20.0 * u * u * u);
}

// Fourth-order Gaussian kernel: unit mass, vanishing second moment.
double smoothing_kernel(double u, double sigma) {
  const double z = u / sigma;
  return (1.5 - 0.5 * z * z) * std::exp(-0.5 * z * z) / (sigma * std::sqrt(2.0 * kPi));
}

void validate(const QuadratureSpec& spec) {
  if (spec.nodes < 64 || !std::has_single_bit(spec.nodes)) {
    throw DomainError("quadrature nodes must be a power of two >= 64, got " +
                      std::to_string(spec.nodes));
  }
  if (!(spec.panel_width > 0.0) || !(spec.filter_width > 0.0)) {
    throw DomainError("quadrature panel and filter widths must be positive");
  }
}

void build_cayley(std::size_t m, std::vector<double>& x, std::vector<double>& w) {
  x.resize(m);
  w.resize(m);
  const double h = 2.0 * kPi / static_cast<double>(m);
  for (std::size_t k = 0; k < m; ++k) {
    // Midpoint offset keeps the node at infinity out of the rule.
    const double theta = -kPi + (static_cast<double>(k) + 0.5) * h;
    const double t = std::tan(0.5 * theta);
    x[k] = t;
    w[k] = 0.5 * h * (1.0 + t * t);
  }
}

void build_windowed(const QuadratureSpec& spec, std::vector<double>& x, std::vector<double>& w) {
  std::vector<double> gx;
  std::vector<double> gw;
  gauss_legendre(kPanelOrder, gx, gw);

  const double width = spec.panel_width;
  const std::size_t panels = spec.nodes / kPanelOrder;
  const double half_span = 0.5 * static_cast<double>(panels) * width;
  const double inner = 0.5 * half_span;  // window is 1 on [-inner, inner]

  x.clear();
  w.clear();
  x.reserve(spec.nodes);
  w.reserve(spec.nodes);
  for (std::size_t p = 0; p < panels; ++p) {
    const double left = -half_span + static_cast<double>(p) * width;
    for (std::size_t k = 0; k < kPanelOrder; ++k) {
      const double node = left + 0.5 * width * (1.0 + gx[k]);
      const double chi = window_step((std::abs(node) - inner) / inner);
      x.push_back(node);
      w.push_back(0.5 * width * gw[k] * chi);
    }
  }

  // Kernel quadrature on [-L, L].
  const double sigma = spec.filter_width;
  const double support = kKernelSupport * sigma;
  const auto kernel_panels = static_cast<std::size_t>(std::ceil(2.0 * support / width));
  const double kernel_width = 2.0 * support / static_cast<double>(kernel_panels);
  std::vector<double> ku;
  std::vector<double> kw;
  for (std::size_t p = 0; p < kernel_panels; ++p) {
    const double left = -support + static_cast<double>(p) * kernel_width;
    for (std::size_t k = 0; k < kPanelOrder; ++k) {
      const double u = left + 0.5 * kernel_width * (1.0 + gx[k]);
      ku.push_back(u);
      kw.push_back(0.5 * kernel_width * gw[k] * smoothing_kernel(u, sigma));
    }
  }

  // Tail: the complement (1 - window) applied to the locally averaged
  // integrand, integrated in t = inner / |x| on (0, 1].
  std::vector<double> tx;
  std::vector<double> tw;
  gauss_legendre(kTailOrder, tx, tw);
  for (int side : {1, -1}) {
    for (double t_left : {0.0, 0.5}) {
      for (std::size_t k = 0; k < kTailOrder; ++k) {
        const double t = t_left + 0.25 * (1.0 + tx[k]);
        const double xt = inner / t;
        const double weight = 0.25 * tw[k] * inner / (t * t) *
                              (1.0 - window_step((xt - inner) / inner));
        for (std::size_t l = 0; l < ku.size(); ++l) {
          x.push_back(side * (xt + ku[l]));
          w.push_back(weight * kw[l]);
        }
      }
    }
  }
}

void check_decay(const Function& f, const Function& g) {
  if (f.decay_exponent + g.decay_exponent < 2.0) {
    throw DomainError("hp_inner_product: decay exponents of '" + f.label + "' and '" + g.label +
                      "' sum to less than 2");
  }
}

std::vector<std::vector<Complex>> gram_with(std::span<const Function> fs,
                                            const QuadratureSpec& spec) {
  const Quadrature quad(spec);
  std::vector<std::vector<Complex>> samples;
  samples.reserve(fs.size());
  for (const auto& f : fs) samples.push_back(quad.sample(f));
  std::vector<std::vector<Complex>> gram(fs.size(), std::vector<Complex>(fs.size()));
  for (std::size_t a = 0; a < fs.size(); ++a) {
    for (std::size_t b = a; b < fs.size(); ++b) {
      gram[a][b] = quad.inner_product(samples[a], samples[b]);
      gram[b][a] = std::conj(gram[a][b]);
    }
  }
  return gram;
}

}  // namespace

void gauss_legendre(std::size_t n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(kPi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = z;
      for (std::size_t k = 2; k <= n; ++k) {
        const double p2 =
            ((2.0 * static_cast<double>(k) - 1.0) * z * p1 - (static_cast<double>(k) - 1.0) * p0) /
            static_cast<double>(k);
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (z * p1 - p0) / (z * z - 1.0);
      const double step = p1 / dp;
      z -= step;
      if (std::abs(step) < 1e-16) break;
    }
    nodes[i] = -z;
    nodes[n - 1 - i] = z;
    weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
}

Quadrature::Quadrature(const QuadratureSpec& spec) {
  validate(spec);
  if (spec.rule == Rule::cayley_trapezoid) {
    build_cayley(spec.nodes, nodes_, weights_);
  } else {
    build_windowed(spec, nodes_, weights_);
  }
}

std::vector<Complex> Quadrature::sample(const Function& f) const {
  std::vector<Complex> out(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) out[i] = f(Complex(nodes_[i], 0.0));
  return out;
}

Complex Quadrature::integrate(std::span<const Complex> values) const {
  Complex acc = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) acc += weights_[i] * values[i];
  return acc;
}

Complex Quadrature::inner_product(std::span<const Complex> f, std::span<const Complex> g) const {
  Complex acc = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) acc += weights_[i] * f[i] * std::conj(g[i]);
  return acc;
}

double Quadrature::norm(std::span<const Complex> f) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) acc += weights_[i] * std::norm(f[i]);
  // Kernel weights are signed, so a vanishing norm can come out slightly negative.
  return std::sqrt(std::max(acc, 0.0));
}

Complex hp_inner_product(const Function& f, const Function& g, const QuadratureSpec& spec) {
  check_decay(f, g);
  const Function pair[] = {f, g};
  return hp_gram(pair, spec)[0][1];
}

std::vector<std::vector<Complex>> hp_gram(std::span<const Function> fs,
                                          const QuadratureSpec& spec) {
  for (const auto& f : fs) check_decay(f, f);
  auto gram = gram_with(fs, spec);
  if (spec.tolerance > 0.0) {
    QuadratureSpec coarse = spec;
    coarse.nodes = spec.nodes / 2;
    const auto reference = gram_with(fs, coarse);
    double worst = 0.0;
    for (std::size_t a = 0; a < fs.size(); ++a) {
      for (std::size_t b = 0; b < fs.size(); ++b) {
        worst = std::max(worst, std::abs(gram[a][b] - reference[a][b]));
      }
    }
    if (worst > spec.tolerance) {
      throw QuadratureError("quadrature M vs M/2 discrepancy " + detail::sci(worst) +
                                " exceeds tolerance " + detail::sci(spec.tolerance),
                            worst);
    }
  }
  return gram;
}

double hp_norm(const Function& f, const QuadratureSpec& spec) {
  const Function single[] = {f};
  return std::sqrt(std::max(hp_gram(single, spec)[0][0].real(), 0.0));
}

}  // namespace hardy::halfplane
