#include <cmath>

#include "hardy/errors.hpp"
#include "hardy/multiscale.hpp"
#include "hardy/quadrature.hpp"
#include "helpers.hpp"

using namespace hardy;
using namespace hardy::halfplane;
using test::check_close;

namespace {

Function pole(Complex b) {
  return {[b](Complex x) { return 1.0 / (x - b); }, 1.0, "pole"};
}

}  // namespace

TEST_CASE("gauss-legendre rule") {
  std::vector<double> x, w;
  gauss_legendre(16, x, w);
  REQUIRE(x.size() == 16);
  double sum = 0.0, moment = 0.0, odd = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sum += w[k];
    moment += w[k] * std::pow(x[k], 30);
    odd += w[k] * std::pow(x[k], 7);
  }
  check_close(sum, 2.0, 1e-14);
  check_close(moment, 2.0 / 31.0, 1e-14);
  check_close(odd, 0.0, 1e-15);
}

TEST_CASE("quadrature settings are validated") {
  CHECK_THROWS_AS(Quadrature(QuadratureSpec{.nodes = 100}), DomainError);
  CHECK_THROWS_AS(Quadrature(QuadratureSpec{.nodes = 32}), DomainError);
  CHECK_THROWS_AS(Quadrature(QuadratureSpec{.nodes = 128, .panel_width = 0.0}), DomainError);
  const Function slow{[](Complex x) { return 1.0 / std::sqrt(x + kI); }, 0.5, "slow"};
  CHECK_THROWS_AS(hp_inner_product(slow, slow), DomainError);
}

TEST_CASE("rational inner products under both rules") {
  for (Rule rule : {Rule::windowed_panels, Rule::cayley_trapezoid}) {
    CAPTURE(static_cast<int>(rule));
    const QuadratureSpec spec{.nodes = 8192, .rule = rule};
    // || 1/(x + i) ||^2 = pi.
    check_close(hp_norm(pole(-kI), spec), std::sqrt(kPi), 1e-9);
    // Residue at 2i: 2 pi i / (3 i).
    check_close(hp_inner_product(pole(-kI), pole(-2.0 * kI), spec), 2.0 * kPi / 3.0, 1e-9);
    // Both poles below the axis of the conjugate: orthogonal H^2 and conj(H^2) parts.
    check_close(hp_inner_product(pole(-kI), pole(2.0 * kI), spec), 0.0, 1e-9);
  }
}

TEST_CASE("oscillating inner factors are integrated by the windowed rule") {
  // <G a0, a0> is the Poisson integral of G at i, and G(i) = 0.
  const Function a0{[](Complex x) { return 1.0 / (std::sqrt(kPi) * (x + kI)); }, 1.0, "a0"};
  const Function ga0{[](Complex x) {
                       return multiscale::periodic_blaschke(x) / (std::sqrt(kPi) * (x + kI));
                     },
                     1.0, "G a0"};
  const QuadratureSpec spec{.nodes = 8192};
  check_close(hp_inner_product(a0, a0, spec), 1.0, 1e-9);
  check_close(hp_inner_product(ga0, a0, spec), 0.0, 1e-9);
  check_close(hp_norm(ga0, spec), 1.0, 1e-9);
}

TEST_CASE("gram matrix is hermitian and the M/2 check fires on coarse rules") {
  std::vector<Function> fs{pole(-kI), pole(Complex(1.0, -2.0)), pole(Complex(-3.0, -0.5))};
  const auto g = hp_gram(fs, {.nodes = 8192, .tolerance = 1e-7});
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) check_close(g[a][b], std::conj(g[b][a]), 1e-12);
  }
  check_close(g[0][1], hp_inner_product(fs[0], fs[1]), 1e-9);

  const Function wiggle{[](Complex x) { return multiscale::periodic_blaschke(x) / (x + kI); },
                        1.0, "wiggle"};
  std::vector<Function> coarse{wiggle};
  CHECK_THROWS_AS(hp_gram(coarse, {.nodes = 128, .tolerance = 1e-12}), QuadratureError);
}

TEST_CASE("quadrature object primitives") {
  // The windowed rule converges like M^-5: about 4e-6 at M = 1024.
  const Quadrature q({.nodes = 1024});
  CHECK(q.size() == q.weights().size());
  const auto f = q.sample(pole(-kI));
  check_close(q.norm(f), std::sqrt(kPi), 1e-5);
  check_close(q.inner_product(f, f), q.norm(f) * q.norm(f), 1e-12);
}
