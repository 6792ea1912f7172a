#include <cmath>

#include "hardy/errors.hpp"
#include "hardy/multiscale.hpp"
#include "helpers.hpp"

using namespace hardy;
using namespace hardy::multiscale;
using test::check_close;

namespace {

// Direct product over j = -K..n of the G_n factors.
Complex prefix_product(long n, Complex x, long k) {
  Complex acc = 1.0;
  for (long j = -k; j <= n; ++j) {
    const double jd = static_cast<double>(j);
    acc *= (jd - kI) / (jd + kI) * (x - jd - kI) / (x - jd + kI);
  }
  return acc;
}

}  // namespace

TEST_CASE("periodic Blaschke values") {
  check_close(periodic_blaschke(0.0), 1.0, 1e-15);
  check_close(periodic_blaschke(0.5), -1.0, 1e-15);
  check_close(periodic_blaschke(kI), 0.0, 1e-15);
  check_close(periodic_blaschke(Complex(3.0, 1.0)), 0.0, 1e-15);
  const Complex x(0.3, 0.7);
  check_close(periodic_blaschke(x), special::sin_pi(kI - x) / special::sin_pi(kI + x), 1e-14);
  check_close(periodic_blaschke(x + 1e6), periodic_blaschke(x), 1e-9);
  for (double t : {-12.3, 0.01, 0.77, 1e7 + 0.1}) {
    check_close(std::abs(periodic_blaschke(t)), 1.0, 1e-14);
  }
  CHECK_THROWS_AS(periodic_blaschke(Complex(0.0, -0.1)), DomainError);
  CHECK_THROWS_AS(periodic_blaschke(Complex(0.0, 41.0)), OverflowError);
}

TEST_CASE("alpha family") {
  const Complex x(0.2, 0.4);
  check_close(periodic_blaschke_alpha(1.0, x), periodic_blaschke(x), 1e-15);
  check_close(periodic_blaschke_alpha(0.25, Complex(2.0, 0.25)), 0.0, 1e-14);
  check_close(periodic_blaschke_alpha(0.25, x),
              special::sin_pi(0.25 * kI - x) / special::sin_pi(0.25 * kI + x), 1e-13);
  CHECK_THROWS_AS(periodic_blaschke_alpha(0.0, x), DomainError);
}

TEST_CASE("one minus G constant") {
  check_close(kOneMinusGConstant, 6.306696189874, 1e-11);
  double worst = 0.0;
  for (double x = 1e-6; x < 1.0; x *= 1.1) {
    worst = std::max(worst, std::abs(1.0 - periodic_blaschke(x)) / x);
  }
  CHECK(worst <= kOneMinusGConstant);
  CHECK(worst >= kOneMinusGConstant * (1.0 - 1e-4));
}

TEST_CASE("prefix products through Gamma ratios") {
  check_close(periodic_blaschke_prefix(0, 1.0), -1.0, 1e-13);
  for (long n : {-2L, 0L, 3L}) {
    for (const Complex x : {Complex(0.4, 0.0), Complex(-1.7, 0.5), Complex(2.2, 3.0)}) {
      const long k = 200000;
      const Complex extrapolated = 2.0 * prefix_product(n, x, 2 * k) - prefix_product(n, x, k);
      CAPTURE(n);
      CAPTURE(x);
      check_close(periodic_blaschke_prefix(n, x), extrapolated, 1e-8);
    }
  }
  check_close(periodic_blaschke_prefix(2, Complex(-5.0, 1.0)), 0.0, 0.0);
  check_close(std::abs(periodic_blaschke_prefix(4, 13.25)), 1.0, 1e-12);
}

TEST_CASE("scaling atom") {
  check_close(scaling_atom(kI), 0.0, 0.0);
  check_close(scaling_atom(Complex(-3.0, 1.0)), 0.0, 0.0);
  const Complex x(0.3, 0.2);
  check_close(scaling_atom(x),
              special::gamma(x - 1.0 + kI) / (std::sqrt(kPi) * special::gamma(x - kI)), 1e-13);
  std::vector<halfplane::Function> translates;
  for (int j = -3; j <= 3; ++j) {
    translates.push_back({[j](Complex y) { return scaling_atom(y - static_cast<double>(j)); }, 1.0,
                          "phi"});
  }
  const auto g = halfplane::hp_gram(translates, {.nodes = 8192});
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = 0; b < g.size(); ++b) check_close(g[a][b], a == b ? 1.0 : 0.0, 1e-9);
  }
}

TEST_CASE("dyadic inner product and its tail bound") {
  const double x = 37.5;
  const auto coarse = dyadic_inner(x, {.scales = 20});
  const auto fine = dyadic_inner(x, {.scales = 60});
  CHECK(std::abs(coarse.value - fine.value) <= coarse.tail_bound);
  check_close(coarse.tail_bound, kOneMinusGConstant * x * std::ldexp(1.0, -20), 1e-15);
  check_close(std::abs(fine.value), 1.0, 1e-12);
  check_close(dyadic_inner(std::ldexp(1.0, -20)).value, 1.0, 1e-5);
  const auto with0 = dyadic_inner(Complex(0.3, 0.1), {.scales = 40, .include_j0 = true});
  check_close(with0.value,
              periodic_blaschke(Complex(0.3, 0.1)) * dyadic_inner(Complex(0.3, 0.1)).value, 1e-15);
  check_close(dyadic_inner(Complex(2.0, 2.0)).value, 0.0, 1e-15);
  CHECK_THROWS_AS(dyadic_inner(1.0, {.scales = 0}), DomainError);
}

TEST_CASE("dyadic phase is a continuous lift of arg Delta") {
  double previous = dyadic_phase(-20.0);
  for (double x = -20.0; x <= 20.0; x += 0.01) {
    const double phase = dyadic_phase(x);
    const Complex want = dyadic_inner(x).value;
    check_close(std::polar(1.0, phase), want, 1e-11);
    CHECK(std::abs(phase - previous) <= 0.2);
    previous = phase;
  }
  check_close(dyadic_phase(0.0), 0.0, 1e-15);
}

TEST_CASE("dyadic sine sum") {
  check_close(dyadic_sine_sum(0.0), 0.0, 0.0);
  for (double t : {1.0, -3.0, 2.0 * kPi, 1e5}) check_close(dyadic_sine_sum(t), dyadic_sine_sum(t, 80), 1e-11);
  for (int k = 0; k <= 30; ++k) CHECK(dyadic_sine_sum(2.0 * kPi * std::ldexp(1.0, k)) <= k + 3.0);
  CHECK_THROWS_AS(dyadic_sine_sum(1.0, -1), DomainError);
}

TEST_CASE("wavelets") {
  const Complex x(0.7, 0.0);
  check_close(wavelet({0, 0}, x), scaling_atom(x) * dyadic_inner(x).value, 1e-15);
  check_close(wavelet({2, 1}, x), 2.0 * scaling_atom(4.0 * x - 1.0) * dyadic_inner(4.0 * x).value,
              1e-14);
  CHECK(wavelet_function({1, -2}).label == "wavelet(1,-2)");
  check_close(halfplane::hp_norm(wavelet_function({-1, 2}), {.nodes = 8192}), 1.0, 1e-8);
}

TEST_CASE("wavelet analysis of a single atom") {
  const auto f = wavelet_function({0, 0});
  const auto c = wavelet_analyze(f, -1, 1, -1, 1, {}, {.nodes = 8192});
  REQUIRE(c.coeffs.size() == 9);
  REQUIRE(c.residuals.size() == 9);
  for (const auto& e : c.coeffs) {
    CAPTURE(e.index.n);
    CAPTURE(e.index.j);
    check_close(e.value, e.index == WaveletIndex{0, 0} ? 1.0 : 0.0, 1e-8);
  }
  CHECK(c.residuals.back().l2 <= 1e-6);
  CHECK(c.residuals.front().prefix == WaveletIndex{-1, -1});
  CHECK_THROWS_AS(wavelet_analyze(f, 1, 0, 0, 0), DomainError);
}
