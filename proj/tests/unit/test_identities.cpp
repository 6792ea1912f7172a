#include <cmath>
#include <random>

#include "hardy/errors.hpp"
#include "hardy/identities.hpp"
#include "hardy/multiscale.hpp"
#include "helpers.hpp"

using namespace hardy;
using namespace hardy::identities;
using multiscale::kQ;
using test::check_close;

namespace {

Complex boundary_exp(double x) { return std::exp(2.0 * kPi * kI * (x - std::round(x))); }

}  // namespace

TEST_CASE("recurrence identity holds on the line") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) worst = std::max(worst, recur_residual(u(rng)));
  CHECK(worst <= 1e-13);
}

TEST_CASE("pro-unwinding coefficients") {
  const auto c = pro_unwinding_coefficients(3);
  REQUIRE(c.size() == 4);
  check_close(c[0], kQ, 0.0);
  check_close(c[1], 1.0 - kQ * kQ, 1e-16);
  check_close(c[2], -(1.0 - kQ * kQ) * kQ, 1e-19);
  check_close(c[3], (1.0 - kQ * kQ) * kQ * kQ, 1e-22);
  check_close(pro_unwinding_partial(0.3, 0), kQ, 0.0);
}

TEST_CASE("pro-unwinding partial sums converge geometrically") {
  for (std::size_t n = 1; n <= 8; ++n) {
    double worst = 0.0;
    for (double x = -50.0; x <= 50.0; x += 0.37) {
      worst = std::max(worst, std::abs(boundary_exp(x) - pro_unwinding_partial(x, n)));
    }
    CHECK(worst <= pro_unwinding_tail_bound(n) + 8e-16);
  }
  check_close(pro_unwinding_tail_bound(2) / pro_unwinding_tail_bound(1), kQ, 1e-15);
}

TEST_CASE("complete unwinding terms are orthogonal and the residuals match the coefficients") {
  const halfplane::QuadratureSpec spec{.nodes = 8192};
  std::vector<halfplane::Function> terms;
  for (std::size_t k = 0; k < 3; ++k) {
    terms.push_back({[k](Complex x) { return complete_unwinding_term(k, x); }, 1.0, "term"});
  }
  const auto g = halfplane::hp_gram(terms, spec);
  const auto c = pro_unwinding_coefficients(2);
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) check_close(g[a][b], a == b ? c[a] * c[a] : 0.0, 1e-9);
  }
  for (std::size_t n = 0; n <= 1; ++n) {
    const halfplane::Function residual{
        [n](Complex x) {
          return boundary_exp(x.real()) / (std::sqrt(kPi) * (x + kI)) - complete_unwinding_partial(x, n);
        },
        1.0, "residual"};
    check_close(halfplane::hp_norm(residual, spec),
                std::sqrt(1.0 - kQ * kQ) * std::pow(kQ, static_cast<double>(n)), 1e-9);
  }
}

TEST_CASE("alpha identity") {
  for (double alpha : {0.1, 0.25, 0.5, 1.0, 2.0}) {
    double worst = 0.0;
    for (double x = -10.0; x <= 10.0; x += 0.013) worst = std::max(worst, alpha_identity_residual(alpha, x));
    CAPTURE(alpha);
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("alpha series") {
  CHECK_THROWS_AS(AlphaSequence({}), DomainError);
  CHECK_THROWS_AS(AlphaSequence({1.0, -0.5}), DomainError);
  const AlphaSequence constant(std::vector<double>(9, 1.0));
  const auto c = alpha_series_coefficients(constant, 8);
  const auto p = pro_unwinding_coefficients(8);
  for (std::size_t k = 0; k <= 8; ++k) check_close(c[k], p[k], 1e-18);
  CHECK_THROWS_AS(alpha_series_coefficients(constant, 9), IndexError);

  const AlphaSequence seq({0.05, 0.1, 0.2, 0.15, 0.3, 0.25, 0.5, 0.1, 0.4, 0.2, 0.3, 0.6});
  for (std::size_t n = 1; n <= 11; ++n) {
    double worst = 0.0;
    for (double x = -5.0; x <= 5.0; x += 0.0101) {
      worst = std::max(worst, std::abs(boundary_exp(x) - alpha_series_partial(seq, x, n)));
    }
    CAPTURE(n);
    CHECK(worst <= alpha_series_remainder_bound(seq, n) + 1e-14);
  }
  check_close(alpha_series_remainder_bound(seq, 0), 2.0, 0.0);
}

TEST_CASE("dirac identity") {
  for (double x : {-3.0, -0.01, 1e-5, 0.2, 7.0}) {
    CHECK(dirac_inner_residual(x) <= 1e-12);
    CHECK(dirac_inner_residual(x, DiracVariant::reflected) <= 1e-12);
  }
  // Pairing e^{-2 i pi / x} with G(1/x) is off by the conjugate.
  double literal = 0.0;
  for (double x = 0.05; x < 5.0; x += 0.05) {
    literal = std::max(literal, dirac_inner_residual(x, DiracVariant::literal));
  }
  CHECK(literal > 1.0);
  CHECK_THROWS_AS(dirac_inner_residual(1e-7), NearSingularError);
}

TEST_CASE("torus substitution") {
  for (double theta : {0.1, 1.0, kPi, 5.0, 6.2}) {
    const auto r = torus_substitution_residual(theta, 6);
    CAPTURE(theta);
    check_close(r.x, -1.0 / (std::tan(theta / 2.0) * 2.0 * kPi), 1e-12);
    CHECK(r.residual <= r.tail_bound + 1e-13);
  }
  CHECK(torus_substitution_residual(1.0, 6, TorusTarget::literal).residual > 1.0);
  CHECK_THROWS_AS(torus_substitution_residual(0.0, 3), DomainError);
  CHECK_THROWS_AS(torus_substitution_residual(2.0 * kPi, 3), DomainError);
}
