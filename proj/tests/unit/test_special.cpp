#include <cmath>

#include "hardy/errors.hpp"
#include "hardy/special.hpp"
#include "helpers.hpp"

using namespace hardy;
using test::check_close;

namespace {

struct GammaCase {
  double re, im, gamma_re, gamma_im;
};

// mpmath, 40 digits (tests/oracles/gen_oracles.py).
const GammaCase kGammaTable[] = {
    {0.5, 0, 1.772453850905516, 0},
    {1, 1, 0.49801566811835604, -0.15494982830181069},
    {-3.5, 2, -0.0015618374328767545, 0.00046119427208437403},
    {10.25, -7, -45010.430835026392, 42863.019234577686},
    {-40.3, 30, -3.3224618403185652e-85, -7.2906246720771063e-85},
    {63, 63, 8.4961222223824211e+72, -2.4629448359523704e+73},
    {-63.5, -60, 2.2807582357465846e-159, 3.2227054774768318e-159},
    {0.1, 64, 9.2261752992791563e-45, 4.7759566229064592e-45},
    {-0.7, 0, -4.2736699824108434, 0},
    {25, 0.001, 6.2044521487590635e+23, 1.9846512548491865e+21},
    {-12.2, 0.3, -5.1616153962099884e-11, -3.2052185962607214e-9},
    {2, -45, -1.4927556193066709e-28, -2.6141231288060311e-29},
};

}  // namespace

TEST_CASE("gamma at simple points") {
  check_close(special::gamma(1.0), 1.0, 1e-15);
  check_close(special::gamma(0.5), std::sqrt(kPi), 1e-14);
  check_close(special::gamma(5.0), 24.0, 1e-13);
  const Complex gi = special::gamma(kI);
  check_close(gi, Complex(-0.15494982830181068512, -0.49801566811835604271), 1e-14);
  check_close(std::abs(gi), 0.52156404686493984, 1e-14);
  check_close(std::abs(gi), std::sqrt(kPi / std::sinh(kPi)), 1e-14);
}

TEST_CASE("gamma matches the high-precision table to 1e-12 relative") {
  for (const auto& c : kGammaTable) {
    const Complex want(c.gamma_re, c.gamma_im);
    const Complex got = special::gamma(Complex(c.re, c.im));
    INFO("z = " << c.re << " + " << c.im << "i, got " << got << ", want " << want);
    CHECK(std::abs(got - want) <= 1e-12 * std::abs(want));
  }
}

TEST_CASE("gamma is exactly real on the real axis") {
  for (double x : {-7.3, -0.7, 0.2, 3.5, 17.25}) CHECK(special::gamma(x).imag() == 0.0);
  CHECK(special::gamma(-0.7).real() < 0.0);
}

TEST_CASE("gamma recurrence and reflection") {
  for (const Complex z : {Complex(0.3, 2.0), Complex(-4.2, -1.5), Complex(7.7, 12.0)}) {
    const Complex lhs = special::gamma(z + 1.0);
    CHECK(std::abs(lhs - z * special::gamma(z)) <= 1e-12 * std::abs(lhs));
    const Complex refl = special::gamma(z) * special::gamma(1.0 - z) * special::sin_pi(z);
    CHECK(std::abs(refl - kPi) <= 1e-12 * kPi);
  }
}

TEST_CASE("gamma poles") {
  CHECK_THROWS_AS(special::gamma(0.0), PoleError);
  CHECK_THROWS_AS(special::gamma(-3.0), PoleError);
  CHECK_THROWS_AS(special::log_gamma(-12.0), PoleError);
  CHECK_THROWS_AS(special::gamma(Complex(-2.0, 1e-16)), DomainError);
  CHECK(special::is_gamma_pole(-5.0));
  CHECK_FALSE(special::is_gamma_pole(Complex(-5.0, 1e-6)));
  CHECK_FALSE(special::is_gamma_pole(1.0));
  CHECK_NOTHROW(special::gamma(-3.0 + 1e-6));
}

TEST_CASE("gamma overflow is reported, never infinite") {
  CHECK_THROWS_AS(special::gamma(200.0), OverflowError);
  CHECK_NOTHROW(special::log_gamma(200.0));
}

TEST_CASE("log_gamma") {
  check_close(special::log_gamma(1.0), 0.0, 1e-15);
  check_close(special::log_gamma(2.0), 0.0, 1e-15);
  check_close(special::log_gamma(10.0), 12.8018274800814696112, 1e-13);
  // Principal branch, continuous along the positive real axis.
  check_close(special::log_gamma(Complex(3.0, 1e-9)).imag(), 0.0, 1e-8);
  for (const Complex z : {Complex(0.7, 3.0), Complex(-6.3, 2.0), Complex(30.0, -20.0)}) {
    const Complex g = special::gamma(z);
    CHECK(std::abs(std::exp(special::log_gamma(z)) - g) <= 1e-12 * std::abs(g));
  }
  // Large imaginary parts stay finite.
  const Complex big = special::log_gamma(Complex(0.5, 400.0));
  CHECK(std::isfinite(big.real()));
  CHECK(std::isfinite(big.imag()));
}

TEST_CASE("complex sine") {
  check_close(special::csin(0.0), 0.0, 1e-16);
  check_close(special::csin(kPi / 2), 1.0, 1e-16);
  check_close(special::csin(kI * kPi), Complex(0.0, 11.5487393572577483780), 1e-13);
  for (const Complex z : {Complex(0.4, 3.0), Complex(-2.0, -20.0), Complex(10.0, 49.0)}) {
    const Complex want = std::sin(z);
    CHECK(std::abs(special::csin(z) - want) <= 1e-14 * std::abs(want));
  }
  CHECK_THROWS_AS(special::csin(Complex(0.0, 800.0)), OverflowError);
}

TEST_CASE("sin_pi reduces the argument exactly") {
  CHECK(special::sin_pi(1e8) == Complex(0.0, 0.0));
  check_close(special::sin_pi(1e8 + 0.5), 1.0, 1e-15);
  check_close(special::sin_pi(Complex(0.25, 0.0)), std::sqrt(0.5), 2e-16);
}

TEST_CASE("log_sin_pi agrees with sin_pi and stays finite far from the axis") {
  for (const Complex z : {Complex(0.3, 1.0), Complex(-2.7, -4.0), Complex(5.1, 25.0)}) {
    check_close(std::exp(special::log_sin_pi(z)), special::sin_pi(z),
                1e-13 * std::abs(special::sin_pi(z)));
  }
  const Complex far = special::log_sin_pi(Complex(0.2, 500.0));
  check_close(far.real(), kPi * 500.0 - std::log(2.0), 1e-9);
}
