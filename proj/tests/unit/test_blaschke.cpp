#include <cmath>
#include <random>

#include "hardy/blaschke.hpp"
#include "hardy/errors.hpp"
#include "helpers.hpp"

using namespace hardy;
using namespace hardy::blaschke;
using test::check_close;

TEST_CASE("construction validates zeros") {
  CHECK_THROWS_AS(DiskBlaschke({Complex(1.0, 0.0)}), DomainError);
  CHECK_NOTHROW(DiskBlaschke({Complex(0.0, 0.999)}));
  CHECK_THROWS_AS(HalfPlaneBlaschke({Complex(1.0, 0.0)}, Convention::standard_factor), DomainError);
  CHECK_THROWS_AS(HalfPlaneBlaschke({Complex(0.0, -1.0)}, Convention::none), DomainError);
}

TEST_CASE("disk product values") {
  const DiskBlaschke b({0.5, Complex(0.0, 0.3)});
  check_close(eval_disk(b, 0.5), 0.0, 1e-16);
  check_close(eval_disk(b, 0.0), Complex(0.0, 0.15), 1e-15);
  check_close(eval_disk(DiskBlaschke(), Complex(0.2, 0.1)), 1.0, 0.0);
  check_close(moebius(0.0, Complex(0.3, 0.4)), Complex(0.3, 0.4), 0.0);
  CHECK_THROWS_AS(eval_disk(b, 1.5), DomainError);
}

TEST_CASE("disk product is unimodular on the circle and bounded inside") {
  std::mt19937_64 rng(1);
  std::vector<Complex> zeros;
  for (int k = 0; k < 40; ++k) zeros.push_back(test::random_disk_point(rng, 0.95));
  const DiskBlaschke b(zeros);
  for (int k = 0; k < 100; ++k) {
    const Complex z = std::polar(1.0, 0.0628 * k);
    CHECK(std::abs(std::abs(eval_disk(b, z)) - 1.0) <= 1e-12);
    CHECK(std::abs(eval_disk(b, 0.9 * z)) <= 1.0 + 1e-14);
  }
}

TEST_CASE("long products use log space and agree with direct multiplication") {
  std::mt19937_64 rng(9);
  std::vector<Complex> zeros;
  for (int k = 0; k < 300; ++k) zeros.push_back(test::random_disk_point(rng, 0.5));
  const DiskBlaschke b(zeros);
  const Complex z(0.6, -0.2);
  Complex direct = 1.0;
  for (const Complex& a : zeros) direct *= moebius(a, z);
  const Complex got = eval_disk(b, z);
  CHECK(std::abs(got - direct) <= 1e-10 * std::abs(direct) + 1e-300);
}

TEST_CASE("sampled product matches pointwise evaluation") {
  const DiskBlaschke b({0.3, Complex(-0.2, 0.7)});
  const auto s = sample(b, 1024);
  for (std::size_t k = 0; k < 1024; k += 7) {
    check_close(s[k], eval_disk(b, torus::GridFunction::point(1024, k)), 1e-14);
  }
  CHECK(s.unimodular_deviation() <= 1e-14);
  CHECK(s.is_analytic());
}

TEST_CASE("half-plane product with standard factor") {
  check_close(standard_factor(kI), 1.0, 0.0);
  const HalfPlaneBlaschke b({Complex(1.0, 1.0)}, Convention::standard_factor);
  check_close(eval_halfplane(b, 0.0), Complex(2.0, 1.0) / std::sqrt(5.0), 1e-15);
  const HalfPlaneBlaschke plain({Complex(1.0, 1.0)}, Convention::none);
  check_close(eval_halfplane(plain, 0.0), Complex(0.0, 1.0), 1e-15);
  CHECK_THROWS_AS(eval_halfplane(b, Complex(0.0, -1.0)), DomainError);
}

TEST_CASE("half-plane product is unimodular on the line and vanishes at its zeros") {
  std::vector<Complex> zeros;
  for (int n = 1; n <= 50; ++n) zeros.emplace_back(n, 1.0);
  const HalfPlaneBlaschke b(zeros, Convention::standard_factor);
  for (double x : {-30.0, -1.0, 0.0, 2.5, 100.0}) {
    CHECK(std::abs(std::abs(eval_halfplane(b, x)) - 1.0) <= 1e-12);
  }
  check_close(eval_halfplane(b, Complex(7.0, 1.0)), 0.0, 1e-15);
  check_close(eval_halfplane(b, Complex(7.0, 1.0), 3), eval_halfplane(HalfPlaneBlaschke(
      {zeros[0], zeros[1], zeros[2]}, Convention::standard_factor), Complex(7.0, 1.0)), 1e-15);
}
