#pragma once

#include <complex>
#include <random>
#include <vector>

#include <doctest.h>

#include "hardy/special.hpp"

namespace test {

using hardy::Complex;

inline void check_close(Complex got, Complex want, double tol) {
  INFO("got " << got << ", want " << want);
  CHECK(std::abs(got - want) <= tol);
}

inline void check_close(double got, double want, double tol) {
  INFO("got " << got << ", want " << want);
  CHECK(std::abs(got - want) <= tol);
}

inline Complex random_disk_point(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(radius * std::sqrt(u(rng)), 2.0 * hardy::kPi * u(rng));
}

inline std::vector<Complex> random_coefficients(std::mt19937_64& rng, std::size_t count) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Complex> c(count);
  for (auto& v : c) v = {g(rng), g(rng)};
  return c;
}

}  // namespace test
