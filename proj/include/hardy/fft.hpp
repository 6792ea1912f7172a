#pragma once

#include <complex>
#include <span>
#include <vector>

namespace hardy::fft {

/// Unnormalized forward DFT: X_k = sum_j x_j e^{-2 pi i jk/N}.
std::vector<std::complex<double>> forward(std::span<const std::complex<double>> in);

/// Unnormalized inverse DFT: x_j = sum_k X_k e^{+2 pi i jk/N}.
std::vector<std::complex<double>> inverse(std::span<const std::complex<double>> in);

}  // namespace hardy::fft
