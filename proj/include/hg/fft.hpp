#pragma once

#include <complex>
#include <span>
#include <vector>

namespace hg::fft {

// Unnormalized transforms:
//   forward:  X_k = sum_j x_j e^{-2 pi i jk/M}
//   backward: x_j = sum_k X_k e^{+2 pi i jk/M}
// Plans are cached per size; execution is safe from several threads.
std::vector<std::complex<double>> forward(std::span<const std::complex<double>> x);
std::vector<std::complex<double>> backward(std::span<const std::complex<double>> X);

}  // namespace hg::fft
