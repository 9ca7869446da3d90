#pragma once

#include <complex>
#include <span>
#include <vector>

namespace hankelscope::detail {

enum class FftDirection { kForward, kBackward };

/// Unnormalized DFT: out_k = sum_j in_j exp(-+ 2 pi i j k / n).
/// Plans are cached per (size, direction); the cache is filled under an
/// exclusive lock and read concurrently.
std::vector<std::complex<double>> dft(std::span<const std::complex<double>> in, FftDirection dir);

}  // namespace hankelscope::detail
