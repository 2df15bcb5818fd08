// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The cwradar Authors

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace cwradar {

// Forward DFT of length n_out (input is zero-extended or truncated to
// n_out). Power-of-two lengths run radix-2 Cooley-Tukey; everything else
// goes through Bluestein's chirp-z so harmonic bins of integer-period
// records land exactly on DFT bins.
std::vector<std::complex<double>> dft(std::span<const std::complex<double>> x,
                                      std::size_t n_out);

// Inverse DFT (1/n normalized).
std::vector<std::complex<double>> idft(std::span<const std::complex<double>> x);

} // namespace cwradar
