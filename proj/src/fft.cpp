// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The cwradar Authors

#include "cwradar/fft.hpp"

#include <cmath>
#include <stdexcept>

#include "cwradar/mathx.hpp"

namespace cwradar {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// In-place radix-2, size must be a power of two. Twiddles come from
// std::polar directly rather than accumulated products to keep long
// transforms near machine precision.
void fft_pow2(std::vector<std::complex<double>>& a, bool inverse) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1)
            j ^= bit;
        j ^= bit;
        if (i < j)
            std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? kTwoPi : -kTwoPi) / static_cast<double>(len);
        const std::size_t half = len >> 1;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < half; ++k) {
                const std::complex<double> w = std::polar(1.0, ang * static_cast<double>(k));
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + half] * w;
                a[i + k] = u + v;
                a[i + k + half] = u - v;
            }
        }
    }
}

// Bluestein chirp-z transform for arbitrary n.
std::vector<std::complex<double>> dft_bluestein(std::span<const std::complex<double>> x,
                                                std::size_t n) {
    const std::size_t m = next_pow2(2 * n - 1);
    // chirp phases use k^2 mod 2n evaluated in integers to avoid the
    // precision loss of forming k^2 in floating point
    std::vector<std::complex<double>> chirp(n);
    const long long two_n = 2 * static_cast<long long>(n);
    for (std::size_t k = 0; k < n; ++k) {
        const long long k2 = (static_cast<long long>(k) * static_cast<long long>(k)) % two_n;
        chirp[k] = std::polar(1.0, -kPi * static_cast<double>(k2) / static_cast<double>(n));
    }

    std::vector<std::complex<double>> a(m, 0.0);
    const std::size_t in_len = std::min(x.size(), n);
    for (std::size_t k = 0; k < in_len; ++k)
        a[k] = x[k] * chirp[k];

    std::vector<std::complex<double>> b(m, 0.0);
    b[0] = std::conj(chirp[0]);
    for (std::size_t k = 1; k < n; ++k) {
        b[k] = std::conj(chirp[k]);
        b[m - k] = std::conj(chirp[k]);
    }

    fft_pow2(a, false);
    fft_pow2(b, false);
    for (std::size_t k = 0; k < m; ++k)
        a[k] *= b[k];
    fft_pow2(a, true);

    std::vector<std::complex<double>> out(n);
    const double scale = 1.0 / static_cast<double>(m);
    for (std::size_t k = 0; k < n; ++k)
        out[k] = a[k] * scale * chirp[k];
    return out;
}

} // namespace

std::vector<std::complex<double>> dft(std::span<const std::complex<double>> x,
                                      std::size_t n_out) {
    if (n_out == 0)
        throw std::invalid_argument("dft: output length must be positive");
    if (is_pow2(n_out)) {
        std::vector<std::complex<double>> a(n_out, 0.0);
        const std::size_t in_len = std::min(x.size(), n_out);
        for (std::size_t k = 0; k < in_len; ++k)
            a[k] = x[k];
        fft_pow2(a, false);
        return a;
    }
    return dft_bluestein(x, n_out);
}

std::vector<std::complex<double>> idft(std::span<const std::complex<double>> x) {
    const std::size_t n = x.size();
    if (n == 0)
        throw std::invalid_argument("idft: input must be non-empty");
    std::vector<std::complex<double>> c(n);
    for (std::size_t k = 0; k < n; ++k)
        c[k] = std::conj(x[k]);
    auto y = dft(c, n);
    const double scale = 1.0 / static_cast<double>(n);
    for (auto& v : y)
        v = std::conj(v) * scale;
    return y;
}

} // namespace cwradar
