// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The cwradar Authors

#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>

namespace cwradar {

inline constexpr double kSpeedOfLight = 299792458.0; // m/s
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

inline double db_to_linear_power(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_power_to_db(double p) { return 10.0 * std::log10(p); }
inline double db_to_linear_amplitude(double db) { return std::pow(10.0, db / 20.0); }
inline double linear_amplitude_to_db(double a) { return 20.0 * std::log10(a); }

// sin(x)/x with the removable singularity filled in.
inline double sinc(double x) {
    if (std::abs(x) < 1e-8)
        return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

inline std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n)
        p <<= 1;
    return p;
}

// Bessel function of the first kind, integer order n >= 0.
// Miller's downward recurrence, accurate to ~1e-14 for the argument range
// used here (|x| up to a few tens).
double bessel_jn(int n, double x);

} // namespace cwradar
