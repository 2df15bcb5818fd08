// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The cwradar Authors

#include "cwradar/mathx.hpp"

#include <stdexcept>
#include <vector>

namespace cwradar {

double bessel_jn(int n, double x) {
    if (n < 0)
        throw std::invalid_argument("bessel_jn: order must be >= 0");
    const bool negate = (x < 0.0) && (n % 2 == 1);
    x = std::abs(x);
    if (x == 0.0)
        return n == 0 ? 1.0 : 0.0;
    if (x < 1e-10) {
        // leading series term is enough this close to zero
        double t = 1.0;
        for (int m = 1; m <= n; ++m)
            t *= x / (2.0 * m);
        return negate ? -t : t;
    }

    // Downward recurrence from well above both n and x, normalized with
    // J0 + 2*sum_{k even} Jk = 1.
    int start = n + 16 + static_cast<int>(2.0 * std::sqrt(static_cast<double>(n) + x) + x);
    if (start % 2 != 0)
        ++start;
    double fkp1 = 0.0;
    double fk = 1e-30;
    double norm = 0.0;
    double result = 0.0;
    for (int k = start; k >= 1; --k) {
        const double fkm1 = (2.0 * k / x) * fk - fkp1;
        fkp1 = fk;
        fk = fkm1;
        if (k - 1 == n)
            result = fk;
        if ((k - 1) % 2 == 0)
            norm += (k - 1 == 0) ? fk : 2.0 * fk;
        // rescale to avoid overflow during the recurrence
        if (std::abs(fk) > 1e100) {
            fk *= 1e-100;
            fkp1 *= 1e-100;
            norm *= 1e-100;
            result *= 1e-100;
        }
    }
    const double value = result / norm;
    return negate ? -value : value;
}

} // namespace cwradar
