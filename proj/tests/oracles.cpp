// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The cwradar Authors

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "cwradar/mathx.hpp"

namespace oracle {

using cwradar::kPi;
using cwradar::kTwoPi;

double bessel_jn_quadrature(int n, double x) {
    const int intervals = 20000; // even
    const double h = kPi / intervals;
    auto f = [&](double t) { return std::cos(n * t - x * std::sin(t)); };
    double sum = f(0.0) + f(kPi);
    for (int k = 1; k < intervals; ++k)
        sum += f(k * h) * ((k % 2 == 1) ? 4.0 : 2.0);
    return sum * h / 3.0 / kPi;
}

double hpbw_exponent_bisect(double hpbw_deg) {
    const double c = std::cos(hpbw_deg / 2.0 * kPi / 180.0);
    auto g = [&](double n) { return std::pow(c, n) - 0.5; };
    double lo = 1e-6, hi = 1e4;
    if (g(lo) < 0.0 || g(hi) > 0.0)
        throw std::invalid_argument("hpbw_exponent_bisect: no bracket");
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double microstrip_impedance_ohm(double width_mm, double epsilon_r, double height_mm) {
    const double u = width_mm / height_mm;
    double eps_eff;
    if (u < 1.0)
        eps_eff = (epsilon_r + 1.0) / 2.0 +
                  (epsilon_r - 1.0) / 2.0 *
                      (1.0 / std::sqrt(1.0 + 12.0 / u) + 0.04 * (1.0 - u) * (1.0 - u));
    else
        eps_eff = (epsilon_r + 1.0) / 2.0 +
                  (epsilon_r - 1.0) / 2.0 / std::sqrt(1.0 + 12.0 / u);

    if (u <= 1.0)
        return 60.0 / std::sqrt(eps_eff) * std::log(8.0 / u + u / 4.0);
    return 120.0 * kPi /
           (std::sqrt(eps_eff) * (u + 1.393 + 0.667 * std::log(u + 1.444)));
}

double butterworth_lowpass_mag(double f_hz, double cutoff_hz, int order) {
    const double r = f_hz / cutoff_hz;
    return 1.0 / std::sqrt(1.0 + std::pow(r, 2.0 * order));
}

double butterworth_bandpass_mag(double f_hz, double low_hz, double high_hz, int order) {
    const double w = (f_hz * f_hz - low_hz * high_hz) / (f_hz * (high_hz - low_hz));
    return 1.0 / std::sqrt(1.0 + std::pow(std::abs(w), 2.0 * order));
}

double link_budget_db(double pt_w, double gt, double gr, double sigma_m2,
                      double wavelength_m, double rho, double r1_m, double r2_m) {
    double db = 10.0 * std::log10(pt_w);
    db += 10.0 * std::log10(gt);
    db += 10.0 * std::log10(gr);
    db += 10.0 * std::log10(sigma_m2);
    db += 20.0 * std::log10(wavelength_m);
    db += 10.0 * std::log10(rho);
    db -= 30.0 * std::log10(4.0 * kPi);
    db -= 20.0 * std::log10(r1_m);
    db -= 20.0 * std::log10(r2_m);
    return db;
}

namespace {

using cwradar::Reflector;
using cwradar::Vec3;

Vec3 mirror(const Vec3& p, const Reflector& r) {
    const double d = (p - r.center).dot(r.normal);
    return p - r.normal * (2.0 * d);
}

bool on_plate(const Vec3& p, const Reflector& r) {
    const Vec3 ref = std::abs(r.normal.z) < 0.9 ? Vec3{0, 0, 1} : Vec3{1, 0, 0};
    const Vec3 u = r.normal.cross(ref).normalized();
    const Vec3 v = r.normal.cross(u);
    const Vec3 d = p - r.center;
    return std::abs(d.dot(u)) <= r.width_m / 2 + 1e-12 &&
           std::abs(d.dot(v)) <= r.height_m / 2 + 1e-12;
}

// walk the chain forward from the receiver using images of the receiver,
// the mirror image of the library's transmitter-image formulation
bool forward_solve(const Vec3& tx, const Vec3& rx, const std::vector<const Reflector*>& seq,
                   double& length) {
    const std::size_t k = seq.size();
    std::vector<Vec3> rx_images(k + 1);
    rx_images[k] = rx;
    for (std::size_t m = k; m >= 1; --m)
        rx_images[m - 1] = mirror(rx_images[m], *seq[m - 1]);

    Vec3 cur = tx;
    length = 0.0;
    for (std::size_t m = 0; m < k; ++m) {
        // aim at rx mirrored through every remaining plane including this one
        const Vec3 toward = rx_images[m];
        const Vec3 ab = toward - cur;
        const double denom = ab.dot(seq[m]->normal);
        if (std::abs(denom) < 1e-9)
            return false;
        const double t = (seq[m]->center - cur).dot(seq[m]->normal) / denom;
        if (t <= 1e-9 || t >= 1.0 - 1e-9)
            return false;
        const Vec3 hit = cur + ab * t;
        if (!on_plate(hit, *seq[m]))
            return false;
        length += (hit - cur).norm();
        cur = hit;
    }
    length += (rx - cur).norm();
    return length > 1e-9;
}

} // namespace

std::vector<double> image_path_lengths(const cwradar::Scene& scene, int max_order) {
    std::vector<const Reflector*> all;
    all.push_back(&scene.target);
    for (const auto& r : scene.statics)
        all.push_back(&r);

    std::vector<double> lengths;
    std::vector<const Reflector*> seq;
    std::function<void(int)> rec = [&](int depth) {
        for (const Reflector* r : all) {
            if (!seq.empty() && seq.back() == r)
                continue;
            seq.push_back(r);
            double len = 0.0;
            if (forward_solve(scene.tx.position, scene.rx.position, seq, len))
                lengths.push_back(len);
            if (depth + 1 < max_order)
                rec(depth + 1);
            seq.pop_back();
        }
    };
    rec(0);
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

double goertzel_magnitude(const std::vector<std::complex<double>>& x, double f_hz,
                          double sample_rate_hz) {
    std::complex<double> acc = 0.0;
    for (std::size_t n = 0; n < x.size(); ++n)
        acc += x[n] * std::polar(1.0, -kTwoPi * f_hz * static_cast<double>(n) / sample_rate_hz);
    return std::abs(acc) / static_cast<double>(x.size());
}

} // namespace oracle
