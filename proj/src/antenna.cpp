// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The cwradar Authors

#include "cwradar/antenna.hpp"

#include <cmath>
#include <stdexcept>

namespace cwradar {

namespace {

const std::complex<double> kJ{0.0, 1.0};

// Orthogonal state with its leading component phase-anchored real-positive,
// so V pairs with H and each circular hand pairs with the other without a
// stray phase on the blend.
JonesVector orthogonal(const JonesVector& v) {
    std::complex<double> ox = -std::conj(v.ey);
    std::complex<double> oy = std::conj(v.ex);
    const std::complex<double> lead = std::abs(ox) > 1e-12 ? ox : oy;
    const std::complex<double> phase = std::conj(lead) / std::abs(lead);
    return {ox * phase, oy * phase};
}

} // namespace

JonesVector::JonesVector(std::complex<double> x, std::complex<double> y) : ex(x), ey(y) {
    const double n = std::sqrt(std::norm(ex) + std::norm(ey));
    if (!(n > 0.0) || !std::isfinite(n))
        throw std::invalid_argument("JonesVector: state must be non-zero and finite");
    ex /= n;
    ey /= n;
}

JonesVector JonesVector::lp_rotated(double angle_rad) {
    return {std::cos(angle_rad), std::sin(angle_rad)};
}

JonesVector JonesVector::rhcp() {
    return {1.0, std::complex<double>(0.0, -1.0)};
}

JonesVector JonesVector::lhcp() {
    return {1.0, std::complex<double>(0.0, 1.0)};
}

double polarization_mismatch(const JonesVector& tx, const JonesVector& rx) {
    const std::complex<double> inner = std::conj(rx.ex) * tx.ex + std::conj(rx.ey) * tx.ey;
    const double rho = std::norm(inner);
    return std::min(1.0, std::max(0.0, rho));
}

JonesVector reflect_polarization(const JonesVector& incident, SurfaceKind surface,
                                 double depolarization_fraction) {
    const JonesVector spec{std::conj(incident.ex), std::conj(incident.ey)};
    if (surface == SurfaceKind::SmoothSpecular)
        return spec;
    if (depolarization_fraction < 0.0 || depolarization_fraction > 1.0)
        throw std::invalid_argument("reflect_polarization: fraction must be in [0, 1]");
    const double fd = depolarization_fraction;
    if (fd == 0.0)
        return spec;
    const JonesVector orth = orthogonal(spec);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const std::complex<double> dx = (spec.ex + orth.ex) * inv_sqrt2;
    const std::complex<double> dy = (spec.ey + orth.ey) * inv_sqrt2;
    const double a = std::sqrt(1.0 - fd);
    const double b = std::sqrt(fd);
    // <spec*, d> is real, so the quadrature blend keeps unit norm
    return {a * spec.ex + kJ * b * dx, a * spec.ey + kJ * b * dy};
}

double hpbw_to_exponent(double hpbw_deg) {
    if (!(hpbw_deg > 0.0) || hpbw_deg >= 180.0)
        throw std::invalid_argument("hpbw_to_exponent: beamwidth must be in (0, 180)");
    return std::log(0.5) / std::log(std::cos(deg_to_rad(hpbw_deg / 2.0)));
}

AntennaSpec AntennaSpec::make(JonesVector pol, double peak_gain_dbi, double hpbw_deg) {
    if (!std::isfinite(peak_gain_dbi))
        throw std::invalid_argument("AntennaSpec: peak gain must be finite");
    AntennaSpec s;
    s.polarization = pol;
    s.peak_gain_dbi = peak_gain_dbi;
    s.hpbw_deg = hpbw_deg;
    s.pattern_exponent = hpbw_to_exponent(hpbw_deg);
    return s;
}

AntennaSpec AntennaSpec::lp_single() {
    return make(JonesVector::lp_vertical(), 5.8, 81.0);
}

AntennaSpec AntennaSpec::cp_single(bool right_handed) {
    return make(right_handed ? JonesVector::rhcp() : JonesVector::lhcp(), 5.8, 81.0);
}

AntennaSpec AntennaSpec::lp_array() {
    return make(JonesVector::lp_vertical(), 5.8, 37.0);
}

AntennaSpec AntennaSpec::cp_array(bool right_handed) {
    return make(right_handed ? JonesVector::rhcp() : JonesVector::lhcp(), 5.8, 37.0);
}

double pattern_gain(const AntennaSpec& spec, double theta_rad) {
    if (theta_rad < 0.0 || theta_rad > kPi)
        throw std::invalid_argument("pattern_gain: theta must be in [0, pi]");
    const double peak = db_to_linear_power(spec.peak_gain_dbi);
    const double floor = peak * db_to_linear_power(kBackLobeFloorDb);
    if (theta_rad >= kPi / 2.0)
        return floor;
    const double g = peak * std::pow(std::cos(theta_rad), spec.pattern_exponent);
    return std::max(g, floor);
}

double ArrayField::axial_ratio_db() const {
    const double r = std::abs(co);
    const double l = std::abs(cross);
    const double major = r + l;
    const double minor = std::abs(r - l);
    if (minor == 0.0)
        return 300.0; // perfectly linear
    return linear_amplitude_to_db(major / minor);
}

ArrayField array_factor(double spacing_m, std::span<const double> phases_deg,
                        double theta_rad, double phi_rad, double wavelength_m,
                        const JonesVector& element_pol, double element_exponent) {
    if (phases_deg.size() != 4)
        throw std::invalid_argument("array_factor: expects 4 feed phases (2x2 grid)");
    for (double p : phases_deg) {
        const double r = std::fmod(p, 360.0);
        if (r != 0.0 && r != 90.0 && r != 180.0 && r != 270.0)
            throw std::invalid_argument("array_factor: phases must come from {0,90,180,270}");
    }
    if (!(spacing_m > 0.0) || !(wavelength_m > 0.0))
        throw std::invalid_argument("array_factor: spacing and wavelength must be positive");

    // circular decomposition of the element state
    const JonesVector r_basis = JonesVector::rhcp();
    const JonesVector l_basis = JonesVector::lhcp();
    const std::complex<double> elem_r =
        std::conj(r_basis.ex) * element_pol.ex + std::conj(r_basis.ey) * element_pol.ey;
    const std::complex<double> elem_l =
        std::conj(l_basis.ex) * element_pol.ex + std::conj(l_basis.ey) * element_pol.ey;

    // common element amplitude pattern
    double elem_amp = 0.0;
    if (theta_rad < kPi / 2.0)
        elem_amp = std::pow(std::cos(theta_rad), element_exponent / 2.0);
    elem_amp = std::max(elem_amp, db_to_linear_amplitude(kBackLobeFloorDb));

    const double h = spacing_m / 2.0;
    const double px[4] = {-h, h, h, -h};
    const double py[4] = {-h, -h, h, h};
    const double sx = std::sin(theta_rad) * std::cos(phi_rad);
    const double sy = std::sin(theta_rad) * std::sin(phi_rad);
    const double k = kTwoPi / wavelength_m;

    std::complex<double> sum_r = 0.0;
    std::complex<double> sum_l = 0.0;
    for (int m = 0; m < 4; ++m) {
        const double alpha = deg_to_rad(phases_deg[m]);
        const std::complex<double> geo = std::polar(1.0, k * (sx * px[m] + sy * py[m]));
        const std::complex<double> feed = std::polar(1.0, alpha);
        // physical rotation by alpha multiplies the circular components by
        // e^{-j alpha} (right) and e^{+j alpha} (left)
        sum_r += elem_r * std::polar(1.0, -alpha) * feed * geo;
        sum_l += elem_l * std::polar(1.0, alpha) * feed * geo;
    }
    return {sum_r * elem_amp, sum_l * elem_amp};
}

void SubstrateSpec::validate() const {
    if (!(epsilon_r >= 1.0))
        throw std::invalid_argument("SubstrateSpec: epsilon_r must be >= 1");
    if (!(height_mm > 0.0))
        throw std::invalid_argument("SubstrateSpec: height must be positive");
}

FeedNetwork feed_impedances(double z0_ohm) {
    if (!(z0_ohm > 0.0))
        throw std::invalid_argument("feed_impedances: z0 must be positive");
    FeedNetwork n;
    n.z0_ohm = z0_ohm;
    n.branch_impedances_ohm = {4.0 * z0_ohm,       4.0 * z0_ohm / 3.0, 4.0 * z0_ohm,
                               2.0 * z0_ohm,       4.0 * z0_ohm,       4.0 * z0_ohm};
    n.transformer_impedance_ohm = std::sqrt(z0_ohm * 50.0);
    return n;
}

double microstrip_width_mm(double zc_ohm, const SubstrateSpec& substrate) {
    substrate.validate();
    if (!(zc_ohm > 0.0))
        throw std::invalid_argument("microstrip_width_mm: impedance must be positive");
    const double er = substrate.epsilon_r;
    const double d = substrate.height_mm;

    const double a = (zc_ohm / 60.0) * std::sqrt((er + 1.0) / 2.0) +
                     ((er - 1.0) / (er + 1.0)) * (0.23 + 0.11 / er);
    const double e2a = std::exp(2.0 * a);
    if (e2a <= 2.0)
        throw std::invalid_argument("microstrip_width_mm: inputs outside the valid range");
    const double ratio_narrow = 8.0 * std::exp(a) / (e2a - 2.0);
    if (ratio_narrow < 2.0)
        return d * ratio_narrow;

    // wide-line branch
    const double b = 377.0 * kPi / (2.0 * zc_ohm * std::sqrt(er));
    const double ratio_wide =
        (2.0 / kPi) * (b - 1.0 - std::log(2.0 * b - 1.0) +
                       ((er - 1.0) / (2.0 * er)) * (std::log(b - 1.0) + 0.39 - 0.61 / er));
    return d * ratio_wide;
}

FeedNetwork design_feed_network(double z0_ohm, const SubstrateSpec& substrate) {
    FeedNetwork n = feed_impedances(z0_ohm);
    n.line_widths_mm.reserve(8);
    n.line_widths_mm.push_back(microstrip_width_mm(n.z0_ohm, substrate));
    for (double z : n.branch_impedances_ohm)
        n.line_widths_mm.push_back(microstrip_width_mm(z, substrate));
    n.line_widths_mm.push_back(microstrip_width_mm(n.transformer_impedance_ohm, substrate));
    return n;
}

} // namespace cwradar
