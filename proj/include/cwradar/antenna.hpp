// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The cwradar Authors

#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "cwradar/mathx.hpp"

namespace cwradar {

// Normalized two-component polarization state. All states share one global
// transverse (x, y) frame; handedness convention: RHCP has ey = -j*ex under
// the e^{+j w t} time convention, looking along propagation out of the
// antenna.
struct JonesVector {
    std::complex<double> ex;
    std::complex<double> ey;

    JonesVector(std::complex<double> x, std::complex<double> y);

    static JonesVector lp_horizontal() { return {1.0, 0.0}; }
    static JonesVector lp_vertical() { return {0.0, 1.0}; }
    static JonesVector lp_rotated(double angle_rad);
    static JonesVector rhcp();
    static JonesVector lhcp();

    double norm_sq() const { return std::norm(ex) + std::norm(ey); }
};

enum class SurfaceKind { SmoothSpecular, Rough };

inline constexpr double kDefaultDepolarizationFraction = 0.3;

// Power fraction a receive polarization captures from an incoming state,
// rho = |<rx*, wave>|^2 in the shared frame (receive match vector is the
// conjugate of the antenna's transmit state). Always in [0, 1].
double polarization_mismatch(const JonesVector& tx, const JonesVector& rx);

// Specular reflection conjugates the Jones state component-wise, which flips
// circular handedness and preserves linear states. A rough surface blends in
// a quadrature diagonal component: out = sqrt(1-fd)*spec + j*sqrt(fd)*d with
// d = (spec + orth(spec))/sqrt(2); the blend keeps unit norm and routes
// fd/2 of the power to the orthogonal polarization.
JonesVector reflect_polarization(const JonesVector& incident, SurfaceKind surface,
                                 double depolarization_fraction = kDefaultDepolarizationFraction);

// cos^n(theta) exponent whose half-power width equals the given beamwidth.
double hpbw_to_exponent(double hpbw_deg);

// Pattern floor behind the antenna, relative to peak.
inline constexpr double kBackLobeFloorDb = -20.0;

struct AntennaSpec {
    JonesVector polarization = JonesVector::lp_vertical();
    double peak_gain_dbi = 5.8;
    double hpbw_deg = 81.0;
    double pattern_exponent = 0.0; // derived from hpbw_deg

    static AntennaSpec make(JonesVector pol, double peak_gain_dbi, double hpbw_deg);
    static AntennaSpec lp_single();
    static AntennaSpec cp_single(bool right_handed);
    static AntennaSpec lp_array();
    static AntennaSpec cp_array(bool right_handed);
};

// Linear power gain at angle theta off boresight: G_peak * cos^n(theta) in
// front, a -20 dB floor behind.
double pattern_gain(const AntennaSpec& spec, double theta_rad);

// Summed far field of a 2x2 sequentially rotated array, decomposed into
// circular components (co = right-hand, cross = left-hand). Element physical
// rotation equals its feed phase, so at boresight the cross-polar sum
// cancels exactly for any common element.
struct ArrayField {
    std::complex<double> co;
    std::complex<double> cross;

    double total_magnitude() const { return std::sqrt(std::norm(co) + std::norm(cross)); }
    // max/min polarization ellipse axis ratio in dB; 0 dB is circular
    double axial_ratio_db() const;
};

ArrayField array_factor(double spacing_m, std::span<const double> phases_deg,
                        double theta_rad, double phi_rad, double wavelength_m,
                        const JonesVector& element_pol, double element_exponent);

struct SubstrateSpec {
    double epsilon_r = 4.4;
    double height_mm = 1.6;
    double loss_tangent = 0.0;

    void validate() const;
};

// Branch impedances of the equal-split sequential feed network, all
// proportional to the reference impedance, plus the quarter-wave transformer
// to 50 ohm.
struct FeedNetwork {
    double z0_ohm = 25.0;
    std::array<double, 6> branch_impedances_ohm{}; // Z1..Z6
    double transformer_impedance_ohm = 0.0;
    std::vector<double> line_widths_mm; // filled by design_feed_network
};

FeedNetwork feed_impedances(double z0_ohm);

// Microstrip width synthesis (narrow-line exponential form for W/d < 2,
// standard B-parameter form for W/d >= 2).
double microstrip_width_mm(double zc_ohm, const SubstrateSpec& substrate);

// feed_impedances plus synthesized widths for every line (z0, Z1..Z6,
// transformer), in that order.
FeedNetwork design_feed_network(double z0_ohm, const SubstrateSpec& substrate);

} // namespace cwradar
