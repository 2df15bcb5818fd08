// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The cwradar Authors

#pragma once

#include <complex>
#include <string>
#include <vector>

#include "cwradar/antenna.hpp"
#include "cwradar/doppler.hpp"
#include "cwradar/exec.hpp"

namespace cwradar {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }
    Vec3 normalized() const;
};

// Finite rectangular reflector. The in-plane axes used for the extent check
// are a deterministic frame derived from the normal.
struct Reflector {
    std::string id;
    Vec3 center;
    Vec3 normal; // unit
    double width_m = 0.0;
    double height_m = 0.0;
    double roughness_height_m = 0.0; // min-to-max protuberance
    double reflection_magnitude = 1.0;
    bool is_target = false;

    void validate() const;
};

struct SceneAntenna {
    AntennaSpec spec;
    Vec3 position;
    Vec3 boresight; // unit; defaults to aiming at the target
};

struct Scene {
    SceneAntenna tx;
    SceneAntenna rx;
    Reflector target;
    MotionWaveform target_motion = MotionWaveform::none();
    std::vector<Reflector> statics;
    double depolarization_fraction = kDefaultDepolarizationFraction;
    std::complex<double> leakage = 0.0; // direct Tx->Rx coupling phasor

    void validate() const;
};

// Rayleigh criterion critical height; incidence measured from the surface
// plane (perpendicular incidence = pi/2).
double rayleigh_critical_height(double wavelength_m, double incidence_rad);

enum class SurfaceClass { Smooth, Rough };

// smooth iff h < h_c (the tie goes to rough)
SurfaceClass classify_surface(double h_m, double h_c_m);

// Bistatic radar equation: Pt*Gt*Gr*sigma*lambda^2*rho / ((4pi)^3 R1^2 R2^2).
double bistatic_received_power(double pt_w, double gt, double gr, double sigma_m2,
                               double wavelength_m, double rho, double r1_m, double r2_m);

// Physical-optics flat plate: sigma(0) = 4pi (w*h)^2 / lambda^2 with a
// two-way sinc^2 rolloff off normal.
double plate_rcs(double width_m, double height_m, double wavelength_m, double aspect_rad);

struct PathContribution {
    int order = 0;                         // number of bounces
    std::vector<std::string> reflector_ids;
    double path_length_m = 0.0;            // rest geometry
    std::complex<double> complex_amplitude; // gains, spreading, rho; no carrier phase
    JonesVector polarization_at_rx = JonesVector::lp_vertical();
    bool includes_target = false;
    // dL/dx for target displacement along the target normal
    double displacement_sensitivity = 0.0;
};

// Specular image-method paths Tx -> (reflectors...) -> Rx up to max_order
// bounces. Hit points must fall inside each reflector's extent; shadowing by
// other objects is not modeled. |complex_amplitude|^2 equals Pr/Pt of the
// bistatic radar equation for single-bounce paths.
std::vector<PathContribution> trace_paths(const Scene& scene, int max_order,
                                          double wavelength_m);

// Coherent multipath baseband: B(t) = leakage + sum_p a_p e^{j(2pi L_p(t)/lambda
// + theta0 + dphi)}, I = a_i Re(B) + noise, Q = a_q Im(B) + noise. Target
// paths move to first order via their displacement sensitivity.
BasebandIQ compose_baseband(const Scene& scene, const CarrierConfig& carrier,
                            double duration_s, double sample_rate_hz,
                            const NoiseSpec& noise, double a_i = 1.0, double a_q = 1.0,
                            int max_order = 2, Exec exec = Exec::parallel);

} // namespace cwradar
