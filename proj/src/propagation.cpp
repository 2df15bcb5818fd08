// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The cwradar Authors

#include "cwradar/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cwradar/rng.hpp"

namespace cwradar {

namespace {

constexpr double kPlaneEps = 1e-9;

Vec3 mirror_point(const Vec3& p, const Reflector& r) {
    const double d = (p - r.center).dot(r.normal);
    return p - r.normal * (2.0 * d);
}

// in-plane frame for the extent check; deterministic from the normal
void plane_axes(const Reflector& r, Vec3& u, Vec3& v) {
    const Vec3 ref = std::abs(r.normal.z) < 0.9 ? Vec3{0.0, 0.0, 1.0} : Vec3{1.0, 0.0, 0.0};
    u = r.normal.cross(ref).normalized();
    v = r.normal.cross(u);
}

bool inside_extent(const Vec3& p, const Reflector& r) {
    Vec3 u, v;
    plane_axes(r, u, v);
    const Vec3 d = p - r.center;
    return std::abs(d.dot(u)) <= r.width_m / 2.0 + 1e-12 &&
           std::abs(d.dot(v)) <= r.height_m / 2.0 + 1e-12;
}

// intersection of segment a->b with the reflector plane, strictly between
// the endpoints and inside the extent
bool segment_plane_hit(const Vec3& a, const Vec3& b, const Reflector& r, Vec3& hit) {
    const Vec3 ab = b - a;
    const double denom = ab.dot(r.normal);
    if (std::abs(denom) < kPlaneEps)
        return false;
    const double t = (r.center - a).dot(r.normal) / denom;
    if (t <= kPlaneEps || t >= 1.0 - kPlaneEps)
        return false;
    hit = a + ab * t;
    return inside_extent(hit, r);
}

struct ResolvedPath {
    std::vector<Vec3> points; // tx, hits..., rx
    double length = 0.0;
};

// image-method solve for a fixed ordered reflector sequence
bool solve_path(const Vec3& tx, const Vec3& rx,
                const std::vector<const Reflector*>& seq, ResolvedPath& out) {
    const std::size_t k = seq.size();
    std::vector<Vec3> images(k + 1);
    images[0] = tx;
    for (std::size_t m = 0; m < k; ++m)
        images[m + 1] = mirror_point(images[m], *seq[m]);

    std::vector<Vec3> pts(k + 2);
    pts.front() = tx;
    pts.back() = rx;
    Vec3 next = rx;
    for (std::size_t m = k; m >= 1; --m) {
        Vec3 hit;
        if (!segment_plane_hit(images[m], next, *seq[m - 1], hit))
            return false;
        pts[m] = hit;
        next = hit;
    }

    out.points = std::move(pts);
    out.length = 0.0;
    for (std::size_t m = 0; m + 1 < out.points.size(); ++m)
        out.length += (out.points[m + 1] - out.points[m]).norm();
    return out.length > kPlaneEps;
}

double off_boresight_angle(const Vec3& boresight, const Vec3& dir) {
    const double c = std::clamp(boresight.normalized().dot(dir.normalized()), -1.0, 1.0);
    return std::acos(c);
}

} // namespace

Vec3 Vec3::normalized() const {
    const double n = norm();
    if (!(n > 0.0))
        throw std::invalid_argument("Vec3: cannot normalize a zero vector");
    return {x / n, y / n, z / n};
}

void Reflector::validate() const {
    if (std::abs(normal.norm() - 1.0) > 1e-9)
        throw std::invalid_argument("Reflector '" + id + "': normal must be unit length");
    if (!(width_m > 0.0) || !(height_m > 0.0))
        throw std::invalid_argument("Reflector '" + id + "': extent must be positive");
    if (roughness_height_m < 0.0)
        throw std::invalid_argument("Reflector '" + id + "': roughness must be >= 0");
    if (reflection_magnitude < 0.0 || reflection_magnitude > 1.0)
        throw std::invalid_argument("Reflector '" + id + "': |Gamma| must be in [0, 1]");
}

void Scene::validate() const {
    if ((tx.position - rx.position).norm() < 1e-12)
        throw std::invalid_argument("Scene: tx and rx positions must be distinct");
    target.validate();
    if (!target.is_target)
        throw std::invalid_argument("Scene: target reflector must be flagged as target");
    for (const auto& r : statics) {
        r.validate();
        if (r.is_target)
            throw std::invalid_argument("Scene: only one target allowed");
    }
    if (depolarization_fraction < 0.0 || depolarization_fraction > 1.0)
        throw std::invalid_argument("Scene: depolarization fraction must be in [0, 1]");
}

double rayleigh_critical_height(double wavelength_m, double incidence_rad) {
    if (!(wavelength_m > 0.0))
        throw std::invalid_argument("rayleigh_critical_height: wavelength must be positive");
    if (!(incidence_rad > 0.0) || incidence_rad > kPi / 2.0)
        throw std::invalid_argument("rayleigh_critical_height: incidence must be in (0, pi/2]");
    const double s = std::sin(incidence_rad);
    if (s <= 0.0)
        throw std::invalid_argument("rayleigh_critical_height: grazing incidence diverges");
    return wavelength_m / (8.0 * s);
}

SurfaceClass classify_surface(double h_m, double h_c_m) {
    if (h_m < 0.0 || h_c_m < 0.0)
        throw std::invalid_argument("classify_surface: heights must be >= 0");
    return h_m < h_c_m ? SurfaceClass::Smooth : SurfaceClass::Rough;
}

double bistatic_received_power(double pt_w, double gt, double gr, double sigma_m2,
                               double wavelength_m, double rho, double r1_m, double r2_m) {
    if (!(pt_w > 0.0) || !(gt > 0.0) || !(gr > 0.0) || !(sigma_m2 >= 0.0) ||
        !(wavelength_m > 0.0))
        throw std::invalid_argument("bistatic_received_power: parameters must be positive");
    if (rho < 0.0 || rho > 1.0)
        throw std::invalid_argument("bistatic_received_power: rho must be in [0, 1]");
    if (!(r1_m > 0.0) || !(r2_m > 0.0))
        throw std::invalid_argument("bistatic_received_power: distances must be positive");
    const double four_pi_cubed = std::pow(4.0 * kPi, 3);
    return pt_w * gt * gr * sigma_m2 * wavelength_m * wavelength_m * rho /
           (four_pi_cubed * r1_m * r1_m * r2_m * r2_m);
}

double plate_rcs(double width_m, double height_m, double wavelength_m, double aspect_rad) {
    if (!(width_m > 0.0) || !(height_m > 0.0) || !(wavelength_m > 0.0))
        throw std::invalid_argument("plate_rcs: dimensions must be positive");
    const double area = width_m * height_m;
    const double broadside = 4.0 * kPi * area * area / (wavelength_m * wavelength_m);
    const double arg = (kTwoPi * width_m / wavelength_m) * std::sin(aspect_rad);
    const double s = sinc(arg);
    return broadside * s * s;
}

std::vector<PathContribution> trace_paths(const Scene& scene, int max_order,
                                          double wavelength_m) {
    scene.validate();
    if (max_order < 1 || max_order > 3)
        throw std::invalid_argument("trace_paths: max_order must be 1, 2 or 3");
    if (!(wavelength_m > 0.0))
        throw std::invalid_argument("trace_paths: wavelength must be positive");

    std::vector<const Reflector*> all;
    all.push_back(&scene.target);
    for (const auto& r : scene.statics)
        all.push_back(&r);

    for (const Reflector* r : all) {
        if (std::abs((scene.tx.position - r->center).dot(r->normal)) < kPlaneEps ||
            std::abs((scene.rx.position - r->center).dot(r->normal)) < kPlaneEps)
            throw std::invalid_argument("trace_paths: reflector plane contains tx or rx");
    }

    std::vector<PathContribution> paths;

    // enumerate ordered reflector sequences without immediate repeats
    std::vector<std::vector<const Reflector*>> sequences;
    std::vector<const Reflector*> current;
    auto extend = [&](auto&& self, int depth) -> void {
        for (const Reflector* r : all) {
            if (!current.empty() && current.back() == r)
                continue;
            current.push_back(r);
            sequences.push_back(current);
            if (depth + 1 < max_order)
                self(self, depth + 1);
            current.pop_back();
        }
    };
    extend(extend, 0);

    for (const auto& seq : sequences) {
        ResolvedPath rp;
        if (!solve_path(scene.tx.position, scene.rx.position, seq, rp))
            continue;

        PathContribution pc;
        pc.order = static_cast<int>(seq.size());
        pc.path_length_m = rp.length;

        JonesVector state = scene.tx.spec.polarization;
        double magnitude = wavelength_m / (4.0 * kPi);
        double sensitivity = 0.0;

        for (std::size_t m = 0; m < seq.size(); ++m) {
            const Reflector& r = *seq[m];
            pc.reflector_ids.push_back(r.id);
            pc.includes_target |= r.is_target;

            const Vec3 hit = rp.points[m + 1];
            const Vec3 to_prev = (rp.points[m] - hit).normalized();
            const Vec3 to_next = (rp.points[m + 2] - hit).normalized();

            // grazing-referenced incidence: sin(theta_i) = |cos to the normal|
            const double sin_inc = std::min(1.0, std::abs(to_prev.dot(r.normal)));
            const double h_c = rayleigh_critical_height(wavelength_m,
                                                        std::max(1e-6, std::asin(sin_inc)));
            const bool rough =
                classify_surface(r.roughness_height_m, h_c) == SurfaceClass::Rough;

            // Rayleigh roughness attenuation of the specular component
            const double phase_dev = kTwoPi * r.roughness_height_m * sin_inc / wavelength_m;
            magnitude *= std::exp(-2.0 * phase_dev * phase_dev);
            magnitude *= r.reflection_magnitude;
            magnitude *= std::sqrt(plate_rcs(r.width_m, r.height_m, wavelength_m, 0.0) /
                                   (4.0 * kPi));

            state = reflect_polarization(state,
                                         rough ? SurfaceKind::Rough : SurfaceKind::SmoothSpecular,
                                         scene.depolarization_fraction);

            if (r.is_target)
                sensitivity += -(r.normal.dot(to_prev) + r.normal.dot(to_next));
        }

        for (std::size_t m = 0; m + 1 < rp.points.size(); ++m)
            magnitude /= (rp.points[m + 1] - rp.points[m]).norm();

        const Vec3 depart = (rp.points[1] - rp.points[0]).normalized();
        const Vec3 arrive = (rp.points[rp.points.size() - 2] - rp.points.back()).normalized();
        const double gt = pattern_gain(scene.tx.spec,
                                       off_boresight_angle(scene.tx.boresight, depart));
        const double gr = pattern_gain(scene.rx.spec,
                                       off_boresight_angle(scene.rx.boresight, arrive));
        magnitude *= std::sqrt(gt * gr);

        const std::complex<double> projection =
            std::conj(scene.rx.spec.polarization.ex) * state.ex +
            std::conj(scene.rx.spec.polarization.ey) * state.ey;

        pc.complex_amplitude = magnitude * projection;
        pc.polarization_at_rx = state;
        pc.displacement_sensitivity = pc.includes_target ? sensitivity : 0.0;
        paths.push_back(std::move(pc));
    }
    return paths;
}

BasebandIQ compose_baseband(const Scene& scene, const CarrierConfig& carrier,
                            double duration_s, double sample_rate_hz,
                            const NoiseSpec& noise, double a_i, double a_q,
                            int max_order, Exec exec) {
    carrier.validate();
    if (!(duration_s > 0.0) || !(sample_rate_hz > 0.0))
        throw std::invalid_argument("compose_baseband: duration and rate must be positive");
    const double f_max = scene.target_motion.highest_declared_frequency_hz();
    if (f_max > 0.0 && sample_rate_hz < 4.0 * f_max)
        throw std::invalid_argument(
            "compose_baseband: sample rate below 4x the declared motion content");

    const double lambda = carrier.wavelength_m();
    const auto paths = trace_paths(scene, max_order, lambda);
    const auto n = static_cast<std::size_t>(std::llround(duration_s * sample_rate_hz));
    if (n == 0)
        throw std::invalid_argument("compose_baseband: duration too short for one sample");

    // fold static paths (and leakage) into one constant phasor
    std::complex<double> static_sum = scene.leakage;
    struct MovingPath {
        std::complex<double> amplitude;
        double length0;
        double sensitivity;
    };
    std::vector<MovingPath> moving;
    for (const auto& p : paths) {
        if (p.includes_target)
            moving.push_back({p.complex_amplitude, p.path_length_m, p.displacement_sensitivity});
        else
            static_sum += p.complex_amplitude *
                          std::polar(1.0, kTwoPi * p.path_length_m / lambda);
    }

    const double phi0 = carrier.total_phase_rad();

    BasebandIQ out;
    out.sample_rate_hz = sample_rate_hz;
    out.i_amplitude = a_i;
    out.q_amplitude = a_q;
    out.i.resize(n);
    out.q.resize(n);

    // pre-draw noise so thread scheduling can never change the result
    std::vector<double> ni, nq;
    if (noise.i_sigma > 0.0 || noise.q_sigma > 0.0) {
        Rng rng(noise.seed);
        ni.resize(n);
        nq.resize(n);
        for (std::size_t k = 0; k < n; ++k)
            ni[k] = noise.i_sigma * rng.gaussian();
        for (std::size_t k = 0; k < n; ++k)
            nq[k] = noise.q_sigma * rng.gaussian();
    }

    const std::complex<double> static_ph = static_sum * std::polar(1.0, phi0);
    const auto sample_at = [&](std::size_t k) {
        const double t = static_cast<double>(k) / sample_rate_hz;
        const double x = scene.target_motion.displacement_at(t);
        std::complex<double> b = static_ph;
        for (const auto& mp : moving) {
            const double length = mp.length0 + mp.sensitivity * x;
            b += mp.amplitude * std::polar(1.0, kTwoPi * length / lambda + phi0);
        }
        out.i[k] = a_i * b.real() + noise.i_dc + (ni.empty() ? 0.0 : ni[k]);
        out.q[k] = a_q * b.imag() + noise.q_dc + (nq.empty() ? 0.0 : nq[k]);
    };

    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (long long k = 0; k < static_cast<long long>(n); ++k)
            sample_at(static_cast<std::size_t>(k));
    } else {
        for (std::size_t k = 0; k < n; ++k)
            sample_at(k);
    }
    return out;
}

} // namespace cwradar
