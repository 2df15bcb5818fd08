// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The cwradar Authors

#include <doctest.h>

#include <array>
#include <cmath>

#include "cwradar/antenna.hpp"
#include "cwradar/rng.hpp"
#include "oracles.hpp"

using namespace cwradar;

namespace {

JonesVector random_jones(Rng& rng) {
    return {{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)},
            {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)}};
}

} // namespace

TEST_CASE("JonesVector normalizes on construction") {
    const JonesVector v{3.0, 4.0};
    CHECK(v.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(JonesVector(0.0, 0.0), std::invalid_argument);
}

TEST_CASE("polarization_mismatch canonical values") {
    const auto V = JonesVector::lp_vertical();
    const auto H = JonesVector::lp_horizontal();
    const auto R = JonesVector::rhcp();
    const auto L = JonesVector::lhcp();

    CHECK(polarization_mismatch(V, V) == doctest::Approx(1.0));
    CHECK(polarization_mismatch(V, H) == doctest::Approx(0.0));
    // LP against either CP hand loses exactly half the power
    for (const auto& lp : {V, H})
        for (const auto& cp : {R, L})
            CHECK(polarization_mismatch(lp, cp) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("polarization_mismatch symmetry and bounds under fuzzing") {
    Rng rng(2024);
    for (int k = 0; k < 10000; ++k) {
        const JonesVector a = random_jones(rng);
        const JonesVector b = random_jones(rng);
        const double ab = polarization_mismatch(a, b);
        const double ba = polarization_mismatch(b, a);
        CHECK(ab >= 0.0);
        CHECK(ab <= 1.0);
        CHECK(ab == doctest::Approx(ba).epsilon(1e-12));
    }
}

TEST_CASE("smooth specular reflection flips CP handedness and keeps LP") {
    const auto L = JonesVector::lhcp();
    const auto out = reflect_polarization(L, SurfaceKind::SmoothSpecular);
    CHECK(polarization_mismatch(out, JonesVector::lhcp()) ==
          doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK(polarization_mismatch(out, JonesVector::rhcp()) == doctest::Approx(1.0));

    const auto V = JonesVector::lp_vertical();
    const auto v_out = reflect_polarization(V, SurfaceKind::SmoothSpecular);
    CHECK(polarization_mismatch(v_out, V) == doctest::Approx(1.0));

    const auto D = JonesVector::lp_rotated(kPi / 4.0);
    const auto d_out = reflect_polarization(D, SurfaceKind::SmoothSpecular);
    CHECK(polarization_mismatch(d_out, D) == doctest::Approx(1.0));
}

TEST_CASE("double specular reflection is the identity for CP states") {
    for (const auto& s : {JonesVector::rhcp(), JonesVector::lhcp()}) {
        const auto twice = reflect_polarization(
            reflect_polarization(s, SurfaceKind::SmoothSpecular), SurfaceKind::SmoothSpecular);
        CHECK(polarization_mismatch(twice, s) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("rough reflection routes fd/2 power to the orthogonal state") {
    const auto V = JonesVector::lp_vertical();
    const auto out = reflect_polarization(V, SurfaceKind::Rough, 0.5);
    CHECK(out.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(polarization_mismatch(out, JonesVector::lp_horizontal()) ==
          doctest::Approx(0.25).epsilon(1e-12));
    CHECK(polarization_mismatch(out, V) == doctest::Approx(0.75).epsilon(1e-12));

    // Jones algebra oracle: explicit mix a*V + j*b*(V + H)/sqrt(2)
    const double a = std::sqrt(0.5), b = std::sqrt(0.5);
    const std::complex<double> j{0.0, 1.0};
    const std::complex<double> ex = j * b / std::sqrt(2.0);
    const std::complex<double> ey = a + j * b / std::sqrt(2.0);
    const JonesVector expect{ex, ey};
    CHECK(polarization_mismatch(out, expect) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("rough reflection at fraction > 1/3 favors a CP receiver over co-pol LP") {
    const auto state = reflect_polarization(JonesVector::lp_vertical(), SurfaceKind::Rough, 0.45);
    const double to_lp = polarization_mismatch(state, JonesVector::lp_vertical());
    const double to_cp = polarization_mismatch(state, JonesVector::rhcp());
    CHECK(to_cp > to_lp);
}

TEST_CASE("hpbw_to_exponent matches the bisection oracle") {
    for (double hpbw : {81.0, 37.0, 60.0})
        CHECK(hpbw_to_exponent(hpbw) ==
              doctest::Approx(oracle::hpbw_exponent_bisect(hpbw)).epsilon(1e-9));
    CHECK(hpbw_to_exponent(81.0) == doctest::Approx(2.53).epsilon(0.01));
    CHECK(hpbw_to_exponent(37.0) == doctest::Approx(13.06).epsilon(0.01));
    CHECK(hpbw_to_exponent(60.0) == doctest::Approx(4.82).epsilon(0.01));
    CHECK_THROWS_AS(hpbw_to_exponent(180.0), std::invalid_argument);
    CHECK_THROWS_AS(hpbw_to_exponent(0.0), std::invalid_argument);
}

TEST_CASE("pattern_gain peak, half-power point and back lobe") {
    const auto spec = AntennaSpec::lp_single();
    CHECK(pattern_gain(spec, 0.0) == doctest::Approx(3.80).epsilon(0.01));
    CHECK(pattern_gain(spec, deg_to_rad(40.5)) ==
          doctest::Approx(0.5 * pattern_gain(spec, 0.0)).epsilon(0.01));
    const double back = pattern_gain(spec, kPi);
    CHECK(back == doctest::Approx(pattern_gain(spec, 0.0) * 0.01).epsilon(1e-9));
    // the fitted pattern's half-power width reproduces the requested
    // beamwidth within 0.01 deg
    const double n = hpbw_to_exponent(37.0);
    const double half = 2.0 * rad_to_deg(std::acos(std::pow(0.5, 1.0 / n)));
    CHECK(half == doctest::Approx(37.0).epsilon(0.0003));
}

TEST_CASE("array_factor: sequential rotation gives 0 dB axial ratio at boresight") {
    const std::array<double, 4> seq{0.0, 90.0, 180.0, 270.0};
    // any common element polarization cancels the cross-polar sum exactly
    for (const auto& pol : {JonesVector::rhcp(), JonesVector::lp_vertical(),
                            JonesVector::lp_rotated(0.3)}) {
        const auto f = array_factor(0.0625, seq, 0.0, 0.0, 0.125, pol, 2.53);
        CHECK(std::abs(f.cross) < 1e-12 * std::abs(f.co));
        CHECK(f.axial_ratio_db() == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
    }
}

TEST_CASE("array_factor: uniform feed sums coherently to 4x") {
    const std::array<double, 4> uniform{0.0, 0.0, 0.0, 0.0};
    const auto pol = JonesVector::lp_vertical();
    const auto f = array_factor(0.0625, uniform, 0.0, 0.0, 0.125, pol, 2.53);
    CHECK(f.total_magnitude() == doctest::Approx(4.0).epsilon(1e-12));
    // LP has equal circular components: axial ratio is linear (large)
    CHECK(f.axial_ratio_db() > 60.0);
}

TEST_CASE("array_factor: beam narrows; composite verified against a phasor oracle") {
    // With half-wave spacing and 81-degree elements the composite model puts
    // the half-power point near 24.4 degrees (model HPBW about 49 degrees),
    // wider than the 37-degree build it stands in for; the factor-level
    // numbers below are pinned against a direct 4-phasor sum.
    const std::array<double, 4> seq{0.0, 90.0, 180.0, 270.0};
    const auto pol = JonesVector::rhcp();
    const double n81 = hpbw_to_exponent(81.0);
    const auto bore = array_factor(0.0625, seq, 0.0, 0.0, 0.125, pol, n81);

    auto power_ratio = [&](double theta_deg) {
        const auto f = array_factor(0.0625, seq, deg_to_rad(theta_deg), 0.0, 0.125, pol, n81);
        const double r = f.total_magnitude() / bore.total_magnitude();
        return r * r;
    };

    // direct phasor oracle at 18.5 degrees
    const double th = deg_to_rad(18.5);
    const double psi = kTwoPi / 0.125 * 0.03125 * std::sin(th); // k * (d/2) * sin
    const double af = std::cos(psi);                            // pair sum / 2
    const double elem = std::pow(std::cos(th), n81);
    const double expect = af * af * elem;
    CHECK(power_ratio(18.5) == doctest::Approx(expect).epsilon(1e-9));
    CHECK(expect == doctest::Approx(0.6745).epsilon(0.001));

    // narrowing relative to a single element, and a monotone main lobe
    CHECK(power_ratio(18.5) < elem);
    double prev = 1.0;
    bool monotone = true;
    for (double t = 2.0; t <= 40.0; t += 2.0) {
        const double p = power_ratio(t);
        monotone = monotone && (p <= prev + 1e-12);
        prev = p;
    }
    CHECK(monotone);
    // half-power crossing sits between 20 and 30 degrees for this model
    CHECK(power_ratio(20.0) > 0.5);
    CHECK(power_ratio(30.0) < 0.5);
}

TEST_CASE("array_factor input validation") {
    const std::array<double, 3> three{0.0, 90.0, 180.0};
    const std::array<double, 4> bad{0.0, 45.0, 180.0, 270.0};
    const auto pol = JonesVector::rhcp();
    CHECK_THROWS_AS(array_factor(0.0625, three, 0.0, 0.0, 0.125, pol, 2.53),
                    std::invalid_argument);
    CHECK_THROWS_AS(array_factor(0.0625, bad, 0.0, 0.0, 0.125, pol, 2.53),
                    std::invalid_argument);
}

TEST_CASE("feed_impedances: reference values and scaling") {
    const auto n25 = feed_impedances(25.0);
    CHECK(n25.branch_impedances_ohm[0] == 100.0);
    CHECK(n25.branch_impedances_ohm[1] == doctest::Approx(100.0 / 3.0).epsilon(1e-15));
    CHECK(n25.branch_impedances_ohm[2] == 100.0);
    CHECK(n25.branch_impedances_ohm[3] == 50.0);
    CHECK(n25.branch_impedances_ohm[4] == 100.0);
    CHECK(n25.branch_impedances_ohm[5] == 100.0);
    CHECK(n25.transformer_impedance_ohm == doctest::Approx(35.3553).epsilon(1e-4));

    const auto n50 = feed_impedances(50.0);
    CHECK(n50.branch_impedances_ohm[0] == 200.0);
    CHECK(n50.branch_impedances_ohm[1] == doctest::Approx(200.0 / 3.0).epsilon(1e-15));
    CHECK(n50.branch_impedances_ohm[3] == 100.0);
    CHECK(n50.transformer_impedance_ohm == doctest::Approx(50.0).epsilon(1e-12));

    for (double z0 : {12.5, 25.0, 40.0})
        CHECK(std::abs(feed_impedances(z0).transformer_impedance_ohm -
                       std::sqrt(z0 * 50.0)) < 1e-9);
    CHECK_THROWS_AS(feed_impedances(0.0), std::invalid_argument);
}

TEST_CASE("feed network conserves power at every junction") {
    for (double z0 : {10.0, 25.0, 50.0, 73.0}) {
        const auto n = feed_impedances(z0);
        const auto& z = n.branch_impedances_ohm;
        // junction 1: input splits into Z1 and Z2
        CHECK(1.0 / z[0] + 1.0 / z[1] == doctest::Approx(1.0 / z0).epsilon(1e-12));
        // junction 2: Z2 splits into Z3 and Z4
        CHECK(1.0 / z[2] + 1.0 / z[3] == doctest::Approx(1.0 / z[1]).epsilon(1e-12));
        // junction 3: Z4 splits into Z5 and Z6
        CHECK(1.0 / z[4] + 1.0 / z[5] == doctest::Approx(1.0 / z[3]).epsilon(1e-12));
    }
}

TEST_CASE("microstrip_width: reference cases on FR-4") {
    const SubstrateSpec fr4{4.4, 1.6, 0.017};
    const double w50 = microstrip_width_mm(50.0, fr4);
    CHECK(w50 == doctest::Approx(3.06).epsilon(0.005));
    CHECK(w50 / fr4.height_mm < 2.0); // narrow branch

    const double w100 = microstrip_width_mm(100.0, fr4);
    CHECK(w100 / fr4.height_mm < 1.0);
    CHECK(w100 == doctest::Approx(0.71).epsilon(0.02));

    // monotone: higher impedance, narrower line
    double prev = 1e9;
    for (double zc : {20.0, 30.0, 50.0, 70.0, 100.0, 140.0}) {
        const double w = microstrip_width_mm(zc, fr4);
        CHECK(w < prev);
        prev = w;
    }
}

TEST_CASE("microstrip_width round-trips through the analysis oracle within 2%") {
    const SubstrateSpec fr4{4.4, 1.6, 0.017};
    for (double zc : {25.0, 100.0 / 3.0, 50.0, 100.0, 35.3553}) {
        const double w = microstrip_width_mm(zc, fr4);
        const double back = oracle::microstrip_impedance_ohm(w, fr4.epsilon_r, fr4.height_mm);
        CHECK(back == doctest::Approx(zc).epsilon(0.02));
    }
    // a duroid-style substrate as well
    const SubstrateSpec duroid{2.2, 1.6, 0.0007};
    for (double zc : {35.0, 50.0, 90.0}) {
        const double w = microstrip_width_mm(zc, duroid);
        const double back =
            oracle::microstrip_impedance_ohm(w, duroid.epsilon_r, duroid.height_mm);
        CHECK(back == doctest::Approx(zc).epsilon(0.02));
    }
}

TEST_CASE("microstrip_width rejects numerically invalid inputs") {
    const SubstrateSpec fr4{4.4, 1.6, 0.017};
    CHECK_THROWS_AS(microstrip_width_mm(-5.0, fr4), std::invalid_argument);
    // impedance low enough to push e^{2A} <= 2
    CHECK_THROWS_AS(microstrip_width_mm(1.0, fr4), std::invalid_argument);
    CHECK_THROWS_AS(microstrip_width_mm(50.0, SubstrateSpec{0.5, 1.6, 0.0}),
                    std::invalid_argument);
}

TEST_CASE("design_feed_network emits a width per line") {
    const SubstrateSpec fr4{4.4, 1.6, 0.017};
    const auto net = design_feed_network(25.0, fr4);
    REQUIRE(net.line_widths_mm.size() == 8);
    for (double w : net.line_widths_mm)
        CHECK(w > 0.0);
    // z0 = 25 is the widest line, Z1 = 100 among the narrowest
    CHECK(net.line_widths_mm[0] > net.line_widths_mm[1]);
}
