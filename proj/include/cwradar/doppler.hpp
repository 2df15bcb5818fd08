// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The cwradar Authors

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "cwradar/mathx.hpp"

namespace cwradar {

// Carrier and geometry constants of the quadrature CW radar. The wavelength
// is always derived from the frequency so the two can never drift apart.
struct CarrierConfig {
    double frequency_hz = 2.4e9;
    double tx_power_dbm = 0.0;
    double nominal_distance_m = 1.5;  // radar-to-target distance d0
    double surface_phase_rad = 0.0;   // phase shift from surface reflections
    double residual_phase_rad = 0.0;  // residual phase of the RF chain

    double wavelength_m() const { return kSpeedOfLight / frequency_hz; }
    double total_phase_rad() const { return surface_phase_rad + residual_phase_rad; }
    double tx_power_w() const { return 1e-3 * db_to_linear_power(tx_power_dbm); }

    static CarrierConfig from_wavelength(double wavelength_m);
    void validate() const;
};

// Target displacement x(t) in meters. Three shapes: a pure sinusoid (the
// linear-actuator case), an analytic two-tone respiration+heartbeat blend,
// and an arbitrary sampled series (used for jittered physiological motion).
class MotionWaveform {
  public:
    enum class Kind { Sinusoid, TwoTone, Sampled };

    static MotionWaveform sinusoid(double amplitude_m, double period_s);
    static MotionWaveform two_tone(double resp_amplitude_m, double resp_rate_hz,
                                   double heart_amplitude_m, double heart_rate_hz);
    static MotionWaveform sampled(std::vector<double> displacement_m, double sample_rate_hz);
    static MotionWaveform none() { return sinusoid(0.0, 1.0); }

    Kind kind() const { return kind_; }
    double displacement_at(double t_s) const;

    // Highest frequency declared by the waveform definition; 0 when the
    // content cannot be derived (sampled series).
    double highest_declared_frequency_hz() const;

    double amplitude_m() const { return amplitude_m_; }
    double period_s() const { return period_s_; }
    double resp_amplitude_m() const { return resp_amplitude_m_; }
    double resp_rate_hz() const { return resp_rate_hz_; }
    double heart_amplitude_m() const { return heart_amplitude_m_; }
    double heart_rate_hz() const { return heart_rate_hz_; }
    const std::vector<double>& samples() const { return samples_; }
    double sample_rate_hz() const { return sample_rate_hz_; }

  private:
    MotionWaveform() = default;

    Kind kind_ = Kind::Sinusoid;
    double amplitude_m_ = 0.0;
    double period_s_ = 1.0;
    double resp_amplitude_m_ = 0.0;
    double resp_rate_hz_ = 0.0;
    double heart_amplitude_m_ = 0.0;
    double heart_rate_hz_ = 0.0;
    std::vector<double> samples_;
    double sample_rate_hz_ = 0.0;
};

// Additive channel impairments: white Gaussian noise plus a constant DC
// offset per channel. The seed fixes every draw.
struct NoiseSpec {
    double i_sigma = 0.0;
    double q_sigma = 0.0;
    double i_dc = 0.0;
    double q_dc = 0.0;
    std::uint64_t seed = 0;
};

// Paired in-phase/quadrature baseband sample streams.
struct BasebandIQ {
    std::vector<double> i;
    std::vector<double> q;
    double sample_rate_hz = 100.0;
    double i_amplitude = 1.0;
    double q_amplitude = 1.0;

    std::size_t size() const { return i.size(); }
    double duration_s() const { return static_cast<double>(i.size()) / sample_rate_hz; }
    void validate() const;
};

struct HarmonicEntry {
    int n = 0;
    double amplitude = 0.0;
    double amplitude_db = 0.0; // relative to the largest entry
};

struct HarmonicTable {
    std::vector<HarmonicEntry> entries;
};

enum class IqChannel { I, Q, Complex };

enum class NullState { FundamentalDominant, NullPoint, Intermediate };

// |sin(phi)| below this puts the channel in the null regime; above
// 1 - threshold the fundamental dominates.
inline constexpr double kNullSinThreshold = 0.1;

// Baseband synthesis: i[n] = a_i*cos(4*pi*x(t_n)/lambda + phi_total) and
// q[n] = a_q*sin(...) plus the configured noise and DC terms.
BasebandIQ synthesize_iq(const MotionWaveform& motion, const CarrierConfig& carrier,
                         double duration_s, double sample_rate_hz, const NoiseSpec& noise,
                         double a_i = 1.0, double a_q = 1.0);

// r[n] = i[n] + j*q[n]
std::vector<std::complex<double>> complex_demodulate(const BasebandIQ& iq);

// Analytic harmonic amplitudes of the phase-modulated baseband for a
// sinusoidal displacement of amplitude k_m. Channel I keeps even harmonics
// proportional to |Jn * cos(phi)| and odd ones to |Jn * sin(phi)| (Q swaps
// the roles); the complex signal's harmonics are phi-independent |Jn|.
HarmonicTable predict_harmonics(double k_m, double wavelength_m, double phi_rad,
                                int n_max, IqChannel channel);

NullState null_indicator(double phi_rad);

} // namespace cwradar
