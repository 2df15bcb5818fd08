// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The cwradar Authors

#include "cwradar/doppler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cwradar/rng.hpp"

namespace cwradar {

CarrierConfig CarrierConfig::from_wavelength(double wavelength_m) {
    if (!(wavelength_m > 0.0))
        throw std::invalid_argument("CarrierConfig: wavelength must be positive");
    CarrierConfig c;
    c.frequency_hz = kSpeedOfLight / wavelength_m;
    return c;
}

void CarrierConfig::validate() const {
    if (!(frequency_hz > 0.0))
        throw std::invalid_argument("CarrierConfig: frequency_hz must be positive");
    if (!(nominal_distance_m > 0.0))
        throw std::invalid_argument("CarrierConfig: nominal_distance_m must be positive");
    if (!std::isfinite(surface_phase_rad) || !std::isfinite(residual_phase_rad))
        throw std::invalid_argument("CarrierConfig: phases must be finite");
}

MotionWaveform MotionWaveform::sinusoid(double amplitude_m, double period_s) {
    if (amplitude_m < 0.0)
        throw std::invalid_argument("MotionWaveform: amplitude must be >= 0");
    if (!(period_s > 0.0))
        throw std::invalid_argument("MotionWaveform: period must be positive");
    MotionWaveform m;
    m.kind_ = Kind::Sinusoid;
    m.amplitude_m_ = amplitude_m;
    m.period_s_ = period_s;
    return m;
}

MotionWaveform MotionWaveform::two_tone(double resp_amplitude_m, double resp_rate_hz,
                                        double heart_amplitude_m, double heart_rate_hz) {
    if (resp_amplitude_m < 0.0 || heart_amplitude_m < 0.0)
        throw std::invalid_argument("MotionWaveform: amplitudes must be >= 0");
    if (!(resp_rate_hz > 0.0) || !(heart_rate_hz > 0.0))
        throw std::invalid_argument("MotionWaveform: rates must be positive");
    MotionWaveform m;
    m.kind_ = Kind::TwoTone;
    m.resp_amplitude_m_ = resp_amplitude_m;
    m.resp_rate_hz_ = resp_rate_hz;
    m.heart_amplitude_m_ = heart_amplitude_m;
    m.heart_rate_hz_ = heart_rate_hz;
    return m;
}

MotionWaveform MotionWaveform::sampled(std::vector<double> displacement_m,
                                       double sample_rate_hz) {
    if (displacement_m.empty())
        throw std::invalid_argument("MotionWaveform: sampled series must be non-empty");
    if (!(sample_rate_hz > 0.0))
        throw std::invalid_argument("MotionWaveform: sample rate must be positive");
    for (double v : displacement_m)
        if (!std::isfinite(v))
            throw std::invalid_argument("MotionWaveform: sampled series must be finite");
    MotionWaveform m;
    m.kind_ = Kind::Sampled;
    m.samples_ = std::move(displacement_m);
    m.sample_rate_hz_ = sample_rate_hz;
    return m;
}

double MotionWaveform::displacement_at(double t_s) const {
    switch (kind_) {
    case Kind::Sinusoid:
        return amplitude_m_ * std::sin(kTwoPi * t_s / period_s_);
    case Kind::TwoTone:
        return resp_amplitude_m_ * std::sin(kTwoPi * resp_rate_hz_ * t_s) +
               heart_amplitude_m_ * std::sin(kTwoPi * heart_rate_hz_ * t_s);
    case Kind::Sampled: {
        const double pos = t_s * sample_rate_hz_;
        if (pos <= 0.0)
            return samples_.front();
        const auto last = static_cast<double>(samples_.size() - 1);
        if (pos >= last)
            return samples_.back();
        const auto k = static_cast<std::size_t>(pos);
        const double frac = pos - static_cast<double>(k);
        return samples_[k] * (1.0 - frac) + samples_[k + 1] * frac;
    }
    }
    return 0.0;
}

double MotionWaveform::highest_declared_frequency_hz() const {
    switch (kind_) {
    case Kind::Sinusoid:
        return amplitude_m_ > 0.0 ? 1.0 / period_s_ : 0.0;
    case Kind::TwoTone:
        return std::max(resp_amplitude_m_ > 0.0 ? resp_rate_hz_ : 0.0,
                        heart_amplitude_m_ > 0.0 ? heart_rate_hz_ : 0.0);
    case Kind::Sampled:
        return 0.0; // content is not declared, cannot be checked
    }
    return 0.0;
}

void BasebandIQ::validate() const {
    if (i.size() != q.size())
        throw std::invalid_argument("BasebandIQ: I and Q must have equal length");
    if (!(sample_rate_hz > 0.0))
        throw std::invalid_argument("BasebandIQ: sample rate must be positive");
}

BasebandIQ synthesize_iq(const MotionWaveform& motion, const CarrierConfig& carrier,
                         double duration_s, double sample_rate_hz, const NoiseSpec& noise,
                         double a_i, double a_q) {
    carrier.validate();
    if (!(duration_s > 0.0))
        throw std::invalid_argument("synthesize_iq: duration must be positive");
    if (!(sample_rate_hz > 0.0))
        throw std::invalid_argument("synthesize_iq: sample rate must be positive");
    const double f_max = motion.highest_declared_frequency_hz();
    if (f_max > 0.0 && sample_rate_hz < 4.0 * f_max)
        throw std::invalid_argument(
            "synthesize_iq: sample rate below 4x the declared motion content");

    const auto n = static_cast<std::size_t>(std::llround(duration_s * sample_rate_hz));
    if (n == 0)
        throw std::invalid_argument("synthesize_iq: duration too short for one sample");

    const double lambda = carrier.wavelength_m();
    const double phi = carrier.total_phase_rad();

    BasebandIQ out;
    out.sample_rate_hz = sample_rate_hz;
    out.i_amplitude = a_i;
    out.q_amplitude = a_q;
    out.i.resize(n);
    out.q.resize(n);

    // noise first, so the deterministic part can run in any order
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

    for (std::size_t k = 0; k < n; ++k) {
        const double t = static_cast<double>(k) / sample_rate_hz;
        const double arg = 4.0 * kPi * motion.displacement_at(t) / lambda + phi;
        out.i[k] = a_i * std::cos(arg) + noise.i_dc + (ni.empty() ? 0.0 : ni[k]);
        out.q[k] = a_q * std::sin(arg) + noise.q_dc + (nq.empty() ? 0.0 : nq[k]);
    }
    return out;
}

std::vector<std::complex<double>> complex_demodulate(const BasebandIQ& iq) {
    iq.validate();
    std::vector<std::complex<double>> r(iq.size());
    for (std::size_t k = 0; k < iq.size(); ++k)
        r[k] = {iq.i[k], iq.q[k]};
    return r;
}

HarmonicTable predict_harmonics(double k_m, double wavelength_m, double phi_rad,
                                int n_max, IqChannel channel) {
    if (!(wavelength_m > 0.0))
        throw std::invalid_argument("predict_harmonics: wavelength must be positive");
    if (k_m < 0.0)
        throw std::invalid_argument("predict_harmonics: displacement amplitude must be >= 0");
    if (n_max < 1)
        throw std::invalid_argument("predict_harmonics: n_max must be >= 1");

    const double m = 4.0 * kPi * k_m / wavelength_m;
    const double c = std::abs(std::cos(phi_rad));
    const double s = std::abs(std::sin(phi_rad));

    HarmonicTable table;
    table.entries.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        const double jn = std::abs(bessel_jn(n, m));
        double amp = 0.0;
        switch (channel) {
        case IqChannel::I:
            // even harmonics ride on cos(phi), odd ones on sin(phi); the
            // paired +/-n spectral lines give the factor 2 for n >= 1
            amp = (n == 0) ? jn * c : 2.0 * jn * (n % 2 == 0 ? c : s);
            break;
        case IqChannel::Q:
            amp = (n == 0) ? jn * s : 2.0 * jn * (n % 2 == 0 ? s : c);
            break;
        case IqChannel::Complex:
            amp = jn;
            break;
        }
        table.entries.push_back({n, amp, 0.0});
    }

    double peak = 0.0;
    for (const auto& e : table.entries)
        peak = std::max(peak, e.amplitude);
    for (auto& e : table.entries)
        e.amplitude_db = (peak > 0.0 && e.amplitude > 0.0)
                             ? linear_amplitude_to_db(e.amplitude / peak)
                             : -300.0;
    return table;
}

NullState null_indicator(double phi_rad) {
    const double s = std::abs(std::sin(phi_rad));
    if (s < kNullSinThreshold)
        return NullState::NullPoint;
    if (s > 1.0 - kNullSinThreshold)
        return NullState::FundamentalDominant;
    return NullState::Intermediate;
}

} // namespace cwradar
