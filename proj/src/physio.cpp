// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The cwradar Authors

#include "cwradar/physio.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cwradar/rng.hpp"

namespace cwradar {

PhysioSignal generate_physio(double resp_rate_bpm, double resp_amp_mm,
                             double heart_rate_bpm, double heart_amp_mm,
                             double hrv_jitter_fraction, double duration_s,
                             double sample_rate_hz, std::uint64_t seed) {
    if (!(resp_rate_bpm > 0.0) || !(heart_rate_bpm > 0.0))
        throw std::invalid_argument("generate_physio: rates must be positive");
    if (resp_amp_mm < 0.0 || heart_amp_mm < 0.0)
        throw std::invalid_argument("generate_physio: amplitudes must be >= 0");
    if (hrv_jitter_fraction < 0.0 || hrv_jitter_fraction > 0.2)
        throw std::invalid_argument("generate_physio: jitter must be in [0, 0.2]");
    if (!(duration_s > 0.0) || !(sample_rate_hz > 0.0))
        throw std::invalid_argument("generate_physio: duration and rate must be positive");

    Rng rng = Rng::derive(seed, 0x70687973ULL);

    // beat times with jittered RR intervals
    PhysioSignal out;
    out.resp_rate_bpm = resp_rate_bpm;
    out.heart_rate_bpm = heart_rate_bpm;
    const double mean_rr = 60.0 / heart_rate_bpm;
    double t = 0.0;
    out.beat_times_s.push_back(t);
    while (t < duration_s + mean_rr) {
        const double u = rng.uniform(-1.0, 1.0);
        t += mean_rr * (1.0 + hrv_jitter_fraction * u);
        out.beat_times_s.push_back(t);
    }

    // heart displacement with phase advancing one cycle per beat
    const auto n = static_cast<std::size_t>(std::llround(duration_s * sample_rate_hz));
    std::vector<double> x(n);
    const double resp_hz = resp_rate_bpm / 60.0;
    std::size_t beat = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const double tk = static_cast<double>(k) / sample_rate_hz;
        while (beat + 1 < out.beat_times_s.size() && out.beat_times_s[beat + 1] <= tk)
            ++beat;
        const double t0 = out.beat_times_s[beat];
        const double t1 = out.beat_times_s[beat + 1];
        const double phase = static_cast<double>(beat) + (tk - t0) / (t1 - t0);
        x[k] = resp_amp_mm * 1e-3 * std::sin(kTwoPi * resp_hz * tk) +
               heart_amp_mm * 1e-3 * std::sin(kTwoPi * phase);
    }
    out.motion = MotionWaveform::sampled(std::move(x), sample_rate_hz);

    // keep only beats inside the record
    out.beat_times_s.erase(
        std::remove_if(out.beat_times_s.begin(), out.beat_times_s.end(),
                       [&](double b) { return b > duration_s; }),
        out.beat_times_s.end());
    return out;
}

std::vector<double> reference_rates_bpm(const std::vector<double>& beat_times_s,
                                        const WindowPlan& plan) {
    if (beat_times_s.size() < 2)
        throw std::invalid_argument("reference_rates_bpm: need at least two beats");
    const double window_s =
        static_cast<double>(plan.window_len) / plan.sample_rate_hz;

    double global_mean_rr =
        (beat_times_s.back() - beat_times_s.front()) /
        static_cast<double>(beat_times_s.size() - 1);

    std::vector<double> refs(plan.count);
    for (std::size_t k = 0; k < plan.count; ++k) {
        const double t0 = plan.start_time_s(k);
        const double t1 = t0 + window_s;
        double sum = 0.0;
        int cnt = 0;
        for (std::size_t b = 0; b + 1 < beat_times_s.size(); ++b) {
            const double mid = 0.5 * (beat_times_s[b] + beat_times_s[b + 1]);
            if (mid >= t0 && mid < t1) {
                sum += beat_times_s[b + 1] - beat_times_s[b];
                ++cnt;
            }
        }
        refs[k] = cnt > 0 ? 60.0 / (sum / cnt) : 60.0 / global_mean_rr;
    }
    return refs;
}

VitalsEstimate extract_vitals(const BasebandIQ& iq, const std::vector<double>& beat_times_s,
                              Exec exec) {
    iq.validate();
    const double fs = iq.sample_rate_hz;
    const BasebandIQ centered = dc_cancel(iq);

    const IirFilter bp = butterworth(
        {FilterSpec::Kind::Bandpass, kVitalsFilterOrder, kHeartBandLowHz, kHeartBandHighHz},
        fs);
    const IirFilter lp =
        butterworth({FilterSpec::Kind::Lowpass, kVitalsFilterOrder, kRespCutoffHz, 0.0}, fs);

    const auto heart_i = apply_zero_phase(bp, centered.i);
    const auto heart_q = apply_zero_phase(bp, centered.q);
    const auto resp_i = apply_zero_phase(lp, centered.i);
    const auto resp_q = apply_zero_phase(lp, centered.q);

    const std::size_t n = centered.size();
    std::vector<std::complex<double>> heart(n), resp(n);
    for (std::size_t k = 0; k < n; ++k) {
        heart[k] = {heart_i[k], heart_q[k]};
        resp[k] = {resp_i[k], resp_q[k]};
    }

    const WindowPlan plan = sliding_windows(n, fs);
    VitalsEstimate est;
    est.windows = plan.count;

    auto rates = track_rates_bpm(heart, plan, kHeartBandLowHz, kHeartBandHighHz, exec);
    std::vector<double> starts(plan.count);
    for (std::size_t k = 0; k < plan.count; ++k)
        starts[k] = plan.start_time_s(k);

    std::vector<double> refs = beat_times_s.size() >= 2
                                   ? reference_rates_bpm(beat_times_s, plan)
                                   : std::vector<double>(plan.count, 0.0);
    est.heart_track = make_rate_track(starts, rates, refs);
    if (beat_times_s.size() >= 2)
        est.heart_accuracy_pct = detection_accuracy(est.heart_track);

    std::vector<double> valid;
    for (double r : est.heart_track.rates_bpm)
        if (!std::isnan(r))
            valid.push_back(r);
    if (!valid.empty()) {
        std::nth_element(valid.begin(), valid.begin() + valid.size() / 2, valid.end());
        est.heart_rate_bpm = valid[valid.size() / 2];
    }

    // respiration: same pitch machinery below the low-pass corner
    auto resp_rates = track_rates_bpm(resp, plan, 0.1, kRespCutoffHz, exec);
    std::vector<double> resp_valid;
    for (double r : resp_rates)
        if (!std::isnan(r))
            resp_valid.push_back(r);
    if (!resp_valid.empty()) {
        std::nth_element(resp_valid.begin(), resp_valid.begin() + resp_valid.size() / 2,
                         resp_valid.end());
        est.resp_rate_bpm = resp_valid[resp_valid.size() / 2];
    }
    return est;
}

} // namespace cwradar
