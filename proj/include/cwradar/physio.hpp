// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The cwradar Authors

#pragma once

#include <cstdint>
#include <vector>

#include "cwradar/doppler.hpp"
#include "cwradar/dsp.hpp"

namespace cwradar {

// Synthetic chest displacement with per-beat period jitter plus the ground
// truth beat times that stand in for a wired reference pulse sensor.
struct PhysioSignal {
    MotionWaveform motion = MotionWaveform::none();
    std::vector<double> beat_times_s;
    double resp_rate_bpm = 0.0;
    double heart_rate_bpm = 0.0;
};

PhysioSignal generate_physio(double resp_rate_bpm, double resp_amp_mm,
                             double heart_rate_bpm, double heart_amp_mm,
                             double hrv_jitter_fraction, double duration_s,
                             double sample_rate_hz, std::uint64_t seed);

// Reference heart rate per analysis window from beat times (mean RR interval
// of the beats whose midpoints fall inside the window).
std::vector<double> reference_rates_bpm(const std::vector<double>& beat_times_s,
                                        const WindowPlan& plan);

// Heart band-pass and respiration low-pass defaults of the processing chain.
inline constexpr double kHeartBandLowHz = 0.85;
inline constexpr double kHeartBandHighHz = 2.5;
inline constexpr double kRespCutoffHz = 0.35;
inline constexpr int kVitalsFilterOrder = 5;

struct VitalsEstimate {
    RateTrack heart_track;
    double heart_rate_bpm = 0.0; // median over valid windows
    double resp_rate_bpm = 0.0;
    double heart_accuracy_pct = 0.0;
    std::size_t windows = 0;
};

// Full extraction chain: DC cancellation, Butterworth band-pass /
// low-pass, sliding Hanning windows, autocorrelation pitch per window,
// reference comparison at the 2% tolerance.
VitalsEstimate extract_vitals(const BasebandIQ& iq, const std::vector<double>& beat_times_s,
                              Exec exec = Exec::parallel);

} // namespace cwradar
