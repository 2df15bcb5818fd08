// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The cwradar Authors

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cwradar/doppler.hpp"
#include "cwradar/exec.hpp"

namespace cwradar {

// Remove the per-channel mean.
BasebandIQ dc_cancel(const BasebandIQ& iq);

// Magnitude spectrum of I + jQ.
//
// Conventions (fixed here, relied on by every consumer):
//  - bins holds the full unnormalized DFT of length Nfft = N * zero_pad;
//    sum |bins|^2 / Nfft equals the input energy (Parseval).
//  - freqs_hz/magnitude cover the positive half axis only, taken directly
//    from the positive-frequency bins (no energy folding) and scaled by 1/N
//    so a unit complex tone spanning integer periods reads 1.0.
//  - magnitude_db is relative to the spectrum's own maximum bin.
//  - resolution_hz = sample_rate / N (zero-padding interpolates, it does not
//    add resolution).
struct Spectrum {
    std::vector<double> freqs_hz;
    std::vector<double> magnitude;
    std::vector<double> magnitude_db;
    double resolution_hz = 0.0;
    double sample_rate_hz = 0.0;
    std::size_t input_length = 0;
    std::vector<std::complex<double>> bins;

    // linear magnitude at the bin nearest to f (positive axis)
    double magnitude_at(double f_hz) const;
};

Spectrum complex_spectrum(const BasebandIQ& iq, int zero_pad_factor = 1);
Spectrum complex_spectrum(std::span<const std::complex<double>> x, double sample_rate_hz,
                          int zero_pad_factor = 1);

struct FilterSpec {
    enum class Kind { Lowpass, Bandpass };
    Kind kind = Kind::Lowpass;
    int order = 5;
    double edge1_hz = 0.0;          // cutoff, or lower band edge
    double edge2_hz = 0.0;          // upper band edge (bandpass only)
};

struct Biquad {
    double b0 = 1.0, b1 = 0.0, b2 = 0.0;
    double a1 = 0.0, a2 = 0.0;
};

struct IirFilter {
    std::vector<Biquad> sections;
    double gain = 1.0;
    double sample_rate_hz = 0.0;

    bool is_stable() const;
    std::complex<double> response(double freq_hz) const;
};

// Butterworth design via bilinear transform with frequency pre-warping,
// realized as cascaded second-order sections.
IirFilter butterworth(const FilterSpec& spec, double sample_rate_hz);

std::vector<double> apply_filter(const IirFilter& f, std::span<const double> x);

// Forward-backward application (zero phase, magnitude squared response)
// with odd-reflection edge padding.
std::vector<double> apply_zero_phase(const IirFilter& f, std::span<const double> x);

// Sliding Hanning windows: starts spaced step_s apart,
// count = floor((T - window) / step) + 1.
struct WindowPlan {
    std::size_t window_len = 0;
    std::size_t step = 0;
    std::size_t count = 0;
    double sample_rate_hz = 0.0;
    std::vector<double> taper; // Hanning, endpoints zero

    double start_time_s(std::size_t k) const {
        return static_cast<double>(k * step) / sample_rate_hz;
    }
};

WindowPlan sliding_windows(std::size_t series_len, double sample_rate_hz,
                           double window_s = 10.0, double step_s = 0.1);

// Tapered window k of a complex series.
std::vector<std::complex<double>> extract_window(std::span<const std::complex<double>> series,
                                                 const WindowPlan& plan, std::size_t k);

struct PitchEstimate {
    double rate_hz = 0.0;
    double prominence_db = 0.0;
    bool valid = false;
};

// A peak must clear the in-band median by this much to count as an estimate.
inline constexpr double kPitchProminenceDb = 6.0;

// Autocorrelation of the window followed by an FFT; the peak inside the
// search band, refined by parabolic interpolation, gives the rate.
PitchEstimate autocorr_pitch(std::span<const std::complex<double>> window,
                             double sample_rate_hz, double band_low_hz, double band_high_hz);

// Per-window pitch over a whole series; NaN marks windows with no estimate.
std::vector<double> track_rates_bpm(std::span<const std::complex<double>> series,
                                    const WindowPlan& plan, double band_low_hz,
                                    double band_high_hz, Exec exec = Exec::parallel);

struct RateTrack {
    std::vector<double> window_starts_s;
    std::vector<double> rates_bpm;     // NaN = no estimate
    std::vector<double> reference_bpm;
    std::vector<std::uint8_t> within_tolerance;
};

RateTrack make_rate_track(std::vector<double> starts_s, std::vector<double> rates_bpm,
                          std::vector<double> reference_bpm, double tolerance_fraction = 0.02);

// Percentage of windows whose estimate lies within tolerance_fraction of the
// reference; windows without an estimate count as misses.
double detection_accuracy(const RateTrack& track, double tolerance_fraction = 0.02);

// 20*log10(peak magnitude in the signal band / median magnitude in the noise
// band).
double snr_peak_vs_floor(const Spectrum& spectrum, std::pair<double, double> signal_band_hz,
                         std::pair<double, double> noise_band_hz);

// Pointwise mean across repeated trials.
BasebandIQ time_average(const std::vector<BasebandIQ>& trials);

} // namespace cwradar
