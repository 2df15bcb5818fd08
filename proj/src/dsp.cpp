// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The cwradar Authors

#include "cwradar/dsp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "cwradar/fft.hpp"

namespace cwradar {

namespace {

double median_of(std::vector<double> v) {
    if (v.empty())
        throw std::invalid_argument("median of empty range");
    const std::size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + mid, v.end());
    double m = v[mid];
    if (v.size() % 2 == 0) {
        std::nth_element(v.begin(), v.begin() + mid - 1, v.begin() + mid);
        m = 0.5 * (m + v[mid - 1]);
    }
    return m;
}

} // namespace

BasebandIQ dc_cancel(const BasebandIQ& iq) {
    iq.validate();
    if (iq.size() == 0)
        throw std::invalid_argument("dc_cancel: input must be non-empty");
    const double n = static_cast<double>(iq.size());
    const double mi = std::accumulate(iq.i.begin(), iq.i.end(), 0.0) / n;
    const double mq = std::accumulate(iq.q.begin(), iq.q.end(), 0.0) / n;
    BasebandIQ out = iq;
    for (auto& v : out.i)
        v -= mi;
    for (auto& v : out.q)
        v -= mq;
    return out;
}

double Spectrum::magnitude_at(double f_hz) const {
    if (freqs_hz.empty())
        throw std::invalid_argument("Spectrum: empty");
    const double df = sample_rate_hz / static_cast<double>(bins.size());
    auto idx = static_cast<std::size_t>(std::llround(f_hz / df));
    idx = std::min(idx, freqs_hz.size() - 1);
    return magnitude[idx];
}

Spectrum complex_spectrum(std::span<const std::complex<double>> x, double sample_rate_hz,
                          int zero_pad_factor) {
    if (x.empty())
        throw std::invalid_argument("complex_spectrum: input must be non-empty");
    if (!(sample_rate_hz > 0.0))
        throw std::invalid_argument("complex_spectrum: sample rate must be positive");
    if (zero_pad_factor < 1)
        throw std::invalid_argument("complex_spectrum: zero pad factor must be >= 1");

    const std::size_t n = x.size();
    const std::size_t nfft = n * static_cast<std::size_t>(zero_pad_factor);

    Spectrum s;
    s.sample_rate_hz = sample_rate_hz;
    s.input_length = n;
    s.resolution_hz = sample_rate_hz / static_cast<double>(n);
    s.bins = dft(x, nfft);

    const std::size_t half = nfft / 2 + 1;
    s.freqs_hz.resize(half);
    s.magnitude.resize(half);
    s.magnitude_db.resize(half);
    const double df = sample_rate_hz / static_cast<double>(nfft);
    const double scale = 1.0 / static_cast<double>(n);
    double peak = 0.0;
    for (std::size_t k = 0; k < half; ++k) {
        s.freqs_hz[k] = df * static_cast<double>(k);
        s.magnitude[k] = std::abs(s.bins[k]) * scale;
        peak = std::max(peak, s.magnitude[k]);
    }
    for (std::size_t k = 0; k < half; ++k)
        s.magnitude_db[k] = (peak > 0.0 && s.magnitude[k] > 0.0)
                                ? linear_amplitude_to_db(s.magnitude[k] / peak)
                                : -300.0;
    return s;
}

Spectrum complex_spectrum(const BasebandIQ& iq, int zero_pad_factor) {
    iq.validate();
    return complex_spectrum(std::span<const std::complex<double>>(complex_demodulate(iq)),
                            iq.sample_rate_hz, zero_pad_factor);
}

bool IirFilter::is_stable() const {
    for (const auto& s : sections) {
        // Jury criterion for a real quadratic z^2 + a1 z + a2
        if (!(std::abs(s.a2) < 1.0) || !(std::abs(s.a1) < 1.0 + s.a2))
            return false;
    }
    return true;
}

std::complex<double> IirFilter::response(double freq_hz) const {
    const std::complex<double> zinv =
        std::polar(1.0, -kTwoPi * freq_hz / sample_rate_hz);
    std::complex<double> h = gain;
    for (const auto& s : sections) {
        const std::complex<double> num = s.b0 + (s.b1 + s.b2 * zinv) * zinv;
        const std::complex<double> den = 1.0 + (s.a1 + s.a2 * zinv) * zinv;
        h *= num / den;
    }
    return h;
}

IirFilter butterworth(const FilterSpec& spec, double sample_rate_hz) {
    if (!(sample_rate_hz > 0.0))
        throw std::invalid_argument("butterworth: sample rate must be positive");
    if (spec.order < 1)
        throw std::invalid_argument("butterworth: order must be >= 1");
    const double nyquist = sample_rate_hz / 2.0;
    if (!(spec.edge1_hz > 0.0) || spec.edge1_hz >= nyquist)
        throw std::invalid_argument("butterworth: edge must lie inside (0, Nyquist)");
    if (spec.kind == FilterSpec::Kind::Bandpass &&
        (!(spec.edge2_hz > spec.edge1_hz) || spec.edge2_hz >= nyquist))
        throw std::invalid_argument("butterworth: band edges must satisfy 0 < low < high < Nyquist");

    const int n = spec.order;
    const std::complex<double> one{1.0, 0.0};
    auto bilinear = [](std::complex<double> s) { return (1.0 + s) / (1.0 - s); };

    IirFilter f;
    f.sample_rate_hz = sample_rate_hz;

    if (spec.kind == FilterSpec::Kind::Lowpass) {
        const double wc = std::tan(kPi * spec.edge1_hz / sample_rate_hz);
        for (int k = 0; 2 * k + 1 < n; ++k) {
            // prototype pole with positive imaginary part and its conjugate
            const double ang = kPi * (2.0 * k + n + 1.0) / (2.0 * n);
            const std::complex<double> z = bilinear(wc * std::polar(1.0, ang));
            Biquad sec;
            sec.b0 = 1.0;
            sec.b1 = 2.0;
            sec.b2 = 1.0;
            sec.a1 = -2.0 * z.real();
            sec.a2 = std::norm(z);
            f.sections.push_back(sec);
        }
        if (n % 2 == 1) {
            const std::complex<double> z = bilinear(std::complex<double>(-wc, 0.0));
            Biquad sec;
            sec.b0 = 1.0;
            sec.b1 = 1.0;
            sec.b2 = 0.0;
            sec.a1 = -z.real();
            sec.a2 = 0.0;
            f.sections.push_back(sec);
        }
        f.gain = 1.0;
        const double h0 = std::abs(f.response(0.0));
        f.gain = 1.0 / h0;
        return f;
    }

    // bandpass: s -> (s^2 + w0^2) / (B s) applied to the analog prototype
    const double w1 = std::tan(kPi * spec.edge1_hz / sample_rate_hz);
    const double w2 = std::tan(kPi * spec.edge2_hz / sample_rate_hz);
    const double bw = w2 - w1;
    const double w0sq = w1 * w2;

    auto add_section_conj_pair = [&](std::complex<double> z) {
        Biquad sec;
        sec.b0 = 1.0;
        sec.b1 = 0.0;
        sec.b2 = -1.0; // one zero at z=+1, one at z=-1
        sec.a1 = -2.0 * z.real();
        sec.a2 = std::norm(z);
        f.sections.push_back(sec);
    };

    for (int k = 0; 2 * k + 1 < n; ++k) {
        const double ang = kPi * (2.0 * k + n + 1.0) / (2.0 * n);
        const std::complex<double> p = std::polar(1.0, ang);
        const std::complex<double> bp = bw * p;
        const std::complex<double> disc = std::sqrt(bp * bp - 4.0 * w0sq);
        add_section_conj_pair(bilinear((bp + disc) / 2.0));
        add_section_conj_pair(bilinear((bp - disc) / 2.0));
    }
    if (n % 2 == 1) {
        // real prototype pole at -1
        const std::complex<double> bp{-bw, 0.0};
        const std::complex<double> disc = std::sqrt(bp * bp - 4.0 * w0sq);
        const std::complex<double> s1 = (bp + disc) / 2.0;
        const std::complex<double> s2 = (bp - disc) / 2.0;
        if (std::abs(s1.imag()) > 1e-14) {
            // complex conjugate pair
            add_section_conj_pair(bilinear(s1));
        } else {
            const std::complex<double> z1 = bilinear(s1);
            const std::complex<double> z2 = bilinear(s2);
            Biquad sec;
            sec.b0 = 1.0;
            sec.b1 = 0.0;
            sec.b2 = -1.0;
            sec.a1 = -(z1.real() + z2.real());
            sec.a2 = z1.real() * z2.real();
            f.sections.push_back(sec);
        }
    }

    f.gain = 1.0;
    const double f_center =
        sample_rate_hz / kPi * std::atan(std::sqrt(w0sq));
    const double hc = std::abs(f.response(f_center));
    f.gain = 1.0 / hc;
    return f;
}

std::vector<double> apply_filter(const IirFilter& f, std::span<const double> x) {
    std::vector<double> y(x.begin(), x.end());
    for (auto& v : y)
        v *= f.gain;
    for (const auto& s : f.sections) {
        double s1 = 0.0, s2 = 0.0;
        for (auto& v : y) {
            const double in = v;
            const double out = s.b0 * in + s1;
            s1 = s.b1 * in - s.a1 * out + s2;
            s2 = s.b2 * in - s.a2 * out;
            v = out;
        }
    }
    return y;
}

std::vector<double> apply_zero_phase(const IirFilter& f, std::span<const double> x) {
    if (x.size() < 2)
        throw std::invalid_argument("apply_zero_phase: series too short");
    const std::size_t npad =
        std::min(x.size() - 1, 3 * (2 * f.sections.size() + 1));

    std::vector<double> ext;
    ext.reserve(x.size() + 2 * npad);
    for (std::size_t k = 0; k < npad; ++k)
        ext.push_back(2.0 * x[0] - x[npad - k]);
    ext.insert(ext.end(), x.begin(), x.end());
    const std::size_t n = x.size();
    for (std::size_t k = 0; k < npad; ++k)
        ext.push_back(2.0 * x[n - 1] - x[n - 2 - k]);

    auto y = apply_filter(f, ext);
    std::reverse(y.begin(), y.end());
    y = apply_filter(f, y);
    std::reverse(y.begin(), y.end());

    return std::vector<double>(y.begin() + static_cast<std::ptrdiff_t>(npad),
                               y.begin() + static_cast<std::ptrdiff_t>(npad + n));
}

WindowPlan sliding_windows(std::size_t series_len, double sample_rate_hz,
                           double window_s, double step_s) {
    if (!(sample_rate_hz > 0.0) || !(window_s > 0.0) || !(step_s > 0.0))
        throw std::invalid_argument("sliding_windows: parameters must be positive");
    WindowPlan plan;
    plan.sample_rate_hz = sample_rate_hz;
    plan.window_len = static_cast<std::size_t>(std::llround(window_s * sample_rate_hz));
    plan.step = static_cast<std::size_t>(std::llround(step_s * sample_rate_hz));
    if (plan.window_len < 2 || plan.step < 1)
        throw std::invalid_argument("sliding_windows: window or step too short");
    if (series_len < plan.window_len)
        throw std::invalid_argument("sliding_windows: series shorter than one window");
    plan.count = (series_len - plan.window_len) / plan.step + 1;
    plan.taper.resize(plan.window_len);
    const double denom = static_cast<double>(plan.window_len - 1);
    for (std::size_t k = 0; k < plan.window_len; ++k)
        plan.taper[k] = 0.5 * (1.0 - std::cos(kTwoPi * static_cast<double>(k) / denom));
    return plan;
}

std::vector<std::complex<double>> extract_window(std::span<const std::complex<double>> series,
                                                 const WindowPlan& plan, std::size_t k) {
    if (k >= plan.count)
        throw std::invalid_argument("extract_window: index out of range");
    std::vector<std::complex<double>> w(plan.window_len);
    const std::size_t off = k * plan.step;
    for (std::size_t m = 0; m < plan.window_len; ++m)
        w[m] = series[off + m] * plan.taper[m];
    return w;
}

PitchEstimate autocorr_pitch(std::span<const std::complex<double>> window,
                             double sample_rate_hz, double band_low_hz,
                             double band_high_hz) {
    const std::size_t len = window.size();
    if (len < 8)
        throw std::invalid_argument("autocorr_pitch: window too short");
    if (!(band_low_hz > 0.0) || !(band_high_hz > band_low_hz) ||
        band_high_hz > sample_rate_hz / 2.0)
        throw std::invalid_argument("autocorr_pitch: invalid search band");

    // linear autocorrelation via FFT
    const std::size_t nc = next_pow2(2 * len);
    auto x = dft(window, nc);
    for (auto& v : x)
        v = std::complex<double>(std::norm(v), 0.0);
    auto r = idft(x); // lags 0..len-1 are valid

    // spectrum of the two-sided autocorrelation (r[-l] = conj(r[l]))
    const std::size_t nfft = next_pow2(4 * len);
    std::vector<std::complex<double>> sym(nfft, 0.0);
    sym[0] = r[0];
    for (std::size_t l = 1; l < len; ++l) {
        sym[l] = r[l];
        sym[nfft - l] = std::conj(r[l]);
    }
    auto spec = dft(sym, nfft);

    const double df = sample_rate_hz / static_cast<double>(nfft);
    auto k_low = static_cast<std::size_t>(std::ceil(band_low_hz / df));
    auto k_high = static_cast<std::size_t>(std::floor(band_high_hz / df));
    k_low = std::max<std::size_t>(k_low, 1);
    k_high = std::min<std::size_t>(k_high, nfft / 2);
    if (k_low >= k_high)
        throw std::invalid_argument("autocorr_pitch: search band resolves to no bins");

    // fold +/- frequencies: a periodicity may sit on either side of DC for a
    // complex baseband signal
    std::vector<double> power(k_high - k_low + 1);
    std::size_t peak_idx = 0;
    for (std::size_t k = k_low; k <= k_high; ++k) {
        double p = std::abs(spec[k]);
        if (nfft - k != k)
            p += std::abs(spec[nfft - k]);
        power[k - k_low] = p;
        if (power[k - k_low] > power[peak_idx])
            peak_idx = k - k_low;
    }
    const double peak = power[peak_idx];
    const double med = median_of(power);

    PitchEstimate est;
    est.prominence_db = (med > 0.0 && peak > 0.0)
                            ? 10.0 * std::log10(peak / med)
                            : 0.0;
    est.valid = est.prominence_db >= kPitchProminenceDb;

    const std::size_t km = k_low + peak_idx;
    double f_peak = df * static_cast<double>(km);
    if (km > k_low && km < k_high) {
        // parabolic refinement on the log power
        const double lm = std::log(std::max(power[peak_idx - 1], 1e-300));
        const double l0 = std::log(std::max(power[peak_idx], 1e-300));
        const double lp = std::log(std::max(power[peak_idx + 1], 1e-300));
        const double denom = lm - 2.0 * l0 + lp;
        if (denom < 0.0) {
            double delta = 0.5 * (lm - lp) / denom;
            delta = std::clamp(delta, -0.5, 0.5);
            f_peak = df * (static_cast<double>(km) + delta);
        }
    }
    est.rate_hz = std::clamp(f_peak, band_low_hz, band_high_hz);
    return est;
}

std::vector<double> track_rates_bpm(std::span<const std::complex<double>> series,
                                    const WindowPlan& plan, double band_low_hz,
                                    double band_high_hz, Exec exec) {
    std::vector<double> rates(plan.count);
    const auto run_one = [&](std::size_t k) {
        const auto w = extract_window(series, plan, k);
        const auto est = autocorr_pitch(w, plan.sample_rate_hz, band_low_hz, band_high_hz);
        rates[k] = est.valid ? est.rate_hz * 60.0 : std::nan("");
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (long long k = 0; k < static_cast<long long>(plan.count); ++k)
            run_one(static_cast<std::size_t>(k));
    } else {
        for (std::size_t k = 0; k < plan.count; ++k)
            run_one(k);
    }
    return rates;
}

RateTrack make_rate_track(std::vector<double> starts_s, std::vector<double> rates_bpm,
                          std::vector<double> reference_bpm, double tolerance_fraction) {
    if (starts_s.size() != rates_bpm.size() || rates_bpm.size() != reference_bpm.size())
        throw std::invalid_argument("make_rate_track: parallel arrays must match");
    RateTrack t;
    t.window_starts_s = std::move(starts_s);
    t.rates_bpm = std::move(rates_bpm);
    t.reference_bpm = std::move(reference_bpm);
    t.within_tolerance.resize(t.rates_bpm.size());
    for (std::size_t k = 0; k < t.rates_bpm.size(); ++k) {
        const double est = t.rates_bpm[k];
        const double ref = t.reference_bpm[k];
        t.within_tolerance[k] =
            (!std::isnan(est) && std::abs(est - ref) <= tolerance_fraction * ref) ? 1 : 0;
    }
    return t;
}

double detection_accuracy(const RateTrack& track, double tolerance_fraction) {
    const std::size_t n = track.rates_bpm.size();
    if (n == 0)
        throw std::invalid_argument("detection_accuracy: empty track");
    if (track.reference_bpm.size() != n)
        throw std::invalid_argument("detection_accuracy: arrays must match");
    std::size_t hits = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const double est = track.rates_bpm[k];
        const double ref = track.reference_bpm[k];
        if (!std::isnan(est) && std::abs(est - ref) <= tolerance_fraction * ref)
            ++hits;
    }
    return 100.0 * static_cast<double>(hits) / static_cast<double>(n);
}

double snr_peak_vs_floor(const Spectrum& spectrum, std::pair<double, double> signal_band_hz,
                         std::pair<double, double> noise_band_hz) {
    if (signal_band_hz.second > noise_band_hz.first &&
        noise_band_hz.second > signal_band_hz.first)
        throw std::invalid_argument("snr_peak_vs_floor: bands must be disjoint");
    double peak = 0.0;
    bool any_signal = false;
    std::vector<double> noise;
    for (std::size_t k = 0; k < spectrum.freqs_hz.size(); ++k) {
        const double f = spectrum.freqs_hz[k];
        if (f >= signal_band_hz.first && f <= signal_band_hz.second) {
            peak = std::max(peak, spectrum.magnitude[k]);
            any_signal = true;
        }
        if (f >= noise_band_hz.first && f <= noise_band_hz.second)
            noise.push_back(spectrum.magnitude[k]);
    }
    if (!any_signal || noise.empty())
        throw std::invalid_argument("snr_peak_vs_floor: a band selects no bins");
    const double floor = median_of(std::move(noise));
    if (!(floor > 0.0))
        return 300.0;
    return linear_amplitude_to_db(peak / floor);
}

BasebandIQ time_average(const std::vector<BasebandIQ>& trials) {
    if (trials.empty())
        throw std::invalid_argument("time_average: need at least one trial");
    const std::size_t n = trials.front().size();
    const double fs = trials.front().sample_rate_hz;
    for (const auto& t : trials) {
        t.validate();
        if (t.size() != n || t.sample_rate_hz != fs)
            throw std::invalid_argument("time_average: trials must share length and rate");
    }
    BasebandIQ out = trials.front();
    for (std::size_t j = 1; j < trials.size(); ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            out.i[k] += trials[j].i[k];
            out.q[k] += trials[j].q[k];
        }
    }
    const double inv = 1.0 / static_cast<double>(trials.size());
    for (std::size_t k = 0; k < n; ++k) {
        out.i[k] *= inv;
        out.q[k] *= inv;
    }
    return out;
}

} // namespace cwradar
