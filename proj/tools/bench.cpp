// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The cwradar Authors

// Timing comparison of the serial reference kernels against their OpenMP
// variants, plus a bitwise equality check between the two.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "cwradar/physio.hpp"
#include "cwradar/runner.hpp"
#include "cwradar/scenario.hpp"

using namespace cwradar;

namespace {

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

template <typename F> double time_ms(F&& f, int reps) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const double t0 = now_ms();
        f();
        best = std::min(best, now_ms() - t0);
    }
    return best;
}

bool bit_equal(const BasebandIQ& a, const BasebandIQ& b) {
    if (a.size() != b.size())
        return false;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a.i[k] != b.i[k] || a.q[k] != b.q[k])
            return false;
    return true;
}

} // namespace

int main() {
    ScenarioConfig config; // defaults: actuator scene
    config.run.duration_s = 600.0;

    const Scene scene = build_scene(config);
    NoiseSpec noise = config.noise;
    noise.seed = 42;

    std::printf("%-24s %12s %12s %9s %8s\n", "kernel", "serial_ms", "parallel_ms", "speedup",
                "match");

    BasebandIQ serial_iq, parallel_iq;
    const double t_ser = time_ms(
        [&] {
            serial_iq = compose_baseband(scene, config.carrier, config.run.duration_s,
                                         config.run.sample_rate_hz, noise, 1.0, 1.0,
                                         config.scene.max_order, Exec::serial);
        },
        3);
    const double t_par = time_ms(
        [&] {
            parallel_iq = compose_baseband(scene, config.carrier, config.run.duration_s,
                                           config.run.sample_rate_hz, noise, 1.0, 1.0,
                                           config.scene.max_order, Exec::parallel);
        },
        3);
    std::printf("%-24s %12.2f %12.2f %8.2fx %8s\n", "compose_baseband", t_ser, t_par,
                t_ser / t_par, bit_equal(serial_iq, parallel_iq) ? "yes" : "NO");

    // window pitch tracking over a 10-minute record
    const auto series = complex_demodulate(dc_cancel(serial_iq));
    const WindowPlan plan = sliding_windows(series.size(), config.run.sample_rate_hz);
    std::vector<double> r_ser, r_par;
    const double w_ser = time_ms(
        [&] { r_ser = track_rates_bpm(series, plan, 0.05, 0.8, Exec::serial); }, 3);
    const double w_par = time_ms(
        [&] { r_par = track_rates_bpm(series, plan, 0.05, 0.8, Exec::parallel); }, 3);
    bool match = r_ser.size() == r_par.size();
    for (std::size_t k = 0; match && k < r_ser.size(); ++k)
        match = (r_ser[k] == r_par[k]) || (std::isnan(r_ser[k]) && std::isnan(r_par[k]));
    std::printf("%-24s %12.2f %12.2f %8.2fx %8s\n", "track_rates_bpm", w_ser, w_par,
                w_ser / w_par, match ? "yes" : "NO");

    // the 16-cell sweep
    ScenarioConfig sweep_cfg;
    sweep_cfg.run.duration_s = 30.0;
    SweepResult s_ser, s_par;
    const double s_ser_ms = time_ms([&] { s_ser = run_sweep(sweep_cfg, Exec::serial); }, 2);
    const double s_par_ms = time_ms([&] { s_par = run_sweep(sweep_cfg, Exec::parallel); }, 2);
    bool sweep_match = true;
    for (std::size_t k = 0; k < 16; ++k)
        sweep_match = sweep_match &&
                      s_ser.cells[k].metrics.fund_db == s_par.cells[k].metrics.fund_db;
    std::printf("%-24s %12.2f %12.2f %8.2fx %8s\n", "run_sweep", s_ser_ms, s_par_ms,
                s_ser_ms / s_par_ms, sweep_match ? "yes" : "NO");
    return 0;
}
