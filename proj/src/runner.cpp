// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The cwradar Authors

#include "cwradar/runner.hpp"

#include <cmath>
#include <filesystem>
#include <stdexcept>

#include <json.hpp>

#include "cwradar/csv_io.hpp"
#include "cwradar/rng.hpp"
#include "cwradar/version.hpp"

namespace cwradar {

namespace {

// noise floor band for the scenario SNR metric, clear of motion harmonics
constexpr double kNoiseBandLowHz = 5.0;
constexpr double kNoiseBandHighHz = 45.0;

double motion_fundamental_hz(const MotionConfig& m) {
    switch (m.kind) {
    case MotionConfig::Kind::Sinusoid:
        return 1.0 / m.period_s;
    case MotionConfig::Kind::TwoTone:
        return m.resp_rate_bpm / 60.0;
    case MotionConfig::Kind::None:
        return 0.0;
    }
    return 0.0;
}

// strongest bin within half a resolution cell of f
double magnitude_near(const Spectrum& s, double f_hz) {
    const double half = s.resolution_hz / 2.0;
    double best = 0.0;
    for (std::size_t k = 0; k < s.freqs_hz.size(); ++k)
        if (s.freqs_hz[k] >= f_hz - half && s.freqs_hz[k] <= f_hz + half)
            best = std::max(best, s.magnitude[k]);
    return best;
}

ScenarioMetrics compute_metrics(const Spectrum& s, double f1_hz) {
    ScenarioMetrics m;
    m.fundamental_hz = f1_hz;
    if (f1_hz <= 0.0)
        return m;
    const double fund = magnitude_near(s, f1_hz);
    const double h2 = magnitude_near(s, 2.0 * f1_hz);
    m.fund_db = fund > 0.0 ? linear_amplitude_to_db(fund) : -300.0;
    m.h2_db = h2 > 0.0 ? linear_amplitude_to_db(h2) : -300.0;
    const double half = s.resolution_hz;
    m.snr_db = snr_peak_vs_floor(s, {f1_hz - half, f1_hz + half},
                                 {kNoiseBandLowHz, kNoiseBandHighHz});
    return m;
}

nlohmann::json run_metadata(const ScenarioConfig& config, const std::string& command) {
    nlohmann::json j;
    j["tool"] = "cwradar";
    j["version"] = kVersion;
    j["command"] = command;
    j["seed"] = config.run.seed;
    j["antennas"] = {{"tx", to_string(config.antennas.tx)},
                     {"rx", to_string(config.antennas.rx)}};
    j["config_text"] = emit_scenario(config);
    return j;
}

void write_json(const std::string& path, const nlohmann::json& j) {
    write_text_file(path, j.dump(2) + "\n");
}

} // namespace

ScenarioResult run_scenario(const ScenarioConfig& config, Exec exec) {
    config.validate();
    Scene scene = build_scene(config);

    ScenarioResult r;
    r.trials.reserve(static_cast<std::size_t>(config.run.trials));
    for (int t = 0; t < config.run.trials; ++t) {
        NoiseSpec noise = config.noise;
        noise.seed = Rng::derive(config.run.seed, static_cast<std::uint64_t>(t)).next_u64();
        r.trials.push_back(compose_baseband(scene, config.carrier, config.run.duration_s,
                                            config.run.sample_rate_hz, noise, config.run.a_i,
                                            config.run.a_q, config.scene.max_order, exec));
    }
    r.averaged = dc_cancel(time_average(r.trials));
    r.spectrum = complex_spectrum(r.averaged, config.run.zero_pad);
    r.metrics = compute_metrics(r.spectrum, motion_fundamental_hz(config.motion));
    return r;
}

const SweepCell& SweepResult::cell(AntennaKind tx, AntennaKind rx) const {
    for (const auto& c : cells)
        if (c.tx == tx && c.rx == rx)
            return c;
    throw std::logic_error("SweepResult: cell not found");
}

SweepResult run_sweep(const ScenarioConfig& base, Exec exec) {
    base.validate();
    SweepResult result;

    const auto run_cell = [&](int idx) {
        const AntennaKind tx = kAllAntennaKinds[static_cast<std::size_t>(idx) / 4];
        const AntennaKind rx = kAllAntennaKinds[static_cast<std::size_t>(idx) % 4];
        ScenarioConfig c = base;
        c.antennas.tx = tx;
        c.antennas.rx = rx;
        // independent stream per cell; serial and parallel execution agree
        c.run.seed = Rng::derive(base.run.seed, static_cast<std::uint64_t>(idx)).next_u64();
        ScenarioResult sr = run_scenario(c, Exec::serial);
        SweepCell& cell = result.cells[static_cast<std::size_t>(idx)];
        cell.tx = tx;
        cell.rx = rx;
        cell.metrics = sr.metrics;
        cell.spectrum = std::move(sr.spectrum);
        cell.spectrum_file = "spectrum_" + to_string(tx) + "_" + to_string(rx) + ".csv";
    };

    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int idx = 0; idx < 16; ++idx)
            run_cell(idx);
    } else {
        for (int idx = 0; idx < 16; ++idx)
            run_cell(idx);
    }
    return result;
}

std::string sweep_to_csv(const SweepResult& sweep) {
    std::string out = "tx_kind,rx_kind,fund_db,h2_db,snr_db\n";
    for (const auto& c : sweep.cells) {
        out += to_string(c.tx);
        out += ',';
        out += to_string(c.rx);
        out += ',';
        out += format_g9(c.metrics.fund_db);
        out += ',';
        out += format_g9(c.metrics.h2_db);
        out += ',';
        out += format_g9(c.metrics.snr_db);
        out += '\n';
    }
    return out;
}

SessionResult run_physio_session(const ScenarioConfig& base, double distance_m,
                                 AntennaKind tx, AntennaKind rx, std::uint64_t seed,
                                 Exec exec) {
    if (!(distance_m > 0.0))
        throw std::invalid_argument("run_physio_session: distance must be positive");

    ScenarioConfig c = base;
    c.antennas.tx = tx;
    c.antennas.rx = rx;
    c.carrier.nominal_distance_m = distance_m;
    const Vec3 n = c.scene.target.normal.normalized();
    c.scene.target.center = Vec3{0.0, 0.0, 0.0} - n * distance_m;
    c.motion.kind = MotionConfig::Kind::None;

    const PhysioSignal physio = generate_physio(
        c.physio.resp_rate_bpm, c.physio.resp_amp_mm, c.physio.heart_rate_bpm,
        c.physio.heart_amp_mm, c.physio.jitter_fraction, c.physio.session_s,
        c.run.sample_rate_hz, seed);

    Scene scene = build_scene(c);
    scene.target_motion = physio.motion;

    NoiseSpec noise = c.noise;
    noise.seed = Rng::derive(seed, 0x6e6f6973ULL).next_u64();
    const BasebandIQ iq =
        compose_baseband(scene, c.carrier, c.physio.session_s, c.run.sample_rate_hz, noise,
                         c.run.a_i, c.run.a_q, c.scene.max_order, exec);

    SessionResult out;
    out.vitals = extract_vitals(iq, physio.beat_times_s, exec);
    out.distance_m = distance_m;
    out.tx = tx;
    out.rx = rx;
    return out;
}

std::vector<AccuracyRow> accuracy_report(const ScenarioConfig& base, Exec exec) {
    base.validate();
    std::vector<AccuracyRow> rows;
    for (int subject = 1; subject <= base.physio.subjects; ++subject) {
        // resting-adult parameter spread for the simulated cohort
        ScenarioConfig c = base;
        Rng draw = Rng::derive(base.run.seed, 1000 + static_cast<std::uint64_t>(subject));
        c.physio.heart_rate_bpm = draw.uniform(62.0, 78.0);
        c.physio.resp_rate_bpm = draw.uniform(14.0, 22.0);
        c.physio.heart_amp_mm = draw.uniform(0.35, 0.5);
        c.physio.resp_amp_mm = draw.uniform(3.5, 6.0);

        for (std::size_t d = 0; d < base.physio.distances_m.size(); ++d) {
            const double dist = base.physio.distances_m[d];
            const struct {
                const char* name;
                AntennaKind tx;
                AntennaKind rx;
            } cases[2] = {
                {"standard", AntennaKind::LpSingle, AntennaKind::LpSingle},
                {"recommended", AntennaKind::LpSingle, AntennaKind::CpArray},
            };
            for (int cc = 0; cc < 2; ++cc) {
                const std::uint64_t session_seed =
                    Rng::derive(base.run.seed,
                                0x5000 + static_cast<std::uint64_t>(subject) * 8 +
                                    static_cast<std::uint64_t>(d) * 2 +
                                    static_cast<std::uint64_t>(cc))
                        .next_u64();
                const SessionResult s =
                    run_physio_session(c, dist, cases[cc].tx, cases[cc].rx, session_seed, exec);
                rows.push_back({subject, dist, cases[cc].name,
                                s.vitals.heart_accuracy_pct});
            }
        }
    }
    return rows;
}

std::string accuracy_to_csv(const std::vector<AccuracyRow>& rows) {
    std::string out = "subject_id,distance_m,config,accuracy_pct\n";
    for (const auto& r : rows) {
        out += std::to_string(r.subject_id);
        out += ',';
        out += format_g9(r.distance_m);
        out += ',';
        out += r.config;
        out += ',';
        out += format_g9(r.accuracy_pct);
        out += '\n';
    }
    return out;
}

void run_simulate_to_dir(const ScenarioConfig& config, const std::string& out_dir) {
    std::filesystem::create_directories(out_dir);
    const ScenarioResult r = run_scenario(config);
    write_text_file(out_dir + "/iq.csv", iq_to_csv(r.averaged));
    write_text_file(out_dir + "/spectrum.csv", spectrum_to_csv(r.spectrum));

    nlohmann::json j = run_metadata(config, "simulate");
    j["metrics"] = {{"fundamental_hz", r.metrics.fundamental_hz},
                    {"fund_db", r.metrics.fund_db},
                    {"h2_db", r.metrics.h2_db},
                    {"snr_db", r.metrics.snr_db}};
    j["outputs"] = {"iq.csv", "spectrum.csv"};
    write_json(out_dir + "/run.json", j);
}

void run_sweep_to_dir(const ScenarioConfig& config, const std::string& out_dir) {
    std::filesystem::create_directories(out_dir);
    const SweepResult sweep = run_sweep(config);
    write_text_file(out_dir + "/sweep.csv", sweep_to_csv(sweep));

    nlohmann::json files = nlohmann::json::array();
    for (const auto& cell : sweep.cells) {
        write_text_file(out_dir + "/" + cell.spectrum_file, spectrum_to_csv(cell.spectrum));
        files.push_back(cell.spectrum_file);
    }

    nlohmann::json j = run_metadata(config, "sweep");
    j["outputs"] = nlohmann::json::array({"sweep.csv"});
    for (const auto& f : files)
        j["outputs"].push_back(f);
    write_json(out_dir + "/run.json", j);
}

void run_physio_to_dir(const ScenarioConfig& config, const std::string& out_dir) {
    std::filesystem::create_directories(out_dir);
    const auto rows = accuracy_report(config);
    write_text_file(out_dir + "/accuracy.csv", accuracy_to_csv(rows));

    nlohmann::json j = run_metadata(config, "physio");
    j["outputs"] = {"accuracy.csv"};
    write_json(out_dir + "/run.json", j);
}

} // namespace cwradar
