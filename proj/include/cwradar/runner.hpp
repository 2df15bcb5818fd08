// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The cwradar Authors

#pragma once

#include <array>
#include <string>
#include <vector>

#include "cwradar/dsp.hpp"
#include "cwradar/physio.hpp"
#include "cwradar/scenario.hpp"

namespace cwradar {

struct ScenarioMetrics {
    double fundamental_hz = 0.0;
    double fund_db = 0.0; // 20*log10 of the linear fundamental magnitude
    double h2_db = 0.0;
    double snr_db = 0.0;
};

struct ScenarioResult {
    std::vector<BasebandIQ> trials;
    BasebandIQ averaged;
    Spectrum spectrum;
    ScenarioMetrics metrics;
};

// One scenario: per-trial baseband with independent seeded noise, time
// averaging, DC cancellation, spectrum and metrics. Deterministic given the
// config seed.
ScenarioResult run_scenario(const ScenarioConfig& config, Exec exec = Exec::parallel);

struct SweepCell {
    AntennaKind tx = AntennaKind::LpSingle;
    AntennaKind rx = AntennaKind::LpSingle;
    ScenarioMetrics metrics;
    Spectrum spectrum;
    std::string spectrum_file; // relative name when written to a directory
};

struct SweepResult {
    std::array<SweepCell, 16> cells;

    const SweepCell& cell(AntennaKind tx, AntennaKind rx) const;
};

// All 16 ordered antenna pairs with identical scene, motion and seed; each
// cell draws its noise from a stream derived from (seed, cell index), so
// parallel and serial execution agree bit for bit.
SweepResult run_sweep(const ScenarioConfig& base, Exec exec = Exec::parallel);

std::string sweep_to_csv(const SweepResult& sweep);

struct SessionResult {
    VitalsEstimate vitals;
    double distance_m = 0.0;
    AntennaKind tx = AntennaKind::LpSingle;
    AntennaKind rx = AntennaKind::LpSingle;
};

// One simulated human session: physio motion at the given distance, full
// extraction chain, accuracy against the generated reference beats.
SessionResult run_physio_session(const ScenarioConfig& base, double distance_m,
                                 AntennaKind tx, AntennaKind rx, std::uint64_t seed,
                                 Exec exec = Exec::parallel);

struct AccuracyRow {
    int subject_id = 0;
    double distance_m = 0.0;
    std::string config; // "standard" or "recommended"
    double accuracy_pct = 0.0;
};

// Table-style report: per subject and distance, the standard (lp-single /
// lp-single) and recommended (lp-single Tx / cp-array Rx) arrangements.
std::vector<AccuracyRow> accuracy_report(const ScenarioConfig& base,
                                         Exec exec = Exec::parallel);

std::string accuracy_to_csv(const std::vector<AccuracyRow>& rows);

// CLI entry points; every output file goes through these so tests exercise
// the same code paths.
void run_simulate_to_dir(const ScenarioConfig& config, const std::string& out_dir);
void run_sweep_to_dir(const ScenarioConfig& config, const std::string& out_dir);
void run_physio_to_dir(const ScenarioConfig& config, const std::string& out_dir);

} // namespace cwradar
