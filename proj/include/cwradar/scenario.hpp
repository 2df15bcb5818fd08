// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The cwradar Authors

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cwradar/doppler.hpp"
#include "cwradar/propagation.hpp"

namespace cwradar {

// The four antenna builds that can sit on either end of the link.
enum class AntennaKind { LpSingle, CpSingle, LpArray, CpArray };

inline constexpr std::array<AntennaKind, 4> kAllAntennaKinds = {
    AntennaKind::LpSingle, AntennaKind::CpSingle, AntennaKind::LpArray,
    AntennaKind::CpArray};

std::string to_string(AntennaKind kind);
AntennaKind antenna_kind_from_string(const std::string& s);

struct MotionConfig {
    enum class Kind { None, Sinusoid, TwoTone };
    Kind kind = Kind::Sinusoid;
    double amplitude_m = 0.02;
    double period_s = 5.8;
    double resp_rate_bpm = 20.0;
    double resp_amp_mm = 5.0;
    double heart_rate_bpm = 70.0;
    double heart_amp_mm = 0.4;

    MotionWaveform build() const;
};

struct AntennasConfig {
    AntennaKind tx = AntennaKind::LpSingle;
    AntennaKind rx = AntennaKind::LpSingle;
    Vec3 tx_position{-0.03, 0.0, 0.0};
    Vec3 rx_position{0.03, 0.0, 0.0};
    double peak_gain_dbi = 5.8;
    double single_hpbw_deg = 81.0;
    double array_hpbw_deg = 37.0;
    bool tx_cp_right_handed = false; // matched pair across one handedness flip
    bool rx_cp_right_handed = true;
};

struct ReflectorConfig {
    std::string id;
    Vec3 center;
    Vec3 normal;
    double width_m = 0.0;
    double height_m = 0.0;
    double roughness_height_m = 0.0;
    double reflection_magnitude = 1.0;
};

// Stock room reflectors: a floor patch below the link plus a side plate on
// the Tx side of the bench. Positions are calibrated so the shipped scene
// reproduces the qualitative antenna-ordering effects; everything is plain
// configuration and can be overridden per run.
std::vector<ReflectorConfig> default_static_reflectors();

struct SceneConfig {
    ReflectorConfig target{"target", {0.0, 0.0, 1.5}, {0.0, 0.0, -1.0},
                           0.30,      0.20,            0.02,
                           1.0};
    std::vector<ReflectorConfig> statics = default_static_reflectors();
    int max_order = 2;
    double depolarization_fraction = 0.45;
    bool leakage_enabled = true;
    double leakage_phase_deg = 120.0;
};

struct RunConfig {
    double duration_s = 30.0;
    double sample_rate_hz = 100.0;
    int trials = 5;
    std::uint64_t seed = 1;
    int zero_pad = 4;
    double a_i = 1.0;
    double a_q = 1.0;
};

struct PhysioConfig {
    double resp_rate_bpm = 20.0;
    double resp_amp_mm = 5.0;
    double heart_rate_bpm = 70.0;
    double heart_amp_mm = 0.4;
    double jitter_fraction = 0.03;
    int subjects = 5;
    double session_s = 300.0;
    std::vector<double> distances_m{0.5, 1.5};
};

// Measured-style Tx/Rx isolation table (dB, symmetric) that sets the direct
// leakage phasor magnitude per antenna pair.
struct IsolationTable {
    std::array<std::array<double, 4>, 4> db;

    IsolationTable();
    double get(AntennaKind tx, AntennaKind rx) const;
    void set(AntennaKind tx, AntennaKind rx, double value_db);
};

struct ScenarioConfig {
    CarrierConfig carrier;
    MotionConfig motion;
    AntennasConfig antennas;
    SceneConfig scene;
    NoiseSpec noise{1e-4, 1e-4, 0.002, 0.002, 0};
    RunConfig run;
    PhysioConfig physio;
    IsolationTable isolation;

    void validate() const;
};

// Structured key-value text format: [section] headers with key = value
// lines; '#' starts a comment; [reflector] sections may repeat. parse and
// emit round-trip exactly.
ScenarioConfig parse_scenario(const std::string& text);
std::string emit_scenario(const ScenarioConfig& config);

ScenarioConfig load_scenario_file(const std::string& path);

// Scene assembly used by the runner (and directly by tests).
AntennaSpec antenna_spec_for(const AntennasConfig& a, AntennaKind kind, bool is_rx);
Scene build_scene(const ScenarioConfig& config);

} // namespace cwradar
