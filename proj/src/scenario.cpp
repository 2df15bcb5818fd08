// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The cwradar Authors

#include "cwradar/scenario.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "cwradar/csv_io.hpp"

namespace cwradar {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// full precision for exact parse(emit(.)) round trips
std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string vec(const Vec3& v) { return num(v.x) + " " + num(v.y) + " " + num(v.z); }

double parse_double(const std::string& section, const std::string& key,
                    const std::string& value) {
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0')
        throw std::invalid_argument(section + "." + key + ": expected a number, got '" +
                                    value + "'");
    return v;
}

Vec3 parse_vec3(const std::string& section, const std::string& key,
                const std::string& value) {
    std::istringstream ss(value);
    Vec3 v;
    if (!(ss >> v.x >> v.y >> v.z))
        throw std::invalid_argument(section + "." + key + ": expected three numbers");
    std::string rest;
    if (ss >> rest)
        throw std::invalid_argument(section + "." + key + ": trailing content '" + rest + "'");
    return v;
}

bool parse_bool(const std::string& section, const std::string& key,
                const std::string& value) {
    if (value == "true" || value == "1")
        return true;
    if (value == "false" || value == "0")
        return false;
    throw std::invalid_argument(section + "." + key + ": expected true/false");
}

struct KeyValue {
    std::string key;
    std::string value;
    bool used = false;
};

struct Section {
    std::string name;
    std::vector<KeyValue> entries;

    const std::string* find(const std::string& key) {
        for (auto& kv : entries) {
            if (kv.key == key) {
                kv.used = true;
                return &kv.value;
            }
        }
        return nullptr;
    }
};

} // namespace

std::string to_string(AntennaKind kind) {
    switch (kind) {
    case AntennaKind::LpSingle: return "lp-single";
    case AntennaKind::CpSingle: return "cp-single";
    case AntennaKind::LpArray: return "lp-array";
    case AntennaKind::CpArray: return "cp-array";
    }
    return "lp-single";
}

AntennaKind antenna_kind_from_string(const std::string& s) {
    if (s == "lp-single")
        return AntennaKind::LpSingle;
    if (s == "cp-single")
        return AntennaKind::CpSingle;
    if (s == "lp-array")
        return AntennaKind::LpArray;
    if (s == "cp-array")
        return AntennaKind::CpArray;
    throw std::invalid_argument(
        "antenna kind must be one of lp-single, cp-single, lp-array, cp-array; got '" + s +
        "'");
}

MotionWaveform MotionConfig::build() const {
    switch (kind) {
    case Kind::None:
        return MotionWaveform::none();
    case Kind::Sinusoid:
        return MotionWaveform::sinusoid(amplitude_m, period_s);
    case Kind::TwoTone:
        return MotionWaveform::two_tone(resp_amp_mm * 1e-3, resp_rate_bpm / 60.0,
                                        heart_amp_mm * 1e-3, heart_rate_bpm / 60.0);
    }
    return MotionWaveform::none();
}

std::vector<ReflectorConfig> default_static_reflectors() {
    // Bench geometry of the stock scene: a floor patch plus two clutter
    // plates flanking the radar (think power supply and controller box).
    // Each plate is oriented to close one specular bounce via the target
    // plate at 1.5 m: plate A relays a wide-departure ray from the Tx side,
    // plate B catches a wide-arrival ray on the Rx side. Their standoffs put
    // the A path near zero relative phase (it reinforces the direct return)
    // and the B path near 180 degrees (it fights it), which is what gives
    // wide-beam transmit its edge and wide-beam receive its penalty.
    const Vec3 tx{-0.03, 0.0, 0.0};
    const Vec3 rx{0.03, 0.0, 0.0};

    const Vec3 hit_a{-0.10, 0.0, 1.5};
    const double za = 0.10;
    const double xa = hit_a.x - (rx.x - hit_a.x) / 1.5 * (1.5 - za);
    const Vec3 plate_a{xa, 0.0, za};
    const Vec3 normal_a =
        ((tx - plate_a).normalized() + (hit_a - plate_a).normalized()).normalized();

    const Vec3 hit_b{0.10, 0.0, 1.5};
    const double zb = 0.20;
    const double xb = hit_b.x + (hit_b.x - tx.x) / 1.5 * (1.5 - zb);
    const Vec3 plate_b{xb, 0.0, zb};
    const Vec3 normal_b =
        ((rx - plate_b).normalized() + (hit_b - plate_b).normalized()).normalized();

    return {
        {"floor", {0.0, -1.0, 0.75}, {0.0, 1.0, 0.0}, 0.5, 0.5, 0.001, 0.6},
        {"bench-clutter-a", plate_a, normal_a, 0.12, 0.22, 0.001, 0.8},
        {"bench-clutter-b", plate_b, normal_b, 0.12, 0.22, 0.001, 0.8},
    };
}

IsolationTable::IsolationTable() {
    // Symmetric defaults: cross-polarized pairs isolate a few dB better than
    // co-polarized ones and arrays beat singles.
    const double t[4][4] = {
        // rx:  lp-single  cp-single  lp-array  cp-array      tx:
        {27.5, 30.66, 31.55, 36.29},  // lp-single
        {30.66, 28.2, 34.56, 32.8},   // cp-single
        {31.55, 34.56, 35.2, 40.5},   // lp-array
        {36.29, 32.8, 40.5, 36.0},    // cp-array
    };
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            db[a][b] = t[a][b];
}

double IsolationTable::get(AntennaKind tx, AntennaKind rx) const {
    return db[static_cast<int>(tx)][static_cast<int>(rx)];
}

void IsolationTable::set(AntennaKind tx, AntennaKind rx, double value_db) {
    db[static_cast<int>(tx)][static_cast<int>(rx)] = value_db;
}

void ScenarioConfig::validate() const {
    carrier.validate();
    if (motion.kind == MotionConfig::Kind::Sinusoid) {
        if (motion.amplitude_m < 0.0)
            throw std::invalid_argument("motion.amplitude_m: must be >= 0");
        if (!(motion.period_s > 0.0))
            throw std::invalid_argument("motion.period_s: must be positive");
    }
    if (motion.kind == MotionConfig::Kind::TwoTone) {
        if (motion.resp_amp_mm < 0.0 || motion.heart_amp_mm < 0.0)
            throw std::invalid_argument("motion amplitudes: must be >= 0");
        if (!(motion.resp_rate_bpm > 0.0) || !(motion.heart_rate_bpm > 0.0))
            throw std::invalid_argument("motion rates: must be positive");
    }
    if (!(run.duration_s > 0.0))
        throw std::invalid_argument("run.duration_s: must be positive");
    if (!(run.sample_rate_hz > 0.0))
        throw std::invalid_argument("run.sample_rate_hz: must be positive");
    if (run.trials < 1)
        throw std::invalid_argument("run.trials: must be >= 1");
    if (run.zero_pad < 1)
        throw std::invalid_argument("run.zero_pad: must be >= 1");
    if (scene.max_order < 1 || scene.max_order > 3)
        throw std::invalid_argument("scene.max_order: must be 1, 2 or 3");
    if (scene.depolarization_fraction < 0.0 || scene.depolarization_fraction > 1.0)
        throw std::invalid_argument("scene.depolarization_fraction: must be in [0, 1]");
    if (noise.i_sigma < 0.0 || noise.q_sigma < 0.0)
        throw std::invalid_argument("noise sigmas: must be >= 0");
    if (physio.jitter_fraction < 0.0 || physio.jitter_fraction > 0.2)
        throw std::invalid_argument("physio.jitter_fraction: must be in [0, 0.2]");
    if (physio.subjects < 1)
        throw std::invalid_argument("physio.subjects: must be >= 1");
    build_scene(*this); // geometry-level checks
}

ScenarioConfig parse_scenario(const std::string& text) {
    std::vector<Section> sections;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw std::invalid_argument("config line " + std::to_string(line_no) +
                                            ": unterminated section header");
            sections.push_back({trim(line.substr(1, line.size() - 2)), {}});
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": expected 'key = value'");
        if (sections.empty())
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": key before any [section]");
        sections.back().entries.push_back(
            {trim(line.substr(0, eq)), trim(line.substr(eq + 1)), false});
    }

    ScenarioConfig c;
    // absent sections keep their defaults; the first [reflector] section
    // replaces the stock reflector set rather than appending to it
    bool replaced_statics = false;

    for (auto& sec : sections) {
        auto get = [&](const char* key) { return sec.find(key); };
        if (sec.name == "carrier") {
            if (auto* v = get("frequency_hz")) c.carrier.frequency_hz = parse_double(sec.name, "frequency_hz", *v);
            if (auto* v = get("tx_power_dbm")) c.carrier.tx_power_dbm = parse_double(sec.name, "tx_power_dbm", *v);
            if (auto* v = get("nominal_distance_m")) c.carrier.nominal_distance_m = parse_double(sec.name, "nominal_distance_m", *v);
            if (auto* v = get("surface_phase_rad")) c.carrier.surface_phase_rad = parse_double(sec.name, "surface_phase_rad", *v);
            if (auto* v = get("residual_phase_rad")) c.carrier.residual_phase_rad = parse_double(sec.name, "residual_phase_rad", *v);
        } else if (sec.name == "motion") {
            if (auto* v = get("kind")) {
                if (*v == "none") c.motion.kind = MotionConfig::Kind::None;
                else if (*v == "sinusoid") c.motion.kind = MotionConfig::Kind::Sinusoid;
                else if (*v == "two-tone") c.motion.kind = MotionConfig::Kind::TwoTone;
                else throw std::invalid_argument("motion.kind: must be none, sinusoid or two-tone");
            }
            if (auto* v = get("amplitude_m")) c.motion.amplitude_m = parse_double(sec.name, "amplitude_m", *v);
            if (auto* v = get("period_s")) c.motion.period_s = parse_double(sec.name, "period_s", *v);
            if (auto* v = get("resp_rate_bpm")) c.motion.resp_rate_bpm = parse_double(sec.name, "resp_rate_bpm", *v);
            if (auto* v = get("resp_amp_mm")) c.motion.resp_amp_mm = parse_double(sec.name, "resp_amp_mm", *v);
            if (auto* v = get("heart_rate_bpm")) c.motion.heart_rate_bpm = parse_double(sec.name, "heart_rate_bpm", *v);
            if (auto* v = get("heart_amp_mm")) c.motion.heart_amp_mm = parse_double(sec.name, "heart_amp_mm", *v);
        } else if (sec.name == "antennas") {
            if (auto* v = get("tx")) c.antennas.tx = antenna_kind_from_string(*v);
            if (auto* v = get("rx")) c.antennas.rx = antenna_kind_from_string(*v);
            if (auto* v = get("tx_position")) c.antennas.tx_position = parse_vec3(sec.name, "tx_position", *v);
            if (auto* v = get("rx_position")) c.antennas.rx_position = parse_vec3(sec.name, "rx_position", *v);
            if (auto* v = get("peak_gain_dbi")) c.antennas.peak_gain_dbi = parse_double(sec.name, "peak_gain_dbi", *v);
            if (auto* v = get("single_hpbw_deg")) c.antennas.single_hpbw_deg = parse_double(sec.name, "single_hpbw_deg", *v);
            if (auto* v = get("array_hpbw_deg")) c.antennas.array_hpbw_deg = parse_double(sec.name, "array_hpbw_deg", *v);
            if (auto* v = get("tx_cp_hand")) c.antennas.tx_cp_right_handed = (*v == "rhcp");
            if (auto* v = get("rx_cp_hand")) c.antennas.rx_cp_right_handed = (*v == "rhcp");
        } else if (sec.name == "target") {
            auto& t = c.scene.target;
            if (auto* v = get("center")) t.center = parse_vec3(sec.name, "center", *v);
            if (auto* v = get("normal")) t.normal = parse_vec3(sec.name, "normal", *v);
            if (auto* v = get("extent")) {
                std::istringstream ss(*v);
                if (!(ss >> t.width_m >> t.height_m))
                    throw std::invalid_argument("target.extent: expected two numbers");
            }
            if (auto* v = get("roughness_height_m")) t.roughness_height_m = parse_double(sec.name, "roughness_height_m", *v);
            if (auto* v = get("reflection_magnitude")) t.reflection_magnitude = parse_double(sec.name, "reflection_magnitude", *v);
        } else if (sec.name == "reflector") {
            if (!replaced_statics) {
                c.scene.statics.clear();
                replaced_statics = true;
            }
            ReflectorConfig r;
            if (auto* v = get("id")) r.id = *v;
            else throw std::invalid_argument("reflector.id: required");
            if (auto* v = get("center")) r.center = parse_vec3(sec.name, "center", *v);
            if (auto* v = get("normal")) r.normal = parse_vec3(sec.name, "normal", *v);
            if (auto* v = get("extent")) {
                std::istringstream ss(*v);
                if (!(ss >> r.width_m >> r.height_m))
                    throw std::invalid_argument("reflector.extent: expected two numbers");
            }
            if (auto* v = get("roughness_height_m")) r.roughness_height_m = parse_double(sec.name, "roughness_height_m", *v);
            if (auto* v = get("reflection_magnitude")) r.reflection_magnitude = parse_double(sec.name, "reflection_magnitude", *v);
            c.scene.statics.push_back(r);
        } else if (sec.name == "scene") {
            if (auto* v = get("default_reflectors")) {
                if (!parse_bool(sec.name, "default_reflectors", *v) && !replaced_statics) {
                    c.scene.statics.clear();
                    replaced_statics = true;
                }
            }
            if (auto* v = get("max_order")) c.scene.max_order = static_cast<int>(parse_double(sec.name, "max_order", *v));
            if (auto* v = get("depolarization_fraction")) c.scene.depolarization_fraction = parse_double(sec.name, "depolarization_fraction", *v);
            if (auto* v = get("leakage_enabled")) c.scene.leakage_enabled = parse_bool(sec.name, "leakage_enabled", *v);
            if (auto* v = get("leakage_phase_deg")) c.scene.leakage_phase_deg = parse_double(sec.name, "leakage_phase_deg", *v);
        } else if (sec.name == "noise") {
            if (auto* v = get("i_sigma")) c.noise.i_sigma = parse_double(sec.name, "i_sigma", *v);
            if (auto* v = get("q_sigma")) c.noise.q_sigma = parse_double(sec.name, "q_sigma", *v);
            if (auto* v = get("i_dc")) c.noise.i_dc = parse_double(sec.name, "i_dc", *v);
            if (auto* v = get("q_dc")) c.noise.q_dc = parse_double(sec.name, "q_dc", *v);
        } else if (sec.name == "run") {
            if (auto* v = get("duration_s")) c.run.duration_s = parse_double(sec.name, "duration_s", *v);
            if (auto* v = get("sample_rate_hz")) c.run.sample_rate_hz = parse_double(sec.name, "sample_rate_hz", *v);
            if (auto* v = get("trials")) c.run.trials = static_cast<int>(parse_double(sec.name, "trials", *v));
            if (auto* v = get("seed")) c.run.seed = static_cast<std::uint64_t>(parse_double(sec.name, "seed", *v));
            if (auto* v = get("zero_pad")) c.run.zero_pad = static_cast<int>(parse_double(sec.name, "zero_pad", *v));
            if (auto* v = get("a_i")) c.run.a_i = parse_double(sec.name, "a_i", *v);
            if (auto* v = get("a_q")) c.run.a_q = parse_double(sec.name, "a_q", *v);
        } else if (sec.name == "physio") {
            if (auto* v = get("resp_rate_bpm")) c.physio.resp_rate_bpm = parse_double(sec.name, "resp_rate_bpm", *v);
            if (auto* v = get("resp_amp_mm")) c.physio.resp_amp_mm = parse_double(sec.name, "resp_amp_mm", *v);
            if (auto* v = get("heart_rate_bpm")) c.physio.heart_rate_bpm = parse_double(sec.name, "heart_rate_bpm", *v);
            if (auto* v = get("heart_amp_mm")) c.physio.heart_amp_mm = parse_double(sec.name, "heart_amp_mm", *v);
            if (auto* v = get("jitter_fraction")) c.physio.jitter_fraction = parse_double(sec.name, "jitter_fraction", *v);
            if (auto* v = get("subjects")) c.physio.subjects = static_cast<int>(parse_double(sec.name, "subjects", *v));
            if (auto* v = get("session_s")) c.physio.session_s = parse_double(sec.name, "session_s", *v);
            if (auto* v = get("distances_m")) {
                std::istringstream ss(*v);
                c.physio.distances_m.clear();
                double d = 0.0;
                while (ss >> d)
                    c.physio.distances_m.push_back(d);
                if (c.physio.distances_m.empty())
                    throw std::invalid_argument("physio.distances_m: expected numbers");
            }
        } else if (sec.name == "isolation") {
            for (auto& kv : sec.entries) {
                const auto pos = kv.key.find("-to-");
                if (pos == std::string::npos)
                    throw std::invalid_argument("isolation: keys look like '<tx>-to-<rx>'");
                const AntennaKind a = antenna_kind_from_string(kv.key.substr(0, pos));
                const AntennaKind b = antenna_kind_from_string(kv.key.substr(pos + 4));
                c.isolation.set(a, b, parse_double(sec.name, kv.key, kv.value));
                kv.used = true;
            }
        } else {
            throw std::invalid_argument("unknown config section [" + sec.name + "]");
        }

        for (const auto& kv : sec.entries)
            if (!kv.used)
                throw std::invalid_argument("unknown key '" + kv.key + "' in section [" +
                                            sec.name + "]");
    }

    c.validate();
    return c;
}

std::string emit_scenario(const ScenarioConfig& c) {
    std::ostringstream o;
    o << "[carrier]\n";
    o << "frequency_hz = " << num(c.carrier.frequency_hz) << "\n";
    o << "tx_power_dbm = " << num(c.carrier.tx_power_dbm) << "\n";
    o << "nominal_distance_m = " << num(c.carrier.nominal_distance_m) << "\n";
    o << "surface_phase_rad = " << num(c.carrier.surface_phase_rad) << "\n";
    o << "residual_phase_rad = " << num(c.carrier.residual_phase_rad) << "\n";

    o << "\n[motion]\n";
    const char* mk = c.motion.kind == MotionConfig::Kind::None
                         ? "none"
                         : (c.motion.kind == MotionConfig::Kind::Sinusoid ? "sinusoid"
                                                                          : "two-tone");
    o << "kind = " << mk << "\n";
    o << "amplitude_m = " << num(c.motion.amplitude_m) << "\n";
    o << "period_s = " << num(c.motion.period_s) << "\n";
    o << "resp_rate_bpm = " << num(c.motion.resp_rate_bpm) << "\n";
    o << "resp_amp_mm = " << num(c.motion.resp_amp_mm) << "\n";
    o << "heart_rate_bpm = " << num(c.motion.heart_rate_bpm) << "\n";
    o << "heart_amp_mm = " << num(c.motion.heart_amp_mm) << "\n";

    o << "\n[antennas]\n";
    o << "tx = " << to_string(c.antennas.tx) << "\n";
    o << "rx = " << to_string(c.antennas.rx) << "\n";
    o << "tx_position = " << vec(c.antennas.tx_position) << "\n";
    o << "rx_position = " << vec(c.antennas.rx_position) << "\n";
    o << "peak_gain_dbi = " << num(c.antennas.peak_gain_dbi) << "\n";
    o << "single_hpbw_deg = " << num(c.antennas.single_hpbw_deg) << "\n";
    o << "array_hpbw_deg = " << num(c.antennas.array_hpbw_deg) << "\n";
    o << "tx_cp_hand = " << (c.antennas.tx_cp_right_handed ? "rhcp" : "lhcp") << "\n";
    o << "rx_cp_hand = " << (c.antennas.rx_cp_right_handed ? "rhcp" : "lhcp") << "\n";

    o << "\n[target]\n";
    o << "center = " << vec(c.scene.target.center) << "\n";
    o << "normal = " << vec(c.scene.target.normal) << "\n";
    o << "extent = " << num(c.scene.target.width_m) << " " << num(c.scene.target.height_m)
      << "\n";
    o << "roughness_height_m = " << num(c.scene.target.roughness_height_m) << "\n";
    o << "reflection_magnitude = " << num(c.scene.target.reflection_magnitude) << "\n";

    o << "\n[scene]\n";
    o << "max_order = " << c.scene.max_order << "\n";
    o << "depolarization_fraction = " << num(c.scene.depolarization_fraction) << "\n";
    o << "leakage_enabled = " << (c.scene.leakage_enabled ? "true" : "false") << "\n";
    o << "leakage_phase_deg = " << num(c.scene.leakage_phase_deg) << "\n";

    for (const auto& r : c.scene.statics) {
        o << "\n[reflector]\n";
        o << "id = " << r.id << "\n";
        o << "center = " << vec(r.center) << "\n";
        o << "normal = " << vec(r.normal) << "\n";
        o << "extent = " << num(r.width_m) << " " << num(r.height_m) << "\n";
        o << "roughness_height_m = " << num(r.roughness_height_m) << "\n";
        o << "reflection_magnitude = " << num(r.reflection_magnitude) << "\n";
    }

    o << "\n[noise]\n";
    o << "i_sigma = " << num(c.noise.i_sigma) << "\n";
    o << "q_sigma = " << num(c.noise.q_sigma) << "\n";
    o << "i_dc = " << num(c.noise.i_dc) << "\n";
    o << "q_dc = " << num(c.noise.q_dc) << "\n";

    o << "\n[run]\n";
    o << "duration_s = " << num(c.run.duration_s) << "\n";
    o << "sample_rate_hz = " << num(c.run.sample_rate_hz) << "\n";
    o << "trials = " << c.run.trials << "\n";
    o << "seed = " << c.run.seed << "\n";
    o << "zero_pad = " << c.run.zero_pad << "\n";
    o << "a_i = " << num(c.run.a_i) << "\n";
    o << "a_q = " << num(c.run.a_q) << "\n";

    o << "\n[physio]\n";
    o << "resp_rate_bpm = " << num(c.physio.resp_rate_bpm) << "\n";
    o << "resp_amp_mm = " << num(c.physio.resp_amp_mm) << "\n";
    o << "heart_rate_bpm = " << num(c.physio.heart_rate_bpm) << "\n";
    o << "heart_amp_mm = " << num(c.physio.heart_amp_mm) << "\n";
    o << "jitter_fraction = " << num(c.physio.jitter_fraction) << "\n";
    o << "subjects = " << c.physio.subjects << "\n";
    o << "session_s = " << num(c.physio.session_s) << "\n";
    o << "distances_m =";
    for (double d : c.physio.distances_m)
        o << " " << num(d);
    o << "\n";

    o << "\n[isolation]\n";
    for (AntennaKind a : kAllAntennaKinds)
        for (AntennaKind b : kAllAntennaKinds)
            o << to_string(a) << "-to-" << to_string(b) << " = " << num(c.isolation.get(a, b))
              << "\n";

    return o.str();
}

ScenarioConfig load_scenario_file(const std::string& path) {
    return parse_scenario(read_text_file(path));
}

AntennaSpec antenna_spec_for(const AntennasConfig& a, AntennaKind kind, bool is_rx) {
    const bool right = is_rx ? a.rx_cp_right_handed : a.tx_cp_right_handed;
    switch (kind) {
    case AntennaKind::LpSingle:
        return AntennaSpec::make(JonesVector::lp_vertical(), a.peak_gain_dbi, a.single_hpbw_deg);
    case AntennaKind::CpSingle:
        return AntennaSpec::make(right ? JonesVector::rhcp() : JonesVector::lhcp(),
                                 a.peak_gain_dbi, a.single_hpbw_deg);
    case AntennaKind::LpArray:
        return AntennaSpec::make(JonesVector::lp_vertical(), a.peak_gain_dbi, a.array_hpbw_deg);
    case AntennaKind::CpArray:
        return AntennaSpec::make(right ? JonesVector::rhcp() : JonesVector::lhcp(),
                                 a.peak_gain_dbi, a.array_hpbw_deg);
    }
    throw std::invalid_argument("unknown antenna kind");
}

Scene build_scene(const ScenarioConfig& c) {
    Scene s;
    s.tx.spec = antenna_spec_for(c.antennas, c.antennas.tx, false);
    s.rx.spec = antenna_spec_for(c.antennas, c.antennas.rx, true);
    s.tx.position = c.antennas.tx_position;
    s.rx.position = c.antennas.rx_position;

    auto to_reflector = [](const ReflectorConfig& r, bool target) {
        Reflector out;
        out.id = r.id;
        out.center = r.center;
        out.normal = r.normal.normalized();
        out.width_m = r.width_m;
        out.height_m = r.height_m;
        out.roughness_height_m = r.roughness_height_m;
        out.reflection_magnitude = r.reflection_magnitude;
        out.is_target = target;
        return out;
    };
    s.target = to_reflector(c.scene.target, true);
    for (const auto& r : c.scene.statics)
        s.statics.push_back(to_reflector(r, false));

    s.tx.boresight = (s.target.center - s.tx.position).normalized();
    s.rx.boresight = (s.target.center - s.rx.position).normalized();
    s.target_motion = c.motion.build();
    s.depolarization_fraction = c.scene.depolarization_fraction;

    if (c.scene.leakage_enabled) {
        const double iso_db = c.isolation.get(c.antennas.tx, c.antennas.rx);
        s.leakage = std::polar(db_to_linear_amplitude(-iso_db),
                               deg_to_rad(c.scene.leakage_phase_deg));
    }

    s.validate();
    return s;
}

} // namespace cwradar
