// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The cwradar Authors

#include "cwradar/csv_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cwradar {

std::string format_g9(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::string iq_to_csv(const BasebandIQ& iq) {
    iq.validate();
    std::string out = "t_s,i,q\n";
    for (std::size_t k = 0; k < iq.size(); ++k) {
        const double t = static_cast<double>(k) / iq.sample_rate_hz;
        out += format_g9(t);
        out += ',';
        out += format_g9(iq.i[k]);
        out += ',';
        out += format_g9(iq.q[k]);
        out += '\n';
    }
    return out;
}

BasebandIQ iq_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("iq_from_csv: empty input");
    if (line.rfind("t_s,i,q", 0) != 0)
        throw std::invalid_argument("iq_from_csv: expected header 't_s,i,q'");

    BasebandIQ iq;
    std::vector<double> times;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        double t = 0.0, i = 0.0, q = 0.0;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &t, &i, &q) != 3)
            throw std::invalid_argument("iq_from_csv: malformed row '" + line + "'");
        times.push_back(t);
        iq.i.push_back(i);
        iq.q.push_back(q);
    }
    if (times.size() < 2)
        throw std::invalid_argument("iq_from_csv: need at least two samples");
    const double dt = (times.back() - times.front()) / static_cast<double>(times.size() - 1);
    if (!(dt > 0.0))
        throw std::invalid_argument("iq_from_csv: non-increasing time column");
    iq.sample_rate_hz = 1.0 / dt;
    return iq;
}

std::string spectrum_to_csv(const Spectrum& s) {
    std::string out = "f_hz,mag,mag_db\n";
    for (std::size_t k = 0; k < s.freqs_hz.size(); ++k) {
        out += format_g9(s.freqs_hz[k]);
        out += ',';
        out += format_g9(s.magnitude[k]);
        out += ',';
        out += format_g9(s.magnitude_db[k]);
        out += '\n';
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open for writing: " + path);
    f << text;
    if (!f)
        throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace cwradar
