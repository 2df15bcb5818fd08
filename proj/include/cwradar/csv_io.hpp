// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The cwradar Authors

#pragma once

#include <string>
#include <vector>

#include "cwradar/doppler.hpp"
#include "cwradar/dsp.hpp"

namespace cwradar {

// All floating-point CSV output is printed at 9 significant digits.
std::string format_g9(double v);

// iq.csv: t_s,i,q
std::string iq_to_csv(const BasebandIQ& iq);
BasebandIQ iq_from_csv(const std::string& text);

// spectrum.csv: f_hz,mag,mag_db
std::string spectrum_to_csv(const Spectrum& s);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

} // namespace cwradar
