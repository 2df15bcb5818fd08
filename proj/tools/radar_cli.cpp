// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The cwradar Authors

#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "cwradar/csv_io.hpp"
#include "cwradar/runner.hpp"
#include "cwradar/version.hpp"

namespace {

using namespace cwradar;

int cmd_simulate(const std::string& config_path, const std::string& out_dir) {
    run_simulate_to_dir(load_scenario_file(config_path), out_dir);
    std::printf("simulate: wrote iq.csv, spectrum.csv, run.json to %s\n", out_dir.c_str());
    return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& out_dir) {
    run_sweep_to_dir(load_scenario_file(config_path), out_dir);
    std::printf("sweep: wrote sweep.csv and 16 spectra to %s\n", out_dir.c_str());
    return 0;
}

int cmd_physio(const std::string& config_path, const std::string& out_dir) {
    run_physio_to_dir(load_scenario_file(config_path), out_dir);
    std::printf("physio: wrote accuracy.csv, run.json to %s\n", out_dir.c_str());
    return 0;
}

int cmd_design_feed(double z0, double er, double height_mm, const std::string& out_path) {
    SubstrateSpec substrate{er, height_mm, 0.0};
    const FeedNetwork net = design_feed_network(z0, substrate);

    std::string csv = "branch,impedance_ohm,width_mm\n";
    auto row = [&](const std::string& name, double z, double w) {
        csv += name + ',' + format_g9(z) + ',' + format_g9(w) + '\n';
    };
    row("z0", net.z0_ohm, net.line_widths_mm[0]);
    for (int k = 0; k < 6; ++k)
        row("Z" + std::to_string(k + 1), net.branch_impedances_ohm[static_cast<std::size_t>(k)],
            net.line_widths_mm[static_cast<std::size_t>(k) + 1]);
    row("transformer", net.transformer_impedance_ohm, net.line_widths_mm[7]);

    if (out_path.empty())
        std::fputs(csv.c_str(), stdout);
    else
        write_text_file(out_path, csv);
    return 0;
}

int cmd_spectrum(const std::string& iq_path, const std::string& out_path, int zero_pad) {
    const BasebandIQ raw = iq_from_csv(read_text_file(iq_path));
    const Spectrum s = complex_spectrum(dc_cancel(raw), zero_pad);
    const std::string csv = spectrum_to_csv(s);
    if (out_path.empty())
        std::fputs(csv.c_str(), stdout);
    else
        write_text_file(out_path, csv);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cwradar: quadrature CW Doppler radar simulator for vital-sign sensing"};
    app.set_version_flag("--version", cwradar::kVersion);
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "out";

    auto* simulate = app.add_subcommand("simulate", "run one scenario");
    simulate->add_option("config", config_path, "scenario config file")->required();
    simulate->add_option("-o,--out", out_dir, "output directory");

    auto* sweep = app.add_subcommand("sweep", "run the 16-cell antenna sweep");
    sweep->add_option("config", config_path, "scenario config file")->required();
    sweep->add_option("-o,--out", out_dir, "output directory");

    auto* physio = app.add_subcommand("physio", "simulated human sessions + accuracy report");
    physio->add_option("config", config_path, "scenario config file")->required();
    physio->add_option("-o,--out", out_dir, "output directory");

    double z0 = 25.0, er = 4.4, height = 1.6;
    std::string feed_out;
    auto* feed = app.add_subcommand("design-feed", "array feed network impedances and widths");
    feed->add_option("--z0", z0, "reference impedance, ohm");
    feed->add_option("--er", er, "substrate relative permittivity");
    feed->add_option("--height", height, "substrate height, mm");
    feed->add_option("-o,--out", feed_out, "output CSV (stdout when omitted)");

    std::string iq_path, spec_out;
    int zero_pad = 4;
    auto* spectrum = app.add_subcommand("spectrum", "offline DSP on a recorded iq.csv");
    spectrum->add_option("iq", iq_path, "input iq.csv (t_s,i,q)")->required();
    spectrum->add_option("-o,--out", spec_out, "output CSV (stdout when omitted)");
    spectrum->add_option("--zero-pad", zero_pad, "zero padding factor");

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed())
            return cmd_simulate(config_path, out_dir);
        if (sweep->parsed())
            return cmd_sweep(config_path, out_dir);
        if (physio->parsed())
            return cmd_physio(config_path, out_dir);
        if (feed->parsed())
            return cmd_design_feed(z0, er, height, feed_out);
        if (spectrum->parsed())
            return cmd_spectrum(iq_path, spec_out, zero_pad);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
