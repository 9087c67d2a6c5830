// Copyright 2026 The qorient Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qorient: epsilon sweeps, orientation plans and the acceptance checks.
//
//   qorient sweep --circuit bv --variants Naive,SK1_XI,SK1_YI --out bv.csv
//   qorient plan --circuit toffoli [--jsonl]
//   qorient verify

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "qorient/acceptance.hpp"
#include "qorient/report.hpp"
#include "qorient/sweep.hpp"

namespace {

using namespace qorient;

struct SweepFlags {
    std::string config;
    std::optional<std::string> circuit;
    std::optional<std::string> bv_secret;
    std::optional<std::string> variants;
    std::optional<double> eps_min;
    std::optional<double> eps_max;
    std::optional<int> points;
    std::optional<std::string> fit_window;
    std::optional<int> threads;
    std::optional<std::string> out;
};

SweepConfig resolve(const SweepFlags& f) {
    SweepConfig cfg = f.config.empty() ? SweepConfig{} : load_sweep_config(f.config);
    if (f.circuit) cfg.circuit = *f.circuit;
    if (f.bv_secret) cfg.bv_secret = *f.bv_secret;
    if (f.variants) cfg.variants = parse_variant_list(*f.variants);
    if (f.eps_min) cfg.eps_min = *f.eps_min;
    if (f.eps_max) cfg.eps_max = *f.eps_max;
    if (f.points) cfg.points = *f.points;
    if (f.fit_window) cfg.fit_window = parse_fit_window(*f.fit_window);
    if (f.threads) cfg.threads = *f.threads;
    if (f.out) cfg.out = *f.out;
    cfg.validate();
    return cfg;
}

void report_fits(const SweepResult& r, FitWindow window) {
    std::fprintf(stderr, "fitted exponents over eps in [%g, %g]:\n", window.lo, window.hi);
    for (const auto& col : r.columns()) {
        if (col == "epsilon") {
            continue;
        }
        try {
            FitResult f = fit_slope(r, col, window);
            std::fprintf(stderr, "  %-32s %7.3f  (%zu points, %zu below floor)\n", col.c_str(), f.slope, f.used,
                         f.below_floor);
        } catch (const Error& e) {
            std::fprintf(stderr, "  %-32s    n/a  (%s)\n", col.c_str(), e.what());
        }
    }
}

int run_sweep_command(const SweepFlags& flags) {
    SweepConfig cfg = resolve(flags);
    SweepResult r = run_sweep(cfg);
    if (cfg.out.empty() || cfg.out == "-") {
        emit_csv(r, std::cout);
    } else {
        emit_csv(r, cfg.out);
        std::fprintf(stderr, "wrote %zu rows to %s\n", r.records.size(), cfg.out.c_str());
    }
    report_fits(r, cfg.fit_window);
    return 0;
}

int run_plan_command(const std::string& circuit, const std::string& bv_secret, bool jsonl, const std::string& out) {
    SweepConfig cfg;
    cfg.circuit = circuit;
    cfg.bv_secret = bv_secret;
    Circuit c = resolve_circuit(cfg);
    OrientationPlan plan = compile_plan(c);
    std::ofstream file;
    if (!out.empty()) {
        file.open(out);
        if (!file) {
            throw InvalidArgument("cannot write " + out);
        }
    }
    std::ostream& dst = out.empty() ? std::cout : file;
    if (jsonl) {
        write_plan_jsonl(dst, c, plan);
    } else {
        write_plan_table(dst, c, plan);
    }
    return 0;
}

int run_verify_command() {
    int failures = 0;
    for (const auto& r : acceptance::run_all()) {
        std::cout << acceptance::format_line(r) << '\n';
        failures += r.passed ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Composite-pulse CNOT orientation: sweeps, plans and checks"};
    app.require_subcommand(1);

    SweepFlags sf;
    auto* sweep = app.add_subcommand("sweep", "Sweep epsilon and write infidelities as CSV");
    sweep->add_option("--config", sf.config, "key=value config file; flags override it")->check(CLI::ExistingFile);
    sweep->add_option("--circuit", sf.circuit, "bv, toffoli, pea, or a circuit file");
    sweep->add_option("--bv-secret", sf.bv_secret, "4-bit secret for the bv circuit");
    sweep->add_option("--variants", sf.variants, "comma list of Naive, SK1_XI, SK1_YI, SK1_IY, SK1_pair");
    sweep->add_option("--eps-min", sf.eps_min, "smallest epsilon");
    sweep->add_option("--eps-max", sf.eps_max, "largest epsilon");
    sweep->add_option("--points", sf.points, "number of log-spaced grid points");
    sweep->add_option("--fit-window", sf.fit_window, "slope fit range lo:hi");
    sweep->add_option("--threads", sf.threads, "worker threads, 0 for all cores");
    sweep->add_option("--out", sf.out, "CSV destination, - for stdout");

    std::string plan_circuit = "bv";
    std::string plan_secret = "1111";
    bool plan_jsonl = false;
    std::string plan_out;
    auto* plan = app.add_subcommand("plan", "Print the CNOT orientation plan");
    plan->add_option("--circuit", plan_circuit, "bv, toffoli, pea, or a circuit file");
    plan->add_option("--bv-secret", plan_secret, "4-bit secret for the bv circuit");
    plan->add_flag("--jsonl", plan_jsonl, "emit JSON lines instead of a table");
    plan->add_option("--out", plan_out, "write the report to a file");

    auto* verify = app.add_subcommand("verify", "Run the acceptance checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*sweep) {
            return run_sweep_command(sf);
        }
        if (*plan) {
            return run_plan_command(plan_circuit, plan_secret, plan_jsonl, plan_out);
        }
        if (*verify) {
            return run_verify_command();
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "qorient: error: %s\n", e.what());
        return 2;
    }
    return 0;
}
