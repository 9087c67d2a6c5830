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

// Error-strength sweeps, CSV output and log-log slope fits.

#pragma once

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "qorient/circuit.hpp"
#include "qorient/circuit_io.hpp"
#include "qorient/gates.hpp"
#include "qorient/orient.hpp"

namespace qorient {

/// Per-circuit CNOT choice compared in a sweep.  SK1_pair applies the
/// compiled orientation plan (pair cancellation, then measurement
/// orientation for unpaired CNOTs).
enum class SweepVariant { Naive, SK1_XI, SK1_YI, SK1_IY, SK1_pair };

inline std::string_view to_string(SweepVariant v) {
    switch (v) {
        case SweepVariant::Naive: return "Naive";
        case SweepVariant::SK1_XI: return "SK1_XI";
        case SweepVariant::SK1_YI: return "SK1_YI";
        case SweepVariant::SK1_IY: return "SK1_IY";
        case SweepVariant::SK1_pair: return "SK1_pair";
    }
    return "?";
}

inline std::optional<SweepVariant> parse_sweep_variant(std::string_view text) {
    std::string u = detail::upper(text);
    if (u.rfind("SK1_", 0) == 0) {
        u.erase(0, 4);
    }
    if (u == "NAIVE") return SweepVariant::Naive;
    if (u == "XI") return SweepVariant::SK1_XI;
    if (u == "YI") return SweepVariant::SK1_YI;
    if (u == "IY") return SweepVariant::SK1_IY;
    if (u == "PAIR" || u == "PM_XI" || u == "PMXI") return SweepVariant::SK1_pair;
    return std::nullopt;
}

/// CNOT variant whose gate infidelity is reported for a sweep variant.
inline PulseVariant reference_cnot(SweepVariant v) {
    switch (v) {
        case SweepVariant::Naive: return PulseVariant::Naive;
        case SweepVariant::SK1_YI: return PulseVariant::SK1_YI;
        case SweepVariant::SK1_IY: return PulseVariant::SK1_IY;
        case SweepVariant::SK1_XI:
        case SweepVariant::SK1_pair: return PulseVariant::SK1_XI;
    }
    return PulseVariant::Naive;
}

struct FitWindow {
    double lo = 1e-3;
    double hi = 1e-2;
};

inline constexpr FitWindow kCanonicalWindow{1e-3, 1e-2};

/// Infidelities at or below this value are left out of slope fits.
inline constexpr double kFitFloor = 1e-14;

struct SweepConfig {
    std::string circuit = "bv";  // bv, toffoli, pea, or a circuit file path
    std::string bv_secret = "1111";
    std::vector<SweepVariant> variants{SweepVariant::Naive, SweepVariant::SK1_XI, SweepVariant::SK1_YI};
    double eps_min = 1e-3;
    double eps_max = 1e-1;
    int points = 25;
    FitWindow fit_window = kCanonicalWindow;
    int threads = 1;  // 0 selects the hardware concurrency
    std::string out;

    void validate() const {
        if (!(eps_min > 0 && eps_min < eps_max && eps_max < ErrorModel::kMaxMagnitude)) {
            throw InvalidArgument("sweep range must satisfy 0 < eps_min < eps_max < 0.5");
        }
        if (points < 2) {
            throw InvalidArgument("sweep needs at least 2 points");
        }
        if (variants.empty()) {
            throw InvalidArgument("sweep needs at least one variant");
        }
        if (!(fit_window.lo > 0 && fit_window.lo < fit_window.hi)) {
            throw InvalidArgument("fit window must satisfy 0 < lo < hi");
        }
        if (threads < 0) {
            throw InvalidArgument("thread count must be non-negative");
        }
    }
};

struct SweepRecord {
    double epsilon = 0;
    std::vector<double> gate_infidelity;     // CNOT, one per variant
    std::vector<double> circuit_infidelity;  // circuit (or composite gate), one per variant
};

struct SweepResult {
    std::vector<SweepVariant> variants;
    std::vector<SweepRecord> records;

    /// epsilon, gate_infidelity_<v>..., circuit_infidelity_<v>...
    std::vector<std::string> columns() const {
        std::vector<std::string> cols{"epsilon"};
        for (SweepVariant v : variants) {
            cols.push_back("gate_infidelity_" + std::string(to_string(v)));
        }
        for (SweepVariant v : variants) {
            cols.push_back("circuit_infidelity_" + std::string(to_string(v)));
        }
        return cols;
    }

    std::vector<double> epsilons() const {
        std::vector<double> out;
        for (const auto& r : records) {
            out.push_back(r.epsilon);
        }
        return out;
    }

    /// Values of a named column.
    std::vector<double> series(std::string_view column) const {
        auto cols = columns();
        auto it = std::find(cols.begin(), cols.end(), column);
        if (it == cols.end()) {
            throw InvalidArgument("unknown series `" + std::string(column) + "`");
        }
        auto index = static_cast<std::size_t>(it - cols.begin());
        std::vector<double> out;
        for (const auto& r : records) {
            if (index == 0) {
                out.push_back(r.epsilon);
            } else if (index <= variants.size()) {
                out.push_back(r.gate_infidelity[index - 1]);
            } else {
                out.push_back(r.circuit_infidelity[index - 1 - variants.size()]);
            }
        }
        return out;
    }
};

/// `points` log-spaced values from lo to hi inclusive.
inline std::vector<double> log_grid(double lo, double hi, int points) {
    if (!(lo > 0 && lo < hi) || points < 2) {
        throw InvalidArgument("log grid needs 0 < lo < hi and at least 2 points");
    }
    std::vector<double> out(static_cast<std::size_t>(points));
    const double a = std::log(lo);
    const double b = std::log(hi);
    for (int k = 0; k < points; ++k) {
        out[static_cast<std::size_t>(k)] = std::exp(a + (b - a) * k / (points - 1));
    }
    out.front() = lo;
    out.back() = hi;
    return out;
}

inline Circuit resolve_circuit(const SweepConfig& cfg) {
    if (cfg.circuit == "bv") return build_bv(cfg.bv_secret);
    if (cfg.circuit == "toffoli") return build_toffoli();
    if (cfg.circuit == "pea") return build_pea();
    return load_circuit(cfg.circuit);
}

inline Circuit circuit_for(const Circuit& base, SweepVariant v) {
    switch (v) {
        case SweepVariant::SK1_pair: return apply_plan(base, compile_plan(base));
        default: return base.with_uniform_variant(reference_cnot(v));
    }
}

inline std::vector<SweepRecord> run_grid(const std::vector<Circuit>& circuits, std::span<const PulseVariant> cnots,
                                         const std::vector<double>& grid, int threads) {
    std::vector<SweepRecord> records(grid.size());
    std::atomic<std::size_t> next{0};
    std::mutex failure_mutex;
    std::exception_ptr failure;
    auto worker = [&] {
        try {
            for (std::size_t i = next++; i < grid.size(); i = next++) {
                ErrorModel err(grid[i]);
                SweepRecord r;
                r.epsilon = grid[i];
                for (PulseVariant v : cnots) {
                    r.gate_infidelity.push_back(gate_infidelity(cnot_matrix(), cnot_local(v, err)));
                }
                for (const Circuit& c : circuits) {
                    r.circuit_infidelity.push_back(circuit_infidelity(c, err));
                }
                records[i] = std::move(r);
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) {
                failure = std::current_exception();
            }
            next = grid.size();
        }
    };
    auto n = static_cast<std::size_t>(threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : threads);
    n = std::min(n, grid.size());
    if (n <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < n; ++t) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return records;
}

/// Evaluates every variant at each grid point.  Records come back in
/// increasing epsilon whatever the thread count.
inline SweepResult run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    Circuit base = resolve_circuit(cfg);
    std::vector<Circuit> circuits;
    std::vector<PulseVariant> cnots;
    for (SweepVariant v : cfg.variants) {
        circuits.push_back(circuit_for(base, v));
        cnots.push_back(reference_cnot(v));
    }
    auto grid = log_grid(cfg.eps_min, cfg.eps_max, cfg.points);
    return {cfg.variants, run_grid(circuits, cnots, grid, cfg.threads)};
}

struct FitResult {
    double slope = 0;
    double intercept = 0;
    std::size_t used = 0;
    std::size_t below_floor = 0;  // in-window points dropped by the floor
};

/// Least-squares slope of log(y) against log(epsilon) over points inside
/// `window` with y above the fit floor.
inline FitResult fit_slope(std::span<const double> epsilon, std::span<const double> y, FitWindow window) {
    if (epsilon.size() != y.size()) {
        throw DimensionMismatch("slope fit needs one value per epsilon");
    }
    std::vector<double> xs;
    std::vector<double> ys;
    FitResult fit;
    constexpr double kEdge = 1e-12;  // grid endpoints computed through exp/log
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (epsilon[i] < window.lo * (1 - kEdge) || epsilon[i] > window.hi * (1 + kEdge)) {
            continue;
        }
        if (!(y[i] > kFitFloor)) {
            ++fit.below_floor;
            continue;
        }
        xs.push_back(std::log(epsilon[i]));
        ys.push_back(std::log(y[i]));
    }
    if (xs.size() < 3) {
        throw InvalidArgument("slope fit needs at least 3 in-window points above the floor, got " +
                              std::to_string(xs.size()));
    }
    const double n = static_cast<double>(xs.size());
    double mx = 0;
    double my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0;
    double sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.used = xs.size();
    return fit;
}

inline FitResult fit_slope(const SweepResult& result, std::string_view series, FitWindow window) {
    auto eps = result.epsilons();
    auto y = result.series(series);
    return fit_slope(eps, y, window);
}

// ---------------------------------------------------------------------------
// CSV

inline void emit_csv(const SweepResult& result, std::ostream& out) {
    if (result.records.empty()) {
        throw InvalidArgument("no records to write");
    }
    auto cols = result.columns();
    for (std::size_t i = 0; i < cols.size(); ++i) {
        out << (i ? "," : "") << cols[i];
    }
    out << '\n';
    for (const auto& r : result.records) {
        out << detail::format_double(r.epsilon);
        for (double v : r.gate_infidelity) {
            out << ',' << detail::format_double(v);
        }
        for (double v : r.circuit_infidelity) {
            out << ',' << detail::format_double(v);
        }
        out << '\n';
    }
}

inline void emit_csv(const SweepResult& result, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InvalidArgument("cannot write " + path);
    }
    emit_csv(result, out);
    if (!out) {
        throw InvalidArgument("failed writing " + path);
    }
}

struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

inline CsvTable read_csv(std::istream& in) {
    CsvTable t;
    std::string line;
    auto split = [](const std::string& s) {
        std::vector<std::string> out;
        std::stringstream ss(s);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            out.push_back(cell);
        }
        return out;
    };
    if (!std::getline(in, line)) {
        throw ParseError("empty CSV");
    }
    t.columns = split(line);
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        auto cells = split(line);
        if (cells.size() != t.columns.size()) {
            throw ParseError("CSV row width differs from header");
        }
        std::vector<double> row;
        for (const auto& cell : cells) {
            auto v = detail::parse_number(cell);
            if (!v) {
                throw ParseError("invalid CSV number `" + cell + "`");
            }
            row.push_back(*v);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

// ---------------------------------------------------------------------------
// key=value configuration

inline std::map<std::string, std::string> parse_key_values(std::istream& in) {
    std::map<std::string, std::string> out;
    std::string raw;
    int line_no = 0;
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return std::string(s);
    };
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line(raw);
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        if (trim(line).empty()) {
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError("config line " + std::to_string(line_no) + ": expected key=value");
        }
        std::string key = trim(line.substr(0, eq));
        std::replace(key.begin(), key.end(), '-', '_');
        out[key] = trim(line.substr(eq + 1));
    }
    return out;
}

inline std::vector<SweepVariant> parse_variant_list(std::string_view text) {
    std::vector<SweepVariant> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
        if (!item.empty()) {
            auto v = parse_sweep_variant(item);
            if (!v) {
                throw ParseError("unknown sweep variant `" + std::string(item) + "`");
            }
            out.push_back(*v);
        }
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

/// "lo:hi" or "lo,hi".
inline FitWindow parse_fit_window(std::string_view text) {
    auto sep = text.find_first_of(":,");
    if (sep == std::string_view::npos) {
        throw ParseError("fit window must be written lo:hi");
    }
    auto lo = detail::parse_number(text.substr(0, sep));
    auto hi = detail::parse_number(text.substr(sep + 1));
    if (!lo || !hi) {
        throw ParseError("invalid fit window `" + std::string(text) + "`");
    }
    return {*lo, *hi};
}

inline void apply_key_values(SweepConfig& cfg, const std::map<std::string, std::string>& kv) {
    for (const auto& [key, value] : kv) {
        auto number = [&] {
            auto v = detail::parse_number(value);
            if (!v) {
                throw ParseError("config key " + key + ": invalid number `" + value + "`");
            }
            return *v;
        };
        auto integer = [&] {
            auto v = detail::parse_int(value);
            if (!v) {
                throw ParseError("config key " + key + ": invalid integer `" + value + "`");
            }
            return *v;
        };
        if (key == "circuit") cfg.circuit = value;
        else if (key == "bv_secret") cfg.bv_secret = value;
        else if (key == "variants") cfg.variants = parse_variant_list(value);
        else if (key == "eps_min") cfg.eps_min = number();
        else if (key == "eps_max") cfg.eps_max = number();
        else if (key == "points") cfg.points = integer();
        else if (key == "fit_window") cfg.fit_window = parse_fit_window(value);
        else if (key == "threads") cfg.threads = integer();
        else if (key == "out") cfg.out = value;
        else throw ParseError("unknown config key `" + key + "`");
    }
}

inline SweepConfig load_sweep_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open config file " + path);
    }
    SweepConfig cfg;
    apply_key_values(cfg, parse_key_values(in));
    return cfg;
}

}  // namespace qorient
