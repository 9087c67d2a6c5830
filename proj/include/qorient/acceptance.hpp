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

// End-to-end acceptance checks shared by the acceptance test binary and the
// `verify` CLI subcommand.  Every threshold is fixed here.

#pragma once

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qorient/circuit.hpp"
#include "qorient/gates.hpp"
#include "qorient/orient.hpp"
#include "qorient/qmat.hpp"
#include "qorient/sweep.hpp"

namespace qorient::acceptance {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
};

namespace detail {

inline std::string fmt(double v, int digits = 4) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

inline bool within(double value, double target, double tol) { return std::abs(value - target) <= tol; }

inline constexpr int kGridPoints = 25;

inline SweepResult canonical_sweep(const std::string& circuit, std::vector<SweepVariant> variants) {
    SweepConfig cfg;
    cfg.circuit = circuit;
    cfg.variants = std::move(variants);
    cfg.eps_min = kCanonicalWindow.lo;
    cfg.eps_max = kCanonicalWindow.hi;
    cfg.points = kGridPoints;
    cfg.threads = 0;
    return run_sweep(cfg);
}

inline double slope(const SweepResult& r, const std::string& column) {
    return fit_slope(r, column, kCanonicalWindow).slope;
}

// |0> -> H -> error, scored against |+> on the single qubit.
inline Circuit hadamard_with_error(GateKind error_axis, double epsilon) {
    Circuit c(1);
    c.add(GateKind::H, 0);
    c.add(error_axis, 0, epsilon);
    StateVector plus(2);
    plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
    c.set_output({0}, plus);
    return c;
}

}  // namespace detail

inline CriterionResult hadamard_example() {
    CriterionResult r{1, "Hadamard orientation example", true, ""};
    double worst_commuting = 0;
    double worst_orthogonal = 0;
    double worst_gate = 0;
    for (double eps : {0.01, 0.1, 0.3}) {
        double f_commuting = circuit_fidelity(detail::hadamard_with_error(GateKind::Rx, eps), ErrorModel::none());
        double f_orthogonal = circuit_fidelity(detail::hadamard_with_error(GateKind::Rz, eps), ErrorModel::none());
        double expected = std::pow(std::cos(eps / 2), 2);
        Unitary h = hadamard();
        double f_gate_x = gate_fidelity(h, rot(PauliString("X"), eps) * h);
        double f_gate_z = gate_fidelity(h, rot(PauliString("Z"), eps) * h);
        worst_commuting = std::max(worst_commuting, std::abs(f_commuting - 1));
        worst_orthogonal = std::max(worst_orthogonal, std::abs(f_orthogonal - expected));
        worst_gate = std::max({worst_gate, std::abs(f_gate_x - expected), std::abs(f_gate_z - expected)});
    }
    r.passed = worst_commuting < 1e-12 && worst_orthogonal < 1e-12 && worst_gate < 1e-12;
    r.detail = "max |F_circ(X err) - 1| = " + detail::fmt(worst_commuting) +
               ", max |F_circ(Z err) - cos^2| = " + detail::fmt(worst_orthogonal) +
               ", max |F_gate - cos^2| = " + detail::fmt(worst_gate) + " (tol 1e-12)";
    return r;
}

/// Residual distance of SK1(theta) from `rot(A3, angle(eps))` for each of the
/// four A3 orientations of an XX pulse; returns the smallest fitted slope.
inline double sk1_residual_min_slope(const std::function<double(const Sk1Params&, double)>& angle,
                                     std::string* per_axis) {
    const double theta = kPi / 2;
    const PauliString a1("XX");
    const Sk1Params p = Sk1Params::for_angle(theta);
    auto grid = log_grid(kCanonicalWindow.lo, kCanonicalWindow.hi, detail::kGridPoints);
    double min_slope = 1e300;
    for (const char* axis : {"YI", "ZI", "IY", "IZ"}) {
        PauliString a3(axis);
        PauliString a2 = (a1 * a3).with_phase_power((a1 * a3).phase_power() + 1);  // i A1 A3
        std::vector<double> dist;
        for (double eps : grid) {
            ErrorModel err(eps);
            Unitary residual = sk1(a1, a2, theta, err) * rot(a1, theta).adjoint();
            dist.push_back(distance_up_to_phase(residual, rot(a3, angle(p, eps))));
        }
        double s = fit_slope(grid, dist, kCanonicalWindow).slope;
        min_slope = std::min(min_slope, s);
        if (per_axis) {
            *per_axis += std::string(axis) + "=" + detail::fmt(s, 6) + " ";
        }
    }
    return min_slope;
}

inline CriterionResult sk1_residual_theorem() {
    CriterionResult r{2, "SK1 residual rot(A3, beta eps^2 theta^2), slope >= 3", false, ""};
    std::string stated;
    double s_stated = sk1_residual_min_slope(
        [](const Sk1Params& p, double eps) { return p.beta * eps * eps * p.theta * p.theta; }, &stated);
    std::string measured;
    double s_measured =
        sk1_residual_min_slope([](const Sk1Params& p, double eps) { return p.residual_angle(eps); }, &measured);
    r.passed = s_stated >= 3.0;
    r.detail = "slopes vs rot(A3, beta eps^2 theta^2): " + stated + "| vs rot(A3, beta eps^2): " + measured +
               "(min " + detail::fmt(s_measured, 6) + ")";
    return r;
}

inline CriterionResult fidelity_equality() {
    CriterionResult r{3, "Equal gate fidelity across SK1 orientations", false, ""};
    double worst = 0;
    for (double eps : log_grid(1e-3, 1e-1, detail::kGridPoints)) {
        ErrorModel err(eps);
        std::vector<double> f;
        for (PulseVariant v : kSk1Variants) {
            f.push_back(gate_fidelity(cnot_matrix(), cnot_local(v, err)));
        }
        for (std::size_t i = 0; i < f.size(); ++i) {
            for (std::size_t j = i + 1; j < f.size(); ++j) {
                worst = std::max(worst, std::abs(f[i] - f[j]));
            }
        }
    }
    r.passed = worst < 1e-12;
    r.detail = "max pairwise |dF_gate| over eps in [1e-3, 1e-1] = " + detail::fmt(worst) + " (tol 1e-12)";
    return r;
}

inline CriterionResult gate_scaling() {
    CriterionResult r{4, "CNOT gate-infidelity exponents", false, ""};
    auto grid = log_grid(kCanonicalWindow.lo, kCanonicalWindow.hi, detail::kGridPoints);
    bool ok = true;
    for (PulseVariant v : kAllVariants) {
        std::vector<double> y;
        for (double eps : grid) {
            y.push_back(gate_infidelity(cnot_matrix(), cnot_local(v, ErrorModel(eps))));
        }
        double s = fit_slope(grid, y, kCanonicalWindow).slope;
        double target = v == PulseVariant::Naive ? 2.0 : 4.0;
        ok = ok && detail::within(s, target, 0.1);
        r.detail += std::string(to_string(v)) + "=" + detail::fmt(s) + " ";
    }
    r.detail += "(Naive 2.0+-0.1, SK1 4.0+-0.1)";
    r.passed = ok;
    return r;
}

inline CriterionResult bv_orientation() {
    CriterionResult r{5, "Bernstein-Vazirani orientation effect", false, ""};
    auto sweep = detail::canonical_sweep("bv", {SweepVariant::SK1_XI, SweepVariant::SK1_YI});
    double s_xi = detail::slope(sweep, "circuit_infidelity_SK1_XI");
    double s_yi = detail::slope(sweep, "circuit_infidelity_SK1_YI");
    Circuit bv = build_bv("1111");
    ErrorModel err(3e-3);
    double inf_xi = circuit_infidelity(bv.with_uniform_variant(PulseVariant::SK1_XI), err);
    double inf_yi = circuit_infidelity(bv.with_uniform_variant(PulseVariant::SK1_YI), err);
    double ratio = inf_yi / inf_xi;
    r.passed = detail::within(s_xi, 6.0, 0.3) && detail::within(s_yi, 4.0, 0.3) && ratio >= 100;
    r.detail = "slope SK1_XI=" + detail::fmt(s_xi) + " (6+-0.3), SK1_YI=" + detail::fmt(s_yi) +
               " (4+-0.3), infidelity ratio YI/XI at eps=3e-3 = " + detail::fmt(ratio) + " (>=100)";
    return r;
}

inline CriterionResult toffoli_cancellation() {
    CriterionResult r{6, "Toffoli conjugate-pair cancellation", false, ""};
    auto sweep = detail::canonical_sweep("toffoli", {SweepVariant::Naive, SweepVariant::SK1_pair});
    auto pair_toffoli = sweep.series("circuit_infidelity_SK1_pair");
    auto cnot_xi = sweep.series("gate_infidelity_SK1_pair");
    auto naive_toffoli = sweep.series("circuit_infidelity_Naive");
    auto naive_cnot = sweep.series("gate_infidelity_Naive");
    bool below = true;
    bool above = true;
    for (std::size_t i = 0; i < sweep.records.size(); ++i) {
        below = below && pair_toffoli[i] < cnot_xi[i];
        above = above && naive_toffoli[i] > naive_cnot[i];
    }
    double s = detail::slope(sweep, "circuit_infidelity_SK1_pair");
    r.passed = below && above && detail::within(s, 6.0, 0.5);
    r.detail = std::string("pair Toffoli < CNOT_XI everywhere: ") + (below ? "yes" : "no") +
               ", naive Toffoli > naive CNOT everywhere: " + (above ? "yes" : "no") +
               ", pair slope=" + detail::fmt(s) + " (6+-0.5)";
    return r;
}

inline CriterionResult pea_cancellation() {
    CriterionResult r{7, "Phase estimation determinism and cancellation", false, ""};
    Circuit pea = build_pea();
    auto probs = output_distribution(pea, ErrorModel::none());
    std::size_t best = 0;
    for (std::size_t k = 1; k < probs.size(); ++k) {
        if (probs[k] > probs[best]) {
            best = k;
        }
    }
    bool deterministic = probs[best] > 1 - 1e-10;
    bool golden = best == Circuit::parse_bits(kPeaReadout);
    auto sweep = detail::canonical_sweep("pea", {SweepVariant::SK1_XI, SweepVariant::SK1_pair});
    auto pair = sweep.series("circuit_infidelity_SK1_pair");
    auto xi = sweep.series("circuit_infidelity_SK1_XI");
    bool beats = true;
    for (std::size_t i = 0; i < pair.size(); ++i) {
        beats = beats && pair[i] < xi[i];
    }
    double s = detail::slope(sweep, "circuit_infidelity_SK1_pair");
    r.passed = deterministic && golden && beats && detail::within(s, 6.0, 0.5);
    r.detail = "P(readout " + std::string(kPeaReadout) + ") at eps=0: 1-" + detail::fmt(1 - probs[best]) +
               ", pair beats SK1_XI everywhere: " + (beats ? "yes" : "no") + ", pair slope=" + detail::fmt(s) +
               " (6+-0.5)";
    return r;
}

inline CriterionResult pass_soundness() {
    CriterionResult r{8, "Orientation pass oracles", false, ""};
    Circuit bv = build_bv("1111");
    std::size_t checked = 0;
    std::size_t mismatched = 0;
    for (std::size_t i = 0; i < bv.size(); ++i) {
        // Ideal unitary of everything after op i.
        Circuit suffix(bv.width());
        for (std::size_t j = i + 1; j < bv.size(); ++j) {
            suffix.add(bv.op(j));
        }
        Unitary s = ideal_circuit_unitary(suffix);
        for (int q = 0; q < bv.width(); ++q) {
            for (Pauli axis : {Pauli::X, Pauli::Y, Pauli::Z}) {
                PauliString p = PauliString::single(bv.width(), q, axis);
                auto brute = as_pauli(s.matrix() * pauli_matrix(p).matrix() * s.matrix().adjoint());
                TraceResult traced = trace_orientation(bv, {i, q, axis, +1, ResidualSide::After});
                ++checked;
                if (brute.has_value() != traced.terminal.has_value() || (brute && !(*brute == *traced.terminal))) {
                    ++mismatched;
                }
            }
        }
    }
    std::size_t toffoli_pairs = pair_cancel(build_toffoli()).pair_count();
    Circuit pea = build_pea();
    OrientationPlan pea_plan = pair_cancel(pea);
    std::size_t unpaired = 0;
    for (const auto& [index, e] : pea_plan.assignments) {
        if (e.rationale != Rationale::PairCancel) {
            ++unpaired;
        }
    }
    r.passed = mismatched == 0 && toffoli_pairs == 3 && unpaired == 0 &&
               pea_plan.assignments.size() == pea.cnot_indices().size();
    r.detail = "BV trace mismatches " + std::to_string(mismatched) + "/" + std::to_string(checked) +
               ", Toffoli pairs " + std::to_string(toffoli_pairs) + " (3), PEA unpaired CNOTs " +
               std::to_string(unpaired) + "/" + std::to_string(pea.cnot_indices().size());
    return r;
}

inline CriterionResult sk1_gate_exponent_record() {
    CriterionResult r{9, "SK1 gate-infidelity exponent (recorded)", false, ""};
    auto grid = log_grid(kCanonicalWindow.lo, kCanonicalWindow.hi, detail::kGridPoints);
    std::vector<double> y;
    for (double eps : grid) {
        y.push_back(gate_infidelity(cnot_matrix(), cnot_local(PulseVariant::SK1_XI, ErrorModel(eps))));
    }
    double s_gate = fit_slope(grid, y, kCanonicalWindow).slope;
    auto sweep = detail::canonical_sweep("pea", {SweepVariant::SK1_XI, SweepVariant::SK1_IY});
    double s_xi = detail::slope(sweep, "circuit_infidelity_SK1_XI");
    double s_iy = detail::slope(sweep, "circuit_infidelity_SK1_IY");
    r.passed = detail::within(s_gate, 4.0, 0.1);
    r.detail = "fitted SK1 CNOT gate exponent=" + detail::fmt(s_gate) + " (asserted 4+-0.1, not 2); PEA circuit " +
               "exponents SK1_XI=" + detail::fmt(s_xi) + ", SK1_IY=" + detail::fmt(s_iy);
    return r;
}

inline std::vector<CriterionResult> run_all() {
    std::vector<std::function<CriterionResult()>> criteria{
        hadamard_example, sk1_residual_theorem, fidelity_equality,    gate_scaling,           bv_orientation,
        toffoli_cancellation, pea_cancellation, pass_soundness, sk1_gate_exponent_record};
    std::vector<CriterionResult> out;
    int id = 1;
    for (auto& run : criteria) {
        try {
            out.push_back(run());
        } catch (const std::exception& e) {
            out.push_back({id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what()});
        }
        ++id;
    }
    return out;
}

/// One "PASS|FAIL [n] title: detail" line per criterion.
inline std::string format_line(const CriterionResult& r) {
    std::ostringstream out;
    out << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << ": " << r.detail;
    return out.str();
}

}  // namespace qorient::acceptance
