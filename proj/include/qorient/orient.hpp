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

// Orientation passes: choose, per CNOT, the pulse variant whose leading
// residual error is harmless.
//
// Two rules are applied.  A residual that reaches the measurement as an
// operator diagonal in the readout basis does not change the outcome
// (measurement-cancel).  Two CNOTs sharing control and target, with nothing
// touching the control in between, cancel each other's control-qubit residual
// when the second is the adjoint sequence of the first (pair-cancel).

#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "qorient/circuit.hpp"
#include "qorient/gates.hpp"
#include "qorient/qmat.hpp"

namespace qorient {

/// A single-qubit Pauli error attached to a circuit op.
struct ErrorPlacement {
    std::size_t op_index = 0;
    int qubit = 0;
    Pauli axis = Pauli::X;
    int sign = +1;
    ResidualSide side = ResidualSide::After;
};

/// Terminal Pauli of a traced error, or the op where tracing stopped because
/// the conjugate was no longer a Pauli string.
struct TraceResult {
    std::optional<PauliString> terminal;
    std::optional<std::size_t> blocked_at;

    bool opaque() const { return !terminal.has_value(); }
};

namespace detail {

inline PauliString restrict_to(const PauliString& p, const std::vector<int>& qubits) {
    std::string letters;
    for (int q : qubits) {
        letters.push_back(to_char(p.at(q)));
    }
    return PauliString(letters);
}

inline bool overlaps(const PauliString& p, const GateOp& op) {
    for (int q : op.qubits) {
        if (p.at(q) != Pauli::I) {
            return true;
        }
    }
    return false;
}

}  // namespace detail

/// Conjugates the placed error through every later op of `c` (ideal gates).
inline TraceResult trace_orientation(const Circuit& c, const ErrorPlacement& placement) {
    if (placement.op_index >= c.size()) {
        throw InvalidArgument("error placement beyond the last op");
    }
    if (placement.qubit < 0 || placement.qubit >= c.width()) {
        throw InvalidQubit("error placement qubit outside circuit");
    }
    if (placement.axis == Pauli::I) {
        throw InvalidArgument("error placement needs a non-identity axis");
    }
    const int n = c.width();
    PauliString p = PauliString::single(n, placement.qubit, placement.axis);
    if (placement.sign < 0) {
        p = p.negated();
    }
    std::size_t start = placement.side == ResidualSide::After ? placement.op_index + 1 : placement.op_index;
    for (std::size_t i = start; i < c.size(); ++i) {
        const GateOp& op = c.op(i);
        if (!detail::overlaps(p, op)) {
            continue;
        }
        PauliString local = detail::restrict_to(p, op.qubits);
        auto image = conjugate_pauli(ideal_local(op), local);
        if (!image) {
            return {std::nullopt, i};
        }
        std::string letters = p.letters_str();
        for (std::size_t j = 0; j < op.qubits.size(); ++j) {
            letters[static_cast<std::size_t>(op.qubits[j])] = to_char(image->at(static_cast<int>(j)));
        }
        p = PauliString(letters, p.phase_power() + image->phase_power());
    }
    return {p, std::nullopt};
}

/// True when a terminal Pauli leaves the ideal output state invariant up to
/// phase, so a small rotation about it cannot lower the circuit fidelity.
/// Letters on non-output qubits are traced out and never matter.
inline bool harmless_at_output(const Circuit& c, const PauliString& terminal) {
    if (c.evaluation() != Evaluation::OutputState) {
        return false;
    }
    PauliString on_output = detail::restrict_to(terminal.unsigned_part(), c.output_register());
    const StateVector& psi = c.ideal_output();
    cplx expectation = psi.dot(pauli_matrix(on_output) * psi);
    return std::abs(std::abs(expectation) - 1.0) < kOracleTol;
}

/// Leading residual of `variant` applied at CNOT `op_index`.
inline ErrorPlacement placement_for(const Circuit& c, std::size_t op_index, PulseVariant variant) {
    const GateOp& op = c.op(op_index);
    if (op.kind != GateKind::CNOT) {
        throw InvalidArgument("op " + std::to_string(op_index) + " is not a CNOT");
    }
    auto orientation = residual_orientation(variant);
    if (!orientation) {
        throw InvalidArgument("variant " + std::string(to_string(variant)) + " has no single-qubit residual");
    }
    ErrorPlacement pl;
    pl.op_index = op_index;
    pl.side = orientation->side;
    pl.sign = orientation->side == ResidualSide::Before ? -1 : +1;
    // Axis strings are written on (control, target).
    const int local = orientation->axis.at(0) != Pauli::I ? 0 : 1;
    pl.qubit = op.qubits[static_cast<std::size_t>(local)];
    pl.axis = orientation->axis.at(local);
    return pl;
}

/// Whether the leading residual of `variant` at `op_index` is harmless at
/// measurement.
inline bool cancels_at_measurement(const Circuit& c, std::size_t op_index, PulseVariant variant) {
    TraceResult r = trace_orientation(c, placement_for(c, op_index, variant));
    return !r.opaque() && harmless_at_output(c, *r.terminal);
}

enum class Rationale { MeasurementCancel, PairCancel, Default };

inline std::string_view to_string(Rationale r) {
    switch (r) {
        case Rationale::MeasurementCancel: return "measurement-cancel";
        case Rationale::PairCancel: return "pair-cancel";
        case Rationale::Default: return "default";
    }
    return "?";
}

struct PlanEntry {
    PulseVariant variant = PulseVariant::SK1_XI;
    Rationale rationale = Rationale::Default;
    std::optional<std::size_t> partner;  // other CNOT of a conjugate pair
};

/// Variant assignment for every CNOT of a circuit, keyed by op index.
struct OrientationPlan {
    std::map<std::size_t, PlanEntry> assignments;

    std::size_t pair_count() const {
        std::size_t n = 0;
        for (const auto& [index, e] : assignments) {
            if (e.rationale == Rationale::PairCancel && e.partner && *e.partner > index) {
                ++n;
            }
        }
        return n;
    }
};

inline constexpr PulseVariant kDefaultVariant = PulseVariant::SK1_XI;

/// Candidates in tie-break order: control-qubit residuals first, then by axis.
inline constexpr std::array<PulseVariant, 4> kMeasurementCandidates{
    PulseVariant::SK1_XI, PulseVariant::SK1_mXI, PulseVariant::SK1_YI, PulseVariant::SK1_IY};

/// Picks, per CNOT, the first candidate whose traced residual is harmless at
/// measurement; otherwise the default variant.
inline OrientationPlan choose_measurement_orientation(const Circuit& c) {
    OrientationPlan plan;
    for (std::size_t index : c.cnot_indices()) {
        PlanEntry entry{kDefaultVariant, Rationale::Default, std::nullopt};
        for (PulseVariant v : kMeasurementCandidates) {
            if (cancels_at_measurement(c, index, v)) {
                entry = {v, Rationale::MeasurementCancel, std::nullopt};
                break;
            }
        }
        plan.assignments[index] = entry;
    }
    return plan;
}

/// Greedy left-to-right matching of CNOTs with equal (control, target) and no
/// intervening op on the control.  The first of a pair gets SK1_XI, the
/// second its adjoint SK1_mXI.
inline OrientationPlan pair_cancel(const Circuit& c) {
    OrientationPlan plan;
    std::map<std::pair<int, int>, std::size_t> open;
    auto close_on = [&](const GateOp& op) {
        for (auto it = open.begin(); it != open.end();) {
            if (op.touches(it->first.first)) {
                it = open.erase(it);
            } else {
                ++it;
            }
        }
    };
    for (std::size_t i = 0; i < c.size(); ++i) {
        const GateOp& op = c.op(i);
        if (op.kind == GateKind::CNOT) {
            std::pair<int, int> key{op.qubits[0], op.qubits[1]};
            auto it = open.find(key);
            if (it != open.end()) {
                std::size_t first = it->second;
                open.erase(it);
                plan.assignments[first] = {PulseVariant::SK1_XI, Rationale::PairCancel, i};
                plan.assignments[i] = {PulseVariant::SK1_mXI, Rationale::PairCancel, first};
                close_on(op);
                continue;
            }
            close_on(op);
            open[key] = i;
            plan.assignments[i] = {kDefaultVariant, Rationale::Default, std::nullopt};
        } else {
            close_on(op);
        }
    }
    return plan;
}

/// pair_cancel, then measurement orientation for the CNOTs left unpaired.
inline OrientationPlan compile_plan(const Circuit& c) {
    OrientationPlan plan = pair_cancel(c);
    OrientationPlan by_measurement = choose_measurement_orientation(c);
    for (auto& [index, entry] : plan.assignments) {
        if (entry.rationale == Rationale::Default) {
            entry = by_measurement.assignments.at(index);
        }
    }
    return plan;
}

inline Circuit apply_plan(const Circuit& c, const OrientationPlan& plan) {
    Circuit out = c;
    for (std::size_t index : c.cnot_indices()) {
        auto it = plan.assignments.find(index);
        if (it == plan.assignments.end()) {
            throw InvalidArgument("plan has no assignment for CNOT at op " + std::to_string(index));
        }
        out.set_variant(index, it->second.variant);
    }
    return out;
}

}  // namespace qorient
