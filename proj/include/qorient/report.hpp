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

// Plan reports: an aligned text table and a JSON-lines mirror with the same
// fields.  Requires nlohmann/json on the include path.

#pragma once

#include <cstdio>
#include <ostream>
#include <string>

#include <json.hpp>

#include "qorient/orient.hpp"

namespace qorient {

inline nlohmann::ordered_json plan_entry_json(const Circuit& c, std::size_t index, const PlanEntry& e) {
    const GateOp& op = c.op(index);
    nlohmann::ordered_json j;
    j["op_index"] = index;
    j["control"] = op.qubits.at(0);
    j["target"] = op.qubits.at(1);
    j["variant"] = std::string(to_string(e.variant));
    j["rationale"] = std::string(to_string(e.rationale));
    j["partner"] = e.partner ? nlohmann::ordered_json(*e.partner) : nlohmann::ordered_json(nullptr);
    return j;
}

/// One JSON object per CNOT, in op order.
inline void write_plan_jsonl(std::ostream& out, const Circuit& c, const OrientationPlan& plan) {
    for (const auto& [index, e] : plan.assignments) {
        out << plan_entry_json(c, index, e).dump() << '\n';
    }
}

inline void write_plan_table(std::ostream& out, const Circuit& c, const OrientationPlan& plan) {
    char line[128];
    std::snprintf(line, sizeof line, "%6s  %7s  %6s  %-8s  %-18s  %s\n", "op", "control", "target", "variant",
                  "rationale", "partner");
    out << line;
    for (const auto& [index, e] : plan.assignments) {
        const GateOp& op = c.op(index);
        std::string partner = e.partner ? std::to_string(*e.partner) : "-";
        std::snprintf(line, sizeof line, "%6zu  %7d  %6d  %-8s  %-18s  %s\n", index, op.qubits.at(0),
                      op.qubits.at(1), std::string(to_string(e.variant)).c_str(),
                      std::string(to_string(e.rationale)).c_str(), partner.c_str());
        out << line;
    }
    out << plan.assignments.size() << " CNOT(s), " << plan.pair_count() << " conjugate pair(s)\n";
}

}  // namespace qorient
