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

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qorient/gates.hpp"
#include "qorient/qmat.hpp"

namespace qorient {

enum class GateKind { H, X, Y, Z, S, Sdg, T, Tdg, Rx, Ry, Rz, Gamma, CNOT, XX, YY };

inline constexpr std::array<GateKind, 15> kAllGateKinds{
    GateKind::H,  GateKind::X,  GateKind::Y,     GateKind::Z,    GateKind::S,  GateKind::Sdg, GateKind::T, GateKind::Tdg,
    GateKind::Rx, GateKind::Ry, GateKind::Rz,    GateKind::Gamma, GateKind::CNOT, GateKind::XX, GateKind::YY};

inline std::string_view gate_name(GateKind k) {
    switch (k) {
        case GateKind::H: return "H";
        case GateKind::X: return "X";
        case GateKind::Y: return "Y";
        case GateKind::Z: return "Z";
        case GateKind::S: return "S";
        case GateKind::Sdg: return "SDG";
        case GateKind::T: return "T";
        case GateKind::Tdg: return "TDG";
        case GateKind::Rx: return "RX";
        case GateKind::Ry: return "RY";
        case GateKind::Rz: return "RZ";
        case GateKind::Gamma: return "GAMMA";
        case GateKind::CNOT: return "CNOT";
        case GateKind::XX: return "XX";
        case GateKind::YY: return "YY";
    }
    return "?";
}

inline int arity(GateKind k) {
    return (k == GateKind::CNOT || k == GateKind::XX || k == GateKind::YY) ? 2 : 1;
}

inline bool takes_angle(GateKind k) {
    return k == GateKind::Rx || k == GateKind::Ry || k == GateKind::Rz || k == GateKind::XX || k == GateKind::YY;
}

/// Kinds whose implementation uses the imperfect two-qubit interaction.
inline bool is_noisy(GateKind k) {
    return k == GateKind::CNOT || k == GateKind::XX || k == GateKind::YY;
}

/// One circuit element.
struct GateOp {
    GateKind kind = GateKind::H;
    std::vector<int> qubits;
    double angle = 0.0;
    PulseVariant variant = PulseVariant::Naive;  // CNOT only
    bool sk1 = false;                            // XX / YY only
    int pair_group = -1;                         // conjugate-pair annotation, -1 if none

    static GateOp single(GateKind k, int q, double angle = 0.0) {
        GateOp op;
        op.kind = k;
        op.qubits = {q};
        op.angle = angle;
        return op;
    }

    static GateOp cnot(int control, int target, PulseVariant v = PulseVariant::Naive, int pair_group = -1) {
        GateOp op;
        op.kind = GateKind::CNOT;
        op.qubits = {control, target};
        op.variant = v;
        op.pair_group = pair_group;
        return op;
    }

    /// Direct XX(theta) or YY(theta) interaction pulse.
    static GateOp pulse(GateKind k, int a, int b, double theta, bool sk1_corrected = false) {
        GateOp op;
        op.kind = k;
        op.qubits = {a, b};
        op.angle = theta;
        op.sk1 = sk1_corrected;
        return op;
    }

    bool touches(int q) const { return std::find(qubits.begin(), qubits.end(), q) != qubits.end(); }
};

// ---------------------------------------------------------------------------
// Gate matrices

/// Basis change used by the controlled-YY block: Hermitian, self-inverse, and
/// maps Z to Y under conjugation.
inline const Unitary& gamma_gate() {
    static const Unitary g = [] {
        Matrix m = (single_pauli_matrix(Pauli::Y) + single_pauli_matrix(Pauli::Z)) / std::sqrt(2.0);
        return Unitary::from_matrix(m);
    }();
    return g;
}

inline const Unitary& hadamard() {
    static const Unitary h = [] {
        Matrix m = (single_pauli_matrix(Pauli::X) + single_pauli_matrix(Pauli::Z)) / std::sqrt(2.0);
        return Unitary::from_matrix(m);
    }();
    return h;
}

inline Unitary phase_gate(double angle) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 1;
    m(1, 1) = std::polar(1.0, angle);
    return Unitary::trusted(std::move(m));
}

/// Doubly controlled X on qubit 2.
inline const Unitary& toffoli_matrix() {
    static const Unitary t = [] {
        Matrix m = Matrix::Identity(8, 8);
        m(6, 6) = 0;
        m(7, 7) = 0;
        m(6, 7) = 1;
        m(7, 6) = 1;
        return Unitary::from_matrix(m);
    }();
    return t;
}

/// |0><0| (x) I + |1><1| (x) u, control on the leftmost qubit.
inline Unitary controlled(const Unitary& u) {
    auto d = static_cast<Eigen::Index>(u.dim());
    Matrix m = Matrix::Zero(2 * d, 2 * d);
    m.topLeftCorner(d, d) = Matrix::Identity(d, d);
    m.bottomRightCorner(d, d) = u.matrix();
    return Unitary::trusted(std::move(m));
}

namespace detail {

inline const PauliString& pulse_generator(GateKind k) {
    static const PauliString xx("XX");
    static const PauliString yy("YY");
    return k == GateKind::XX ? xx : yy;
}

// Second SK1 axis for direct XX / YY pulses.
inline const PauliString& pulse_partner(GateKind k) {
    static const PauliString zx("ZX");
    static const PauliString zy("ZY");
    return k == GateKind::XX ? zx : zy;
}

inline Unitary pulse_unitary(GateKind k, double theta, bool sk1_corrected, ErrorModel err) {
    if (!sk1_corrected || theta == 0.0) {
        return noisy_rot(pulse_generator(k), theta, err);
    }
    PauliString a1 = pulse_generator(k);
    if (theta < 0) {
        // exp(-i theta/2 A) = exp(-i |theta|/2 (-A))
        a1 = a1.negated();
        theta = -theta;
    }
    return sk1(a1, pulse_partner(k), theta, err);
}

}  // namespace detail

/// Local unitary of `op` as implemented under `err`.
inline Unitary applied_local(const GateOp& op, ErrorModel err) {
    switch (op.kind) {
        case GateKind::H: return hadamard();
        case GateKind::X: return pauli_matrix(PauliString("X"));
        case GateKind::Y: return pauli_matrix(PauliString("Y"));
        case GateKind::Z: return pauli_matrix(PauliString("Z"));
        case GateKind::S: return phase_gate(kPi / 2);
        case GateKind::Sdg: return phase_gate(-kPi / 2);
        case GateKind::T: return phase_gate(kPi / 4);
        case GateKind::Tdg: return phase_gate(-kPi / 4);
        case GateKind::Rx: return rot(PauliString("X"), op.angle);
        case GateKind::Ry: return rot(PauliString("Y"), op.angle);
        case GateKind::Rz: return rot(PauliString("Z"), op.angle);
        case GateKind::Gamma: return gamma_gate();
        case GateKind::CNOT: return cnot_local(op.variant, err);
        case GateKind::XX:
        case GateKind::YY: return detail::pulse_unitary(op.kind, op.angle, op.sk1, err);
    }
    throw InvalidArgument("unknown gate kind");
}

/// Local unitary of the gate `op` is meant to implement.
inline Unitary ideal_local(const GateOp& op) {
    if (op.kind == GateKind::CNOT) {
        return cnot_matrix();
    }
    if (op.kind == GateKind::XX || op.kind == GateKind::YY) {
        return rot(detail::pulse_generator(op.kind), op.angle);
    }
    return applied_local(op, ErrorModel::none());
}

// ---------------------------------------------------------------------------
// Circuit

/// How a circuit is scored: by the weight of an ideal pure state on an output
/// register, or as a gate against a reference unitary.
enum class Evaluation { OutputState, Gate };

class Circuit {
 public:
    explicit Circuit(int width) : width_(width) {
        Unitary::check_qubit_count(width);
        input_ = StateVector::Zero(static_cast<Eigen::Index>(dim()));
        input_(0) = 1;
        output_register_.resize(static_cast<std::size_t>(width));
        for (int q = 0; q < width; ++q) {
            output_register_[static_cast<std::size_t>(q)] = q;
        }
        ideal_output_ = input_;
    }

    int width() const { return width_; }
    std::size_t dim() const { return std::size_t{1} << width_; }
    const std::vector<GateOp>& ops() const { return ops_; }
    std::size_t size() const { return ops_.size(); }
    const GateOp& op(std::size_t i) const { return ops_.at(i); }

    Circuit& add(GateOp op) {
        if (static_cast<int>(op.qubits.size()) != arity(op.kind)) {
            throw InvalidQubit(std::string(gate_name(op.kind)) + " expects " + std::to_string(arity(op.kind)) +
                               " qubit(s)");
        }
        for (std::size_t i = 0; i < op.qubits.size(); ++i) {
            int q = op.qubits[i];
            if (q < 0 || q >= width_) {
                throw InvalidQubit("qubit " + std::to_string(q) + " outside circuit of width " +
                                   std::to_string(width_));
            }
            for (std::size_t j = 0; j < i; ++j) {
                if (op.qubits[j] == q) {
                    throw InvalidQubit("qubit " + std::to_string(q) + " repeated within one gate");
                }
            }
        }
        ops_.push_back(std::move(op));
        return *this;
    }

    Circuit& add(GateKind k, int q, double angle = 0.0) { return add(GateOp::single(k, q, angle)); }
    Circuit& cnot(int control, int target, int pair_group = -1) {
        return add(GateOp::cnot(control, target, PulseVariant::Naive, pair_group));
    }

    int new_pair_group() { return next_pair_group_++; }

    // -- input --------------------------------------------------------------

    void set_input_basis(std::size_t index) {
        if (index >= dim()) {
            throw InvalidArgument("input basis index out of range");
        }
        input_ = StateVector::Zero(static_cast<Eigen::Index>(dim()));
        input_(static_cast<Eigen::Index>(index)) = 1;
    }

    /// Bit string with qubit 0 first, e.g. "00101".
    void set_input_basis(std::string_view bits) {
        if (bits.size() != static_cast<std::size_t>(width_)) {
            throw InvalidArgument("input label length differs from circuit width");
        }
        set_input_basis(parse_bits(bits));
    }

    void set_input_state(StateVector state) {
        if (static_cast<std::size_t>(state.size()) != dim()) {
            throw DimensionMismatch("input state dimension differs from circuit");
        }
        if (std::abs(state.norm() - 1.0) > kStructuralTol) {
            throw InvalidArgument("input state is not normalized");
        }
        input_ = std::move(state);
    }

    const StateVector& input_state() const { return input_; }

    // -- output -------------------------------------------------------------

    void set_output(std::vector<int> reg, StateVector ideal) {
        if (reg.empty()) {
            throw InvalidArgument("output register is empty");
        }
        for (std::size_t i = 0; i < reg.size(); ++i) {
            if (reg[i] < 0 || reg[i] >= width_) {
                throw InvalidQubit("output qubit outside circuit");
            }
            for (std::size_t j = 0; j < i; ++j) {
                if (reg[j] == reg[i]) {
                    throw InvalidQubit("output qubit repeated");
                }
            }
        }
        if (static_cast<std::size_t>(ideal.size()) != (std::size_t{1} << reg.size())) {
            throw DimensionMismatch("ideal output dimension differs from register");
        }
        if (std::abs(ideal.norm() - 1.0) > kStructuralTol) {
            throw InvalidArgument("ideal output is not normalized");
        }
        output_register_ = std::move(reg);
        ideal_output_ = std::move(ideal);
        evaluation_ = Evaluation::OutputState;
    }

    void set_output_basis(std::vector<int> reg, std::string_view bits) {
        if (bits.size() != reg.size()) {
            throw InvalidArgument("ideal output label length differs from register");
        }
        StateVector ideal = StateVector::Zero(static_cast<Eigen::Index>(std::size_t{1} << reg.size()));
        ideal(static_cast<Eigen::Index>(parse_bits(bits))) = 1;
        set_output(std::move(reg), std::move(ideal));
    }

    const std::vector<int>& output_register() const { return output_register_; }
    const StateVector& ideal_output() const { return ideal_output_; }

    /// Scores the circuit as a gate against `reference`.
    void set_gate_reference(Unitary reference) {
        if (reference.num_qubits() != width_) {
            throw DimensionMismatch("reference unitary width differs from circuit");
        }
        reference_ = std::move(reference);
        evaluation_ = Evaluation::Gate;
    }

    /// Scores the circuit as a gate against its own ideal gate sequence.
    void set_gate_evaluation() {
        reference_.reset();
        evaluation_ = Evaluation::Gate;
    }

    Evaluation evaluation() const { return evaluation_; }
    const std::optional<Unitary>& gate_reference() const { return reference_; }

    // -- variants -----------------------------------------------------------

    std::vector<std::size_t> cnot_indices() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < ops_.size(); ++i) {
            if (ops_[i].kind == GateKind::CNOT) {
                out.push_back(i);
            }
        }
        return out;
    }

    void set_variant(std::size_t op_index, PulseVariant v) {
        GateOp& op = ops_.at(op_index);
        if (op.kind != GateKind::CNOT) {
            throw InvalidArgument("op " + std::to_string(op_index) + " is not a CNOT");
        }
        op.variant = v;
    }

    Circuit with_uniform_variant(PulseVariant v) const {
        Circuit c = *this;
        for (auto& op : c.ops_) {
            if (op.kind == GateKind::CNOT) {
                op.variant = v;
            }
        }
        return c;
    }

    std::string name;

    static std::size_t parse_bits(std::string_view bits) {
        std::size_t index = 0;
        for (char b : bits) {
            if (b != '0' && b != '1') {
                throw ParseError("bit string may only contain 0 and 1");
            }
            index = (index << 1) | static_cast<std::size_t>(b == '1');
        }
        return index;
    }

 private:
    int width_;
    std::vector<GateOp> ops_;
    StateVector input_;
    std::vector<int> output_register_;
    StateVector ideal_output_;
    Evaluation evaluation_ = Evaluation::OutputState;
    std::optional<Unitary> reference_;
    int next_pair_group_ = 0;
};

// ---------------------------------------------------------------------------
// Simulation

namespace detail {

inline void apply_ops(const Circuit& c, Matrix& columns, ErrorModel err, bool ideal) {
    for (const GateOp& op : c.ops()) {
        Unitary u = ideal ? ideal_local(op) : applied_local(op, err);
        apply_local(columns, u.matrix(), op.qubits, c.width());
    }
}

}  // namespace detail

/// Final state of the circuit applied to its input state.
inline StateVector simulate(const Circuit& c, ErrorModel err) {
    Matrix state = c.input_state();
    detail::apply_ops(c, state, err, false);
    return state.col(0);
}

/// Full unitary of the implemented circuit.
inline Unitary circuit_unitary(const Circuit& c, ErrorModel err) {
    auto d = static_cast<Eigen::Index>(c.dim());
    Matrix m = Matrix::Identity(d, d);
    detail::apply_ops(c, m, err, false);
    return Unitary::trusted(std::move(m));
}

/// Unitary of the circuit with every op replaced by its ideal gate.
inline Unitary ideal_circuit_unitary(const Circuit& c) {
    auto d = static_cast<Eigen::Index>(c.dim());
    Matrix m = Matrix::Identity(d, d);
    detail::apply_ops(c, m, ErrorModel::none(), true);
    return Unitary::trusted(std::move(m));
}

/// Rearranges a state into a (output basis) x (remaining basis) matrix.
inline Matrix split_output(const StateVector& state, int width, const std::vector<int>& output_register) {
    const auto k = output_register.size();
    const auto rest = static_cast<std::size_t>(width) - k;
    std::vector<int> others;
    for (int q = 0; q < width; ++q) {
        if (std::find(output_register.begin(), output_register.end(), q) == output_register.end()) {
            others.push_back(q);
        }
    }
    Matrix out(static_cast<Eigen::Index>(std::size_t{1} << k), static_cast<Eigen::Index>(std::size_t{1} << rest));
    for (std::size_t i = 0; i < static_cast<std::size_t>(state.size()); ++i) {
        std::size_t o = 0;
        for (int q : output_register) {
            o = (o << 1) | ((i >> (width - 1 - q)) & 1U);
        }
        std::size_t r = 0;
        for (int q : others) {
            r = (r << 1) | ((i >> (width - 1 - q)) & 1U);
        }
        out(static_cast<Eigen::Index>(o), static_cast<Eigen::Index>(r)) = state(static_cast<Eigen::Index>(i));
    }
    return out;
}

/// Marginal probabilities of the output register in the computational basis.
inline std::vector<double> output_distribution(const Circuit& c, ErrorModel err) {
    Matrix split = split_output(simulate(c, err), c.width(), c.output_register());
    std::vector<double> probs(static_cast<std::size_t>(split.rows()));
    for (Eigen::Index o = 0; o < split.rows(); ++o) {
        probs[static_cast<std::size_t>(o)] = split.row(o).squaredNorm();
    }
    return probs;
}

inline Unitary gate_reference_of(const Circuit& c) {
    return c.gate_reference() ? *c.gate_reference() : ideal_circuit_unitary(c);
}

/// Tr[rho (|psi><psi|_O (x) I)] for output-state circuits; the gate fidelity
/// against the reference for gate circuits.
inline double circuit_fidelity(const Circuit& c, ErrorModel err) {
    if (c.evaluation() == Evaluation::Gate) {
        return gate_fidelity(gate_reference_of(c), circuit_unitary(c, err));
    }
    Matrix split = split_output(simulate(c, err), c.width(), c.output_register());
    // Row vector of overlaps <psi | phi_r> over the remaining basis r.
    Eigen::RowVectorXcd overlaps = c.ideal_output().adjoint() * split;
    return std::clamp(overlaps.squaredNorm(), 0.0, 1.0);
}

/// 1 - circuit_fidelity without cancellation: the weight of the final state
/// orthogonal to the ideal output.
inline double circuit_infidelity(const Circuit& c, ErrorModel err) {
    if (c.evaluation() == Evaluation::Gate) {
        return gate_infidelity(gate_reference_of(c), circuit_unitary(c, err));
    }
    Matrix split = split_output(simulate(c, err), c.width(), c.output_register());
    const StateVector& psi = c.ideal_output();
    Eigen::RowVectorXcd overlaps = psi.adjoint() * split;
    Matrix orthogonal = split - psi * overlaps;
    return std::clamp(orthogonal.squaredNorm(), 0.0, 1.0);
}

// ---------------------------------------------------------------------------
// Benchmark circuits

/// Bernstein-Vazirani on four data qubits (0-3) and one ancilla (4).
///
/// A CNOT from data qubit k to the ancilla is present iff a[k] == '1'.
inline Circuit build_bv(std::string_view a) {
    if (a.size() != 4) {
        throw InvalidArgument("Bernstein-Vazirani secret must have 4 bits");
    }
    constexpr int kAncilla = 4;
    Circuit c(5);
    c.name = "bv" + std::string(a);
    for (int q = 0; q < 5; ++q) {
        c.add(GateKind::H, q);
    }
    c.add(GateKind::Z, kAncilla);
    for (int k = 0; k < 4; ++k) {
        char bit = a[static_cast<std::size_t>(k)];
        if (bit != '0' && bit != '1') {
            throw ParseError("Bernstein-Vazirani secret may only contain 0 and 1");
        }
        if (bit == '1') {
            c.cnot(k, kAncilla);
        }
    }
    for (int q = 0; q < 5; ++q) {
        c.add(GateKind::H, q);
    }
    c.set_output_basis({0, 1, 2, 3}, a);
    return c;
}

/// Toffoli from six CNOTs in three conjugate pairs, scored as a gate.
///
/// The T on qubit 0 is placed ahead of the final CNOT(0,1) pair; it is
/// diagonal on the control, so the product is unchanged.
inline Circuit build_toffoli() {
    Circuit c(3);
    c.name = "toffoli";
    const int p12 = c.new_pair_group();
    const int p02 = c.new_pair_group();
    const int p01 = c.new_pair_group();
    c.add(GateKind::H, 2);
    c.cnot(1, 2, p12);
    c.add(GateKind::Tdg, 2);
    c.cnot(0, 2, p02);
    c.add(GateKind::T, 2);
    c.cnot(1, 2, p12);
    c.add(GateKind::Tdg, 2);
    c.cnot(0, 2, p02);
    c.add(GateKind::T, 1);
    c.add(GateKind::T, 2);
    c.add(GateKind::H, 2);
    c.add(GateKind::T, 0);
    c.cnot(0, 1, p01);
    c.add(GateKind::Tdg, 1);
    c.cnot(0, 1, p01);
    c.set_gate_reference(toffoli_matrix());
    return c;
}

enum class PauliAxis { XX, YY };

/// Appends control-(axis)(theta) on (s1, s2) controlled by `control`:
/// a basis change (H for XX, gamma for YY), a CNOT(s1, s2) parity ladder
/// around Rz(theta/4) CNOT(control, s2) Rz(-theta/2) CNOT(control, s2) Rz(theta/4),
/// and the closing basis change.
inline void append_controlled_pauli_rot(Circuit& c, PauliAxis axis, int control, int s1, int s2, double theta) {
    const GateKind basis = axis == PauliAxis::XX ? GateKind::H : GateKind::Gamma;
    const int outer = c.new_pair_group();
    const int inner = c.new_pair_group();
    c.add(basis, s1);
    c.add(basis, s2);
    c.cnot(s1, s2, outer);
    c.add(GateKind::Rz, s2, theta / 4);
    c.cnot(control, s2, inner);
    c.add(GateKind::Rz, s2, -theta / 2);
    c.cnot(control, s2, inner);
    c.add(GateKind::Rz, s2, theta / 4);
    c.cnot(s1, s2, outer);
    c.add(basis, s1);
    c.add(basis, s2);
}

/// Three-qubit controlled rotation (control 0, system 1 and 2), scored as a
/// gate against the directly constructed controlled rotation.
inline Circuit build_controlled_pauli_rot(PauliAxis axis, double theta) {
    Circuit c(3);
    c.name = axis == PauliAxis::XX ? "cxx" : "cyy";
    append_controlled_pauli_rot(c, axis, 0, 1, 2, theta);
    c.set_gate_reference(controlled(rot(PauliString(axis == PauliAxis::XX ? "XX" : "YY"), theta)));
    return c;
}

/// Readout of the two-ancilla phase estimation circuit at zero error,
/// qubit 0 first.  Fixed by simulation; see the circuit tests.
inline constexpr std::string_view kPeaReadout = "10";

/// Two-bit phase estimation of XX + YY on system qubits 2 and 3, prepared
/// exactly in (|10> - |01>)/sqrt(2).  Ancilla 0 controls one XX(pi) YY(pi)
/// block, ancilla 1 controls two; the inverse transform uses a CNOT-based
/// controlled phase between the ancillas.
inline Circuit build_pea() {
    Circuit c(4);
    c.name = "pea";
    StateVector input = StateVector::Zero(16);
    input(0b0010) = 1 / std::sqrt(2.0);
    input(0b0001) = -1 / std::sqrt(2.0);
    c.set_input_state(input);

    c.add(GateKind::H, 0);
    c.add(GateKind::H, 1);
    for (auto [control, blocks] : {std::pair{0, 1}, std::pair{1, 2}}) {
        for (int b = 0; b < blocks; ++b) {
            append_controlled_pauli_rot(c, PauliAxis::XX, control, 2, 3, kPi);
            append_controlled_pauli_rot(c, PauliAxis::YY, control, 2, 3, kPi);
        }
    }
    c.add(GateKind::H, 1);
    const int qft = c.new_pair_group();
    c.add(GateKind::Rz, 0, -kPi / 8);
    c.cnot(1, 0, qft);
    c.add(GateKind::Rz, 0, kPi / 4);
    c.cnot(1, 0, qft);
    c.add(GateKind::Rz, 0, -kPi / 8);
    c.add(GateKind::H, 0);
    c.set_output_basis({0, 1}, kPeaReadout);
    return c;
}

}  // namespace qorient
