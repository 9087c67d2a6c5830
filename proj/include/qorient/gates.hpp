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

// Ideal, over-rotated and SK1-compensated gates built from an XX interaction.
//
// Only the XX pulses carry the systematic error; every single-qubit rotation
// used to dress them is exact.

#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "qorient/qmat.hpp"

namespace qorient {

/// Systematic fractional over-rotation shared by every two-qubit pulse.
class ErrorModel {
 public:
    static constexpr double kMaxMagnitude = 0.5;

    constexpr ErrorModel() = default;

    explicit ErrorModel(double epsilon) : epsilon_(epsilon) {
        if (!(std::abs(epsilon) < kMaxMagnitude)) {
            throw InvalidArgument("error strength must satisfy |epsilon| < 0.5");
        }
    }

    static constexpr ErrorModel none() { return ErrorModel(); }

    constexpr double epsilon() const { return epsilon_; }

    /// Angle actually applied when `theta` is requested.
    constexpr double applied_angle(double theta) const { return theta * (1 + epsilon_); }

 private:
    double epsilon_ = 0.0;
};

/// CNOT pulse sequences.  SK1 tags name the axis of the leading residual
/// rotation left behind after the gate: X on the control, Y on the control,
/// Y on the target.  SK1_mXI is the exact adjoint of SK1_XI, whose residual
/// sits before the gate with opposite sign.
enum class PulseVariant { Naive, SK1_XI, SK1_YI, SK1_IY, SK1_mXI };

inline constexpr std::array<PulseVariant, 5> kAllVariants{
    PulseVariant::Naive, PulseVariant::SK1_XI, PulseVariant::SK1_YI, PulseVariant::SK1_IY, PulseVariant::SK1_mXI};

inline constexpr std::array<PulseVariant, 4> kSk1Variants{
    PulseVariant::SK1_XI, PulseVariant::SK1_YI, PulseVariant::SK1_IY, PulseVariant::SK1_mXI};

inline std::string_view to_string(PulseVariant v) {
    switch (v) {
        case PulseVariant::Naive: return "Naive";
        case PulseVariant::SK1_XI: return "SK1_XI";
        case PulseVariant::SK1_YI: return "SK1_YI";
        case PulseVariant::SK1_IY: return "SK1_IY";
        case PulseVariant::SK1_mXI: return "SK1_mXI";
    }
    return "?";
}

/// Case-insensitive; accepts the `to_string` names with or without the
/// "SK1_" prefix.
inline std::optional<PulseVariant> parse_variant(std::string_view text) {
    std::string t;
    for (char c : text) {
        t.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
    if (t.rfind("SK1_", 0) == 0) {
        t.erase(0, 4);
    }
    if (t == "NAIVE") return PulseVariant::Naive;
    if (t == "XI") return PulseVariant::SK1_XI;
    if (t == "YI") return PulseVariant::SK1_YI;
    if (t == "IY") return PulseVariant::SK1_IY;
    if (t == "MXI" || t == "-XI") return PulseVariant::SK1_mXI;
    return std::nullopt;
}

/// Correction-pulse phase and residual scale for an SK1 sequence on `theta`.
struct Sk1Params {
    double theta;
    double phi;
    double beta;

    static Sk1Params for_angle(double theta) {
        if (!(theta > 0 && theta < 4 * kPi)) {
            throw InvalidAngle("SK1 target angle must lie in (0, 4 pi)");
        }
        double phi = std::acos(-theta / (4 * kPi));
        return {theta, phi, 4 * kPi * kPi * std::sin(phi) * std::cos(phi)};
    }

    /// Rotation angle of the leading residual about A3: beta * epsilon^2.
    double residual_angle(double epsilon) const { return beta * epsilon * epsilon; }
};

inline Unitary noisy_rot(const PauliString& generator, double theta, ErrorModel err) {
    return rot(generator, err.applied_angle(theta));
}

/// The third su(2) direction A3 fixed by [A1, A2] = 2i A3.
inline PauliString sk1_residual_axis(const PauliString& a1, const PauliString& a2) {
    if (a1.commutes_with(a2)) {
        throw InvalidAxis("SK1 axes " + a1.str() + " and " + a2.str() + " commute");
    }
    // A1 A2 = i A3 for anticommuting involutions.
    return (a1 * a2).with_phase_power((a1 * a2).phase_power() + 3);
}

/// V_{-Phi}(2 pi) V_{Phi}(2 pi) V_{A1}(theta); all three pulses over-rotate.
inline Unitary sk1(const PauliString& a1, const PauliString& a2, double theta, ErrorModel err) {
    if (a1.commutes_with(a2)) {
        throw InvalidAxis("SK1 axes " + a1.str() + " and " + a2.str() + " commute");
    }
    Sk1Params p = Sk1Params::for_angle(theta);
    double full = err.applied_angle(2 * kPi);
    return rot_blend(a1, a2, -p.phi, full) * rot_blend(a1, a2, p.phi, full) * noisy_rot(a1, theta, err);
}

// ---------------------------------------------------------------------------
// CNOT from a single XX(pi/2) interaction

namespace detail {

inline const PauliString& xx() {
    static const PauliString p("XX");
    return p;
}

// W2 = U_ZI(-pi/2) U_YI(-pi/2) U_IX(-pi/2), W1 = U_YI(pi/2).
inline const Unitary& cnot_outer_frame() {
    static const Unitary w2 =
        rot(PauliString("ZI"), -kPi / 2) * rot(PauliString("YI"), -kPi / 2) * rot(PauliString("IX"), -kPi / 2);
    return w2;
}

inline const Unitary& cnot_inner_frame() {
    static const Unitary w1 = rot(PauliString("YI"), kPi / 2);
    return w1;
}

}  // namespace detail

/// Textbook CNOT with control on the left qubit.
inline const Unitary& cnot_matrix() {
    static const Unitary cnot = [] {
        Matrix m = Matrix::Zero(4, 4);
        m(0, 0) = 1;
        m(1, 1) = 1;
        m(2, 3) = 1;
        m(3, 2) = 1;
        return Unitary::from_matrix(m);
    }();
    return cnot;
}

/// W2 V_XX(pi/2) W1.
inline Unitary naive_cnot(ErrorModel err) {
    return detail::cnot_outer_frame() * noisy_rot(detail::xx(), kPi / 2, err) * detail::cnot_inner_frame();
}

/// SK1-compensated CNOT whose correction pulses are XX(2 pi) conjugated by
/// exact rotations about `arm`:
///
///   W2 U_arm(s phi) V_XX(2pi) U_arm(-2 s phi) V_XX(2pi) U_arm(s phi) V_XX(pi/2) W1
///
/// with s = `arm_sign` and phi = arccos(-1/8).  `arm` must anticommute with XX;
/// the residual before W2 then points along [XX, arm].
inline Unitary sk1_cnot(const PauliString& arm, int arm_sign, ErrorModel err) {
    if (arm.num_qubits() != 2 || arm.commutes_with(detail::xx())) {
        throw InvalidAxis("SK1 arm " + arm.str() + " must be a two-qubit Pauli anticommuting with XX");
    }
    if (arm_sign != 1 && arm_sign != -1) {
        throw InvalidArgument("arm sign must be +1 or -1");
    }
    const double phi = Sk1Params::for_angle(kPi / 2).phi;
    const double s = arm_sign;
    Unitary v2pi = noisy_rot(detail::xx(), 2 * kPi, err);
    return detail::cnot_outer_frame() * rot(arm, s * phi) * v2pi * rot(arm, -2 * s * phi) * v2pi *
           rot(arm, s * phi) * noisy_rot(detail::xx(), kPi / 2, err) * detail::cnot_inner_frame();
}

/// Arm rotation and sign realizing each SK1 orientation.
///
/// The outer frame W2 maps an Ising-frame residual YI to XI, ZI to YI and IZ
/// to IY, so the X-on-control gate uses YI arms and so on.
struct Sk1Arm {
    PauliString arm;
    int sign;
};

inline Sk1Arm sk1_arm(PulseVariant v) {
    switch (v) {
        case PulseVariant::SK1_XI: return {PauliString("YI"), +1};
        case PulseVariant::SK1_YI: return {PauliString("ZI"), -1};
        case PulseVariant::SK1_IY: return {PauliString("IZ"), +1};
        default: throw InvalidArgument("variant has no SK1 arm");
    }
}

/// Two-qubit CNOT variant, control on the left qubit.
inline Unitary cnot_local(PulseVariant v, ErrorModel err) {
    switch (v) {
        case PulseVariant::Naive: return naive_cnot(err);
        case PulseVariant::SK1_mXI: return cnot_local(PulseVariant::SK1_XI, err).adjoint();
        default: {
            Sk1Arm a = sk1_arm(v);
            return sk1_cnot(a.arm, a.sign, err);
        }
    }
}

/// CNOT variant on (control, target) lifted to an n-qubit register.
inline Unitary cnot_variant(PulseVariant v, int control, int target, ErrorModel err, int num_qubits) {
    if (control == target) {
        throw InvalidQubit("CNOT control and target coincide");
    }
    if (control < 0 || target < 0 || control >= num_qubits || target >= num_qubits) {
        throw InvalidQubit("CNOT qubit outside register");
    }
    return embed(cnot_local(v, err), {control, target}, num_qubits);
}

/// Where the leading residual of an SK1 variant sits relative to the gate.
enum class ResidualSide { After, Before };

struct ResidualOrientation {
    PauliString axis;  // on (control, target)
    ResidualSide side;
};

/// Nominal leading residual of each SK1 variant.  Naive has none: its error
/// is a first-order XX over-rotation.
inline std::optional<ResidualOrientation> residual_orientation(PulseVariant v) {
    switch (v) {
        case PulseVariant::SK1_XI: return ResidualOrientation{PauliString("XI"), ResidualSide::After};
        case PulseVariant::SK1_YI: return ResidualOrientation{PauliString("YI"), ResidualSide::After};
        case PulseVariant::SK1_IY: return ResidualOrientation{PauliString("IY"), ResidualSide::After};
        case PulseVariant::SK1_mXI: return ResidualOrientation{PauliString("XI"), ResidualSide::Before};
        case PulseVariant::Naive: return std::nullopt;
    }
    return std::nullopt;
}

/// applied * ideal^dagger: the error operator when it is viewed as acting
/// after the ideal gate.
inline Unitary residual_after(const Unitary& ideal, const Unitary& applied) {
    return applied * ideal.adjoint();
}

/// ideal^dagger * applied: the error operator acting before the ideal gate.
inline Unitary residual_before(const Unitary& ideal, const Unitary& applied) {
    return ideal.adjoint() * applied;
}

/// |tr(U^dagger V) / 2^n|^2.
inline double gate_fidelity(const Unitary& ideal, const Unitary& applied) {
    if (ideal.dim() != applied.dim()) {
        throw DimensionMismatch("gate fidelity between operators of different dimensions");
    }
    cplx t = (ideal.matrix().adjoint() * applied.matrix()).trace() / static_cast<double>(ideal.dim());
    return std::min(1.0, std::norm(t));
}

/// 1 - gate_fidelity, evaluated without cancellation.
///
/// With t = tr(U^dagger V)/d and c = t/|t|, ||V - cU||_F^2 = 2d(1 - |t|), so
/// the infidelity (1 - |t|)(1 + |t|) follows from entry differences that keep
/// full relative precision when the gates are close.
inline double gate_infidelity(const Unitary& ideal, const Unitary& applied) {
    if (ideal.dim() != applied.dim()) {
        throw DimensionMismatch("gate fidelity between operators of different dimensions");
    }
    const double d = static_cast<double>(ideal.dim());
    cplx t = (ideal.matrix().adjoint() * applied.matrix()).trace() / d;
    double mag = std::abs(t);
    if (mag == 0.0) {
        return 1.0;
    }
    cplx c = t / mag;
    double gap = (applied.matrix() - c * ideal.matrix()).squaredNorm() / (2 * d);
    return std::clamp(gap * (2 - gap), 0.0, 1.0);
}

}  // namespace qorient
