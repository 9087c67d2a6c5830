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

// Dense operators and Pauli algebra on registers of at most six qubits.
//
// Ordering convention used throughout the library: qubit 0 is the leftmost
// tensor factor, i.e. the most significant bit of a basis-state index. For an
// n-qubit register, qubit q lives at bit (n - 1 - q).

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qorient/errors.hpp"

namespace qorient {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

inline constexpr int kMaxQubits = 6;
inline constexpr std::size_t kMaxDim = std::size_t{1} << kMaxQubits;

/// Tolerance for exact structural identities (unitarity, group laws).
inline constexpr double kStructuralTol = 1e-12;
/// Tolerance for comparisons against independent numerical oracles.
inline constexpr double kOracleTol = 1e-10;

inline constexpr double kPi = std::numbers::pi;

namespace detail {

inline int log2_exact(std::size_t dim) {
    if (dim == 0 || (dim & (dim - 1)) != 0) {
        return -1;
    }
    int n = 0;
    while ((std::size_t{1} << n) != dim) {
        ++n;
    }
    return n;
}

inline double max_abs(const Matrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// Bit position of `qubit` inside a basis index of an n-qubit register.
inline std::size_t qubit_bit(int qubit, int num_qubits) {
    return std::size_t{1} << (num_qubits - 1 - qubit);
}

}  // namespace detail

/// Dense unitary on 1..6 qubits.
///
/// Values built through `from_matrix` are checked for unitarity; values
/// produced by closed-form constructors and products of unitaries are
/// unitary by construction and skip the check.
class Unitary {
 public:
    static Unitary from_matrix(Matrix m) {
        if (m.rows() != m.cols()) {
            throw DimensionMismatch("unitary must be square");
        }
        int n = detail::log2_exact(static_cast<std::size_t>(m.rows()));
        if (n < 1) {
            throw DimensionMismatch("unitary dimension must be a power of two >= 2");
        }
        if (n > kMaxQubits) {
            throw CapacityError("unitary exceeds " + std::to_string(kMaxQubits) + " qubits");
        }
        Matrix gram = m.adjoint() * m;
        gram -= Matrix::Identity(m.rows(), m.cols());
        if (detail::max_abs(gram) > kStructuralTol) {
            throw InvalidArgument("matrix is not unitary");
        }
        return Unitary(std::move(m), n);
    }

    static Unitary identity(int num_qubits) {
        check_qubit_count(num_qubits);
        auto dim = static_cast<Eigen::Index>(std::size_t{1} << num_qubits);
        return Unitary(Matrix::Identity(dim, dim), num_qubits);
    }

    int num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
    const Matrix& matrix() const { return m_; }
    cplx operator()(Eigen::Index r, Eigen::Index c) const { return m_(r, c); }

    Unitary adjoint() const { return Unitary(m_.adjoint(), num_qubits_); }

    /// Multiplies by a unit-modulus global phase.
    Unitary with_phase(cplx phase) const {
        if (std::abs(std::abs(phase) - 1.0) > kStructuralTol) {
            throw InvalidArgument("global phase must have unit modulus");
        }
        return Unitary(m_ * phase, num_qubits_);
    }

    /// Largest entry of |U^dagger U - I|.
    double unitarity_defect() const {
        Matrix gram = m_.adjoint() * m_;
        gram -= Matrix::Identity(m_.rows(), m_.cols());
        return detail::max_abs(gram);
    }

    friend Unitary operator*(const Unitary& a, const Unitary& b) {
        if (a.dim() != b.dim()) {
            throw DimensionMismatch("operator product of different dimensions");
        }
        return Unitary(a.m_ * b.m_, a.num_qubits_);
    }

    friend StateVector operator*(const Unitary& a, const StateVector& v) {
        if (a.dim() != static_cast<std::size_t>(v.size())) {
            throw DimensionMismatch("operator and state dimensions differ");
        }
        return a.m_ * v;
    }

    static void check_qubit_count(int n) {
        if (n < 1) {
            throw InvalidArgument("register needs at least one qubit");
        }
        if (n > kMaxQubits) {
            throw CapacityError("register exceeds " + std::to_string(kMaxQubits) + " qubits");
        }
    }

    // Closed-form constructors inside the library use this to skip the
    // unitarity check; the argument must already be unitary.
    static Unitary trusted(Matrix m) {
        int n = detail::log2_exact(static_cast<std::size_t>(m.rows()));
        check_qubit_count(n);
        return Unitary(std::move(m), n);
    }

 private:
    Unitary(Matrix m, int n) : m_(std::move(m)), num_qubits_(n) {}

    Matrix m_;
    int num_qubits_;
};

// ---------------------------------------------------------------------------
// Pauli strings

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline char to_char(Pauli p) {
    constexpr std::array<char, 4> kChars{'I', 'X', 'Y', 'Z'};
    return kChars[static_cast<std::size_t>(p)];
}

inline std::optional<Pauli> pauli_from_char(char c) {
    switch (c) {
        case 'I': return Pauli::I;
        case 'X': return Pauli::X;
        case 'Y': return Pauli::Y;
        case 'Z': return Pauli::Z;
        default: return std::nullopt;
    }
}

/// Signed tensor product of single-qubit Paulis, phase in {+1, +i, -1, -i}.
///
/// The phase is stored as a power of i (0..3).
class PauliString {
 public:
    PauliString() = default;

    PauliString(std::string_view letters, int phase_power = 0) : phase_(wrap(phase_power)) {
        if (letters.empty()) {
            throw InvalidArgument("Pauli string needs at least one letter");
        }
        if (letters.size() > static_cast<std::size_t>(kMaxQubits)) {
            throw CapacityError("Pauli string exceeds " + std::to_string(kMaxQubits) + " qubits");
        }
        letters_.reserve(letters.size());
        for (char c : letters) {
            auto p = pauli_from_char(c);
            if (!p) {
                throw ParseError(std::string("invalid Pauli letter '") + c + "'");
            }
            letters_.push_back(*p);
        }
    }

    /// Parses "XX", "+YI", "-IZ", "iZZ", "-iXY".
    static PauliString parse(std::string_view text) {
        int power = 0;
        if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
            if (text.front() == '-') {
                power = 2;
            }
            text.remove_prefix(1);
        }
        if (!text.empty() && text.front() == 'i') {
            power += 1;
            text.remove_prefix(1);
        }
        return PauliString(text, power);
    }

    /// Weight-one string with `p` on `qubit`.
    static PauliString single(int num_qubits, int qubit, Pauli p) {
        if (qubit < 0 || qubit >= num_qubits) {
            throw InvalidQubit("qubit index out of range");
        }
        PauliString s(std::string(static_cast<std::size_t>(num_qubits), 'I'));
        s.letters_[static_cast<std::size_t>(qubit)] = p;
        return s;
    }

    int num_qubits() const { return static_cast<int>(letters_.size()); }
    Pauli at(int qubit) const { return letters_.at(static_cast<std::size_t>(qubit)); }
    std::span<const Pauli> letters() const { return letters_; }
    int phase_power() const { return phase_; }

    cplx phase() const {
        constexpr std::array<cplx, 4> kPhases{cplx{1, 0}, cplx{0, 1}, cplx{-1, 0}, cplx{0, -1}};
        return kPhases[static_cast<std::size_t>(phase_)];
    }

    int weight() const {
        return static_cast<int>(std::count_if(letters_.begin(), letters_.end(),
                                              [](Pauli p) { return p != Pauli::I; }));
    }

    bool is_identity() const { return weight() == 0; }

    /// Phase +1 or -1.
    bool is_hermitian() const { return phase_ % 2 == 0; }

    PauliString with_phase_power(int power) const {
        PauliString s = *this;
        s.phase_ = wrap(power);
        return s;
    }

    PauliString negated() const { return with_phase_power(phase_ + 2); }

    /// Letters only, phase +1.
    PauliString unsigned_part() const { return with_phase_power(0); }

    bool commutes_with(const PauliString& other) const {
        require_same_width(other);
        int anti = 0;
        for (std::size_t k = 0; k < letters_.size(); ++k) {
            Pauli a = letters_[k];
            Pauli b = other.letters_[k];
            if (a != Pauli::I && b != Pauli::I && a != b) {
                ++anti;
            }
        }
        return anti % 2 == 0;
    }

    /// Exact operator product, phase included.
    friend PauliString operator*(const PauliString& a, const PauliString& b) {
        a.require_same_width(b);
        PauliString out = a;
        int power = a.phase_ + b.phase_;
        for (std::size_t k = 0; k < a.letters_.size(); ++k) {
            auto [letter, p] = multiply_letters(a.letters_[k], b.letters_[k]);
            out.letters_[k] = letter;
            power += p;
        }
        out.phase_ = wrap(power);
        return out;
    }

    friend bool operator==(const PauliString&, const PauliString&) = default;

    /// "+XX", "-IZ", "+iYI", "-iZZ".
    std::string str() const {
        constexpr std::array<std::string_view, 4> kPrefix{"+", "+i", "-", "-i"};
        std::string out(kPrefix[static_cast<std::size_t>(phase_)]);
        for (Pauli p : letters_) {
            out.push_back(to_char(p));
        }
        return out;
    }

    /// Letters without a phase prefix.
    std::string letters_str() const {
        std::string out;
        for (Pauli p : letters_) {
            out.push_back(to_char(p));
        }
        return out;
    }

 private:
    static int wrap(int power) { return ((power % 4) + 4) % 4; }

    // Single-letter product a*b = i^p * c.
    static std::pair<Pauli, int> multiply_letters(Pauli a, Pauli b) {
        if (a == Pauli::I) return {b, 0};
        if (b == Pauli::I) return {a, 0};
        if (a == b) return {Pauli::I, 0};
        auto ia = static_cast<int>(a);
        auto ib = static_cast<int>(b);
        auto c = static_cast<Pauli>(6 - ia - ib);
        // XY = iZ, YZ = iX, ZX = iY; reversed order picks up -i.
        bool cyclic = (ib - ia + 3) % 3 == 1;
        return {c, cyclic ? 1 : 3};
    }

    void require_same_width(const PauliString& other) const {
        if (other.letters_.size() != letters_.size()) {
            throw DimensionMismatch("Pauli strings act on different qubit counts");
        }
    }

    std::vector<Pauli> letters_;
    int phase_ = 0;
};

// ---------------------------------------------------------------------------
// Construction

inline Unitary kron(const Unitary& a, const Unitary& b) {
    if (a.num_qubits() + b.num_qubits() > kMaxQubits) {
        throw CapacityError("tensor product exceeds " + std::to_string(kMaxQubits) + " qubits");
    }
    const Matrix& ma = a.matrix();
    const Matrix& mb = b.matrix();
    Matrix out(ma.rows() * mb.rows(), ma.cols() * mb.cols());
    for (Eigen::Index i = 0; i < ma.rows(); ++i) {
        for (Eigen::Index j = 0; j < ma.cols(); ++j) {
            out.block(i * mb.rows(), j * mb.cols(), mb.rows(), mb.cols()) = ma(i, j) * mb;
        }
    }
    return Unitary::trusted(std::move(out));
}

inline Matrix single_pauli_matrix(Pauli p) {
    Matrix m = Matrix::Zero(2, 2);
    switch (p) {
        case Pauli::I: m(0, 0) = 1; m(1, 1) = 1; break;
        case Pauli::X: m(0, 1) = 1; m(1, 0) = 1; break;
        case Pauli::Y: m(0, 1) = cplx(0, -1); m(1, 0) = cplx(0, 1); break;
        case Pauli::Z: m(0, 0) = 1; m(1, 1) = -1; break;
    }
    return m;
}

/// Dense matrix of a Pauli string, phase included.
inline Unitary pauli_matrix(const PauliString& p) {
    // Each row of a Pauli string has exactly one non-zero entry, located at
    // column row ^ xmask.
    const int n = p.num_qubits();
    Unitary::check_qubit_count(n);
    const auto dim = std::size_t{1} << n;
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    std::size_t xmask = 0;
    for (int q = 0; q < n; ++q) {
        Pauli l = p.at(q);
        if (l == Pauli::X || l == Pauli::Y) {
            xmask |= detail::qubit_bit(q, n);
        }
    }
    for (std::size_t row = 0; row < dim; ++row) {
        cplx v = p.phase();
        for (int q = 0; q < n; ++q) {
            bool bit = (row & detail::qubit_bit(q, n)) != 0;
            switch (p.at(q)) {
                case Pauli::I:
                case Pauli::X: break;
                case Pauli::Y: v *= bit ? cplx(0, 1) : cplx(0, -1); break;
                case Pauli::Z: v *= bit ? -1.0 : 1.0; break;
            }
        }
        m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(row ^ xmask)) = v;
    }
    return Unitary::trusted(std::move(m));
}

namespace detail {

inline void require_hermitian(const PauliString& g) {
    if (!g.is_hermitian()) {
        throw InvalidGenerator("rotation generator " + g.str() + " is not Hermitian");
    }
}

// cos(theta/2) I - i sin(theta/2) A for involutory Hermitian A.
inline Unitary involutory_exp(const Matrix& a, double theta) {
    Matrix m = cplx(0, -std::sin(theta / 2)) * a;
    m.diagonal().array() += std::cos(theta / 2);
    return Unitary::trusted(std::move(m));
}

}  // namespace detail

/// exp(-i theta/2 A) for a Hermitian Pauli string A, in closed form.
inline Unitary rot(const PauliString& generator, double theta) {
    detail::require_hermitian(generator);
    return detail::involutory_exp(pauli_matrix(generator).matrix(), theta);
}

/// exp(-i theta/2 (cos(phi) A1 + sin(phi) A2)) for anticommuting A1, A2.
///
/// Anticommutation makes the blended generator square to the identity, so the
/// same closed form as `rot` applies.
inline Unitary rot_blend(const PauliString& a1, const PauliString& a2, double phi, double theta) {
    detail::require_hermitian(a1);
    detail::require_hermitian(a2);
    if (a1.commutes_with(a2)) {
        throw InvalidAxis("blend axes " + a1.str() + " and " + a2.str() + " commute");
    }
    Matrix blend = std::cos(phi) * pauli_matrix(a1).matrix() + std::sin(phi) * pauli_matrix(a2).matrix();
    return detail::involutory_exp(blend, theta);
}

// ---------------------------------------------------------------------------
// Embedding

/// Applies a 2^k x 2^k gate acting on `qubits` (first listed qubit is the
/// gate's leftmost factor) to every column of `columns`, in place.
inline void apply_local(Matrix& columns, const Matrix& gate, std::span<const int> qubits, int num_qubits) {
    const auto k = qubits.size();
    const auto local_dim = std::size_t{1} << k;
    if (static_cast<std::size_t>(gate.rows()) != local_dim || gate.cols() != gate.rows()) {
        throw DimensionMismatch("gate size does not match its qubit list");
    }
    const auto dim = std::size_t{1} << num_qubits;
    if (static_cast<std::size_t>(columns.rows()) != dim) {
        throw DimensionMismatch("state rows do not match register size");
    }
    std::vector<std::size_t> offsets(local_dim, 0);
    std::size_t mask = 0;
    for (std::size_t j = 0; j < k; ++j) {
        int q = qubits[j];
        if (q < 0 || q >= num_qubits) {
            throw InvalidQubit("qubit " + std::to_string(q) + " outside register");
        }
        std::size_t bit = detail::qubit_bit(q, num_qubits);
        if ((mask & bit) != 0) {
            throw InvalidQubit("qubit " + std::to_string(q) + " repeated");
        }
        mask |= bit;
        for (std::size_t s = 0; s < local_dim; ++s) {
            if ((s >> (k - 1 - j)) & 1U) {
                offsets[s] |= bit;
            }
        }
    }
    Eigen::VectorXcd in(static_cast<Eigen::Index>(local_dim));
    Eigen::VectorXcd out(static_cast<Eigen::Index>(local_dim));
    for (Eigen::Index col = 0; col < columns.cols(); ++col) {
        for (std::size_t base = 0; base < dim; ++base) {
            if ((base & mask) != 0) {
                continue;
            }
            for (std::size_t s = 0; s < local_dim; ++s) {
                in(static_cast<Eigen::Index>(s)) = columns(static_cast<Eigen::Index>(base | offsets[s]), col);
            }
            out.noalias() = gate * in;
            for (std::size_t s = 0; s < local_dim; ++s) {
                columns(static_cast<Eigen::Index>(base | offsets[s]), col) = out(static_cast<Eigen::Index>(s));
            }
        }
    }
}

/// Lifts a local gate on `qubits` to the full n-qubit register.
inline Unitary embed(const Unitary& local, std::span<const int> qubits, int num_qubits) {
    Unitary::check_qubit_count(num_qubits);
    if (static_cast<std::size_t>(local.num_qubits()) != qubits.size()) {
        throw DimensionMismatch("gate width does not match its qubit list");
    }
    auto dim = static_cast<Eigen::Index>(std::size_t{1} << num_qubits);
    Matrix m = Matrix::Identity(dim, dim);
    apply_local(m, local.matrix(), qubits, num_qubits);
    return Unitary::trusted(std::move(m));
}

inline Unitary embed(const Unitary& local, std::initializer_list<int> qubits, int num_qubits) {
    std::vector<int> q(qubits);
    return embed(local, std::span<const int>(q), num_qubits);
}

// ---------------------------------------------------------------------------
// Analysis

/// Expands `m` (on n qubits) in the Pauli basis: m = sum_P c_P P.
///
/// Coefficients are indexed by the base-4 number whose digit for qubit q (most
/// significant first) is the Pauli letter code.
inline std::vector<cplx> pauli_coefficients(const Matrix& m) {
    int n = detail::log2_exact(static_cast<std::size_t>(m.rows()));
    Unitary::check_qubit_count(n);
    const auto dim = std::size_t{1} << n;
    const std::size_t count = std::size_t{1} << (2 * n);
    std::vector<cplx> out(count);
    for (std::size_t code = 0; code < count; ++code) {
        // c_P = tr(P m) / dim, and P has a single entry per row at row ^ xmask.
        std::size_t xmask = 0;
        for (int q = 0; q < n; ++q) {
            auto digit = (code >> (2 * (n - 1 - q))) & 3U;
            if (digit == 1 || digit == 2) {
                xmask |= detail::qubit_bit(q, n);
            }
        }
        cplx acc = 0;
        for (std::size_t row = 0; row < dim; ++row) {
            cplx v = 1;
            for (int q = 0; q < n; ++q) {
                auto digit = (code >> (2 * (n - 1 - q))) & 3U;
                bool bit = (row & detail::qubit_bit(q, n)) != 0;
                if (digit == 2) {
                    v *= bit ? cplx(0, 1) : cplx(0, -1);
                } else if (digit == 3 && bit) {
                    v = -v;
                }
            }
            acc += v * m(static_cast<Eigen::Index>(row ^ xmask), static_cast<Eigen::Index>(row));
        }
        out[code] = acc / static_cast<double>(dim);
    }
    return out;
}

inline PauliString pauli_from_code(std::size_t code, int num_qubits) {
    std::string letters(static_cast<std::size_t>(num_qubits), 'I');
    for (int q = 0; q < num_qubits; ++q) {
        auto digit = (code >> (2 * (num_qubits - 1 - q))) & 3U;
        letters[static_cast<std::size_t>(q)] = to_char(static_cast<Pauli>(digit));
    }
    return PauliString(letters);
}

/// Recognizes a matrix equal to a signed Pauli string within `tol`.
inline std::optional<PauliString> as_pauli(const Matrix& m, double tol = kOracleTol) {
    int n = detail::log2_exact(static_cast<std::size_t>(m.rows()));
    if (n < 1 || n > kMaxQubits || m.rows() != m.cols()) {
        return std::nullopt;
    }
    // Row 0 locates the X/Y part.
    Eigen::Index xcol = 0;
    m.row(0).cwiseAbs().maxCoeff(&xcol);
    const auto xmask = static_cast<std::size_t>(xcol);
    const cplx anchor = m(0, xcol);
    if (std::abs(std::abs(anchor) - 1.0) > tol) {
        return std::nullopt;
    }
    std::string letters(static_cast<std::size_t>(n), 'I');
    for (int q = 0; q < n; ++q) {
        std::size_t bit = detail::qubit_bit(q, n);
        // The entry in the row with only this bit set differs from the anchor
        // by a sign exactly when the letter carries a Z component.
        cplx ratio = m(static_cast<Eigen::Index>(bit), static_cast<Eigen::Index>(bit ^ xmask)) / anchor;
        bool has_x = (xmask & bit) != 0;
        bool has_z = ratio.real() < 0;
        letters[static_cast<std::size_t>(q)] = has_x ? (has_z ? 'Y' : 'X') : (has_z ? 'Z' : 'I');
    }
    PauliString unsigned_p(letters);
    // anchor = phase * (unsigned matrix)(0, xmask)
    cplx base = pauli_matrix(unsigned_p).matrix()(0, xcol);
    cplx phase = anchor / base;
    int power = -1;
    constexpr std::array<cplx, 4> kPhases{cplx{1, 0}, cplx{0, 1}, cplx{-1, 0}, cplx{0, -1}};
    for (int k = 0; k < 4; ++k) {
        if (std::abs(phase - kPhases[static_cast<std::size_t>(k)]) <= tol) {
            power = k;
        }
    }
    if (power < 0) {
        return std::nullopt;
    }
    PauliString candidate = unsigned_p.with_phase_power(power);
    if (detail::max_abs(m - pauli_matrix(candidate).matrix()) > tol) {
        return std::nullopt;
    }
    return candidate;
}

/// g P g^dagger as a signed Pauli string, or nullopt when the conjugate is
/// not a Pauli string (g is not Clifford on P's support).
inline std::optional<PauliString> conjugate_pauli(const Unitary& g, const PauliString& p) {
    if (static_cast<std::size_t>(p.num_qubits()) != static_cast<std::size_t>(g.num_qubits())) {
        throw DimensionMismatch("Pauli string and gate act on different qubit counts");
    }
    Matrix conj = g.matrix() * pauli_matrix(p).matrix() * g.matrix().adjoint();
    return as_pauli(conj);
}

/// True when g maps every weight-one Pauli generator to a signed Pauli string.
inline bool is_clifford(const Unitary& g) {
    const int n = g.num_qubits();
    for (int q = 0; q < n; ++q) {
        for (Pauli p : {Pauli::X, Pauli::Z}) {
            if (!conjugate_pauli(g, PauliString::single(n, q, p))) {
                return false;
            }
        }
    }
    return true;
}

/// min over |c| = 1 of max_ij |a_ij - c b_ij|.
///
/// The objective is a maximum of sinusoids in arg(c); a coarse scan brackets
/// the global minimum and golden-section search refines it.
inline double distance_up_to_phase(const Unitary& a, const Unitary& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("distance between operators of different dimensions");
    }
    const Matrix& ma = a.matrix();
    const Matrix& mb = b.matrix();
    auto objective = [&](double angle) {
        cplx c = std::polar(1.0, angle);
        return (ma - c * mb).cwiseAbs().maxCoeff();
    };
    cplx overlap = (mb.adjoint() * ma).trace();
    double center = std::abs(overlap) > 0 ? std::arg(overlap) : 0.0;

    constexpr int kScan = 720;
    const double step = 2 * kPi / kScan;
    double best_angle = center;
    double best = objective(center);
    for (int k = 1; k < kScan; ++k) {
        double angle = center + k * step;
        double v = objective(angle);
        if (v < best) {
            best = v;
            best_angle = angle;
        }
    }
    double lo = best_angle - step;
    double hi = best_angle + step;
    const double inv_golden = (std::sqrt(5.0) - 1) / 2;
    double x1 = hi - inv_golden * (hi - lo);
    double x2 = lo + inv_golden * (hi - lo);
    double f1 = objective(x1);
    double f2 = objective(x2);
    for (int iter = 0; iter < 200 && hi - lo > 1e-17; ++iter) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_golden * (hi - lo);
            f1 = objective(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_golden * (hi - lo);
            f2 = objective(x2);
        }
    }
    return std::min({best, f1, f2});
}

}  // namespace qorient
