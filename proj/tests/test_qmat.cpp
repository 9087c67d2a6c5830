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

#include <catch_amalgamated.hpp>

#include <random>
#include <string>

#include "oracles.hpp"
#include "qorient/circuit.hpp"
#include "qorient/qmat.hpp"

using namespace qorient;
using Catch::Matchers::WithinAbs;

namespace {

double max_diff(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

std::string random_letters(std::mt19937& rng, int n, bool allow_identity = true) {
    std::uniform_int_distribution<int> pick(allow_identity ? 0 : 1, 3);
    std::string s;
    for (int i = 0; i < n; ++i) {
        s.push_back("IXYZ"[pick(rng)]);
    }
    return s;
}

std::string all_letters(int code, int n) {
    std::string s;
    for (int q = n - 1; q >= 0; --q) {
        s.push_back("IXYZ"[(code >> (2 * q)) & 3]);
    }
    return s;
}

}  // namespace

TEST_CASE("kron follows the leftmost-factor layout") {
    Unitary i2 = Unitary::identity(1);
    CHECK(max_diff(kron(i2, i2).matrix(), Matrix::Identity(4, 4)) == 0.0);

    Unitary x = pauli_matrix(PauliString("X"));
    Unitary z = pauli_matrix(PauliString("Z"));
    Matrix anti = Matrix::Zero(4, 4);
    anti(0, 3) = anti(1, 2) = anti(2, 1) = anti(3, 0) = 1;
    CHECK(max_diff(kron(x, x).matrix(), anti) == 0.0);

    Matrix zz = Matrix::Zero(4, 4);
    zz.diagonal() << 1, -1, -1, 1;
    CHECK(max_diff(kron(z, z).matrix(), zz) == 0.0);

    // Left operand acts on qubit 0, the most significant index bit.
    CHECK(max_diff(kron(x, i2).matrix(), oracle::pauli("XI")) == 0.0);
}

TEST_CASE("kron rejects products beyond six qubits") {
    Unitary four = Unitary::identity(4);
    Unitary three = Unitary::identity(3);
    CHECK_THROWS_AS(kron(four, three), CapacityError);
    CHECK(kron(four, Unitary::identity(2)).num_qubits() == 6);
}

TEST_CASE("pauli_matrix includes the phase") {
    Matrix y(2, 2);
    y << 0, cplx(0, -1), cplx(0, 1), 0;
    CHECK(max_diff(pauli_matrix(PauliString("Y")).matrix(), y) == 0.0);
    CHECK(max_diff(pauli_matrix(PauliString::parse("-IX")).matrix(), -oracle::pauli("IX")) == 0.0);
    Matrix izz = Matrix::Zero(4, 4);
    izz.diagonal() << cplx(0, 1), cplx(0, -1), cplx(0, -1), cplx(0, 1);
    CHECK(max_diff(pauli_matrix(PauliString::parse("iZZ")).matrix(), izz) == 0.0);
}

TEST_CASE("pauli_matrix matches explicit Kronecker products on every 3-qubit string") {
    for (int code = 0; code < 64; ++code) {
        std::string letters = all_letters(code, 3);
        INFO(letters);
        CHECK(max_diff(pauli_matrix(PauliString(letters)).matrix(), oracle::pauli(letters)) == 0.0);
    }
}

TEST_CASE("Pauli string parsing and algebra") {
    PauliString p = PauliString::parse("-iXY");
    CHECK(p.letters_str() == "XY");
    CHECK(p.phase_power() == 3);
    CHECK(p.str() == "-iXY");
    CHECK_FALSE(p.is_hermitian());
    CHECK(PauliString::parse("+ZI").str() == "+ZI");
    CHECK(PauliString::parse("iZ").str() == "+iZ");
    CHECK(PauliString("IXIZ").weight() == 2);
    CHECK(PauliString("III").is_identity());
    CHECK_THROWS_AS(PauliString("XQ"), ParseError);
    CHECK_THROWS_AS(PauliString(""), InvalidArgument);
    CHECK_THROWS_AS(PauliString("XXXXXXX"), CapacityError);
    CHECK_THROWS_AS(PauliString::single(2, 2, Pauli::X), InvalidQubit);

    CHECK(PauliString("XX").commutes_with(PauliString("YY")));
    CHECK_FALSE(PauliString("XX").commutes_with(PauliString("YI")));
    CHECK_THROWS_AS(PauliString("X").commutes_with(PauliString("XX")), DimensionMismatch);
}

TEST_CASE("Pauli product agrees with matrix product on random strings") {
    std::mt19937 rng(20260101);
    std::uniform_int_distribution<int> phase(0, 3);
    for (int trial = 0; trial < 200; ++trial) {
        PauliString a(random_letters(rng, 3), phase(rng));
        PauliString b(random_letters(rng, 3), phase(rng));
        PauliString ab = a * b;
        Matrix expected = pauli_matrix(a).matrix() * pauli_matrix(b).matrix();
        INFO(a.str() << " * " << b.str() << " = " << ab.str());
        CHECK(max_diff(pauli_matrix(ab).matrix(), expected) < 1e-15);
        bool commute = max_diff(expected, pauli_matrix(b).matrix() * pauli_matrix(a).matrix()) < 1e-15;
        CHECK(a.commutes_with(b) == commute);
    }
}

TEST_CASE("rot closed form") {
    CHECK(max_diff(rot(PauliString("Z"), 0).matrix(), Matrix::Identity(2, 2)) == 0.0);
    CHECK(max_diff(rot(PauliString("X"), kPi).matrix(), cplx(0, -1) * oracle::pauli("X")) < 1e-15);
    Matrix expected = (Matrix::Identity(4, 4) - cplx(0, 1) * oracle::pauli("XX")) / std::sqrt(2.0);
    CHECK(max_diff(rot(PauliString("XX"), kPi / 2).matrix(), expected) < 1e-15);
    CHECK(max_diff(rot(PauliString("XX"), kPi / 2).matrix(), oracle::expm_rot(oracle::pauli("XX"), kPi / 2)) <
          1e-10);
    // Negated generators are Hermitian and rotate the other way.
    CHECK(max_diff(rot(PauliString::parse("-Y"), 0.3).matrix(), rot(PauliString("Y"), -0.3).matrix()) < 1e-15);
    CHECK_THROWS_AS(rot(PauliString::parse("iX"), 0.1), InvalidGenerator);
}

TEST_CASE("rot matches the matrix exponential and obeys the group law") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> angle(-2 * kPi, 2 * kPi);
    std::uniform_int_distribution<int> width(1, 4);
    for (int trial = 0; trial < 100; ++trial) {
        int n = width(rng);
        std::string letters = random_letters(rng, n);
        PauliString a(letters);
        double t1 = angle(rng);
        double t2 = angle(rng);
        INFO(letters << " " << t1 << " " << t2);
        Unitary r1 = rot(a, t1);
        CHECK(max_diff(r1.matrix(), oracle::expm_rot(oracle::pauli(letters), t1)) < 1e-10);
        CHECK(max_diff((r1 * rot(a, t2)).matrix(), rot(a, t1 + t2).matrix()) < 1e-12);
        CHECK(r1.unitarity_defect() < 1e-12);
    }
}

TEST_CASE("rot_blend matches the matrix exponential on anticommuting pairs") {
    Matrix expected = cplx(0, -1) * (oracle::pauli("X") + oracle::pauli("Y")) / std::sqrt(2.0);
    CHECK(max_diff(rot_blend(PauliString("X"), PauliString("Y"), kPi / 4, kPi).matrix(), expected) < 1e-15);
    CHECK(max_diff(rot_blend(PauliString("X"), PauliString("Y"), 0, 0.7).matrix(), rot(PauliString("X"), 0.7).matrix()) <
          1e-15);
    CHECK(max_diff(rot_blend(PauliString("XX"), PauliString("ZX"), kPi / 2, 0.7).matrix(),
                   rot(PauliString("ZX"), 0.7).matrix()) < 1e-15);
    CHECK_THROWS_AS(rot_blend(PauliString("XX"), PauliString("YY"), 0.1, 0.2), InvalidAxis);

    std::mt19937 rng(11);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    int found = 0;
    while (found < 100) {
        std::string l1 = random_letters(rng, 3, false);
        std::string l2 = random_letters(rng, 3);
        PauliString a1(l1);
        PauliString a2(l2);
        if (a1.commutes_with(a2)) {
            continue;
        }
        ++found;
        double phi = angle(rng);
        double theta = angle(rng);
        Matrix blend = std::cos(phi) * oracle::pauli(l1) + std::sin(phi) * oracle::pauli(l2);
        INFO(l1 << " " << l2 << " " << phi << " " << theta);
        Unitary got = rot_blend(a1, a2, phi, theta);
        CHECK(max_diff(got.matrix(), oracle::expm_rot(blend, theta)) < 1e-10);
        CHECK(got.unitarity_defect() < 1e-12);
    }
}

TEST_CASE("Unitary validation") {
    Matrix bad = Matrix::Identity(2, 2);
    bad(0, 0) = 2;
    CHECK_THROWS_AS(Unitary::from_matrix(bad), InvalidArgument);
    CHECK_THROWS_AS(Unitary::from_matrix(Matrix::Identity(3, 3)), DimensionMismatch);
    CHECK_THROWS_AS(Unitary::from_matrix(Matrix::Identity(2, 4)), DimensionMismatch);
    CHECK_THROWS_AS(Unitary::from_matrix(Matrix::Identity(128, 128)), CapacityError);
    CHECK_THROWS_AS(Unitary::identity(0), InvalidArgument);
    CHECK_THROWS_AS(Unitary::identity(7), CapacityError);
    CHECK_THROWS_AS(Unitary::identity(1) * Unitary::identity(2), DimensionMismatch);
    CHECK_THROWS_AS(Unitary::identity(1).with_phase(2.0), InvalidArgument);
    CHECK(Unitary::from_matrix(oracle::hadamard()).num_qubits() == 1);
}

TEST_CASE("embed agrees with explicit index permutation") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    const int n = 4;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a == b) {
                continue;
            }
            Unitary local = rot(PauliString("XY"), angle(rng)) * rot(PauliString("ZI"), angle(rng));
            Matrix expected = oracle::embed(local.matrix(), {a, b}, n);
            INFO(a << "," << b);
            CHECK(max_diff(embed(local, {a, b}, n).matrix(), expected) < 1e-15);
        }
    }
    CHECK(max_diff(embed(toffoli_matrix(), {2, 0, 1}, 3).matrix(), oracle::embed(toffoli_matrix().matrix(), {2, 0, 1}, 3)) ==
          0.0);
}

TEST_CASE("embed validates qubits") {
    Unitary cx = Unitary::from_matrix(oracle::cnot());
    CHECK_THROWS_AS(embed(cx, {0, 0}, 3), InvalidQubit);
    CHECK_THROWS_AS(embed(cx, {0, 3}, 3), InvalidQubit);
    CHECK_THROWS_AS(embed(cx, {0}, 3), DimensionMismatch);
}

TEST_CASE("conjugate_pauli examples") {
    auto x_to = conjugate_pauli(hadamard(), PauliString("X"));
    REQUIRE(x_to);
    CHECK(*x_to == PauliString("Z"));

    Unitary cx = Unitary::from_matrix(oracle::cnot());
    auto xi_to = conjugate_pauli(cx, PauliString("XI"));
    REQUIRE(xi_to);
    CHECK(*xi_to == PauliString("XX"));

    CHECK_FALSE(conjugate_pauli(phase_gate(kPi / 4), PauliString("X")).has_value());
    CHECK_THROWS_AS(conjugate_pauli(cx, PauliString("X")), DimensionMismatch);
}

TEST_CASE("conjugate_pauli agrees with explicit conjugation on Clifford generators") {
    Matrix s(2, 2);
    s << 1, 0, 0, cplx(0, 1);
    std::vector<std::pair<std::string, Matrix>> gates{
        {"H", oracle::hadamard()},
        {"S", s},
        {"H(x)I", oracle::kron(oracle::hadamard(), oracle::pauli("I"))},
        {"I(x)S", oracle::kron(oracle::pauli("I"), s)},
        {"CNOT", oracle::cnot()},
        {"CNOT reversed", oracle::embed(oracle::cnot(), {1, 0}, 2)},
    };
    for (const auto& [name, g] : gates) {
        const int n = g.rows() == 2 ? 1 : 2;
        Unitary u = Unitary::from_matrix(g);
        CHECK(is_clifford(u));
        for (int code = 0; code < (1 << (2 * n)); ++code) {
            for (int phase = 0; phase < 4; ++phase) {
                PauliString p(all_letters(code, n), phase);
                auto image = conjugate_pauli(u, p);
                INFO(name << " " << p.str());
                REQUIRE(image);
                Matrix expected = g * pauli_matrix(p).matrix() * g.adjoint();
                CHECK(max_diff(pauli_matrix(*image).matrix(), expected) < 1e-12);
            }
        }
    }
    CHECK_FALSE(is_clifford(phase_gate(kPi / 4)));
    CHECK_FALSE(is_clifford(rot(PauliString("XX"), 0.1)));
}

TEST_CASE("as_pauli recognizes signed strings and rejects others") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> phase(0, 3);
    for (int trial = 0; trial < 100; ++trial) {
        PauliString p(random_letters(rng, 4), phase(rng));
        auto back = as_pauli(pauli_matrix(p).matrix());
        REQUIRE(back);
        CHECK(*back == p);
    }
    CHECK_FALSE(as_pauli(hadamard().matrix()));
    CHECK_FALSE(as_pauli(rot(PauliString("X"), 0.1).matrix()));
    CHECK_FALSE(as_pauli(std::sqrt(0.5) * (oracle::pauli("X") + oracle::pauli("Z"))));
    CHECK_FALSE(as_pauli(Matrix::Identity(3, 3)));
}

TEST_CASE("pauli_coefficients reconstructs the matrix") {
    Unitary u = rot(PauliString("XY"), 0.4) * rot(PauliString("ZI"), 1.1);
    auto coeffs = pauli_coefficients(u.matrix());
    Matrix rebuilt = Matrix::Zero(4, 4);
    for (std::size_t code = 0; code < coeffs.size(); ++code) {
        rebuilt += coeffs[code] * oracle::pauli(pauli_from_code(code, 2).letters_str());
    }
    CHECK(max_diff(rebuilt, u.matrix()) < 1e-14);
}

TEST_CASE("distance_up_to_phase") {
    Unitary u = rot(PauliString("XZ"), 0.3) * rot(PauliString("YI"), -1.2);
    CHECK(distance_up_to_phase(u, u) < 1e-15);
    CHECK(distance_up_to_phase(u, u.with_phase(-1)) < 1e-15);
    CHECK(distance_up_to_phase(u, u.with_phase(std::polar(1.0, 2.1))) < 1e-14);

    Unitary i2 = Unitary::identity(1);
    Unitary rz = rot(PauliString("Z"), 0.2);
    double scanned = oracle::scan_distance(i2.matrix(), rz.matrix());
    CHECK_THAT(distance_up_to_phase(i2, rz), WithinAbs(2 * std::sin(0.05), 1e-12));
    // A finite scan can only overestimate the minimum.
    CHECK(distance_up_to_phase(i2, rz) <= scanned + 1e-15);
    CHECK_THAT(scanned, WithinAbs(2 * std::sin(0.05), 1e-6));
    CHECK_THROWS_AS(distance_up_to_phase(i2, u), DimensionMismatch);
}

TEST_CASE("distance_up_to_phase never exceeds a dense phase scan") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    for (int trial = 0; trial < 20; ++trial) {
        Unitary a = rot(PauliString("XY"), angle(rng)) * rot(PauliString("ZZ"), angle(rng));
        Unitary b = rot(PauliString("YX"), angle(rng)) * rot(PauliString("IZ"), angle(rng));
        double scanned = oracle::scan_distance(a.matrix(), b.matrix(), 10000);
        double got = distance_up_to_phase(a, b);
        CHECK(got <= scanned + 1e-12);
        CHECK(got >= scanned - 1e-3);
    }
}
