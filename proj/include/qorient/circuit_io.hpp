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

// Line-oriented circuit text format.  See docs/circuit_format.md.
//
//   # comment
//   qubits 5
//   name bv1111
//   input 00000
//   output 0 1 2 3
//   ideal 1111
//   H 0
//   CNOT 0 4 sk1_xi
//   RZ 2 -pi/8
//   XX 2 3 pi sk1

#pragma once

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qorient/circuit.hpp"

namespace qorient {

namespace detail {

inline std::string upper(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
    return out;
}

inline std::optional<double> parse_number(std::string_view s) {
    if (s.empty()) {
        return std::nullopt;
    }
    if (s.front() == '+') {
        s.remove_prefix(1);
    }
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return v;
}

inline std::optional<int> parse_int(std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return v;
}

inline std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) {
            ++j;
        }
        if (j > i) {
            out.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

}  // namespace detail

/// Parses an angle: a decimal number, or `[-][k*]pi[/m]` such as `pi`,
/// `-pi/8`, `3*pi/4`.
inline std::optional<double> parse_angle(std::string_view s) {
    if (auto v = detail::parse_number(s)) {
        return v;
    }
    double sign = 1;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        sign = s.front() == '-' ? -1 : 1;
        s.remove_prefix(1);
    }
    double scale = 1;
    if (auto star = s.find('*'); star != std::string_view::npos) {
        auto k = detail::parse_number(s.substr(0, star));
        if (!k) {
            return std::nullopt;
        }
        scale = *k;
        s.remove_prefix(star + 1);
    }
    double divisor = 1;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto m = detail::parse_number(s.substr(slash + 1));
        if (!m || *m == 0) {
            return std::nullopt;
        }
        divisor = *m;
        s = s.substr(0, slash);
    }
    if (detail::upper(s) != "PI") {
        return std::nullopt;
    }
    return sign * scale * kPi / divisor;
}

inline std::optional<GateKind> parse_gate_kind(std::string_view s) {
    std::string u = detail::upper(s);
    if (u == "TDAG" || u == "T_DAG") u = "TDG";
    if (u == "SDAG" || u == "S_DAG") u = "SDG";
    if (u == "CX") u = "CNOT";
    if (u == "G") u = "GAMMA";
    for (GateKind k : kAllGateKinds) {
        if (gate_name(k) == u) {
            return k;
        }
    }
    return std::nullopt;
}

inline Circuit parse_circuit(std::istream& in) {
    std::optional<Circuit> c;
    std::optional<std::vector<int>> output;
    std::optional<std::string> ideal_bits;
    std::map<std::size_t, cplx> ideal_amps;
    std::map<std::size_t, cplx> input_amps;
    std::optional<std::string> input_bits;
    bool gate_mode = false;
    std::string name;

    std::string raw;
    int line_no = 0;
    auto fail = [&](const std::string& msg) -> ParseError {
        return ParseError("line " + std::to_string(line_no) + ": " + msg);
    };
    auto need = [&]() -> Circuit& {
        if (!c) {
            throw fail("`qubits <n>` must precede other directives");
        }
        return *c;
    };
    auto parse_amp = [&](const std::vector<std::string_view>& tok, std::map<std::size_t, cplx>& dst) {
        if (tok.size() != 3 && tok.size() != 4) {
            throw fail("expected `" + std::string(tok[0]) + " <bits> <re> [<im>]`");
        }
        auto re = detail::parse_number(tok[2]);
        auto im = tok.size() == 4 ? detail::parse_number(tok[3]) : std::optional<double>(0.0);
        if (!re || !im) {
            throw fail("invalid amplitude");
        }
        dst[Circuit::parse_bits(tok[1])] += cplx(*re, *im);
    };

    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line(raw);
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto tok = detail::split_ws(line);
        if (tok.empty()) {
            continue;
        }
        std::string head = detail::upper(tok[0]);
        try {
            if (head == "QUBITS") {
                if (c) {
                    throw fail("duplicate `qubits` directive");
                }
                auto n = tok.size() == 2 ? detail::parse_int(tok[1]) : std::nullopt;
                if (!n) {
                    throw fail("expected `qubits <n>`");
                }
                c.emplace(*n);
            } else if (head == "NAME") {
                if (tok.size() != 2) {
                    throw fail("expected `name <identifier>`");
                }
                name = std::string(tok[1]);
            } else if (head == "INPUT") {
                need();
                if (tok.size() != 2) {
                    throw fail("expected `input <bits>`");
                }
                input_bits = std::string(tok[1]);
            } else if (head == "AMP") {
                need();
                parse_amp(tok, input_amps);
            } else if (head == "OUTPUT") {
                need();
                std::vector<int> reg;
                for (std::size_t i = 1; i < tok.size(); ++i) {
                    auto q = detail::parse_int(tok[i]);
                    if (!q) {
                        throw fail("invalid output qubit `" + std::string(tok[i]) + "`");
                    }
                    reg.push_back(*q);
                }
                output = std::move(reg);
            } else if (head == "IDEAL") {
                need();
                if (tok.size() != 2) {
                    throw fail("expected `ideal <bits>`");
                }
                ideal_bits = std::string(tok[1]);
            } else if (head == "IDEAL-AMP") {
                need();
                parse_amp(tok, ideal_amps);
            } else if (head == "GATE") {
                need();
                gate_mode = true;
            } else if (auto kind = parse_gate_kind(tok[0])) {
                Circuit& circ = need();
                const auto n_q = static_cast<std::size_t>(arity(*kind));
                if (tok.size() < 1 + n_q) {
                    throw fail(std::string(gate_name(*kind)) + " needs " + std::to_string(n_q) + " qubit(s)");
                }
                GateOp op;
                op.kind = *kind;
                for (std::size_t i = 0; i < n_q; ++i) {
                    auto q = detail::parse_int(tok[1 + i]);
                    if (!q) {
                        throw fail("invalid qubit `" + std::string(tok[1 + i]) + "`");
                    }
                    op.qubits.push_back(*q);
                }
                std::size_t next = 1 + n_q;
                if (takes_angle(*kind)) {
                    if (next >= tok.size()) {
                        throw fail(std::string(gate_name(*kind)) + " needs an angle");
                    }
                    auto a = parse_angle(tok[next]);
                    if (!a) {
                        throw fail("invalid angle `" + std::string(tok[next]) + "`");
                    }
                    op.angle = *a;
                    ++next;
                }
                if (next < tok.size()) {
                    std::string_view flag = tok[next];
                    if (*kind == GateKind::CNOT) {
                        auto v = parse_variant(flag);
                        if (!v) {
                            throw fail("unknown CNOT variant `" + std::string(flag) + "`");
                        }
                        op.variant = *v;
                    } else if ((*kind == GateKind::XX || *kind == GateKind::YY) && detail::upper(flag) == "SK1") {
                        op.sk1 = true;
                    } else {
                        throw fail("unexpected token `" + std::string(flag) + "`");
                    }
                    ++next;
                }
                if (next != tok.size()) {
                    throw fail("trailing tokens");
                }
                circ.add(std::move(op));
            } else {
                throw fail("unknown directive or gate `" + std::string(tok[0]) + "`");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw fail(e.what());
        }
    }
    if (!c) {
        throw ParseError("circuit has no `qubits` directive");
    }
    c->name = name;
    try {
        if (input_bits && !input_amps.empty()) {
            throw ParseError("use either `input` or `amp`, not both");
        }
        if (input_bits) {
            c->set_input_basis(*input_bits);
        } else if (!input_amps.empty()) {
            StateVector s = StateVector::Zero(static_cast<Eigen::Index>(c->dim()));
            for (auto [index, amp] : input_amps) {
                if (index >= c->dim()) {
                    throw ParseError("input amplitude index out of range");
                }
                s(static_cast<Eigen::Index>(index)) = amp;
            }
            c->set_input_state(std::move(s));
        }
        if (gate_mode) {
            if (output || ideal_bits || !ideal_amps.empty()) {
                throw ParseError("`gate` circuits take no output register");
            }
            c->set_gate_evaluation();
        } else {
            if (!output) {
                throw ParseError("circuit needs an `output` register or the `gate` directive");
            }
            if (ideal_bits && !ideal_amps.empty()) {
                throw ParseError("use either `ideal` or `ideal-amp`, not both");
            }
            if (ideal_bits) {
                c->set_output_basis(*output, *ideal_bits);
            } else if (!ideal_amps.empty()) {
                StateVector s = StateVector::Zero(static_cast<Eigen::Index>(std::size_t{1} << output->size()));
                for (auto [index, amp] : ideal_amps) {
                    if (index >= static_cast<std::size_t>(s.size())) {
                        throw ParseError("ideal amplitude index out of range");
                    }
                    s(static_cast<Eigen::Index>(index)) = amp;
                }
                c->set_output(*output, std::move(s));
            } else {
                throw ParseError("output register needs an `ideal` state");
            }
        }
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
    return std::move(*c);
}

inline Circuit parse_circuit(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_circuit(in);
}

inline Circuit load_circuit(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open circuit file " + path);
    }
    return parse_circuit(in);
}

namespace detail {

inline std::string bits_of(std::size_t index, std::size_t width) {
    std::string s(width, '0');
    for (std::size_t k = 0; k < width; ++k) {
        if ((index >> (width - 1 - k)) & 1U) {
            s[k] = '1';
        }
    }
    return s;
}

// Writes `keyword bits` for a basis state, `amp_keyword bits re im` lines
// otherwise.
inline void write_state(std::ostream& out, const StateVector& s, std::size_t width, std::string_view keyword,
                        std::string_view amp_keyword) {
    Eigen::Index nonzero = 0;
    Eigen::Index last = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        if (s(i) != cplx(0, 0)) {
            ++nonzero;
            last = i;
        }
    }
    if (nonzero == 1 && s(last) == cplx(1, 0)) {
        out << keyword << ' ' << bits_of(static_cast<std::size_t>(last), width) << '\n';
        return;
    }
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        if (s(i) != cplx(0, 0)) {
            out << amp_keyword << ' ' << bits_of(static_cast<std::size_t>(i), width) << ' '
                << format_double(s(i).real()) << ' ' << format_double(s(i).imag()) << '\n';
        }
    }
}

}  // namespace detail

/// Text form accepted by `parse_circuit`.  Gate circuits with an explicit
/// reference unitary are written in gate mode; the reader then scores them
/// against their ideal gate sequence.
inline std::string serialize_circuit(const Circuit& c) {
    std::ostringstream out;
    out << "qubits " << c.width() << '\n';
    if (!c.name.empty()) {
        out << "name " << c.name << '\n';
    }
    detail::write_state(out, c.input_state(), static_cast<std::size_t>(c.width()), "input", "amp");
    if (c.evaluation() == Evaluation::Gate) {
        out << "gate\n";
    } else {
        out << "output";
        for (int q : c.output_register()) {
            out << ' ' << q;
        }
        out << '\n';
        detail::write_state(out, c.ideal_output(), c.output_register().size(), "ideal", "ideal-amp");
    }
    for (const GateOp& op : c.ops()) {
        out << gate_name(op.kind);
        for (int q : op.qubits) {
            out << ' ' << q;
        }
        if (takes_angle(op.kind)) {
            out << ' ' << detail::format_double(op.angle);
        }
        if (op.kind == GateKind::CNOT && op.variant != PulseVariant::Naive) {
            out << ' ' << to_string(op.variant);
        }
        if (op.sk1 && (op.kind == GateKind::XX || op.kind == GateKind::YY)) {
            out << " sk1";
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace qorient
