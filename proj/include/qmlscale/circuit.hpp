// Copyright 2026 The qmlscale Authors
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

/**
 * @file circuit.hpp
 * @brief Gate-level circuit IR shared by generation, compilation and scheduling.
 *
 * A Circuit is an ordered list of gates over a fixed register of n qubits.
 * Gates carry at most two qubit operands and at most three angles. Circuits
 * are plain values; every transformation returns a new circuit.
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qmlscale {

using Qubit = std::uint32_t;

enum class GateKind : std::uint8_t { H, X, RX, RY, RZ, P, U3, CX, CZ, SWAP };

inline constexpr std::array<GateKind, 10> kAllGateKinds = {
    GateKind::H,  GateKind::X,  GateKind::RX, GateKind::RY, GateKind::RZ,
    GateKind::P,  GateKind::U3, GateKind::CX, GateKind::CZ, GateKind::SWAP};

constexpr std::size_t qubit_arity(GateKind kind) {
    switch (kind) {
        case GateKind::CX:
        case GateKind::CZ:
        case GateKind::SWAP:
            return 2;
        default:
            return 1;
    }
}

constexpr std::size_t param_arity(GateKind kind) {
    switch (kind) {
        case GateKind::RX:
        case GateKind::RY:
        case GateKind::RZ:
        case GateKind::P:
            return 1;
        case GateKind::U3:
            return 3;
        default:
            return 0;
    }
}

constexpr std::string_view kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "H";
        case GateKind::X: return "X";
        case GateKind::RX: return "RX";
        case GateKind::RY: return "RY";
        case GateKind::RZ: return "RZ";
        case GateKind::P: return "P";
        case GateKind::U3: return "U3";
        case GateKind::CX: return "CX";
        case GateKind::CZ: return "CZ";
        case GateKind::SWAP: return "SWAP";
    }
    return "?";
}

inline GateKind parse_gate_kind(std::string_view name) {
    for (GateKind kind : kAllGateKinds) {
        if (kind_name(kind) == name) {
            return kind;
        }
    }
    throw std::invalid_argument("unknown gate kind '" + std::string(name) + "'");
}

/// One gate. For CX the operand order is (control, target).
struct Gate {
    GateKind kind = GateKind::H;
    std::array<Qubit, 2> qubits{0, 0};
    std::array<double, 3> params{0.0, 0.0, 0.0};

    std::size_t num_qubits() const { return qubit_arity(kind); }
    std::size_t num_params() const { return param_arity(kind); }
    bool is_two_qubit() const { return num_qubits() == 2; }
    bool acts_on(Qubit q) const {
        return qubits[0] == q || (is_two_qubit() && qubits[1] == q);
    }

    friend bool operator==(const Gate& a, const Gate& b) {
        if (a.kind != b.kind) return false;
        for (std::size_t i = 0; i < a.num_qubits(); ++i) {
            if (a.qubits[i] != b.qubits[i]) return false;
        }
        for (std::size_t i = 0; i < a.num_params(); ++i) {
            if (a.params[i] != b.params[i]) return false;
        }
        return true;
    }

    static Gate one(GateKind kind, Qubit q) { return Gate{kind, {q, 0}, {0, 0, 0}}; }
    static Gate rot(GateKind kind, Qubit q, double angle) {
        return Gate{kind, {q, 0}, {angle, 0, 0}};
    }
    static Gate two(GateKind kind, Qubit a, Qubit b) { return Gate{kind, {a, b}, {0, 0, 0}}; }

    static Gate h(Qubit q) { return one(GateKind::H, q); }
    static Gate x(Qubit q) { return one(GateKind::X, q); }
    static Gate rx(Qubit q, double t) { return rot(GateKind::RX, q, t); }
    static Gate ry(Qubit q, double t) { return rot(GateKind::RY, q, t); }
    static Gate rz(Qubit q, double t) { return rot(GateKind::RZ, q, t); }
    static Gate p(Qubit q, double t) { return rot(GateKind::P, q, t); }
    static Gate u3(Qubit q, double theta, double phi, double lambda) {
        return Gate{GateKind::U3, {q, 0}, {theta, phi, lambda}};
    }
    static Gate cx(Qubit control, Qubit target) { return two(GateKind::CX, control, target); }
    static Gate cz(Qubit a, Qubit b) { return two(GateKind::CZ, a, b); }
    static Gate swap(Qubit a, Qubit b) { return two(GateKind::SWAP, a, b); }
};

/// Inverse of a single gate (see inverse(Circuit)).
inline Gate inverse(const Gate& g) {
    Gate out = g;
    switch (g.kind) {
        case GateKind::RX:
        case GateKind::RY:
        case GateKind::RZ:
        case GateKind::P:
            out.params[0] = -g.params[0];
            break;
        case GateKind::U3:
            out.params = {-g.params[0], -g.params[2], -g.params[1]};
            break;
        default:
            break;
    }
    return out;
}

class Circuit {
public:
    using const_iterator = std::vector<Gate>::const_iterator;

    explicit Circuit(std::size_t num_qubits) : num_qubits_(num_qubits) {
        if (num_qubits == 0) {
            throw std::invalid_argument("circuit must have at least one qubit");
        }
    }

    Circuit(std::size_t num_qubits, std::vector<Gate> gates) : Circuit(num_qubits) {
        for (const Gate& g : gates) validate(g);
        gates_ = std::move(gates);
    }

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }
    const std::vector<Gate>& gates() const { return gates_; }
    const Gate& operator[](std::size_t i) const { return gates_[i]; }
    const_iterator begin() const { return gates_.begin(); }
    const_iterator end() const { return gates_.end(); }

    Circuit& add(const Gate& g) {
        validate(g);
        gates_.push_back(g);
        return *this;
    }

    void reserve(std::size_t n) { gates_.reserve(n); }

    friend bool operator==(const Circuit& a, const Circuit& b) {
        return a.num_qubits_ == b.num_qubits_ && a.gates_ == b.gates_;
    }

private:
    void validate(const Gate& g) const {
        for (std::size_t i = 0; i < g.num_qubits(); ++i) {
            if (g.qubits[i] >= num_qubits_) {
                throw std::out_of_range("gate " + std::string(kind_name(g.kind)) + " references qubit " +
                                        std::to_string(g.qubits[i]) + " outside register of " +
                                        std::to_string(num_qubits_));
            }
        }
        if (g.is_two_qubit() && g.qubits[0] == g.qubits[1]) {
            throw std::invalid_argument("two-qubit gate " + std::string(kind_name(g.kind)) +
                                        " on repeated qubit " + std::to_string(g.qubits[0]));
        }
    }

    std::size_t num_qubits_;
    std::vector<Gate> gates_;
};

struct GateCounts {
    std::size_t total = 0;
    std::size_t two_qubit = 0;
    std::size_t swap = 0;

    friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

inline GateCounts count_gates(const Circuit& c) {
    GateCounts counts;
    counts.total = c.size();
    for (const Gate& g : c) {
        if (g.is_two_qubit()) ++counts.two_qubit;
        if (g.kind == GateKind::SWAP) ++counts.swap;
    }
    return counts;
}

/// Greedy ASAP layer index of every gate; the layer count is the depth.
inline std::vector<std::size_t> asap_layers(const Circuit& c) {
    std::vector<std::size_t> next_free(c.num_qubits(), 0);
    std::vector<std::size_t> layer(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Gate& g = c[i];
        std::size_t l = next_free[g.qubits[0]];
        if (g.is_two_qubit()) l = std::max(l, next_free[g.qubits[1]]);
        layer[i] = l;
        next_free[g.qubits[0]] = l + 1;
        if (g.is_two_qubit()) next_free[g.qubits[1]] = l + 1;
    }
    return layer;
}

inline std::size_t depth(const Circuit& c) {
    std::size_t d = 0;
    for (std::size_t l : asap_layers(c)) d = std::max(d, l + 1);
    return d;
}

inline Circuit inverse(const Circuit& c) {
    std::vector<Gate> gates;
    gates.reserve(c.size());
    for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
        gates.push_back(inverse(*it));
    }
    return Circuit(c.num_qubits(), std::move(gates));
}

inline Circuit compose(const Circuit& a, const Circuit& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("compose: qubit count mismatch (" + std::to_string(a.num_qubits()) +
                                    " vs " + std::to_string(b.num_qubits()) + ")");
    }
    std::vector<Gate> gates;
    gates.reserve(a.size() + b.size());
    gates.insert(gates.end(), a.begin(), a.end());
    gates.insert(gates.end(), b.begin(), b.end());
    return Circuit(a.num_qubits(), std::move(gates));
}

// Text dump: one gate per line, `KIND q[,q] [param,...]`, angles with 12
// significant digits. Qubit 0 is the least-significant bit of a basis index.

inline std::string format_angle(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline std::string to_line(const Gate& g) {
    std::string line(kind_name(g.kind));
    line += ' ';
    line += std::to_string(g.qubits[0]);
    if (g.is_two_qubit()) {
        line += ',';
        line += std::to_string(g.qubits[1]);
    }
    for (std::size_t i = 0; i < g.num_params(); ++i) {
        line += i == 0 ? ' ' : ',';
        line += format_angle(g.params[i]);
    }
    return line;
}

inline void dump(std::ostream& os, const Circuit& c) {
    for (const Gate& g : c) os << to_line(g) << '\n';
}

inline std::string dump(const Circuit& c) {
    std::ostringstream os;
    dump(os, c);
    return os.str();
}

/// Parses the text dump back into a circuit over n qubits. Blank lines and
/// lines starting with '#' are skipped.
inline Circuit parse_dump(std::size_t num_qubits, std::string_view text) {
    Circuit c(num_qubits);
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string kind_str, qubit_str, param_str;
        ls >> kind_str >> qubit_str >> param_str;
        try {
            Gate g;
            g.kind = parse_gate_kind(kind_str);
            auto comma = qubit_str.find(',');
            g.qubits[0] = static_cast<Qubit>(std::stoul(qubit_str.substr(0, comma)));
            if (g.is_two_qubit()) {
                if (comma == std::string::npos) throw std::invalid_argument("missing second qubit");
                g.qubits[1] = static_cast<Qubit>(std::stoul(qubit_str.substr(comma + 1)));
            }
            std::size_t np = 0;
            std::istringstream ps(param_str);
            std::string tok;
            while (std::getline(ps, tok, ',')) {
                if (np >= 3) throw std::invalid_argument("too many parameters");
                g.params[np++] = std::stod(tok);
            }
            if (np != g.num_params()) throw std::invalid_argument("wrong parameter count");
            c.add(g);
        } catch (const std::exception& e) {
            throw std::invalid_argument("dump line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return c;
}

}  // namespace qmlscale
