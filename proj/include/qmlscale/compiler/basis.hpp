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

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "qmlscale/circuit.hpp"

namespace qmlscale {

using Mat2 = std::array<std::complex<double>, 4>;  // row-major

/// U3(theta, phi, lambda) =
///   [[cos(t/2),          -e^{i l} sin(t/2)],
///    [e^{i p} sin(t/2),   e^{i(p+l)} cos(t/2)]]
inline Mat2 u3_matrix(double theta, double phi, double lambda) {
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    return {std::complex<double>(c, 0), -std::polar(s, lambda), std::polar(s, phi), std::polar(c, phi + lambda)};
}

inline Mat2 matmul(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

/// Wraps an angle into (-pi, pi].
inline double wrap_angle(double a) {
    constexpr double pi = std::numbers::pi;
    a = std::remainder(a, 2 * pi);
    if (a <= -pi) a += 2 * pi;
    return a;
}

struct U3Angles {
    double theta, phi, lambda;
};

/// Z-Y-Z angles of a 2x2 unitary, global phase dropped. When theta is
/// within 1e-12 of zero, phi is pinned to 0 and the relative phase goes to
/// lambda; when theta is within 1e-12 of pi, lambda is pinned to 0.
inline U3Angles zyz_angles(const Mat2& u) {
    constexpr double pi = std::numbers::pi;
    const double theta = 2.0 * std::atan2(std::abs(u[2]), std::abs(u[0]));
    if (theta < 1e-12) {
        return {0.0, 0.0, wrap_angle(std::arg(u[3]) - std::arg(u[0]))};
    }
    if (pi - theta < 1e-12) {
        return {pi, wrap_angle(std::arg(u[2]) - std::arg(-u[1])), 0.0};
    }
    // u[0] = e^{ia} cos(theta/2) with cos(theta/2) > 0, so a is the global phase.
    const double alpha = std::arg(u[0]);
    return {theta, wrap_angle(std::arg(u[2]) - alpha), wrap_angle(std::arg(-u[1]) - alpha)};
}

/// True when u equals the identity up to a global phase, within tol.
inline bool is_identity_up_to_phase(const Mat2& u, double tol = 1e-9) {
    if (std::abs(u[1]) > tol || std::abs(u[2]) > tol) return false;
    if (std::abs(u[0]) < 0.5) return false;
    return std::abs(u[3] / u[0] - 1.0) <= tol;
}

/// Matrix of any single-qubit gate, up to global phase.
inline Mat2 one_qubit_matrix(const Gate& g) {
    constexpr double pi = std::numbers::pi;
    const auto& t = g.params;
    switch (g.kind) {
        case GateKind::H: return u3_matrix(pi / 2, 0, pi);
        case GateKind::X: return u3_matrix(pi, 0, pi);
        case GateKind::RX: return u3_matrix(t[0], -pi / 2, pi / 2);
        case GateKind::RY: return u3_matrix(t[0], 0, 0);
        case GateKind::RZ:
        case GateKind::P: return u3_matrix(0, 0, t[0]);
        case GateKind::U3: return u3_matrix(t[0], t[1], t[2]);
        default: throw std::invalid_argument("not a single-qubit gate: " + std::string(kind_name(g.kind)));
    }
}

/// Rewrites every gate into {U3, CX}. Global phase is discarded.
inline Circuit decompose_to_basis(const Circuit& c) {
    constexpr double pi = std::numbers::pi;
    Circuit out(c.num_qubits());
    out.reserve(c.size());
    for (const Gate& g : c) {
        const Qubit a = g.qubits[0], b = g.qubits[1];
        switch (g.kind) {
            case GateKind::H: out.add(Gate::u3(a, pi / 2, 0, pi)); break;
            case GateKind::X: out.add(Gate::u3(a, pi, 0, pi)); break;
            case GateKind::RX: out.add(Gate::u3(a, g.params[0], -pi / 2, pi / 2)); break;
            case GateKind::RY: out.add(Gate::u3(a, g.params[0], 0, 0)); break;
            case GateKind::RZ:
            case GateKind::P: out.add(Gate::u3(a, 0, 0, g.params[0])); break;
            case GateKind::U3: out.add(g); break;
            case GateKind::CX: out.add(g); break;
            case GateKind::SWAP:
                out.add(Gate::cx(a, b));
                out.add(Gate::cx(b, a));
                out.add(Gate::cx(a, b));
                break;
            case GateKind::CZ:
                out.add(Gate::u3(b, pi / 2, 0, pi));
                out.add(Gate::cx(a, b));
                out.add(Gate::u3(b, pi / 2, 0, pi));
                break;
            default:
                throw std::invalid_argument("cannot decompose gate kind " + std::string(kind_name(g.kind)));
        }
    }
    return out;
}

inline bool is_basis_circuit(const Circuit& c) {
    for (const Gate& g : c) {
        if (g.kind != GateKind::U3 && g.kind != GateKind::CX) return false;
    }
    return true;
}

}  // namespace qmlscale
