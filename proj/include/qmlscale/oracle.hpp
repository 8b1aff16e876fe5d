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
 * @file oracle.hpp
 * @brief Dense unitary simulation for small circuits (n <= 6) and
 * layout-aware equivalence checking.
 *
 * Basis-state index convention: qubit 0 is the least-significant bit.
 * Gate matrices are the textbook ones, global phases included, and are kept
 * separate from the compiler's own matrices so the check stays independent.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmlscale/circuit.hpp"
#include "qmlscale/compiler/compile.hpp"
#include "qmlscale/compiler/layout.hpp"

namespace qmlscale::oracle {

using cplx = std::complex<double>;

inline constexpr std::size_t kMaxQubits = 6;

/// Column-major 2^n x 2^n matrix.
class DenseUnitary {
public:
    explicit DenseUnitary(std::size_t n) : n_(n), dim_(std::size_t{1} << n), m_(dim_ * dim_, 0.0) {
        for (std::size_t i = 0; i < dim_; ++i) at(i, i) = 1.0;
    }

    std::size_t num_qubits() const { return n_; }
    std::size_t dim() const { return dim_; }
    cplx& at(std::size_t row, std::size_t col) { return m_[col * dim_ + row]; }
    const cplx& at(std::size_t row, std::size_t col) const { return m_[col * dim_ + row]; }
    cplx* column(std::size_t col) { return &m_[col * dim_]; }

private:
    std::size_t n_;
    std::size_t dim_;
    std::vector<cplx> m_;
};

namespace detail {

struct Matrix2 {
    cplx a, b, c, d;  // [[a, b], [c, d]]
};

inline Matrix2 single_qubit(const Gate& g) {
    using std::cos, std::sin, std::exp;
    const cplx i(0.0, 1.0);
    const double t = g.params[0];
    switch (g.kind) {
        case GateKind::H: {
            const double r = 1.0 / std::sqrt(2.0);
            return {r, r, r, -r};
        }
        case GateKind::X: return {0.0, 1.0, 1.0, 0.0};
        case GateKind::RX: return {cos(t / 2), -i * sin(t / 2), -i * sin(t / 2), cos(t / 2)};
        case GateKind::RY: return {cos(t / 2), -sin(t / 2), sin(t / 2), cos(t / 2)};
        case GateKind::RZ: return {exp(-i * (t / 2)), 0.0, 0.0, exp(i * (t / 2))};
        case GateKind::P: return {1.0, 0.0, 0.0, exp(i * t)};
        case GateKind::U3: {
            const double th = g.params[0], ph = g.params[1], la = g.params[2];
            return {cos(th / 2), -exp(i * la) * sin(th / 2), exp(i * ph) * sin(th / 2),
                    exp(i * (ph + la)) * cos(th / 2)};
        }
        default:
            throw std::invalid_argument("oracle: not a single-qubit gate");
    }
}

inline void apply_to_vector(cplx* psi, std::size_t dim, const Gate& g) {
    const std::size_t ba = std::size_t{1} << g.qubits[0];
    if (!g.is_two_qubit()) {
        const Matrix2 m = single_qubit(g);
        for (std::size_t x = 0; x < dim; ++x) {
            if (x & ba) continue;
            const cplx v0 = psi[x], v1 = psi[x | ba];
            psi[x] = m.a * v0 + m.b * v1;
            psi[x | ba] = m.c * v0 + m.d * v1;
        }
        return;
    }
    const std::size_t bb = std::size_t{1} << g.qubits[1];
    for (std::size_t x = 0; x < dim; ++x) {
        switch (g.kind) {
            case GateKind::CX:
                if ((x & ba) && !(x & bb)) std::swap(psi[x], psi[x | bb]);
                break;
            case GateKind::CZ:
                if ((x & ba) && (x & bb)) psi[x] = -psi[x];
                break;
            case GateKind::SWAP:
                if ((x & ba) && !(x & bb)) std::swap(psi[x], psi[(x & ~ba) | bb]);
                break;
            default:
                throw std::invalid_argument("oracle: unknown two-qubit gate");
        }
    }
}

}  // namespace detail

inline DenseUnitary simulate_unitary(const Circuit& circuit) {
    const std::size_t n = circuit.num_qubits();
    if (n > kMaxQubits) {
        throw std::invalid_argument("oracle: " + std::to_string(n) + " qubits exceeds the limit of " +
                                    std::to_string(kMaxQubits));
    }
    DenseUnitary u(n);
    for (std::size_t col = 0; col < u.dim(); ++col) {
        cplx* psi = u.column(col);
        for (const Gate& g : circuit) detail::apply_to_vector(psi, u.dim(), g);
    }
    return u;
}

/// Statevector of circuit applied to |0...0>.
inline std::vector<cplx> simulate_state(const Circuit& circuit) {
    const DenseUnitary u = simulate_unitary(circuit);
    std::vector<cplx> psi(u.dim());
    for (std::size_t r = 0; r < u.dim(); ++r) psi[r] = u.at(r, 0);
    return psi;
}

inline bool is_unitary(const DenseUnitary& u, double tol = 1e-9) {
    const std::size_t d = u.dim();
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            cplx dot = 0.0;
            for (std::size_t r = 0; r < d; ++r) dot += std::conj(u.at(r, a)) * u.at(r, b);
            if (std::abs(dot - (a == b ? 1.0 : 0.0)) > tol) return false;
        }
    }
    return true;
}

/// max |a - e^{i phi} b| over entries, for the best single phase phi taken
/// from the largest-magnitude entry of a.
inline double distance_up_to_phase(const DenseUnitary& a, const DenseUnitary& b) {
    if (a.dim() != b.dim()) return std::numeric_limits<double>::infinity();
    std::size_t br = 0, bc = 0;
    double best = -1.0;
    for (std::size_t c = 0; c < a.dim(); ++c) {
        for (std::size_t r = 0; r < a.dim(); ++r) {
            if (std::abs(a.at(r, c)) > best) {
                best = std::abs(a.at(r, c));
                br = r;
                bc = c;
            }
        }
    }
    const cplx ref = b.at(br, bc);
    if (std::abs(ref) < 1e-12) return std::numeric_limits<double>::infinity();
    const cplx phase = (a.at(br, bc) / ref) / std::abs(a.at(br, bc) / ref);
    double worst = 0.0;
    for (std::size_t c = 0; c < a.dim(); ++c) {
        for (std::size_t r = 0; r < a.dim(); ++r) {
            worst = std::max(worst, std::abs(a.at(r, c) - phase * b.at(r, c)));
        }
    }
    return worst;
}

inline bool equal_up_to_phase(const DenseUnitary& a, const DenseUnitary& b, double tol = 1e-9) {
    return distance_up_to_phase(a, b) <= tol;
}

/// Maps a virtual basis index to the physical index under `layout`.
inline std::size_t to_physical_index(std::size_t x, const Layout& layout) {
    std::size_t y = 0;
    for (Qubit v = 0; v < layout.size(); ++v) {
        if (x >> v & 1) y |= std::size_t{1} << layout.physical(v);
    }
    return y;
}

/// True iff P_final^dagger * U_compiled * P_initial equals U_original up to
/// global phase within tol. Both circuits must span the same register.
inline bool equivalent_up_to_layout(const Circuit& original, const Circuit& compiled, const Layout& initial,
                                    const Layout& final_layout, double tol = 1e-7) {
    if (original.num_qubits() != compiled.num_qubits() || initial.size() != compiled.num_qubits() ||
        final_layout.size() != compiled.num_qubits()) {
        throw std::invalid_argument("oracle: register sizes differ");
    }
    const DenseUnitary uo = simulate_unitary(original);
    const DenseUnitary uc = simulate_unitary(compiled);
    DenseUnitary pulled_back(original.num_qubits());
    for (std::size_t col = 0; col < uo.dim(); ++col) {
        const std::size_t pc = to_physical_index(col, initial);
        for (std::size_t row = 0; row < uo.dim(); ++row) {
            pulled_back.at(row, col) = uc.at(to_physical_index(row, final_layout), pc);
        }
    }
    return equal_up_to_phase(uo, pulled_back, tol);
}

inline bool equivalent_up_to_layout(const Circuit& original, const CompiledCircuit& compiled, double tol = 1e-7) {
    return equivalent_up_to_layout(original, compiled.circuit, compiled.initial_layout, compiled.final_layout,
                                   tol);
}

}  // namespace qmlscale::oracle
