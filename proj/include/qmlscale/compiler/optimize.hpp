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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qmlscale/circuit.hpp"
#include "qmlscale/compiler/basis.hpp"

namespace qmlscale {

namespace detail {

/// One pass of 1q-run merging and CX-pair cancellation. Each wire keeps a
/// stack of the surviving gates that touch it; the top is the latest gate on
/// that wire, so anything placed after it commutes past trivially. Returns
/// nullopt when nothing changed.
inline std::optional<Circuit> peephole_pass(const Circuit& c) {
    std::vector<Gate> out;
    out.reserve(c.size());
    std::vector<char> alive;
    alive.reserve(c.size());
    std::vector<std::optional<Mat2>> merged;  // product for merged 1q slots
    merged.reserve(c.size());
    std::vector<std::vector<std::uint32_t>> wire(c.num_qubits());
    bool changed = false;

    for (const Gate& g : c) {
        if (!g.is_two_qubit()) {
            auto& stack = wire[g.qubits[0]];
            if (!stack.empty() && !out[stack.back()].is_two_qubit()) {
                const std::uint32_t slot = stack.back();
                const Mat2 earlier = merged[slot] ? *merged[slot] : one_qubit_matrix(out[slot]);
                merged[slot] = matmul(one_qubit_matrix(g), earlier);
                changed = true;
                if (is_identity_up_to_phase(*merged[slot])) {
                    alive[slot] = 0;
                    stack.pop_back();
                }
                continue;
            }
            stack.push_back(static_cast<std::uint32_t>(out.size()));
            out.push_back(g);
            alive.push_back(1);
            merged.emplace_back();
            continue;
        }

        const Qubit a = g.qubits[0], b = g.qubits[1];
        auto& sa = wire[a];
        auto& sb = wire[b];
        if (g.kind == GateKind::CX && !sa.empty() && !sb.empty() && sa.back() == sb.back() &&
            out[sa.back()] == g) {
            alive[sa.back()] = 0;
            sa.pop_back();
            sb.pop_back();
            changed = true;
            continue;
        }
        const auto slot = static_cast<std::uint32_t>(out.size());
        sa.push_back(slot);
        sb.push_back(slot);
        out.push_back(g);
        alive.push_back(1);
        merged.emplace_back();
    }

    if (!changed) return std::nullopt;

    Circuit result(c.num_qubits());
    result.reserve(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (!alive[i]) continue;
        if (merged[i]) {
            const U3Angles a = zyz_angles(*merged[i]);
            result.add(Gate::u3(out[i].qubits[0], a.theta, a.phi, a.lambda));
        } else {
            result.add(out[i]);
        }
    }
    return result;
}

}  // namespace detail

/// Merges adjacent single-qubit runs into one U3 (dropped when it is the
/// identity up to phase, within 1e-9) and cancels back-to-back identical CX
/// pairs, repeating until nothing changes. Expects a {U3, CX} circuit.
inline Circuit optimize(const Circuit& c) {
    if (!is_basis_circuit(c)) throw std::invalid_argument("optimize expects a {U3, CX} circuit");
    Circuit current = c;
    while (auto next = detail::peephole_pass(current)) current = std::move(*next);
    return current;
}

}  // namespace qmlscale
