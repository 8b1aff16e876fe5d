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
#include <numbers>
#include <random>
#include <vector>

#include "qmlscale/circuit.hpp"

namespace qmlscale {

/// Random circuit over every gate kind, for equivalence batteries. Angles
/// are uniform in [-pi, pi].
inline Circuit random_circuit(std::size_t n, std::size_t num_gates, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> pick_kind(0, kAllGateKinds.size() - 1);
    std::uniform_int_distribution<Qubit> pick_qubit(0, static_cast<Qubit>(n - 1));
    std::uniform_real_distribution<double> pick_angle(-std::numbers::pi, std::numbers::pi);
    Circuit c(n);
    while (c.size() < num_gates) {
        Gate g;
        g.kind = kAllGateKinds[pick_kind(rng)];
        if (g.is_two_qubit() && n < 2) continue;
        g.qubits[0] = pick_qubit(rng);
        if (g.is_two_qubit()) {
            do {
                g.qubits[1] = pick_qubit(rng);
            } while (g.qubits[1] == g.qubits[0]);
        }
        for (std::size_t k = 0; k < g.num_params(); ++k) g.params[k] = pick_angle(rng);
        c.add(g);
    }
    return c;
}

}  // namespace qmlscale
