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
#include <stdexcept>
#include <vector>

#include "qmlscale/circuit.hpp"

namespace qmlscale {

/// Per-gate execution times in seconds.
struct GateDurations {
    double t_1q = 7.9e-9;
    double t_2q = 30e-9;

    GateDurations() = default;
    GateDurations(double one_qubit, double two_qubit) : t_1q(one_qubit), t_2q(two_qubit) {
        if (!(one_qubit > 0.0) || !(two_qubit > 0.0)) {
            throw std::invalid_argument("gate durations must be strictly positive");
        }
    }

    double of(const Gate& g) const { return g.is_two_qubit() ? t_2q : t_1q; }
};

/// Gates that run in parallel; duration is that of the slowest member.
struct Timeslice {
    std::vector<std::size_t> gate_indices;
    double duration = 0.0;
};

struct Schedule {
    std::vector<Timeslice> timeslices;
    double total_time = 0.0;
};

/// Greedy ASAP timeslices, one per depth layer. Gate indices inside a
/// slice keep circuit order.
inline Schedule schedule_asap(const Circuit& c, const GateDurations& durations) {
    const auto layers = asap_layers(c);
    std::size_t num_layers = 0;
    for (std::size_t l : layers) num_layers = std::max(num_layers, l + 1);

    Schedule s;
    s.timeslices.resize(num_layers);
    for (std::size_t i = 0; i < c.size(); ++i) {
        Timeslice& slice = s.timeslices[layers[i]];
        slice.gate_indices.push_back(i);
        slice.duration = std::max(slice.duration, durations.of(c[i]));
    }
    for (const Timeslice& slice : s.timeslices) s.total_time += slice.duration;
    return s;
}

}  // namespace qmlscale
