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
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>

#include "qmlscale/circuit.hpp"
#include "qmlscale/compiler/basis.hpp"
#include "qmlscale/compiler/layout.hpp"
#include "qmlscale/compiler/optimize.hpp"
#include "qmlscale/compiler/sabre.hpp"
#include "qmlscale/topology.hpp"

namespace qmlscale {

/// Post-compilation resources. Percentages are 0 when the pre value is 0.
struct ResourceMetrics {
    std::size_t swap_count = 0;
    std::size_t depth_pre = 0;
    std::size_t depth_post = 0;
    double depth_increase_pct = 0.0;
    std::size_t twoq_pre = 0;
    std::size_t twoq_post = 0;
    double twoq_overhead_pct = 0.0;

    friend bool operator==(const ResourceMetrics&, const ResourceMetrics&) = default;
};

inline double percent_change(std::size_t before, std::size_t after) {
    if (before == 0) return 0.0;
    return 100.0 * (static_cast<double>(after) - static_cast<double>(before)) / static_cast<double>(before);
}

inline ResourceMetrics make_metrics(std::size_t swaps, const Circuit& pre, const Circuit& post) {
    ResourceMetrics m;
    m.swap_count = swaps;
    m.depth_pre = depth(pre);
    m.depth_post = depth(post);
    m.depth_increase_pct = percent_change(m.depth_pre, m.depth_post);
    m.twoq_pre = count_gates(pre).two_qubit;
    m.twoq_post = count_gates(post).two_qubit;
    m.twoq_overhead_pct = percent_change(m.twoq_pre, m.twoq_post);
    return m;
}

struct CompiledCircuit {
    Circuit circuit;  // {U3, CX} on physical qubits
    Layout initial_layout;
    Layout final_layout;
    ResourceMetrics metrics;
};

/// decompose -> trivial layout -> SABRE -> SWAP expansion -> peephole.
/// Pre metrics come from the decomposed input, post metrics from the final
/// circuit; swap_count is the router's count before 3-CX expansion.
inline CompiledCircuit compile(const Circuit& circuit, const CouplingGraph& graph, const DistanceMatrix& dist,
                               const SabreConfig& cfg = {}) {
    const Circuit basis = decompose_to_basis(circuit);
    const Layout initial = trivial_layout(circuit.num_qubits(), graph.num_qubits());
    RoutingResult routed = sabre_route(basis, graph, dist, initial, cfg);
    Circuit final_circuit = optimize(decompose_to_basis(routed.circuit));
    ResourceMetrics metrics = make_metrics(routed.swap_count, basis, final_circuit);
    return CompiledCircuit{std::move(final_circuit), initial, std::move(routed.final_layout), metrics};
}

inline CompiledCircuit compile(const Circuit& circuit, const CouplingGraph& graph, const SabreConfig& cfg = {}) {
    const DistanceMatrix dist(graph);
    return compile(circuit, graph, dist, cfg);
}

/// True when every two-qubit gate of c sits on a coupling edge.
inline bool respects_coupling(const Circuit& c, const CouplingGraph& graph) {
    for (const Gate& g : c) {
        if (g.is_two_qubit() && !graph.has_edge(g.qubits[0], g.qubits[1])) return false;
    }
    return true;
}

inline std::string metrics_header(const ResourceMetrics& m) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "# swaps=%zu, depth_pre=%zu, depth_post=%zu, twoq_pre=%zu, twoq_post=%zu",
                  m.swap_count, m.depth_pre, m.depth_post, m.twoq_pre, m.twoq_post);
    return buf;
}

/// Metrics header line followed by the circuit dump.
inline void dump(std::ostream& os, const CompiledCircuit& cc) {
    os << metrics_header(cc.metrics) << '\n';
    dump(os, cc.circuit);
}

}  // namespace qmlscale
