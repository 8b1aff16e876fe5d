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
 * @file sabre.hpp
 * @brief SABRE SWAP routing with front-layer and lookahead scoring.
 *
 * The router walks the per-qubit dependency DAG of the input circuit. Gates
 * whose predecessors have all been emitted form the front layer. Executable
 * front gates (any 1q gate, any 2q gate on coupled physical qubits) are
 * emitted eagerly. When the front is blocked, every coupling edge touching a
 * physical qubit of a blocked gate is scored as
 *
 *   max(decay(u), decay(v)) * ( sum_F D / |F| + W * sum_E D / max(1, |E|) )
 *
 * with distances taken under the mapping after the tentative swap, and the
 * lowest score wins (ties go to the lexicographically smallest edge). E is
 * the lookahead set of the next two-qubit successors of the front.
 *
 * A run of `stall_limit` swaps with no gate emitted triggers a fallback that
 * walks the lowest-indexed front gate together along a shortest path.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmlscale/circuit.hpp"
#include "qmlscale/compiler/layout.hpp"
#include "qmlscale/topology.hpp"

namespace qmlscale {

struct SabreConfig {
    std::size_t extended_set_size = 20;
    double lookahead_weight = 0.5;
    double decay_increment = 0.001;
    std::size_t decay_reset_interval = 5;
    /// Echoed in run manifests. Routing itself uses deterministic tie-breaks.
    std::uint64_t seed = 0;
    /// Defaults to 3 * device qubits when unset.
    std::optional<std::size_t> stall_limit;

    void validate() const {
        if (!(lookahead_weight >= 0.0 && lookahead_weight <= 1.0)) {
            throw std::invalid_argument("sabre: lookahead weight must lie in [0, 1]");
        }
        if (!(decay_increment >= 0.0)) throw std::invalid_argument("sabre: decay increment must be >= 0");
        if (decay_reset_interval == 0) throw std::invalid_argument("sabre: decay reset interval must be >= 1");
        if (stall_limit && *stall_limit == 0) throw std::invalid_argument("sabre: stall limit must be >= 1");
    }
};

struct RoutingResult {
    Circuit circuit;  // on physical qubits, SWAP gates not expanded
    Layout final_layout;
    std::size_t swap_count = 0;
};

namespace detail {

class SabreRouter {
public:
    SabreRouter(const Circuit& circuit, const CouplingGraph& graph, const DistanceMatrix& dist,
                const Layout& layout, const SabreConfig& cfg)
        : in_(circuit),
          graph_(graph),
          dist_(dist),
          cfg_(cfg),
          layout_(layout),
          out_(graph.num_qubits()),
          stall_limit_(cfg.stall_limit.value_or(3 * graph.num_qubits())),
          decay_(graph.num_qubits(), 1.0),
          mark_(circuit.size(), 0),
          touches_(graph.num_qubits()) {
        build_dag();
    }

    RoutingResult run() {
        out_.reserve(in_.size() + in_.size() / 4);
        for (std::uint32_t g = 0; g < in_.size(); ++g) {
            if (pending_preds_[g] == 0) front_.push_back(g);
        }
        std::size_t stalled = 0;
        while (true) {
            if (advance()) {
                stalled = 0;
                reset_decay();
            }
            if (front_.empty()) break;
            if (stalled >= stall_limit_) {
                force_route(front_.front());
                stalled = 0;
                reset_decay();
                continue;
            }
            const Edge e = choose_swap();
            apply_swap(e.first, e.second);
            decay_[e.first] += cfg_.decay_increment;
            decay_[e.second] += cfg_.decay_increment;
            if (swaps_ % cfg_.decay_reset_interval == 0) reset_decay();
            ++stalled;
        }
        return RoutingResult{std::move(out_), layout_, swaps_};
    }

private:
    void build_dag() {
        const std::size_t m = in_.size();
        pending_preds_.assign(m, 0);
        successors_.assign(m, {kNone, kNone});
        std::vector<std::uint32_t> last(in_.num_qubits(), kNone);
        for (std::uint32_t g = 0; g < m; ++g) {
            const Gate& gate = in_[g];
            for (std::size_t k = 0; k < gate.num_qubits(); ++k) {
                const std::uint32_t prev = last[gate.qubits[k]];
                if (prev != kNone) {
                    auto& succ = successors_[prev];
                    if (succ[0] != g && succ[1] != g) {
                        (succ[0] == kNone ? succ[0] : succ[1]) = g;
                        ++pending_preds_[g];
                    }
                }
                last[gate.qubits[k]] = g;
            }
        }
    }

    bool executable(const Gate& g) const {
        if (!g.is_two_qubit()) return true;
        return graph_.has_edge(layout_.physical(g.qubits[0]), layout_.physical(g.qubits[1]));
    }

    void emit(const Gate& g) {
        Gate mapped = g;
        mapped.qubits[0] = layout_.physical(g.qubits[0]);
        if (g.is_two_qubit()) mapped.qubits[1] = layout_.physical(g.qubits[1]);
        out_.add(mapped);
    }

    /// Emits executable gates until the front is blocked or empty.
    bool advance() {
        bool any = false;
        std::vector<std::uint32_t> pending;
        pending.swap(front_);
        std::vector<std::uint32_t> next;
        while (!pending.empty()) {
            std::sort(pending.begin(), pending.end());
            next.clear();
            for (std::uint32_t g : pending) {
                if (!executable(in_[g])) {
                    front_.push_back(g);
                    continue;
                }
                emit(in_[g]);
                any = true;
                for (std::uint32_t s : successors_[g]) {
                    if (s != kNone && --pending_preds_[s] == 0) next.push_back(s);
                }
            }
            pending.swap(next);
        }
        std::sort(front_.begin(), front_.end());
        return any;
    }

    void reset_decay() { std::fill(decay_.begin(), decay_.end(), 1.0); }

    void apply_swap(Qubit a, Qubit b) {
        out_.add(Gate::swap(a, b));
        layout_.swap_physical(a, b);
        ++swaps_;
    }

    std::uint64_t gate_distance(std::uint32_t g) const {
        const Gate& gate = in_[g];
        return dist_(layout_.physical(gate.qubits[0]), layout_.physical(gate.qubits[1]));
    }

    void collect_extended_set() {
        extended_.clear();
        if (cfg_.extended_set_size == 0) return;
        ++epoch_;
        std::vector<std::uint32_t> queue(front_.begin(), front_.end());
        for (std::uint32_t g : front_) mark_[g] = epoch_;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (std::uint32_t s : successors_[queue[head]]) {
                if (s == kNone || mark_[s] == epoch_) continue;
                mark_[s] = epoch_;
                if (in_[s].is_two_qubit()) {
                    extended_.push_back(s);
                    if (extended_.size() >= cfg_.extended_set_size) return;
                }
                queue.push_back(s);
            }
        }
    }

    Edge choose_swap() {
        collect_extended_set();

        // Index front and extended gates by the physical qubits they occupy,
        // so a candidate swap only re-evaluates the gates it moves.
        std::vector<Qubit> dirty;
        auto index_gate = [&](std::uint32_t g, bool in_front) {
            for (std::size_t k = 0; k < 2; ++k) {
                const Qubit p = layout_.physical(in_[g].qubits[k]);
                if (touches_[p].empty()) dirty.push_back(p);
                touches_[p].push_back({g, in_front});
            }
        };
        std::uint64_t front_sum = 0;
        std::uint64_t ext_sum = 0;
        for (std::uint32_t g : front_) {
            front_sum += gate_distance(g);
            index_gate(g, true);
        }
        for (std::uint32_t g : extended_) {
            ext_sum += gate_distance(g);
            index_gate(g, false);
        }

        std::vector<Edge> candidates;
        for (std::uint32_t g : front_) {
            for (std::size_t k = 0; k < 2; ++k) {
                const Qubit p = layout_.physical(in_[g].qubits[k]);
                for (Qubit nb : graph_.neighbors(p)) candidates.emplace_back(std::min(p, nb), std::max(p, nb));
            }
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

        const double front_norm = 1.0 / static_cast<double>(front_.size());
        const double ext_norm =
            cfg_.lookahead_weight / static_cast<double>(std::max<std::size_t>(1, extended_.size()));

        Edge best = candidates.front();
        double best_score = 0.0;
        bool have_best = false;
        for (const Edge& e : candidates) {
            const auto [u, v] = e;
            auto moved = [&](Qubit p) { return p == u ? v : (p == v ? u : p); };
            std::int64_t df = 0, de = 0;
            auto account = [&](const Touch& t) {
                const Gate& gate = in_[t.gate];
                const Qubit pa = layout_.physical(gate.qubits[0]);
                const Qubit pb = layout_.physical(gate.qubits[1]);
                const std::int64_t delta = static_cast<std::int64_t>(dist_(moved(pa), moved(pb))) -
                                           static_cast<std::int64_t>(dist_(pa, pb));
                (t.in_front ? df : de) += delta;
            };
            for (const Touch& t : touches_[u]) account(t);
            for (const Touch& t : touches_[v]) {
                const Gate& gate = in_[t.gate];
                const bool seen = layout_.physical(gate.qubits[0]) == u || layout_.physical(gate.qubits[1]) == u;
                if (!seen) account(t);
            }
            const double score =
                std::max(decay_[u], decay_[v]) *
                (front_norm * static_cast<double>(static_cast<std::int64_t>(front_sum) + df) +
                 ext_norm * static_cast<double>(static_cast<std::int64_t>(ext_sum) + de));
            if (!have_best || score < best_score) {
                best = e;
                best_score = score;
                have_best = true;
            }
        }
        for (Qubit p : dirty) touches_[p].clear();
        return best;
    }

    /// Walks the first virtual qubit of gate g along a shortest path until
    /// the gate becomes executable.
    void force_route(std::uint32_t g) {
        Qubit pa = layout_.physical(in_[g].qubits[0]);
        const Qubit pb = layout_.physical(in_[g].qubits[1]);
        while (dist_(pa, pb) > 1) {
            Qubit step = pa;
            for (Qubit nb : graph_.neighbors(pa)) {
                if (dist_(nb, pb) + 1 == dist_(pa, pb)) {
                    step = nb;
                    break;
                }
            }
            apply_swap(std::min(pa, step), std::max(pa, step));
            pa = step;
        }
    }

    struct Touch {
        std::uint32_t gate;
        bool in_front;
    };

    static constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);

    const Circuit& in_;
    const CouplingGraph& graph_;
    const DistanceMatrix& dist_;
    const SabreConfig& cfg_;
    Layout layout_;
    Circuit out_;
    std::size_t stall_limit_;
    std::size_t swaps_ = 0;

    std::vector<std::uint32_t> pending_preds_;
    std::vector<std::array<std::uint32_t, 2>> successors_;
    std::vector<std::uint32_t> front_;
    std::vector<std::uint32_t> extended_;
    std::vector<double> decay_;
    std::vector<std::uint32_t> mark_;
    std::uint32_t epoch_ = 0;
    std::vector<std::vector<Touch>> touches_;
};

}  // namespace detail

/// Routes `circuit` onto `graph` starting from `layout`. The returned circuit
/// acts on physical qubits and contains the inserted SWAP gates.
inline RoutingResult sabre_route(const Circuit& circuit, const CouplingGraph& graph, const DistanceMatrix& dist,
                                 const Layout& layout, const SabreConfig& cfg = {}) {
    cfg.validate();
    if (circuit.num_qubits() > graph.num_qubits()) {
        throw std::invalid_argument("circuit has " + std::to_string(circuit.num_qubits()) +
                                    " qubits but device only " + std::to_string(graph.num_qubits()));
    }
    if (layout.size() != graph.num_qubits()) throw std::invalid_argument("layout size does not match device");
    if (dist.size() != graph.num_qubits()) throw std::invalid_argument("distance matrix does not match device");
    return detail::SabreRouter(circuit, graph, dist, layout, cfg).run();
}

inline RoutingResult sabre_route(const Circuit& circuit, const CouplingGraph& graph, const Layout& layout,
                                 const SabreConfig& cfg = {}) {
    const DistanceMatrix dist(graph);
    return sabre_route(circuit, graph, dist, layout, cfg);
}

}  // namespace qmlscale
