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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qmlscale/circuit.hpp"

namespace qmlscale {

enum class TopologyKind { Linear, Ring, Grid, Star };

inline constexpr std::array<TopologyKind, 4> kAllTopologies = {TopologyKind::Linear, TopologyKind::Ring,
                                                              TopologyKind::Grid, TopologyKind::Star};

constexpr std::string_view topology_name(TopologyKind k) {
    switch (k) {
        case TopologyKind::Linear: return "linear";
        case TopologyKind::Ring: return "ring";
        case TopologyKind::Grid: return "grid";
        case TopologyKind::Star: return "star";
    }
    return "?";
}

inline TopologyKind parse_topology(std::string_view name) {
    for (auto k : kAllTopologies) {
        if (topology_name(k) == name) return k;
    }
    throw std::invalid_argument("unknown topology '" + std::string(name) + "'");
}

using Edge = std::pair<Qubit, Qubit>;

/// Undirected coupling map. Edges are stored with first < second, sorted.
class CouplingGraph {
public:
    CouplingGraph(std::size_t n, std::vector<Edge> edges) : n_(n), adjacency_(n) {
        for (auto [a, b] : edges) {
            if (a >= n || b >= n) throw std::out_of_range("coupling edge outside device");
            if (a == b) throw std::invalid_argument("coupling self-loop on qubit " + std::to_string(a));
            edges_.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
        for (auto [a, b] : edges_) {
            adjacency_[a].push_back(b);
            adjacency_[b].push_back(a);
        }
        for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
    }

    std::size_t num_qubits() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Qubit>& neighbors(Qubit q) const { return adjacency_[q]; }

    bool has_edge(Qubit a, Qubit b) const {
        const auto& nbrs = adjacency_[a];
        return std::binary_search(nbrs.begin(), nbrs.end(), b);
    }

    bool connected() const {
        if (n_ == 0) return true;
        std::vector<char> seen(n_, 0);
        std::vector<Qubit> stack{0};
        seen[0] = 1;
        std::size_t count = 1;
        while (!stack.empty()) {
            Qubit u = stack.back();
            stack.pop_back();
            for (Qubit v : adjacency_[u]) {
                if (!seen[v]) {
                    seen[v] = 1;
                    ++count;
                    stack.push_back(v);
                }
            }
        }
        return count == n_;
    }

private:
    std::size_t n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Qubit>> adjacency_;
};

struct GridShape {
    std::size_t rows;
    std::size_t cols;
};

/// rows = floor(sqrt n), cols = ceil(n / rows); the last row may be partial.
inline GridShape grid_shape(std::size_t n) {
    auto rows = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
    while (rows * rows > n) --rows;
    while ((rows + 1) * (rows + 1) <= n) ++rows;
    return {rows, (n + rows - 1) / rows};
}

inline CouplingGraph build_topology(TopologyKind kind, std::size_t n) {
    if (n < 2) throw std::invalid_argument("topology needs at least 2 qubits");
    const auto N = static_cast<Qubit>(n);
    std::vector<Edge> edges;
    switch (kind) {
        case TopologyKind::Linear:
        case TopologyKind::Ring:
            for (Qubit i = 0; i + 1 < N; ++i) edges.emplace_back(i, i + 1);
            if (kind == TopologyKind::Ring && n > 2) edges.emplace_back(N - 1, 0);
            break;
        case TopologyKind::Grid: {
            const auto [rows, cols] = grid_shape(n);
            for (std::size_t idx = 0; idx < n; ++idx) {
                const std::size_t c = idx % cols;
                if (c + 1 < cols && idx + 1 < n) edges.emplace_back(idx, idx + 1);
                if (idx + cols < n) edges.emplace_back(idx, idx + cols);
            }
            break;
        }
        case TopologyKind::Star:
            for (Qubit i = 1; i < N; ++i) edges.emplace_back(0, i);
            break;
    }
    return CouplingGraph(n, std::move(edges));
}

/// All-pairs hop distances, stored row-major.
class DistanceMatrix {
public:
    using value_type = std::uint32_t;

    explicit DistanceMatrix(const CouplingGraph& g) : n_(g.num_qubits()), d_(n_ * n_, kUnreachable) {
        std::vector<Qubit> queue(n_);
        for (Qubit src = 0; src < n_; ++src) {
            value_type* row = &d_[src * n_];
            row[src] = 0;
            std::size_t head = 0, tail = 0;
            queue[tail++] = src;
            while (head < tail) {
                Qubit u = queue[head++];
                for (Qubit v : g.neighbors(u)) {
                    if (row[v] == kUnreachable) {
                        row[v] = row[u] + 1;
                        queue[tail++] = v;
                    }
                }
            }
            if (tail != n_) throw std::invalid_argument("coupling graph is disconnected");
        }
    }

    std::size_t size() const { return n_; }
    value_type operator()(Qubit a, Qubit b) const { return d_[a * n_ + b]; }

private:
    static constexpr value_type kUnreachable = std::numeric_limits<value_type>::max();
    std::size_t n_;
    std::vector<value_type> d_;
};

inline DistanceMatrix distance_matrix(const CouplingGraph& g) { return DistanceMatrix(g); }

}  // namespace qmlscale
