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
 * @file generators.hpp
 * @brief Circuit families: ZZ feature map, TwoLocal, kernel and
 * QNN circuits, tree tensor network, GHZ.
 *
 * Angles default to the fixed ramp 0.1, 0.2, ... so that generated circuits
 * are stable across platforms. A seeded source draws uniform angles in
 * [0, 2pi) instead. The fidelity model never looks at angles; they matter
 * only to the unitary oracle and to which single-qubit runs cancel.
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qmlscale/circuit.hpp"

namespace qmlscale {

enum class EntanglementStrategy { Linear, Circular, Sca, Pairwise };

inline constexpr std::array<EntanglementStrategy, 4> kAllStrategies = {
    EntanglementStrategy::Linear, EntanglementStrategy::Circular, EntanglementStrategy::Sca,
    EntanglementStrategy::Pairwise};

constexpr std::string_view strategy_name(EntanglementStrategy s) {
    switch (s) {
        case EntanglementStrategy::Linear: return "linear";
        case EntanglementStrategy::Circular: return "circular";
        case EntanglementStrategy::Sca: return "sca";
        case EntanglementStrategy::Pairwise: return "pairwise";
    }
    return "?";
}

inline EntanglementStrategy parse_strategy(std::string_view name) {
    for (auto s : kAllStrategies) {
        if (strategy_name(s) == name) return s;
    }
    throw std::invalid_argument("unknown entanglement strategy '" + std::string(name) + "'");
}

/// (control, target)
using QubitPair = std::pair<Qubit, Qubit>;

/// Pairs of one entanglement block, grouped into sublayers. Only Pairwise
/// produces more than one sublayer.
inline std::vector<std::vector<QubitPair>> entanglement_sublayers(EntanglementStrategy strategy,
                                                                  std::size_t n,
                                                                  std::size_t block_index) {
    if (n < 2) throw std::invalid_argument("entanglement needs at least 2 qubits");
    const auto N = static_cast<Qubit>(n);

    std::vector<QubitPair> linear;
    for (Qubit i = 0; i + 1 < N; ++i) linear.emplace_back(i, i + 1);

    switch (strategy) {
        case EntanglementStrategy::Linear:
            return {linear};
        case EntanglementStrategy::Circular:
        case EntanglementStrategy::Sca: {
            std::vector<QubitPair> pairs;
            // At n=2 the wrap edge duplicates (0,1) and is dropped.
            if (n > 2) pairs.emplace_back(N - 1, 0);
            pairs.insert(pairs.end(), linear.begin(), linear.end());
            if (strategy == EntanglementStrategy::Circular) return {pairs};

            const auto shift = static_cast<Qubit>(block_index % n);
            for (auto& [a, b] : pairs) {
                a = (a + N - shift) % N;
                b = (b + N - shift) % N;
            }
            if (block_index % 2 == 1) {
                for (auto& [a, b] : pairs) std::swap(a, b);
                std::reverse(pairs.begin(), pairs.end());
            }
            return {pairs};
        }
        case EntanglementStrategy::Pairwise: {
            std::vector<QubitPair> even, odd;
            for (Qubit i = 0; i + 1 < N; i += 2) even.emplace_back(i, i + 1);
            for (Qubit i = 1; i + 1 < N; i += 2) odd.emplace_back(i, i + 1);
            return {even, odd};
        }
    }
    throw std::logic_error("unreachable strategy");
}

/// Flattened pair list of one block, sublayers in order.
inline std::vector<QubitPair> entanglement_pairs(EntanglementStrategy strategy, std::size_t n,
                                                 std::size_t block_index) {
    std::vector<QubitPair> flat;
    for (auto& layer : entanglement_sublayers(strategy, n, block_index)) {
        flat.insert(flat.end(), layer.begin(), layer.end());
    }
    return flat;
}

/// Angle ramp 0.1*(offset+1), 0.1*(offset+2), ...
inline std::vector<double> ramp_angles(std::size_t count, std::size_t offset = 0) {
    std::vector<double> v(count);
    for (std::size_t i = 0; i < count; ++i) v[i] = 0.1 * static_cast<double>(offset + i + 1);
    return v;
}

/// Draws angles either from the fixed ramp or uniformly from [0, 2pi).
class AngleSource {
public:
    AngleSource() = default;
    explicit AngleSource(std::uint64_t seed) : rng_(std::mt19937_64(seed)) {}

    std::vector<double> next(std::size_t count) {
        std::vector<double> v;
        if (!rng_) {
            v = ramp_angles(count, offset_);
        } else {
            std::uniform_real_distribution<double> dist(0.0, 2.0 * std::numbers::pi);
            v.resize(count);
            for (double& a : v) a = dist(*rng_);
        }
        offset_ += count;
        return v;
    }

private:
    std::optional<std::mt19937_64> rng_;
    std::size_t offset_ = 0;
};

inline Circuit zz_feature_map(std::size_t n, EntanglementStrategy strategy, std::size_t reps,
                              const std::vector<double>& data) {
    if (n < 2) throw std::invalid_argument("zz_feature_map needs at least 2 qubits");
    if (reps < 1) throw std::invalid_argument("zz_feature_map needs reps >= 1");
    if (data.size() != n) {
        throw std::invalid_argument("zz_feature_map: data length " + std::to_string(data.size()) +
                                    " != qubit count " + std::to_string(n));
    }
    constexpr double pi = std::numbers::pi;
    Circuit c(n);
    for (std::size_t r = 0; r < reps; ++r) {
        for (Qubit q = 0; q < n; ++q) c.add(Gate::h(q));
        for (Qubit q = 0; q < n; ++q) c.add(Gate::p(q, 2.0 * data[q]));
        for (auto [i, j] : entanglement_pairs(strategy, n, r)) {
            c.add(Gate::cx(i, j));
            c.add(Gate::p(j, 2.0 * (pi - data[i]) * (pi - data[j])));
            c.add(Gate::cx(i, j));
        }
    }
    return c;
}

/// RY rotation layers interleaved with CX entanglement blocks; `reps`
/// blocks and reps+1 rotation layers.
inline Circuit two_local(std::size_t n, EntanglementStrategy strategy, std::size_t reps,
                         const std::vector<double>& params) {
    if (n < 2) throw std::invalid_argument("two_local needs at least 2 qubits");
    if (params.size() != n * (reps + 1)) {
        throw std::invalid_argument("two_local: expected " + std::to_string(n * (reps + 1)) +
                                    " parameters, got " + std::to_string(params.size()));
    }
    Circuit c(n);
    auto rotation_layer = [&](std::size_t layer) {
        for (Qubit q = 0; q < n; ++q) c.add(Gate::ry(q, params[layer * n + q]));
    };
    rotation_layer(0);
    for (std::size_t r = 0; r < reps; ++r) {
        for (auto [i, j] : entanglement_pairs(strategy, n, r)) c.add(Gate::cx(i, j));
        rotation_layer(r + 1);
    }
    return c;
}

/// U(x1) followed by U(x2)^dagger, single-rep ZZ feature map.
inline Circuit kernel_circuit(std::size_t n, EntanglementStrategy strategy, const std::vector<double>& x1,
                              const std::vector<double>& x2) {
    return compose(zz_feature_map(n, strategy, 1, x1), inverse(zz_feature_map(n, strategy, 1, x2)));
}

/// Linear single-rep ZZ feature map followed by a two-block TwoLocal ansatz.
inline Circuit qnn_circuit(std::size_t n, EntanglementStrategy strategy, AngleSource angles = {}) {
    if (n < 2) throw std::invalid_argument("qnn_circuit needs at least 2 qubits");
    constexpr std::size_t ansatz_reps = 2;
    auto x = angles.next(n);
    auto theta = angles.next(n * (ansatz_reps + 1));
    return compose(zz_feature_map(n, EntanglementStrategy::Linear, 1, x),
                   two_local(n, strategy, ansatz_reps, theta));
}

constexpr bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// Binary-tree ansatz: layer l pairs (i, i + 2^l) for i a multiple of
/// 2^(l+1). Each node applies RY on both qubits then CX(i + 2^l -> i).
/// Takes 2n - 1 angles.
inline Circuit ttn_circuit(std::size_t n, const std::vector<double>& params) {
    if (n < 2 || !is_power_of_two(n)) {
        throw std::invalid_argument("ttn_circuit needs a power-of-two qubit count >= 2, got " +
                                    std::to_string(n));
    }
    if (params.size() != 2 * n - 1) {
        throw std::invalid_argument("ttn_circuit: expected " + std::to_string(2 * n - 1) +
                                    " parameters, got " + std::to_string(params.size()));
    }
    Circuit c(n);
    std::size_t next = 0;
    for (std::size_t stride = 1; stride < n; stride *= 2) {
        for (std::size_t i = 0; i < n; i += 2 * stride) {
            const auto keep = static_cast<Qubit>(i);
            const auto drop = static_cast<Qubit>(i + stride);
            c.add(Gate::ry(keep, params[next++]));
            c.add(Gate::ry(drop, params[next++]));
            c.add(Gate::cx(drop, keep));
        }
    }
    c.add(Gate::ry(0, params[next]));
    return c;
}

inline Circuit ghz_circuit(std::size_t n) {
    if (n < 2) throw std::invalid_argument("ghz_circuit needs at least 2 qubits");
    Circuit c(n);
    c.add(Gate::h(0));
    for (Qubit q = 0; q + 1 < n; ++q) c.add(Gate::cx(q, q + 1));
    return c;
}

enum class FamilyKind { Kernel, Qnn, Ttn, Ghz };

/// A named circuit family. Strategy is meaningful for Kernel and Qnn only.
struct CircuitFamily {
    FamilyKind kind = FamilyKind::Ghz;
    EntanglementStrategy strategy = EntanglementStrategy::Linear;

    friend bool operator==(const CircuitFamily&, const CircuitFamily&) = default;

    bool has_strategy() const { return kind == FamilyKind::Kernel || kind == FamilyKind::Qnn; }

    std::string kind_name() const {
        switch (kind) {
            case FamilyKind::Kernel: return "kernel";
            case FamilyKind::Qnn: return "qnn";
            case FamilyKind::Ttn: return "ttn";
            case FamilyKind::Ghz: return "ghz";
        }
        return "?";
    }

    /// CLI name, e.g. "kernel-circular", "ttn".
    std::string name() const {
        if (!has_strategy()) return kind_name();
        return kind_name() + "-" + std::string(strategy_name(strategy));
    }

    /// Whether n is an admissible qubit count for this family.
    bool accepts(std::size_t n) const {
        if (kind == FamilyKind::Ttn) return n >= 2 && is_power_of_two(n);
        return n >= 2;
    }

    static CircuitFamily kernel(EntanglementStrategy s) { return {FamilyKind::Kernel, s}; }
    static CircuitFamily qnn(EntanglementStrategy s) { return {FamilyKind::Qnn, s}; }
    static CircuitFamily ttn() { return {FamilyKind::Ttn, EntanglementStrategy::Linear}; }
    static CircuitFamily ghz() { return {FamilyKind::Ghz, EntanglementStrategy::Linear}; }
};

inline CircuitFamily parse_family(std::string_view name) {
    if (name == "ttn") return CircuitFamily::ttn();
    if (name == "ghz") return CircuitFamily::ghz();
    auto dash = name.find('-');
    if (dash != std::string_view::npos) {
        auto head = name.substr(0, dash);
        auto tail = name.substr(dash + 1);
        if (head == "kernel") return CircuitFamily::kernel(parse_strategy(tail));
        if (head == "qnn") return CircuitFamily::qnn(parse_strategy(tail));
    }
    throw std::invalid_argument("unknown circuit family '" + std::string(name) + "'");
}

/// All ten families, in canonical order.
inline std::vector<CircuitFamily> all_families() {
    std::vector<CircuitFamily> out;
    for (auto s : kAllStrategies) out.push_back(CircuitFamily::kernel(s));
    for (auto s : kAllStrategies) out.push_back(CircuitFamily::qnn(s));
    out.push_back(CircuitFamily::ttn());
    out.push_back(CircuitFamily::ghz());
    return out;
}

/// Builds the family's circuit on n qubits. Without a seed the angle ramp is
/// used; kernel circuits take x1 from the ramp start and x2 from its
/// continuation so the two halves never cancel.
inline Circuit build_circuit(const CircuitFamily& family, std::size_t n,
                             std::optional<std::uint64_t> seed = std::nullopt) {
    AngleSource angles = seed ? AngleSource(*seed) : AngleSource();
    switch (family.kind) {
        case FamilyKind::Kernel: {
            auto x1 = angles.next(n);
            auto x2 = angles.next(n);
            return kernel_circuit(n, family.strategy, x1, x2);
        }
        case FamilyKind::Qnn:
            return qnn_circuit(n, family.strategy, std::move(angles));
        case FamilyKind::Ttn:
            if (n < 2 || !is_power_of_two(n)) {
                throw std::invalid_argument("ttn_circuit needs a power-of-two qubit count >= 2, got " +
                                            std::to_string(n));
            }
            return ttn_circuit(n, angles.next(2 * n - 1));
        case FamilyKind::Ghz:
            return ghz_circuit(n);
    }
    throw std::logic_error("unreachable family");
}

}  // namespace qmlscale
