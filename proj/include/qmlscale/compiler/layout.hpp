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
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qmlscale/circuit.hpp"

namespace qmlscale {

/// Bijection between virtual (circuit) qubits and physical (device) qubits.
/// Both sides have the device's size; virtual qubits beyond the circuit's
/// register are idle ancillas.
class Layout {
public:
    Layout() = default;

    explicit Layout(std::vector<Qubit> virtual_to_physical) : v2p_(std::move(virtual_to_physical)) {
        p2v_.assign(v2p_.size(), kUnset);
        for (Qubit v = 0; v < v2p_.size(); ++v) {
            const Qubit p = v2p_[v];
            if (p >= v2p_.size() || p2v_[p] != kUnset) {
                throw std::invalid_argument("layout is not a bijection");
            }
            p2v_[p] = v;
        }
    }

    std::size_t size() const { return v2p_.size(); }
    Qubit physical(Qubit v) const { return v2p_[v]; }
    Qubit virtual_of(Qubit p) const { return p2v_[p]; }
    const std::vector<Qubit>& virtual_to_physical() const { return v2p_; }
    const std::vector<Qubit>& physical_to_virtual() const { return p2v_; }

    /// Exchanges the virtual qubits sitting on physical qubits a and b.
    void swap_physical(Qubit a, Qubit b) {
        std::swap(p2v_[a], p2v_[b]);
        v2p_[p2v_[a]] = a;
        v2p_[p2v_[b]] = b;
    }

    /// this followed by other, as maps on virtual indices: v -> other(this(v)).
    Layout then(const Layout& other) const {
        if (other.size() != size()) throw std::invalid_argument("layout size mismatch");
        std::vector<Qubit> out(size());
        for (Qubit v = 0; v < size(); ++v) out[v] = other.v2p_[v2p_[v]];
        return Layout(std::move(out));
    }

    Layout inverse() const { return Layout(p2v_); }

    friend bool operator==(const Layout& a, const Layout& b) { return a.v2p_ == b.v2p_; }

private:
    static constexpr Qubit kUnset = static_cast<Qubit>(-1);
    std::vector<Qubit> v2p_;
    std::vector<Qubit> p2v_;
};

/// q_i -> Q_i on a device of `device_qubits`.
inline Layout trivial_layout(std::size_t circuit_qubits, std::size_t device_qubits) {
    if (device_qubits < circuit_qubits) {
        throw std::invalid_argument("device has " + std::to_string(device_qubits) + " qubits, circuit needs " +
                                    std::to_string(circuit_qubits));
    }
    std::vector<Qubit> ids(device_qubits);
    std::iota(ids.begin(), ids.end(), Qubit{0});
    return Layout(std::move(ids));
}

inline Layout trivial_layout(std::size_t n) { return trivial_layout(n, n); }

}  // namespace qmlscale
