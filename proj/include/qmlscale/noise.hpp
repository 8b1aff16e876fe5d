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
 * @file noise.hpp
 * @brief Analytical per-qubit fidelity under depolarizing gate noise and
 * idle decoherence.
 *
 * Every qubit starts at fidelity 1. The compiled circuit is cut into ASAP
 * timeslices; within a slice each U3 applies the single-qubit depolarizing
 * update, each CX the correlated two-qubit update, and then every qubit
 * (busy or idle) decays by exp(-t/T1) * (exp(-t/T2) + 1) / 2 for the slice
 * duration t. Circuit fidelity is the product over qubits.
 */

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmlscale/circuit.hpp"
#include "qmlscale/compiler/basis.hpp"
#include "qmlscale/compiler/compile.hpp"
#include "qmlscale/schedule.hpp"

namespace qmlscale {

/// Error strengths and timings. Times in seconds.
struct NoiseParams {
    double p1 = 7.42e-5;
    double p2 = 7e-4;
    double p_ent = 0.0;
    double t_1q = 7.9e-9;
    double t_2q = 30e-9;
    double T1 = 1.2e-3;
    double T2 = 1.16e-3;

    void validate() const {
        auto unit = [](double v) { return v >= 0.0 && v <= 1.0; };
        if (!unit(p1) || !unit(p2) || !unit(p_ent)) {
            throw std::invalid_argument("noise: p1, p2 and p_ent must lie in [0, 1]");
        }
        if (!(t_1q > 0) || !(t_2q > 0) || !(T1 > 0) || !(T2 > 0)) {
            throw std::invalid_argument("noise: gate and coherence times must be positive");
        }
        if (T2 > 2 * T1) throw std::invalid_argument("noise: T2 must not exceed 2*T1");
    }

    GateDurations durations() const { return GateDurations(t_1q, t_2q); }

    friend bool operator==(const NoiseParams&, const NoiseParams&) = default;
};

/// Error rates and gate times divided by delta; p_ent, T1, T2 unchanged.
inline NoiseParams apply_improvement(const NoiseParams& params, double delta) {
    if (!(delta >= 1.0)) throw std::invalid_argument("improvement factor must be >= 1");
    NoiseParams out = params;
    out.p1 /= delta;
    out.p2 /= delta;
    out.t_1q /= delta;
    out.t_2q /= delta;
    return out;
}

/// Per-qubit fidelities, all starting at 1.
class FidelityState {
public:
    explicit FidelityState(std::size_t n) : f_(n, 1.0) {}
    explicit FidelityState(std::vector<double> values) : f_(std::move(values)) {}

    std::size_t size() const { return f_.size(); }
    double operator[](std::size_t q) const { return f_[q]; }
    const std::vector<double>& values() const { return f_; }

    double product() const {
        double p = 1.0;
        for (double v : f_) p *= v;
        return p;
    }

    /// F <- (1 - p) F + (1 - p_ent) p / 2
    void depolarize_1q(Qubit q, double p, double p_ent) { f_[q] = (1.0 - p) * f_[q] + (1.0 - p_ent) * p / 2.0; }

    /// F_k <- sqrt(1 - p) F_k + (1 - p_ent) eta for k in {a, b}, with
    /// eta = (sqrt((1-p) S^2 + p) - sqrt(1-p) S) / 2 and S = F_a + F_b taken
    /// before the update. eta is evaluated in the cancellation-free form
    /// p / (2 (sqrt((1-p) S^2 + p) + sqrt(1-p) S)).
    void depolarize_2q(Qubit a, Qubit b, double p, double p_ent) {
        const double s = f_[a] + f_[b];
        const double root = std::sqrt(1.0 - p);
        const double denom = std::sqrt((1.0 - p) * s * s + p) + root * s;
        const double eta = denom > 0.0 ? p / (2.0 * denom) : 0.0;
        const double bonus = (1.0 - p_ent) * eta;
        f_[a] = root * f_[a] + bonus;
        f_[b] = root * f_[b] + bonus;
    }

    /// Multiplies every qubit by the same factor.
    void scale_all(double factor) {
        for (double& v : f_) v *= factor;
    }

private:
    std::vector<double> f_;
};

/// exp(-t/T1) * (exp(-t/T2) + 1) / 2; exactly 1 when t == 0 or T1, T2 are infinite.
inline double decoherence_factor(double t_layer, const NoiseParams& params) {
    return std::exp(-t_layer / params.T1) * 0.5 * (std::exp(-t_layer / params.T2) + 1.0);
}

inline FidelityState apply_1q(FidelityState state, Qubit q, const NoiseParams& params) {
    state.depolarize_1q(q, params.p1, params.p_ent);
    return state;
}

inline FidelityState apply_2q(FidelityState state, Qubit a, Qubit b, const NoiseParams& params) {
    if (a == b) throw std::invalid_argument("apply_2q needs distinct qubits");
    state.depolarize_2q(a, b, params.p2, params.p_ent);
    return state;
}

inline FidelityState apply_decoherence(FidelityState state, double t_layer, const NoiseParams& params) {
    if (!(t_layer >= 0.0)) throw std::invalid_argument("timeslice duration must be >= 0");
    state.scale_all(decoherence_factor(t_layer, params));
    return state;
}

struct FidelityResult {
    double total = 1.0;
    std::vector<double> per_qubit;
    double total_time = 0.0;
};

/// Fidelity of a {U3, CX} circuit; every qubit of the register decoheres.
inline FidelityResult estimate_fidelity(const Circuit& circuit, const NoiseParams& params) {
    params.validate();
    if (!is_basis_circuit(circuit)) throw std::invalid_argument("estimate_fidelity expects a {U3, CX} circuit");
    const Schedule schedule = schedule_asap(circuit, params.durations());
    FidelityState state(circuit.num_qubits());
    for (const Timeslice& slice : schedule.timeslices) {
        for (std::size_t idx : slice.gate_indices) {
            const Gate& g = circuit[idx];
            if (g.is_two_qubit()) {
                state.depolarize_2q(g.qubits[0], g.qubits[1], params.p2, params.p_ent);
            } else {
                state.depolarize_1q(g.qubits[0], params.p1, params.p_ent);
            }
        }
        state.scale_all(decoherence_factor(slice.duration, params));
    }
    return FidelityResult{state.product(), state.values(), schedule.total_time};
}

inline FidelityResult estimate_fidelity(const CompiledCircuit& compiled, const NoiseParams& params) {
    return estimate_fidelity(compiled.circuit, params);
}

}  // namespace qmlscale
