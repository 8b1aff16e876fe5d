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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "qmlscale/compiler.hpp"
#include "qmlscale/generators.hpp"
#include "qmlscale/noise.hpp"
#include "qmlscale/random_circuit.hpp"

using namespace qmlscale;

namespace {

// Reference values below were computed once with 50-digit arithmetic and
// frozen; the implementation under test never produced them.
constexpr double kOneQubitStep = 0.9999629;
constexpr double kTwoQubitStep = 0.9997374655378280860519421;
constexpr double kDecoherence30ns = 0.9999620697684924895041002;
constexpr double kSingleU3OnTen = 0.9998630236943936192204421;
constexpr double kMixedA = 0.8997570245455841002552777;
constexpr double kMixedB = 0.7997920306727287886057105;

NoiseParams noiseless_timing() {
    NoiseParams p;
    p.T1 = std::numeric_limits<double>::infinity();
    p.T2 = std::numeric_limits<double>::infinity();
    return p;
}

}  // namespace

TEST(NoiseTest, FrozenSingleQubitUpdate) {
    const NoiseParams p;
    EXPECT_NEAR(apply_1q(FidelityState(1), 0, p)[0], kOneQubitStep, 1e-15);
}

TEST(NoiseTest, FrozenTwoQubitUpdate) {
    const NoiseParams p;
    const FidelityState s = apply_2q(FidelityState(2), 0, 1, p);
    EXPECT_NEAR(s[0], kTwoQubitStep, 1e-15);
    EXPECT_NEAR(s[1], kTwoQubitStep, 1e-15);
    EXPECT_NEAR(s.product(), 0.999475, 1e-12);

    NoiseParams q;
    q.p_ent = 0.3;
    const FidelityState m = apply_2q(FidelityState({0.9, 0.8}), 0, 1, q);
    EXPECT_NEAR(m[0], kMixedA, 1e-15);
    EXPECT_NEAR(m[1], kMixedB, 1e-15);
}

TEST(NoiseTest, FrozenDecoherence) {
    const NoiseParams p;
    EXPECT_NEAR(decoherence_factor(30e-9, p), kDecoherence30ns, 1e-15);
    EXPECT_EQ(decoherence_factor(0.0, p), 1.0);
    EXPECT_EQ(decoherence_factor(1e-6, noiseless_timing()), 1.0);
}

TEST(NoiseTest, FrozenCircuitValue) {
    Circuit c(10);
    c.add(Gate::u3(3, 0.1, 0.2, 0.3));
    EXPECT_NEAR(estimate_fidelity(c, NoiseParams{}).total, kSingleU3OnTen, 1e-14);
}

TEST(NoiseTest, EmptyAndNoiselessCircuits) {
    EXPECT_EQ(estimate_fidelity(Circuit(5), NoiseParams{}).total, 1.0);
    NoiseParams ideal = noiseless_timing();
    ideal.p1 = 0;
    ideal.p2 = 0;
    const Circuit c = decompose_to_basis(build_circuit(CircuitFamily::qnn(EntanglementStrategy::Sca), 12));
    EXPECT_EQ(estimate_fidelity(c, ideal).total, 1.0);
}

TEST(NoiseTest, TwoQubitUpdateStaysInUnitInterval) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        const double fa = u(rng), fb = u(rng), p = u(rng), pe = u(rng);
        FidelityState s({fa, fb});
        s.depolarize_2q(0, 1, p, pe);
        EXPECT_GE(s[0], 0.0);
        EXPECT_LE(s[0], 1.0 + 1e-15);
        EXPECT_GE(s[1], 0.0);
        EXPECT_LE(s[1], 1.0 + 1e-15);
        // Cancellation-free eta agrees with the direct formula where that one is accurate.
        const double S = fa + fb;
        const double eta = (std::sqrt((1 - p) * S * S + p) - std::sqrt(1 - p) * S) / 2;
        EXPECT_NEAR(s[0], std::sqrt(1 - p) * fa + (1 - pe) * eta, 1e-12);
    }
    // For F = 1 and small p the loss is 3p/8 to first order.
    FidelityState tiny({1.0, 1.0});
    tiny.depolarize_2q(0, 1, 1e-10, 0.0);
    EXPECT_NEAR((1.0 - tiny[0]) / 3.75e-11, 1.0, 1e-5);
}

TEST(NoiseTest, FidelityBoundedAndMonotoneInGates) {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 50; ++i) {
        const std::size_t n = 2 + i % 6;
        const Circuit c = decompose_to_basis(random_circuit(n, 40, rng));
        const NoiseParams p;
        double prev = 1.0;
        Circuit prefix(n);
        for (const Gate& g : c) {
            prefix.add(g);
            const FidelityResult r = estimate_fidelity(prefix, p);
            EXPECT_GT(r.total, 0.0);
            EXPECT_LE(r.total, prev + 1e-15);
            for (double f : r.per_qubit) {
                EXPECT_GE(f, 0.0);
                EXPECT_LE(f, 1.0);
            }
            prev = r.total;
        }
    }
}

TEST(NoiseTest, ImprovementRaisesFidelity) {
    const auto g = build_topology(TopologyKind::Linear, 20);
    const CompiledCircuit cc = compile(build_circuit(CircuitFamily::qnn(EntanglementStrategy::Linear), 20), g);
    double prev = 0.0;
    for (double delta : {1.0, 2.0, 5.0, 10.0, 50.0, 100.0}) {
        const double f = estimate_fidelity(cc, apply_improvement(NoiseParams{}, delta)).total;
        EXPECT_GT(f, prev);
        prev = f;
    }
    EXPECT_THROW(apply_improvement(NoiseParams{}, 0.5), std::invalid_argument);
    const NoiseParams d = apply_improvement(NoiseParams{}, 10);
    EXPECT_DOUBLE_EQ(d.p2, 7e-5);
    EXPECT_DOUBLE_EQ(d.t_2q, 3e-9);
    EXPECT_EQ(d.T1, NoiseParams{}.T1);
}

TEST(NoiseTest, HigherErrorRatesLowerFidelity) {
    const Circuit c = decompose_to_basis(ghz_circuit(30));
    NoiseParams lo, hi;
    hi.p2 = 2 * lo.p2;
    EXPECT_LT(estimate_fidelity(c, hi).total, estimate_fidelity(c, lo).total);
    hi = lo;
    hi.p1 = 2 * lo.p1;
    EXPECT_LT(estimate_fidelity(c, hi).total, estimate_fidelity(c, lo).total);
    hi = lo;
    hi.T1 = lo.T1 / 2;
    EXPECT_LT(estimate_fidelity(c, hi).total, estimate_fidelity(c, lo).total);
}

TEST(NoiseTest, IndependentOfRotationAngles) {
    const Circuit a = decompose_to_basis(build_circuit(CircuitFamily::qnn(EntanglementStrategy::Linear), 8));
    const Circuit b = decompose_to_basis(build_circuit(CircuitFamily::qnn(EntanglementStrategy::Linear), 8, 99));
    ASSERT_NE(a, b);
    EXPECT_EQ(estimate_fidelity(a, NoiseParams{}).total, estimate_fidelity(b, NoiseParams{}).total);
}

TEST(NoiseTest, ValidationAndBasisCheck) {
    NoiseParams bad;
    bad.T2 = 3 * bad.T1;
    EXPECT_THROW(bad.validate(), std::invalid_argument);
    bad = {};
    bad.p2 = 1.5;
    EXPECT_THROW(bad.validate(), std::invalid_argument);
    EXPECT_THROW(estimate_fidelity(ghz_circuit(3), NoiseParams{}), std::invalid_argument);
    EXPECT_THROW(apply_2q(FidelityState(2), 1, 1, NoiseParams{}), std::invalid_argument);
}

TEST(NoiseTest, TotalTimeFollowsSchedule) {
    Circuit c(3);
    c.add(Gate::u3(0, 1, 0, 0)).add(Gate::cx(1, 2)).add(Gate::cx(0, 1));
    EXPECT_NEAR(estimate_fidelity(c, NoiseParams{}).total_time, 60e-9, 1e-21);
}
