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
#include "qmlscale/oracle.hpp"
#include "qmlscale/random_circuit.hpp"

using namespace qmlscale;
using oracle::cplx;

TEST(OracleTest, CxMatrixUsesLittleEndianIndices) {
    Circuit c(2);
    c.add(Gate::cx(0, 1));
    const auto u = oracle::simulate_unitary(c);
    // Control is bit 0: |01> (index 1) maps to |11> (index 3).
    const int expected[4] = {0, 3, 2, 1};
    for (std::size_t col = 0; col < 4; ++col) {
        for (std::size_t row = 0; row < 4; ++row) {
            EXPECT_EQ(u.at(row, col), cplx(row == std::size_t(expected[col]) ? 1.0 : 0.0, 0.0));
        }
    }
}

TEST(OracleTest, HadamardAndPhase) {
    Circuit c(1);
    c.add(Gate::h(0));
    const auto psi = oracle::simulate_state(c);
    EXPECT_NEAR(psi[0].real(), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(psi[1].real(), 1 / std::sqrt(2.0), 1e-15);

    Circuit z(1);
    z.add(Gate::p(0, 0.7));
    const auto u = oracle::simulate_unitary(z);
    EXPECT_NEAR(std::abs(u.at(1, 1) - std::polar(1.0, 0.7)), 0.0, 1e-15);
}

TEST(OracleTest, RandomCircuitsAreUnitary) {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 20; ++i) {
        const auto u = oracle::simulate_unitary(random_circuit(1 + i % 6, 30, rng));
        EXPECT_TRUE(oracle::is_unitary(u));
    }
    EXPECT_THROW(oracle::simulate_unitary(Circuit(7)), std::invalid_argument);
}

TEST(OracleTest, PhaseInvarianceAndDistance) {
    Circuit a(1), b(1);
    a.add(Gate::rz(0, 0.9));
    b.add(Gate::p(0, 0.9));
    EXPECT_TRUE(oracle::equal_up_to_phase(oracle::simulate_unitary(a), oracle::simulate_unitary(b)));
    Circuit x(1);
    x.add(Gate::x(0));
    EXPECT_FALSE(oracle::equal_up_to_phase(oracle::simulate_unitary(a), oracle::simulate_unitary(x)));
    EXPECT_GT(oracle::distance_up_to_phase(oracle::simulate_unitary(a), oracle::simulate_unitary(x)), 0.5);
}

TEST(OracleTest, InverseComposesToIdentity) {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 20; ++i) {
        const Circuit c = random_circuit(4, 25, rng);
        EXPECT_TRUE(oracle::equal_up_to_phase(oracle::simulate_unitary(compose(c, inverse(c))), oracle::DenseUnitary(4)));
    }
}

TEST(OracleTest, LayoutEquivalenceDetectsMutations) {
    const Circuit c = build_circuit(CircuitFamily::qnn(EntanglementStrategy::Circular), 5);
    const auto g = build_topology(TopologyKind::Linear, 5);
    const CompiledCircuit cc = compile(c, g);
    ASSERT_TRUE(oracle::equivalent_up_to_layout(c, cc));

    // Dropping a gate, perturbing an angle or misreporting the final layout
    // must each be caught.
    std::vector<Gate> gates = cc.circuit.gates();
    std::size_t cx_at = 0;
    while (gates[cx_at].kind != GateKind::CX) ++cx_at;
    std::vector<Gate> dropped = gates;
    dropped.erase(dropped.begin() + static_cast<std::ptrdiff_t>(cx_at));
    EXPECT_FALSE(oracle::equivalent_up_to_layout(c, Circuit(5, dropped), cc.initial_layout, cc.final_layout));

    std::vector<Gate> nudged = gates;
    for (Gate& gt : nudged) {
        if (gt.kind == GateKind::U3) {
            gt.params[0] += 1e-3;
            break;
        }
    }
    EXPECT_FALSE(oracle::equivalent_up_to_layout(c, Circuit(5, nudged), cc.initial_layout, cc.final_layout));

    if (!(cc.final_layout == cc.initial_layout)) {
        EXPECT_FALSE(oracle::equivalent_up_to_layout(c, cc.circuit, cc.initial_layout, cc.initial_layout));
    }
    Layout wrong = cc.final_layout;
    wrong.swap_physical(0, 4);
    EXPECT_FALSE(oracle::equivalent_up_to_layout(c, cc.circuit, cc.initial_layout, wrong));
}

TEST(OracleTest, ExplicitSwapIsALayoutChange) {
    Circuit orig(2);
    orig.add(Gate::h(0));
    Circuit routed(2);
    routed.add(Gate::swap(0, 1)).add(Gate::h(1));
    Layout fin = trivial_layout(2);
    fin.swap_physical(0, 1);
    EXPECT_TRUE(oracle::equivalent_up_to_layout(orig, routed, trivial_layout(2), fin));
    EXPECT_FALSE(oracle::equivalent_up_to_layout(orig, routed, trivial_layout(2), trivial_layout(2)));
}
