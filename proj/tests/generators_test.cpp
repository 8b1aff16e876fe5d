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
#include <numbers>

#include <gtest/gtest.h>

#include "qmlscale/generators.hpp"
#include "qmlscale/oracle.hpp"

using namespace qmlscale;

namespace {

using Pairs = std::vector<QubitPair>;

std::size_t cx_count(const Circuit& c) {
    std::size_t k = 0;
    for (const Gate& g : c) k += g.kind == GateKind::CX;
    return k;
}

std::size_t kind_count(const Circuit& c, GateKind kind) {
    std::size_t k = 0;
    for (const Gate& g : c) k += g.kind == kind;
    return k;
}

}  // namespace

TEST(EntanglementTest, Linear) {
    for (std::size_t block : {0u, 1u, 5u}) {
        EXPECT_EQ(entanglement_pairs(EntanglementStrategy::Linear, 4, block), (Pairs{{0, 1}, {1, 2}, {2, 3}}));
    }
}

TEST(EntanglementTest, CircularEmitsLongEdgeFirst) {
    EXPECT_EQ(entanglement_pairs(EntanglementStrategy::Circular, 4, 3),
              (Pairs{{3, 0}, {0, 1}, {1, 2}, {2, 3}}));
}

TEST(EntanglementTest, PairwiseSublayers) {
    const auto layers = entanglement_sublayers(EntanglementStrategy::Pairwise, 5, 0);
    ASSERT_EQ(layers.size(), 2u);
    EXPECT_EQ(layers[0], (Pairs{{0, 1}, {2, 3}}));
    EXPECT_EQ(layers[1], (Pairs{{1, 2}, {3, 4}}));
}

TEST(EntanglementTest, ScaGolden) {
    EXPECT_EQ(entanglement_pairs(EntanglementStrategy::Sca, 4, 0), (Pairs{{3, 0}, {0, 1}, {1, 2}, {2, 3}}));
    // Shift by one, then reverse direction and order on the odd block.
    EXPECT_EQ(entanglement_pairs(EntanglementStrategy::Sca, 4, 1), (Pairs{{2, 1}, {1, 0}, {0, 3}, {3, 2}}));
    EXPECT_EQ(entanglement_pairs(EntanglementStrategy::Sca, 4, 2), (Pairs{{1, 2}, {2, 3}, {3, 0}, {0, 1}}));
}

TEST(EntanglementTest, PairCountsPerBlock) {
    for (std::size_t n = 3; n <= 12; ++n) {
        for (std::size_t b = 0; b < 4; ++b) {
            EXPECT_EQ(entanglement_pairs(EntanglementStrategy::Linear, n, b).size(), n - 1);
            EXPECT_EQ(entanglement_pairs(EntanglementStrategy::Circular, n, b).size(), n);
            EXPECT_EQ(entanglement_pairs(EntanglementStrategy::Sca, n, b).size(), n);
            EXPECT_EQ(entanglement_pairs(EntanglementStrategy::Pairwise, n, b).size(), n - 1);
        }
    }
}

TEST(EntanglementTest, TwoQubitRingCollapses) {
    EXPECT_EQ(entanglement_pairs(EntanglementStrategy::Circular, 2, 0), (Pairs{{0, 1}}));
    EXPECT_EQ(entanglement_pairs(EntanglementStrategy::Sca, 2, 1).size(), 1u);
    EXPECT_THROW(entanglement_pairs(EntanglementStrategy::Linear, 1, 0), std::invalid_argument);
}

TEST(EntanglementTest, ParseNames) {
    EXPECT_EQ(parse_strategy("sca"), EntanglementStrategy::Sca);
    EXPECT_EQ(parse_strategy("pairwise"), EntanglementStrategy::Pairwise);
    EXPECT_THROW(parse_strategy("full"), std::invalid_argument);
}

TEST(ZZFeatureMapTest, ThreeQubitLinearTrace) {
    const std::vector<double> x{0.1, 0.2, 0.3};
    const Circuit c = zz_feature_map(3, EntanglementStrategy::Linear, 1, x);
    const std::vector<GateKind> kinds{GateKind::H,  GateKind::H, GateKind::H,  GateKind::P,
                                      GateKind::P,  GateKind::P, GateKind::CX, GateKind::P,
                                      GateKind::CX, GateKind::CX, GateKind::P, GateKind::CX};
    ASSERT_EQ(c.size(), kinds.size());
    for (std::size_t i = 0; i < kinds.size(); ++i) EXPECT_EQ(c[i].kind, kinds[i]) << i;
    EXPECT_EQ(c[6], Gate::cx(0, 1));
    EXPECT_EQ(c[7].qubits[0], 1u);
    EXPECT_EQ(c[10].qubits[0], 2u);
    const double pi = std::numbers::pi;
    EXPECT_DOUBLE_EQ(c[3].params[0], 0.2);
    EXPECT_DOUBLE_EQ(c[7].params[0], 2 * (pi - 0.1) * (pi - 0.2));
    EXPECT_EQ(cx_count(c), 4u);
    EXPECT_EQ(depth(c), 8u);
}

TEST(ZZFeatureMapTest, TwiceTheCnotsOfOneTwoLocalBlock) {
    for (auto s : kAllStrategies) {
        for (std::size_t n : {2u, 3u, 6u, 9u}) {
            const Circuit zz = zz_feature_map(n, s, 1, ramp_angles(n));
            const Circuit tl = two_local(n, s, 1, ramp_angles(2 * n));
            EXPECT_EQ(cx_count(zz), 2 * cx_count(tl)) << strategy_name(s) << " n=" << n;
        }
    }
}

TEST(ZZFeatureMapTest, TwoQubitCircularEmitsPairOnce) {
    EXPECT_EQ(cx_count(zz_feature_map(2, EntanglementStrategy::Circular, 1, {0.1, 0.2})), 2u);
}

TEST(ZZFeatureMapTest, Errors) {
    EXPECT_THROW(zz_feature_map(3, EntanglementStrategy::Linear, 1, {0.1}), std::invalid_argument);
    EXPECT_THROW(zz_feature_map(3, EntanglementStrategy::Linear, 0, ramp_angles(3)), std::invalid_argument);
}

TEST(TwoLocalTest, Counts) {
    const Circuit lin = two_local(4, EntanglementStrategy::Linear, 2, ramp_angles(12));
    EXPECT_EQ(cx_count(lin), 6u);
    EXPECT_EQ(kind_count(lin, GateKind::RY), 12u);

    const Circuit pw = two_local(4, EntanglementStrategy::Pairwise, 1, ramp_angles(8));
    std::vector<Gate> cxs;
    for (const Gate& g : pw) {
        if (g.kind == GateKind::CX) cxs.push_back(g);
    }
    EXPECT_EQ(cxs, (std::vector<Gate>{Gate::cx(0, 1), Gate::cx(2, 3), Gate::cx(1, 2)}));

    const Circuit none = two_local(3, EntanglementStrategy::Circular, 0, ramp_angles(3));
    EXPECT_EQ(cx_count(none), 0u);
    EXPECT_EQ(none.size(), 3u);

    EXPECT_THROW(two_local(4, EntanglementStrategy::Linear, 2, ramp_angles(11)), std::invalid_argument);
}

TEST(TwoLocalTest, ScaBlocksFollowBlockIndex) {
    const Circuit c = two_local(4, EntanglementStrategy::Sca, 2, ramp_angles(12));
    std::vector<Gate> cxs;
    for (const Gate& g : c) {
        if (g.kind == GateKind::CX) cxs.push_back(g);
    }
    std::vector<Gate> expected;
    for (std::size_t b = 0; b < 2; ++b) {
        for (auto [i, j] : entanglement_pairs(EntanglementStrategy::Sca, 4, b)) expected.push_back(Gate::cx(i, j));
    }
    EXPECT_EQ(cxs, expected);
}

TEST(KernelTest, CountsAndDepth) {
    const Circuit k = kernel_circuit(3, EntanglementStrategy::Linear, ramp_angles(3), ramp_angles(3, 3));
    EXPECT_EQ(cx_count(k), 8u);
    for (auto s : kAllStrategies) {
        const std::size_t n = 6;
        const Circuit fm = zz_feature_map(n, s, 1, ramp_angles(n));
        const Circuit kc = kernel_circuit(n, s, ramp_angles(n), ramp_angles(n, n));
        EXPECT_LE(depth(kc), 2 * depth(fm));
        EXPECT_EQ(cx_count(kc), 4 * entanglement_pairs(s, n, 0).size());
    }
}

TEST(KernelTest, SameDataGivesIdentity) {
    for (auto s : kAllStrategies) {
        for (std::size_t n = 2; n <= 5; ++n) {
            const auto x = ramp_angles(n, 7);
            const auto u = oracle::simulate_unitary(kernel_circuit(n, s, x, x));
            EXPECT_TRUE(oracle::equal_up_to_phase(u, oracle::DenseUnitary(n), 1e-9)) << strategy_name(s) << n;
        }
    }
}

TEST(QnnTest, Counts) {
    EXPECT_EQ(cx_count(qnn_circuit(10, EntanglementStrategy::Linear)), 36u);
    EXPECT_EQ(cx_count(build_circuit(CircuitFamily::kernel(EntanglementStrategy::Linear), 10)), 36u);
    EXPECT_EQ(cx_count(qnn_circuit(2, EntanglementStrategy::Circular)), 4u);
}

TEST(TtnTest, EightQubitTrace) {
    const Circuit c = ttn_circuit(8, ramp_angles(15));
    std::vector<Gate> cxs;
    for (const Gate& g : c) {
        if (g.kind == GateKind::CX) cxs.push_back(g);
    }
    EXPECT_EQ(cxs, (std::vector<Gate>{Gate::cx(1, 0), Gate::cx(3, 2), Gate::cx(5, 4), Gate::cx(7, 6),
                                      Gate::cx(2, 0), Gate::cx(6, 4), Gate::cx(4, 0)}));
    EXPECT_EQ(depth(c), 7u);
    EXPECT_EQ(c.gates().back(), Gate::ry(0, 1.5));
}

TEST(TtnTest, SizesAndLogDepth) {
    const Circuit two = ttn_circuit(2, ramp_angles(3));
    EXPECT_EQ(cx_count(two), 1u);
    EXPECT_EQ(depth(two), 3u);
    for (std::size_t k = 1; k <= 10; ++k) {
        const std::size_t n = std::size_t{1} << k;
        const Circuit c = ttn_circuit(n, ramp_angles(2 * n - 1));
        EXPECT_EQ(cx_count(c), n - 1);
        EXPECT_EQ(depth(c), 2 * k + 1);
    }
    EXPECT_THROW(ttn_circuit(6, ramp_angles(11)), std::invalid_argument);
    EXPECT_THROW(build_circuit(CircuitFamily::ttn(), 12), std::invalid_argument);
}

TEST(GhzTest, CountsAndState) {
    const Circuit g4 = ghz_circuit(4);
    EXPECT_EQ(cx_count(g4), 3u);
    EXPECT_EQ(depth(g4), 4u);
    EXPECT_EQ(cx_count(ghz_circuit(100)), 99u);
    EXPECT_EQ(cx_count(ttn_circuit(64, ramp_angles(127))), cx_count(ghz_circuit(64)));

    const auto psi = oracle::simulate_state(ghz_circuit(3));
    const double r = 1 / std::sqrt(2.0);
    for (std::size_t i = 0; i < psi.size(); ++i) {
        const double expected = (i == 0 || i == 7) ? r : 0.0;
        EXPECT_NEAR(std::abs(psi[i] - std::complex<double>(expected, 0)), 0.0, 1e-12) << i;
    }
}

TEST(FamilyTest, NamesRoundTrip) {
    const auto fams = all_families();
    ASSERT_EQ(fams.size(), 10u);
    for (const auto& f : fams) EXPECT_EQ(parse_family(f.name()), f);
    EXPECT_EQ(fams[1].name(), "kernel-circular");
    EXPECT_EQ(fams[7].name(), "qnn-pairwise");
    EXPECT_THROW(parse_family("kernel-full"), std::invalid_argument);
    EXPECT_THROW(parse_family("vqe"), std::invalid_argument);
}

TEST(FamilyTest, GeneratedCircuitsAreValidAndDeterministic) {
    for (const auto& f : all_families()) {
        for (std::size_t n : {2u, 4u, 8u, 16u}) {
            const Circuit a = build_circuit(f, n);
            EXPECT_EQ(a.num_qubits(), n);
            for (const Gate& g : a) {
                for (std::size_t k = 0; k < g.num_qubits(); ++k) EXPECT_LT(g.qubits[k], n);
            }
            EXPECT_EQ(a, build_circuit(f, n));
            EXPECT_EQ(build_circuit(f, n, 42), build_circuit(f, n, 42));
        }
    }
    EXPECT_NE(build_circuit(CircuitFamily::qnn(EntanglementStrategy::Linear), 6, 1),
              build_circuit(CircuitFamily::qnn(EntanglementStrategy::Linear), 6, 2));
}
