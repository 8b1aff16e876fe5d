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
 * @file analysis.hpp
 * @brief Scaling sweeps over (family, topology, qubit count, improvement
 * factor), stretched-exponential fits of fidelity curves and threshold
 * qubit counts.
 *
 * Every sweep is a pure function of its SweepSpec. Rows come back in a
 * fixed order (family, then topology, then qubit count, then improvement
 * factor) no matter how many workers run.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmlscale/compiler.hpp"
#include "qmlscale/fitting.hpp"
#include "qmlscale/generators.hpp"
#include "qmlscale/noise.hpp"
#include "qmlscale/parallel.hpp"
#include "qmlscale/topology.hpp"

namespace qmlscale {

/// F(N) = exp(-(N / lambda)^beta)
struct StretchedExpFit {
    double lambda = 0.0;
    double beta = 0.0;
    double r_squared = 0.0;  // of the linearized fit
    std::size_t points_used = 0;

    double operator()(double n) const { return std::exp(-std::pow(n / lambda, beta)); }
};

struct FidelityPoint {
    double n;
    double fidelity;
};

/// Least squares on ln(-ln F) = beta ln N - beta ln lambda. Points with
/// F > 1 - 1e-12 carry no signal and are dropped; F below 1e-300 is clamped.
inline StretchedExpFit fit_stretched_exponential(const std::vector<FidelityPoint>& points) {
    std::vector<double> xs, ys;
    for (const auto& [n, f] : points) {
        if (!(n > 0) || f > 1.0 - 1e-12) continue;
        const double clamped = std::max(f, 1e-300);
        xs.push_back(std::log(n));
        ys.push_back(std::log(-std::log(clamped)));
    }
    if (xs.size() < 2) {
        throw std::invalid_argument("stretched-exponential fit needs at least 2 usable points, got " +
                                    std::to_string(xs.size()));
    }
    LinearFit lin;
    try {
        lin = linear_fit(xs, ys);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("stretched-exponential fit: all usable points share one qubit count");
    }
    if (!(lin.slope > 0.0)) {
        throw std::invalid_argument("stretched-exponential fit is degenerate (beta <= 0)");
    }
    StretchedExpFit fit;
    fit.beta = lin.slope;
    fit.lambda = std::exp(-lin.intercept / lin.slope);
    fit.r_squared = lin.r_squared;
    fit.points_used = xs.size();
    return fit;
}

/// Largest N with F(N) >= target: lambda * (-ln target)^(1/beta).
inline double n_threshold(const StretchedExpFit& fit, double target = 0.99) {
    if (!(fit.lambda > 0) || !(fit.beta > 0) || fit.points_used < 2) {
        throw std::invalid_argument("n_threshold: invalid fit");
    }
    if (!(target > 0.0 && target < 1.0)) throw std::invalid_argument("n_threshold: target must lie in (0, 1)");
    return fit.lambda * std::pow(-std::log(target), 1.0 / fit.beta);
}

struct SweepSpec {
    std::vector<CircuitFamily> families = all_families();
    std::vector<TopologyKind> topologies{kAllTopologies.begin(), kAllTopologies.end()};
    /// Qubit counts for every family except TTN.
    std::vector<std::size_t> qubit_counts;
    /// Qubit counts for TTN; powers of two.
    std::vector<std::size_t> ttn_qubit_counts;
    std::vector<double> improvement_factors{1.0};
    NoiseParams noise;
    SabreConfig sabre;
    /// Drawn angles instead of the fixed ramp when set.
    std::optional<std::uint64_t> angle_seed;
    /// Qubit count at which tech-gap fidelity is reported.
    std::size_t fixed_n = 256;
    double threshold_target = 0.99;
    std::size_t workers = 1;

    const std::vector<std::size_t>& counts_for(const CircuitFamily& f) const {
        return f.kind == FamilyKind::Ttn ? ttn_qubit_counts : qubit_counts;
    }

    void validate() const {
        if (families.empty()) throw std::invalid_argument("sweep: no circuit families");
        if (topologies.empty()) throw std::invalid_argument("sweep: no topologies");
        auto check_counts = [](const std::vector<std::size_t>& v, const char* what, bool pow2) {
            if (v.empty()) throw std::invalid_argument(std::string("sweep: ") + what + " is empty");
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (v[i] < 2) throw std::invalid_argument(std::string("sweep: ") + what + " has a count below 2");
                if (i > 0 && v[i] <= v[i - 1]) {
                    throw std::invalid_argument(std::string("sweep: ") + what + " must be strictly increasing");
                }
                if (pow2 && !is_power_of_two(v[i])) {
                    throw std::invalid_argument(std::string("sweep: ") + what + " entry " + std::to_string(v[i]) +
                                                " is not a power of two");
                }
            }
        };
        const bool any_ttn = std::any_of(families.begin(), families.end(),
                                         [](const CircuitFamily& f) { return f.kind == FamilyKind::Ttn; });
        const bool any_other = std::any_of(families.begin(), families.end(),
                                           [](const CircuitFamily& f) { return f.kind != FamilyKind::Ttn; });
        if (any_other) check_counts(qubit_counts, "qubit counts", false);
        if (any_ttn) check_counts(ttn_qubit_counts, "TTN qubit counts", true);
        if (improvement_factors.empty()) throw std::invalid_argument("sweep: no improvement factors");
        for (double d : improvement_factors) {
            if (!(d >= 1.0)) throw std::invalid_argument("sweep: improvement factors must be >= 1");
        }
        if (fixed_n < 2 || (any_ttn && !is_power_of_two(fixed_n))) {
            throw std::invalid_argument("sweep: fixed qubit count must be >= 2 (and a power of two with TTN)");
        }
        if (!(threshold_target > 0 && threshold_target < 1)) {
            throw std::invalid_argument("sweep: threshold target must lie in (0, 1)");
        }
        noise.validate();
        sabre.validate();
    }
};

/// Compiles one family instance on a topology of the same size.
inline CompiledCircuit compile_family(const CircuitFamily& family, TopologyKind topology, std::size_t n,
                                      const SabreConfig& sabre, std::optional<std::uint64_t> angle_seed = {}) {
    const Circuit circuit = build_circuit(family, n, angle_seed);
    const CouplingGraph graph = build_topology(topology, n);
    return compile(circuit, graph, sabre);
}

struct ResourceRow {
    CircuitFamily family;
    TopologyKind topology;
    std::size_t n;
    ResourceMetrics metrics;
};

namespace detail {

struct GridPoint {
    CircuitFamily family;
    TopologyKind topology;
    std::size_t n;
};

inline std::vector<GridPoint> grid_points(const SweepSpec& spec) {
    std::vector<GridPoint> pts;
    for (const auto& f : spec.families) {
        for (auto t : spec.topologies) {
            for (std::size_t n : spec.counts_for(f)) pts.push_back({f, t, n});
        }
    }
    return pts;
}

}  // namespace detail

inline std::vector<ResourceRow> resource_sweep(const SweepSpec& spec) {
    spec.validate();
    const auto pts = detail::grid_points(spec);
    return parallel_map(pts.size(), spec.workers, [&](std::size_t i) {
        const auto& p = pts[i];
        const auto cc = compile_family(p.family, p.topology, p.n, spec.sabre, spec.angle_seed);
        return ResourceRow{p.family, p.topology, p.n, cc.metrics};
    });
}

struct FidelityRow {
    CircuitFamily family;
    TopologyKind topology;
    std::size_t n;
    double improvement_factor;
    double total_fidelity;
    ResourceMetrics metrics;
};

inline std::vector<FidelityRow> fidelity_sweep(const SweepSpec& spec) {
    spec.validate();
    const auto pts = detail::grid_points(spec);
    auto blocks = parallel_map(pts.size(), spec.workers, [&](std::size_t i) {
        const auto& p = pts[i];
        const auto cc = compile_family(p.family, p.topology, p.n, spec.sabre, spec.angle_seed);
        std::vector<FidelityRow> rows;
        for (double delta : spec.improvement_factors) {
            const double f = estimate_fidelity(cc, apply_improvement(spec.noise, delta)).total;
            rows.push_back({p.family, p.topology, p.n, delta, f, cc.metrics});
        }
        return rows;
    });
    std::vector<FidelityRow> out;
    for (auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
    return out;
}

struct TechGapRow {
    CircuitFamily family;
    TopologyKind topology;
    double improvement_factor;
    std::size_t fixed_n;
    double fidelity_at_fixed_n;
    std::optional<StretchedExpFit> fit;
    std::optional<double> n_threshold;
    /// Threshold lies outside the sampled qubit range.
    bool extrapolated = false;
    /// Why the fit failed, when it did.
    std::string fit_error;
};

/// Per (family, topology, delta): fidelity at spec.fixed_n and the threshold
/// qubit count from a fit over the sweep's qubit counts. Fit failures are
/// recorded in the row.
inline std::vector<TechGapRow> tech_gap_sweep(const SweepSpec& spec) {
    spec.validate();
    struct Pair {
        CircuitFamily family;
        TopologyKind topology;
    };
    std::vector<Pair> pairs;
    for (const auto& f : spec.families) {
        for (auto t : spec.topologies) pairs.push_back({f, t});
    }
    auto blocks = parallel_map(pairs.size(), spec.workers, [&](std::size_t i) {
        const auto& [family, topology] = pairs[i];
        const auto fixed = compile_family(family, topology, spec.fixed_n, spec.sabre, spec.angle_seed);
        const auto& counts = spec.counts_for(family);
        std::vector<CompiledCircuit> curve;
        curve.reserve(counts.size());
        for (std::size_t n : counts) curve.push_back(compile_family(family, topology, n, spec.sabre, spec.angle_seed));

        std::vector<TechGapRow> rows;
        for (double delta : spec.improvement_factors) {
            const NoiseParams noise = apply_improvement(spec.noise, delta);
            TechGapRow row{family, topology, delta, spec.fixed_n, estimate_fidelity(fixed, noise).total, {}, {},
                           false, {}};
            std::vector<FidelityPoint> points;
            for (std::size_t k = 0; k < counts.size(); ++k) {
                points.push_back({static_cast<double>(counts[k]), estimate_fidelity(curve[k], noise).total});
            }
            try {
                row.fit = fit_stretched_exponential(points);
                row.n_threshold = n_threshold(*row.fit, spec.threshold_target);
                row.extrapolated = *row.n_threshold < static_cast<double>(counts.front()) ||
                                   *row.n_threshold > static_cast<double>(counts.back());
            } catch (const std::invalid_argument& e) {
                row.fit.reset();
                row.n_threshold.reset();
                row.fit_error = e.what();
            }
            rows.push_back(std::move(row));
        }
        return rows;
    });
    std::vector<TechGapRow> out;
    for (auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace qmlscale
