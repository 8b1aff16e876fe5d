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
 * @file config.hpp
 * @brief Experiment configuration: a YAML document mirroring the sweep
 * parameters, with strict key checking.
 *
 * Every key is optional and defaults to the reference configuration
 * (all families and topologies, default noise and qubit ranges), so an empty
 * document reproduces it. Unknown keys are errors.
 *
 *   families: [kernel-linear, ..., ttn, ghz]
 *   topologies: [linear, ring, grid, star]
 *   seed: 0
 *   random_angles: false       # true: draw angles from `seed`
 *   workers: 0                 # 0 = machine parallelism
 *   output: {dir: out, format: csv}
 *   noise: {p1, p2, p_ent, t1q_ns, t2q_ns, T1_us, T2_us}
 *   sabre: {extended_set_size, lookahead_weight, decay_increment,
 *           decay_reset_interval, stall_limit}
 *   resources: {qubits, ttn_qubits}
 *   fidelity:  {qubits, ttn_qubits, improvement_factors}
 *   tech_gap:  {fixed_n, target, qubits, ttn_qubits, improvement_factors}
 *
 * Qubit lists are either sequences or {start, stop, step} ranges with an
 * inclusive stop.
 */

#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>
#include <yaml-cpp/yaml.h>

#include "qmlscale/analysis.hpp"

namespace qmlscale {

/// Raised for any invalid configuration; maps to the CLI's config exit code.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { Csv, Json };

struct QubitRanges {
    std::vector<std::size_t> qubits;
    std::vector<std::size_t> ttn_qubits;
};

struct ExperimentConfig {
    std::vector<CircuitFamily> families = all_families();
    std::vector<TopologyKind> topologies{kAllTopologies.begin(), kAllTopologies.end()};
    std::uint64_t seed = 0;
    bool random_angles = false;
    std::size_t workers = 0;
    std::string output_dir = "out";
    OutputFormat format = OutputFormat::Csv;
    NoiseParams noise;
    SabreConfig sabre;

    QubitRanges resources{range(100, 1000, 100), powers_of_two(8, 1024)};
    QubitRanges fidelity{range(10, 100, 10), powers_of_two(4, 64)};
    std::vector<double> fidelity_factors{1.0};

    QubitRanges tech_gap{range(10, 100, 10), powers_of_two(4, 64)};
    std::vector<double> tech_gap_factors{1, 10, 20, 30, 40, 50, 60, 70, 80, 90, 100};
    std::size_t fixed_n = 256;
    double target = 0.99;

    static std::vector<std::size_t> range(std::size_t start, std::size_t stop, std::size_t step) {
        std::vector<std::size_t> v;
        for (std::size_t n = start; n <= stop; n += step) v.push_back(n);
        return v;
    }

    static std::vector<std::size_t> powers_of_two(std::size_t lo, std::size_t hi) {
        std::vector<std::size_t> v;
        for (std::size_t n = lo; n <= hi; n *= 2) v.push_back(n);
        return v;
    }

    SweepSpec base_spec() const {
        SweepSpec s;
        s.families = families;
        s.topologies = topologies;
        s.noise = noise;
        s.sabre = sabre;
        s.sabre.seed = seed;
        if (random_angles) s.angle_seed = seed;
        s.workers = workers;
        s.fixed_n = fixed_n;
        s.threshold_target = target;
        return s;
    }

    SweepSpec resources_spec() const {
        SweepSpec s = base_spec();
        s.qubit_counts = resources.qubits;
        s.ttn_qubit_counts = resources.ttn_qubits;
        return s;
    }

    SweepSpec fidelity_spec() const {
        SweepSpec s = base_spec();
        s.qubit_counts = fidelity.qubits;
        s.ttn_qubit_counts = fidelity.ttn_qubits;
        s.improvement_factors = fidelity_factors;
        return s;
    }

    SweepSpec tech_gap_spec() const {
        SweepSpec s = base_spec();
        s.qubit_counts = tech_gap.qubits;
        s.ttn_qubit_counts = tech_gap.ttn_qubits;
        s.improvement_factors = tech_gap_factors;
        return s;
    }

    /// Checks every derived sweep against generator and topology rules.
    void validate() const {
        try {
            resources_spec().validate();
            fidelity_spec().validate();
            tech_gap_spec().validate();
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }
};

namespace detail {

inline void check_keys(const YAML::Node& node, const std::string& where, const std::set<std::string>& allowed) {
    if (!node.IsMap()) throw ConfigError(where + ": expected a mapping");
    for (const auto& kv : node) {
        const auto key = kv.first.as<std::string>();
        if (!allowed.count(key)) {
            throw ConfigError("unknown config key '" + (where.empty() ? key : where + "." + key) + "'");
        }
    }
}

template <typename T>
T scalar(const YAML::Node& node, const std::string& where) {
    try {
        return node.as<T>();
    } catch (const YAML::Exception&) {
        throw ConfigError(where + ": invalid value");
    }
}

inline std::vector<std::size_t> qubit_list(const YAML::Node& node, const std::string& where) {
    if (node.IsSequence()) {
        std::vector<std::size_t> v;
        for (const auto& item : node) v.push_back(scalar<std::size_t>(item, where));
        return v;
    }
    check_keys(node, where, {"start", "stop", "step"});
    if (!node["start"] || !node["stop"]) throw ConfigError(where + ": range needs start and stop");
    const auto start = scalar<std::size_t>(node["start"], where + ".start");
    const auto stop = scalar<std::size_t>(node["stop"], where + ".stop");
    const auto step = node["step"] ? scalar<std::size_t>(node["step"], where + ".step") : std::size_t{1};
    if (step == 0) throw ConfigError(where + ".step must be positive");
    return ExperimentConfig::range(start, stop, step);
}

inline std::vector<double> real_list(const YAML::Node& node, const std::string& where) {
    if (!node.IsSequence()) throw ConfigError(where + ": expected a list");
    std::vector<double> v;
    for (const auto& item : node) v.push_back(scalar<double>(item, where));
    return v;
}

inline void read_ranges(const YAML::Node& node, const std::string& where, QubitRanges& out) {
    if (node["qubits"]) out.qubits = qubit_list(node["qubits"], where + ".qubits");
    if (node["ttn_qubits"]) out.ttn_qubits = qubit_list(node["ttn_qubits"], where + ".ttn_qubits");
}

}  // namespace detail

inline ExperimentConfig parse_config(const std::string& text) {
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::Exception& e) {
        throw ConfigError(std::string("config is not valid YAML: ") + e.what());
    }
    ExperimentConfig cfg;
    if (root.IsNull()) {
        cfg.validate();
        return cfg;
    }
    using detail::check_keys;
    using detail::scalar;
    check_keys(root, "", {"families", "topologies", "seed", "random_angles", "workers", "output", "noise", "sabre",
                          "resources", "fidelity", "tech_gap"});

    try {
        if (auto n = root["families"]) {
            if (!n.IsSequence()) throw ConfigError("families: expected a list");
            cfg.families.clear();
            for (const auto& item : n) cfg.families.push_back(parse_family(scalar<std::string>(item, "families")));
        }
        if (auto n = root["topologies"]) {
            if (!n.IsSequence()) throw ConfigError("topologies: expected a list");
            cfg.topologies.clear();
            for (const auto& item : n) cfg.topologies.push_back(parse_topology(scalar<std::string>(item, "topologies")));
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (auto n = root["seed"]) cfg.seed = scalar<std::uint64_t>(n, "seed");
    if (auto n = root["random_angles"]) cfg.random_angles = scalar<bool>(n, "random_angles");
    if (auto n = root["workers"]) cfg.workers = scalar<std::size_t>(n, "workers");
    if (auto n = root["output"]) {
        check_keys(n, "output", {"dir", "format"});
        if (n["dir"]) cfg.output_dir = scalar<std::string>(n["dir"], "output.dir");
        if (n["format"]) {
            const auto f = scalar<std::string>(n["format"], "output.format");
            if (f == "csv") {
                cfg.format = OutputFormat::Csv;
            } else if (f == "json") {
                cfg.format = OutputFormat::Json;
            } else {
                throw ConfigError("output.format must be csv or json");
            }
        }
    }
    if (auto n = root["noise"]) {
        check_keys(n, "noise", {"p1", "p2", "p_ent", "t1q_ns", "t2q_ns", "T1_us", "T2_us"});
        if (n["p1"]) cfg.noise.p1 = scalar<double>(n["p1"], "noise.p1");
        if (n["p2"]) cfg.noise.p2 = scalar<double>(n["p2"], "noise.p2");
        if (n["p_ent"]) cfg.noise.p_ent = scalar<double>(n["p_ent"], "noise.p_ent");
        if (n["t1q_ns"]) cfg.noise.t_1q = scalar<double>(n["t1q_ns"], "noise.t1q_ns") / 1e9;
        if (n["t2q_ns"]) cfg.noise.t_2q = scalar<double>(n["t2q_ns"], "noise.t2q_ns") / 1e9;
        if (n["T1_us"]) cfg.noise.T1 = scalar<double>(n["T1_us"], "noise.T1_us") / 1e6;
        if (n["T2_us"]) cfg.noise.T2 = scalar<double>(n["T2_us"], "noise.T2_us") / 1e6;
    }
    if (auto n = root["sabre"]) {
        check_keys(n, "sabre",
                   {"extended_set_size", "lookahead_weight", "decay_increment", "decay_reset_interval",
                    "stall_limit"});
        auto& s = cfg.sabre;
        if (n["extended_set_size"]) s.extended_set_size = scalar<std::size_t>(n["extended_set_size"], "sabre.extended_set_size");
        if (n["lookahead_weight"]) s.lookahead_weight = scalar<double>(n["lookahead_weight"], "sabre.lookahead_weight");
        if (n["decay_increment"]) s.decay_increment = scalar<double>(n["decay_increment"], "sabre.decay_increment");
        if (n["decay_reset_interval"]) {
            s.decay_reset_interval = scalar<std::size_t>(n["decay_reset_interval"], "sabre.decay_reset_interval");
        }
        if (n["stall_limit"] && !n["stall_limit"].IsNull()) {
            s.stall_limit = scalar<std::size_t>(n["stall_limit"], "sabre.stall_limit");
        }
    }
    if (auto n = root["resources"]) {
        check_keys(n, "resources", {"qubits", "ttn_qubits"});
        detail::read_ranges(n, "resources", cfg.resources);
    }
    if (auto n = root["fidelity"]) {
        check_keys(n, "fidelity", {"qubits", "ttn_qubits", "improvement_factors"});
        detail::read_ranges(n, "fidelity", cfg.fidelity);
        if (n["improvement_factors"]) cfg.fidelity_factors = detail::real_list(n["improvement_factors"], "fidelity.improvement_factors");
    }
    if (auto n = root["tech_gap"]) {
        check_keys(n, "tech_gap", {"fixed_n", "target", "qubits", "ttn_qubits", "improvement_factors"});
        detail::read_ranges(n, "tech_gap", cfg.tech_gap);
        if (n["fixed_n"]) cfg.fixed_n = scalar<std::size_t>(n["fixed_n"], "tech_gap.fixed_n");
        if (n["target"]) cfg.target = scalar<double>(n["target"], "tech_gap.target");
        if (n["improvement_factors"]) cfg.tech_gap_factors = detail::real_list(n["improvement_factors"], "tech_gap.improvement_factors");
    }
    cfg.validate();
    return cfg;
}

/// The effective configuration, in the same shape as the YAML input.
inline nlohmann::ordered_json config_to_json(const ExperimentConfig& cfg) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["families"] = ordered_json::array();
    for (const auto& f : cfg.families) j["families"].push_back(f.name());
    j["topologies"] = ordered_json::array();
    for (auto t : cfg.topologies) j["topologies"].push_back(std::string(topology_name(t)));
    j["seed"] = cfg.seed;
    j["random_angles"] = cfg.random_angles;
    j["workers"] = cfg.workers;
    j["output"] = {{"dir", cfg.output_dir}, {"format", cfg.format == OutputFormat::Csv ? "csv" : "json"}};
    j["noise"] = {{"p1", cfg.noise.p1},
                  {"p2", cfg.noise.p2},
                  {"p_ent", cfg.noise.p_ent},
                  {"t1q_ns", cfg.noise.t_1q * 1e9},
                  {"t2q_ns", cfg.noise.t_2q * 1e9},
                  {"T1_us", cfg.noise.T1 * 1e6},
                  {"T2_us", cfg.noise.T2 * 1e6}};
    j["sabre"] = {{"extended_set_size", cfg.sabre.extended_set_size},
                  {"lookahead_weight", cfg.sabre.lookahead_weight},
                  {"decay_increment", cfg.sabre.decay_increment},
                  {"decay_reset_interval", cfg.sabre.decay_reset_interval},
                  {"stall_limit", cfg.sabre.stall_limit ? ordered_json(*cfg.sabre.stall_limit) : ordered_json(nullptr)}};
    j["resources"] = {{"qubits", cfg.resources.qubits}, {"ttn_qubits", cfg.resources.ttn_qubits}};
    j["fidelity"] = {{"qubits", cfg.fidelity.qubits},
                     {"ttn_qubits", cfg.fidelity.ttn_qubits},
                     {"improvement_factors", cfg.fidelity_factors}};
    j["tech_gap"] = {{"fixed_n", cfg.fixed_n},
                     {"target", cfg.target},
                     {"qubits", cfg.tech_gap.qubits},
                     {"ttn_qubits", cfg.tech_gap.ttn_qubits},
                     {"improvement_factors", cfg.tech_gap_factors}};
    return j;
}

}  // namespace qmlscale
