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
 * @file cli.hpp
 * @brief Batch front-end: `resources`, `fidelity`, `tech-gap`,
 * `compile-one` and `selftest`.
 *
 * Sweeps write `<out>/<subcommand>.csv` (or `.json`) plus
 * `<out>/<subcommand>.manifest.json`. Files are staged under a temporary
 * name and renamed on success; on failure nothing is left behind.
 *
 * Exit codes: 0 ok, 2 configuration error, 3 runtime error.
 */

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qmlscale/analysis.hpp"
#include "qmlscale/config.hpp"
#include "qmlscale/oracle.hpp"
#include "qmlscale/random_circuit.hpp"
#include "qmlscale/report.hpp"
#include "qmlscale/version.hpp"

namespace qmlscale::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitRuntime = 3;

struct Overrides {
    std::string config_path;
    std::optional<std::string> out_dir;
    std::optional<std::string> format;
    std::optional<std::size_t> workers;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> n;
    std::optional<std::string> topology;
    std::optional<std::string> family;
    std::optional<double> delta;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Loads the config file (or defaults) and applies command-line overrides
/// for the given subcommand.
inline ExperimentConfig load_config(const Overrides& o, const std::string& subcommand) {
    ExperimentConfig cfg = o.config_path.empty() ? parse_config("") : parse_config(read_file(o.config_path));
    try {
        if (o.out_dir) cfg.output_dir = *o.out_dir;
        if (o.format) {
            if (*o.format == "csv") {
                cfg.format = OutputFormat::Csv;
            } else if (*o.format == "json") {
                cfg.format = OutputFormat::Json;
            } else {
                throw ConfigError("--format must be csv or json");
            }
        }
        if (o.workers) cfg.workers = *o.workers;
        if (o.seed) cfg.seed = *o.seed;
        if (o.family) cfg.families = {parse_family(*o.family)};
        if (o.topology) cfg.topologies = {parse_topology(*o.topology)};
        if (o.n) {
            const std::vector<std::size_t> one{*o.n};
            if (subcommand == "resources") cfg.resources = {one, one};
            if (subcommand == "fidelity") cfg.fidelity = {one, one};
            if (subcommand == "tech-gap") cfg.fixed_n = *o.n;
        }
        if (o.delta) {
            if (subcommand == "fidelity") cfg.fidelity_factors = {*o.delta};
            if (subcommand == "tech-gap") cfg.tech_gap_factors = {*o.delta};
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    cfg.validate();
    return cfg;
}

/// Writes files atomically per file; removes everything staged if any step fails.
class OutputStage {
public:
    explicit OutputStage(std::filesystem::path dir) : dir_(std::move(dir)) {}
    OutputStage(const OutputStage&) = delete;
    OutputStage& operator=(const OutputStage&) = delete;

    ~OutputStage() {
        if (committed_) return;
        std::error_code ec;
        for (const auto& p : staged_) std::filesystem::remove(p.first, ec);
        for (const auto& p : staged_) std::filesystem::remove(p.second, ec);
    }

    void write(const std::string& name, const std::string& content) {
        std::filesystem::create_directories(dir_);
        const auto final_path = dir_ / name;
        const auto tmp_path = dir_ / (name + ".tmp");
        staged_.emplace_back(tmp_path, final_path);
        std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write '" + tmp_path.string() + "'");
        out << content;
        out.close();
        if (!out) throw std::runtime_error("failed writing '" + tmp_path.string() + "'");
    }

    void commit() {
        for (const auto& [tmp, final_path] : staged_) std::filesystem::rename(tmp, final_path);
        committed_ = true;
    }

    std::vector<std::string> file_names() const {
        std::vector<std::string> names;
        for (const auto& p : staged_) names.push_back(p.second.filename().string());
        return names;
    }

private:
    std::filesystem::path dir_;
    std::vector<std::pair<std::filesystem::path, std::filesystem::path>> staged_;
    bool committed_ = false;
};

inline void emit_report(const std::string& subcommand, const ExperimentConfig& cfg,
                        const std::vector<ReportRow>& rows, double wall_seconds, std::ostream& log) {
    OutputStage stage(cfg.output_dir);
    std::string table_name;
    if (cfg.format == OutputFormat::Csv) {
        std::ostringstream csv;
        write_csv(csv, rows);
        table_name = subcommand + ".csv";
        stage.write(table_name, csv.str());
    } else {
        table_name = subcommand + ".json";
        stage.write(table_name, to_json(rows).dump(2) + "\n");
    }
    nlohmann::ordered_json manifest;
    manifest["tool"] = "qmlscale";
    manifest["version"] = QMLSCALE_VERSION;
    manifest["subcommand"] = subcommand;
    manifest["seed"] = cfg.seed;
    manifest["rows"] = rows.size();
    manifest["output"] = table_name;
    manifest["wall_time_s"] = wall_seconds;
    manifest["config"] = config_to_json(cfg);
    stage.write(subcommand + ".manifest.json", manifest.dump(2) + "\n");
    stage.commit();
    log << subcommand << ": wrote " << rows.size() << " rows to "
        << (std::filesystem::path(cfg.output_dir) / table_name).string() << '\n';
}

struct SelftestSummary {
    std::size_t total = 0;
    std::size_t passed = 0;
};

/// Oracle battery: random circuits on 2..5 qubits compiled onto every
/// topology, checked for coupling compliance and unitary equivalence.
inline SelftestSummary run_selftest(std::uint64_t seed, std::size_t per_topology, std::ostream& log) {
    std::mt19937_64 rng(seed);
    SelftestSummary s;
    for (auto topo : kAllTopologies) {
        for (std::size_t k = 0; k < per_topology; ++k) {
            const std::size_t n = 2 + k % 4;
            const Circuit c = random_circuit(n, 8 + (k % 5) * 6, rng);
            const CouplingGraph g = build_topology(topo, n);
            const CompiledCircuit cc = compile(c, g);
            ++s.total;
            const bool ok = respects_coupling(cc.circuit, g) && oracle::equivalent_up_to_layout(c, cc, 1e-7);
            if (ok) {
                ++s.passed;
            } else {
                log << "selftest: FAIL topology=" << topology_name(topo) << " case=" << k << '\n';
            }
        }
    }
    return s;
}

/// Parses argv and runs one subcommand.
inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Compilation-aware resource and fidelity sweeps for QML circuits", "qmlscale"};
    app.set_version_flag("--version", QMLSCALE_VERSION);
    app.require_subcommand(1);

    Overrides o;
    std::size_t n_value = 0, workers_value = 0;
    std::uint64_t seed_value = 0;
    double delta_value = 0;
    std::string out_value, format_value, topology_value, family_value;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", o.config_path, "YAML experiment config")->check(CLI::ExistingFile);
        sub->add_option("--out", out_value, "Output directory");
        sub->add_option("--format", format_value, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--workers", workers_value, "Worker threads (0 = machine parallelism)");
        sub->add_option("--seed", seed_value, "Run seed");
        sub->add_option("--n", n_value, "Qubit count override");
        sub->add_option("--topology", topology_value, "linear|ring|grid|star");
        sub->add_option("--family", family_value, "Circuit family, e.g. kernel-circular");
        sub->add_option("--delta", delta_value, "Improvement factor override");
    };

    auto* resources = app.add_subcommand("resources", "Post-compilation resource sweep");
    auto* fidelity = app.add_subcommand("fidelity", "Fidelity vs qubit count sweep");
    auto* tech_gap = app.add_subcommand("tech-gap", "Improvement-factor sweep with threshold fits");
    auto* compile_one = app.add_subcommand("compile-one", "Compile one circuit and print it");
    auto* selftest = app.add_subcommand("selftest", "Run the unitary-equivalence battery");
    for (auto* sub : {resources, fidelity, tech_gap, compile_one, selftest}) add_common(sub);
    std::string positional_family;
    compile_one->add_option("circuit", positional_family, "Circuit family, same as --family");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitConfig;
    }

    CLI::App* chosen = app.get_subcommands().front();
    const std::string name = chosen->get_name();
    auto given = [&](const char* flag) { return chosen->count(flag) > 0; };
    if (given("--out")) o.out_dir = out_value;
    if (given("--format")) o.format = format_value;
    if (given("--workers")) o.workers = workers_value;
    if (given("--seed")) o.seed = seed_value;
    if (given("--n")) o.n = n_value;
    if (given("--topology")) o.topology = topology_value;
    if (given("--family")) o.family = family_value;
    if (!positional_family.empty()) o.family = positional_family;
    if (given("--delta")) o.delta = delta_value;

    try {
        if (name == "compile-one") {
            if (!o.family) throw ConfigError("compile-one needs a circuit family");
            const CircuitFamily family = [&] {
                try {
                    return parse_family(*o.family);
                } catch (const std::invalid_argument& e) {
                    throw ConfigError(e.what());
                }
            }();
            ExperimentConfig cfg = o.config_path.empty() ? parse_config("") : parse_config(read_file(o.config_path));
            const std::size_t n = o.n.value_or(4);
            if (!family.accepts(n)) throw ConfigError(family.name() + " does not accept " + std::to_string(n) + " qubits");
            TopologyKind topo = TopologyKind::Linear;
            try {
                if (o.topology) topo = parse_topology(*o.topology);
            } catch (const std::invalid_argument& e) {
                throw ConfigError(e.what());
            }
            std::optional<std::uint64_t> angle_seed;
            if (cfg.random_angles) angle_seed = o.seed.value_or(cfg.seed);
            const CompiledCircuit cc = compile_family(family, topo, n, cfg.sabre, angle_seed);
            dump(out, cc);
            return kExitOk;
        }
        if (name == "selftest") {
            const auto summary = run_selftest(o.seed.value_or(0), 50, err);
            out << "selftest: " << summary.passed << "/" << summary.total << " passed\n";
            return summary.passed == summary.total ? kExitOk : kExitRuntime;
        }

        const ExperimentConfig cfg = load_config(o, name);
        const auto start = std::chrono::steady_clock::now();
        std::vector<ReportRow> rows;
        if (name == "resources") {
            rows = report_rows(resource_sweep(cfg.resources_spec()), cfg.seed);
        } else if (name == "fidelity") {
            rows = report_rows(fidelity_sweep(cfg.fidelity_spec()), cfg.seed);
        } else {
            rows = report_rows(tech_gap_sweep(cfg.tech_gap_spec()), cfg.seed);
        }
        const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        emit_report(name, cfg, rows, wall, out);
        return kExitOk;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

}  // namespace qmlscale::cli
