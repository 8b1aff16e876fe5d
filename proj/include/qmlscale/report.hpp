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
 * @file report.hpp
 * @brief Row schema shared by every sweep output (CSV and JSON).
 *
 * The column set and order are fixed; columns a subcommand does not produce
 * are written empty (CSV) or null (JSON). Floating-point values carry 10
 * significant digits.
 */

#include <array>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qmlscale/analysis.hpp"

namespace qmlscale {

inline constexpr std::array<std::string_view, 20> kCsvColumns = {
    "experiment_id",      "circuit_family", "entanglement", "topology",          "n_qubits",
    "improvement_factor", "swap_count",     "depth_pre",    "depth_post",        "depth_increase_pct",
    "twoq_pre",           "twoq_post",      "twoq_overhead_pct", "total_fidelity", "n_threshold",
    "fit_lambda",         "fit_beta",       "fit_r2",       "extrapolated",      "seed"};

struct ReportRow {
    std::string experiment_id;
    std::string circuit_family;
    std::string entanglement;
    std::string topology;
    std::optional<std::size_t> n_qubits;
    std::optional<double> improvement_factor;
    std::optional<std::size_t> swap_count;
    std::optional<std::size_t> depth_pre;
    std::optional<std::size_t> depth_post;
    std::optional<double> depth_increase_pct;
    std::optional<std::size_t> twoq_pre;
    std::optional<std::size_t> twoq_post;
    std::optional<double> twoq_overhead_pct;
    std::optional<double> total_fidelity;
    std::optional<double> n_threshold;
    std::optional<double> fit_lambda;
    std::optional<double> fit_beta;
    std::optional<double> fit_r2;
    std::optional<bool> extrapolated;
    std::optional<std::uint64_t> seed;

    void set_family(const CircuitFamily& f) {
        circuit_family = f.kind_name();
        entanglement = f.has_strategy() ? std::string(strategy_name(f.strategy)) : std::string();
    }

    void set_metrics(const ResourceMetrics& m) {
        swap_count = m.swap_count;
        depth_pre = m.depth_pre;
        depth_post = m.depth_post;
        depth_increase_pct = m.depth_increase_pct;
        twoq_pre = m.twoq_pre;
        twoq_post = m.twoq_post;
        twoq_overhead_pct = m.twoq_overhead_pct;
    }
};

inline std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

namespace detail {

using Cell = std::variant<std::monostate, std::string, std::uint64_t, double, bool>;

template <typename T>
Cell cell(const std::optional<T>& v) {
    if (!v) return std::monostate{};
    if constexpr (std::is_same_v<T, double>) {
        return *v;
    } else if constexpr (std::is_same_v<T, bool>) {
        return *v;
    } else {
        return static_cast<std::uint64_t>(*v);
    }
}

inline Cell cell(const std::string& s) {
    if (s.empty()) return std::monostate{};
    return s;
}

inline std::array<Cell, kCsvColumns.size()> cells(const ReportRow& r) {
    return {cell(r.experiment_id),      cell(r.circuit_family), cell(r.entanglement),     cell(r.topology),
            cell(r.n_qubits),           cell(r.improvement_factor), cell(r.swap_count),   cell(r.depth_pre),
            cell(r.depth_post),         cell(r.depth_increase_pct), cell(r.twoq_pre),     cell(r.twoq_post),
            cell(r.twoq_overhead_pct),  cell(r.total_fidelity), cell(r.n_threshold),      cell(r.fit_lambda),
            cell(r.fit_beta),           cell(r.fit_r2),         cell(r.extrapolated),     cell(r.seed)};
}

/// Quotes a field only when it contains a separator, quote or newline.
inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace detail

inline void write_csv(std::ostream& os, const std::vector<ReportRow>& rows) {
    for (std::size_t i = 0; i < kCsvColumns.size(); ++i) os << (i ? "," : "") << kCsvColumns[i];
    os << '\n';
    for (const ReportRow& r : rows) {
        const auto cs = detail::cells(r);
        for (std::size_t i = 0; i < cs.size(); ++i) {
            if (i) os << ',';
            std::visit(
                [&](const auto& v) {
                    using V = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<V, std::string>) {
                        os << detail::csv_escape(v);
                    } else if constexpr (std::is_same_v<V, double>) {
                        os << format_real(v);
                    } else if constexpr (std::is_same_v<V, bool>) {
                        os << (v ? "true" : "false");
                    } else if constexpr (std::is_same_v<V, std::uint64_t>) {
                        os << v;
                    }
                },
                cs[i]);
        }
        os << '\n';
    }
}

/// JSON array of objects keyed by column name. Reals are rounded to the
/// same 10 significant digits as the CSV.
inline nlohmann::ordered_json to_json(const std::vector<ReportRow>& rows) {
    auto out = nlohmann::ordered_json::array();
    for (const ReportRow& r : rows) {
        const auto cs = detail::cells(r);
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < cs.size(); ++i) {
            const std::string key(kCsvColumns[i]);
            std::visit(
                [&](const auto& v) {
                    using V = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<V, std::monostate>) {
                        obj[key] = nullptr;
                    } else if constexpr (std::is_same_v<V, double>) {
                        obj[key] = std::stod(format_real(v));
                    } else {
                        obj[key] = v;
                    }
                },
                cs[i]);
        }
        out.push_back(std::move(obj));
    }
    return out;
}

inline std::string experiment_id(std::string_view subcommand, std::size_t index) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%06zu", index);
    return std::string(subcommand) + "-" + buf;
}

inline std::vector<ReportRow> report_rows(const std::vector<ResourceRow>& rows, std::uint64_t seed) {
    std::vector<ReportRow> out;
    out.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        ReportRow r;
        r.experiment_id = experiment_id("resources", i);
        r.set_family(rows[i].family);
        r.topology = std::string(topology_name(rows[i].topology));
        r.n_qubits = rows[i].n;
        r.set_metrics(rows[i].metrics);
        r.seed = seed;
        out.push_back(std::move(r));
    }
    return out;
}

inline std::vector<ReportRow> report_rows(const std::vector<FidelityRow>& rows, std::uint64_t seed) {
    std::vector<ReportRow> out;
    out.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        ReportRow r;
        r.experiment_id = experiment_id("fidelity", i);
        r.set_family(rows[i].family);
        r.topology = std::string(topology_name(rows[i].topology));
        r.n_qubits = rows[i].n;
        r.improvement_factor = rows[i].improvement_factor;
        r.set_metrics(rows[i].metrics);
        r.total_fidelity = rows[i].total_fidelity;
        r.seed = seed;
        out.push_back(std::move(r));
    }
    return out;
}

inline std::vector<ReportRow> report_rows(const std::vector<TechGapRow>& rows, std::uint64_t seed) {
    std::vector<ReportRow> out;
    out.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const TechGapRow& t = rows[i];
        ReportRow r;
        r.experiment_id = experiment_id("tech-gap", i);
        r.set_family(t.family);
        r.topology = std::string(topology_name(t.topology));
        r.n_qubits = t.fixed_n;
        r.improvement_factor = t.improvement_factor;
        r.total_fidelity = t.fidelity_at_fixed_n;
        if (t.fit) {
            r.fit_lambda = t.fit->lambda;
            r.fit_beta = t.fit->beta;
            r.fit_r2 = t.fit->r_squared;
        }
        r.n_threshold = t.n_threshold;
        if (t.n_threshold) r.extrapolated = t.extrapolated;
        r.seed = seed;
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace qmlscale
