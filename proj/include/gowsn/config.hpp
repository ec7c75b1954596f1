#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gowsn/analytics.hpp"
#include "gowsn/field_model.hpp"
#include "gowsn/heuristics.hpp"
#include "gowsn/montecarlo.hpp"
#include "gowsn/placement.hpp"

namespace gowsn {

struct HeuristicSpec {
    std::string name;
    double weight = 1.0;
};

/// Fully resolved run configuration. Defaults reproduce the 100 m x 100 m,
/// 7 m range benchmark.
struct RunConfig {
    double length_m = 100.0;
    double width_m = 100.0;
    double range_m = 7.0;
    /// Lattice pitch; unset means range_m / 2.
    std::optional<double> pitch_m;

    std::vector<HeuristicSpec> heuristics{
        {"star_point", 1.0}, {"edge_line", 1.0}, {"dispersion", 1.0}, {"attachment", 1.0}};
    double smoothing = 0.01;
    bool fig2_literal = false;
    bool no_seed_node = false;
    StoppingRule stopping = StoppingRule::error_complement(0.1);
    std::uint64_t max_iterations = 0;
    std::uint64_t seed = 0;

    McConfig mc{};

    // analyze
    long n_min = 1;
    long n_max = 1000;
    long coverage_n = 1000;

    // validate
    long eq2_nodes = 500;
    long coverage_nodes = 1000;
    long two_node_trials = 100000;

    // compare
    long compare_trials = 200;

    std::optional<std::string> out;
    std::optional<std::string> trace;
    std::optional<std::string> coverage_out;

    FieldSpec field() const { return {length_m, width_m, range_m}; }
    double resolved_pitch() const { return pitch_m.value_or(range_m / 2.0); }
    HeuristicSet heuristic_set() const;
    PlacementConfig placement() const;

    /// Checks every nested invariant; throws InvalidConfig naming the key.
    void validate() const;
};

/// Applies the keys present in `doc` on top of `base`. Unknown keys and
/// mistyped values throw InvalidConfig.
RunConfig config_from_json(const nlohmann::json& doc, RunConfig base = {});
nlohmann::json config_to_json(const RunConfig& cfg);

std::string_view metric_name(Metric metric);
Metric parse_metric(std::string_view name);
std::string_view stopping_name(StoppingRule::Kind kind);
StoppingRule::Kind parse_stopping(std::string_view name);

}  // namespace gowsn
