#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gowsn/analytics.hpp"
#include "gowsn/field_model.hpp"
#include "gowsn/heuristics.hpp"
#include "gowsn/placement.hpp"

namespace gowsn {

struct McConfig {
    long trials = 10000;
    long samples_per_trial = 100;
    Metric metric = Metric::Toroidal;
    std::uint64_t master_seed = 0;
};

struct McReport {
    double estimate = 0.0;
    double std_error = 0.0;
    long trials = 0;
    double analytic_reference = 0.0;
    double abs_deviation = 0.0;
};

/// Fraction of uniform deployments of `n_nodes` with no isolated node, against
/// the closed-form connectivity probability. Throws InvalidConfig.
McReport mc_no_isolated_probability(const FieldSpec& field, long n_nodes, const McConfig& cfg);

/// Exact probability that two uniform nodes on the torus are within range,
/// pi R^2 / A; valid while R is at most half of each side.
double two_node_contact_probability(const FieldSpec& field);

/// Empirical distribution of the number of nodes (out of n_nodes - 1 uniform
/// ones) covering a uniform test point, over trials x samples_per_trial
/// points. Sums to 1. Throws InvalidConfig.
std::vector<double> mc_coverage_histogram(const FieldSpec& field, long n_nodes, const McConfig& cfg);

/// Produces the deployment for one trial from that trial's seed.
using Strategy = std::function<Deployment(std::uint64_t seed)>;

struct StrategyTrial {
    std::string strategy;
    long trial = 0;
    bool no_isolated = false;
    double min_pairwise_m = 0.0;
};

struct StrategyStats {
    std::string strategy;
    double no_isolated_rate = 0.0;
    double mean_min_pairwise_m = 0.0;
    std::vector<StrategyTrial> trials;
};

/// Runs `strategy` for `trials` derived seeds and measures isolation (planar,
/// at the field range) and the minimum pairwise distance.
StrategyStats evaluate_strategy(const std::string& name, const Strategy& strategy, const FieldSpec& field,
                                long trials, std::uint64_t master_seed);

struct ComparisonReport {
    StrategyStats heuristic;
    StrategyStats baseline;
    long n_nodes = 0;
};

/// Heuristic placement against uniform random placement of the same node
/// count. `board` is the starting board, copied per trial. Throws InvalidConfig
/// for trials < 1; propagates BoardExhausted.
ComparisonReport compare_strategies(const FieldSpec& field, const GridBoard& board, const HeuristicSet& hs,
                                    const PlacementConfig& cfg, long trials, std::uint64_t master_seed);

}  // namespace gowsn
