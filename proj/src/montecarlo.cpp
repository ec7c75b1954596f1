#include "gowsn/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gowsn/error.hpp"
#include "gowsn/random.hpp"

namespace gowsn {
namespace {

// Stream tags keep the seeds of different experiments apart.
enum Stream : std::uint64_t {
    kIsolationStream = 1,
    kCoverageStream = 2,
    kStrategyStream = 3,
    kBaselineStream = 4,
};

void check_config(long n_nodes, const McConfig& cfg)
{
    if (n_nodes < 2)
        throw Error(ErrorCode::InvalidConfig, "n_nodes must be at least 2");
    if (cfg.trials < 1)
        throw Error(ErrorCode::InvalidConfig, "mc.trials must be at least 1");
    if (cfg.samples_per_trial < 1)
        throw Error(ErrorCode::InvalidConfig, "mc.samples_per_trial must be at least 1");
}

void scatter(const FieldSpec& field, Rng& rng, std::vector<Position>& out, long count)
{
    out.clear();
    for (long i = 0; i < count; ++i) {
        double const x = rng.uniform(0.0, field.length_m());
        double const y = rng.uniform(0.0, field.width_m());
        out.push_back({x, y});
    }
}

}  // namespace

McReport mc_no_isolated_probability(const FieldSpec& field, long n_nodes, const McConfig& cfg)
{
    check_config(n_nodes, cfg);
    Deployment dep{field, {}, cfg.metric};
    dep.nodes.reserve(static_cast<std::size_t>(n_nodes));
    long connected = 0;
    for (long t = 0; t < cfg.trials; ++t) {
        Rng rng(derive_seed(cfg.master_seed, kIsolationStream, static_cast<std::uint64_t>(t)));
        scatter(field, rng, dep.nodes, n_nodes);
        if (no_isolated_nodes(dep, field.range_m()))
            ++connected;
    }
    McReport report;
    report.trials = cfg.trials;
    report.estimate = static_cast<double>(connected) / static_cast<double>(cfg.trials);
    report.std_error = std::sqrt(report.estimate * (1.0 - report.estimate) / static_cast<double>(cfg.trials));
    report.analytic_reference = connectivity_at(field, n_nodes);
    report.abs_deviation = std::abs(report.estimate - report.analytic_reference);
    return report;
}

double two_node_contact_probability(const FieldSpec& field)
{
    return std::numbers::pi * field.range_m() * field.range_m() / field.area();
}

std::vector<double> mc_coverage_histogram(const FieldSpec& field, long n_nodes, const McConfig& cfg)
{
    check_config(n_nodes, cfg);
    std::vector<long> counts(static_cast<std::size_t>(n_nodes), 0);
    std::vector<Position> nodes;
    nodes.reserve(static_cast<std::size_t>(n_nodes - 1));
    for (long t = 0; t < cfg.trials; ++t) {
        Rng rng(derive_seed(cfg.master_seed, kCoverageStream, static_cast<std::uint64_t>(t)));
        scatter(field, rng, nodes, n_nodes - 1);
        NeighborIndex const index(field, cfg.metric, field.range_m(), nodes);
        for (long s = 0; s < cfg.samples_per_trial; ++s) {
            double const x = rng.uniform(0.0, field.length_m());
            double const y = rng.uniform(0.0, field.width_m());
            ++counts[index.count_within({x, y})];
        }
    }
    double const total = static_cast<double>(cfg.trials) * static_cast<double>(cfg.samples_per_trial);
    std::vector<double> histogram(counts.size());
    std::transform(counts.begin(), counts.end(), histogram.begin(),
                   [total](long c) { return static_cast<double>(c) / total; });
    return histogram;
}

StrategyStats evaluate_strategy(const std::string& name, const Strategy& strategy, const FieldSpec& field,
                                long trials, std::uint64_t master_seed)
{
    if (trials < 1)
        throw Error(ErrorCode::InvalidConfig, "trials must be at least 1");
    StrategyStats stats;
    stats.strategy = name;
    stats.trials.reserve(static_cast<std::size_t>(trials));
    for (long t = 0; t < trials; ++t) {
        Deployment dep = strategy(derive_seed(master_seed, kStrategyStream, static_cast<std::uint64_t>(t)));
        dep.metric = Metric::Planar;
        StrategyTrial row{name, t, no_isolated_nodes(dep, field.range_m()),
                          min_pairwise_distance(dep).value_or(0.0)};
        stats.trials.push_back(row);
    }
    long connected = 0;
    double distance_sum = 0.0;
    for (auto const& row : stats.trials) {
        connected += row.no_isolated ? 1 : 0;
        distance_sum += row.min_pairwise_m;
    }
    stats.no_isolated_rate = static_cast<double>(connected) / static_cast<double>(trials);
    stats.mean_min_pairwise_m = distance_sum / static_cast<double>(trials);
    return stats;
}

ComparisonReport compare_strategies(const FieldSpec& field, const GridBoard& board, const HeuristicSet& hs,
                                    const PlacementConfig& cfg, long trials, std::uint64_t master_seed)
{
    ComparisonReport report;
    // The stopping count depends only on N, so every heuristic trial ends at
    // the same n_final; the baseline places that many nodes.
    auto heuristic = [&](std::uint64_t seed) {
        GridBoard trial_board = board;
        PlacementConfig trial_cfg = cfg;
        trial_cfg.seed = seed;
        auto result = go_heuristics_place(field, trial_board, hs, trial_cfg);
        report.n_nodes = result.n_final;
        return result.deployment;
    };
    report.heuristic = evaluate_strategy("heuristic", heuristic, field, trials, master_seed);

    auto baseline = [&](std::uint64_t seed) {
        return uniform_random_place(field, report.n_nodes, mix_seed(seed ^ kBaselineStream)).deployment;
    };
    report.baseline = evaluate_strategy("uniform", baseline, field, trials, master_seed);
    return report;
}

}  // namespace gowsn
