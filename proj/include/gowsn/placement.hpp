#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gowsn/analytics.hpp"
#include "gowsn/field_model.hpp"
#include "gowsn/heuristics.hpp"

namespace gowsn {

struct PlacementConfig {
    StoppingRule stopping = StoppingRule::error_complement(0.1);
    /// Loop passes allowed, skipped draws included; 0 means 100 x intersections.
    std::uint64_t max_iterations = 0;
    std::uint64_t seed = 0;
    /// Draw from every intersection and skip occupied draws, as the original
    /// loop does, instead of drawing only free intersections.
    bool fig2_literal = false;
    /// Start with N = 1 on an empty board instead of seeding the center.
    bool no_seed_node = false;
    double smoothing = 0.01;
};

struct TraceEntry {
    std::uint64_t iteration = 0;
    long n = 0;
    double lambda = 0.0;
    double p = 0.0;
    /// Chosen intersection; nullopt marks a skipped (occupied) draw.
    std::optional<GridPoint> chosen;
    /// The drawn intersection, whether or not it was skipped.
    GridPoint drawn;
};

struct PlacementResult {
    Deployment deployment;
    long n_final = 0;
    double lambda_final = 0.0;
    double p_final = 0.0;
    std::uint64_t iterations = 0;
    std::vector<TraceEntry> trace;
};

/// Heuristic placement loop: start from one node (or the bare count), then
/// repeatedly draw an intersection and occupy it until the connectivity
/// probability over the full field satisfies the stopping rule. `board` is
/// updated in place. Throws BoardExhausted, IterationCapExceeded, InvalidConfig.
PlacementResult go_heuristics_place(const FieldSpec& field, GridBoard& board, const HeuristicSet& hs,
                                    const PlacementConfig& cfg);

/// Baseline: n_nodes positions uniform over the continuous field.
PlacementResult uniform_random_place(const FieldSpec& field, long n_nodes, std::uint64_t seed);

}  // namespace gowsn
