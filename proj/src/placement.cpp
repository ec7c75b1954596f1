#include "gowsn/placement.hpp"

#include <string>

#include "gowsn/error.hpp"
#include "gowsn/random.hpp"

namespace gowsn {
namespace {

struct LoopState {
    long n;
    double lambda;
    double p;
};

LoopState evaluate(const FieldSpec& field, long n)
{
    double const lambda = density({n, field.range_m(), field.area()});
    return {n, lambda, connectivity_probability(lambda, n)};
}

}  // namespace

PlacementResult go_heuristics_place(const FieldSpec& field, GridBoard& board, const HeuristicSet& hs,
                                    const PlacementConfig& cfg)
{
    if (!(board.field() == field))
        throw Error(ErrorCode::InvalidConfig, "board was built for a different field");
    if (!(cfg.smoothing >= 0.0))
        throw Error(ErrorCode::InvalidConfig, "smoothing must be >= 0");
    try {
        (void)cfg.stopping.target();
    } catch (const Error& e) {
        throw Error(ErrorCode::InvalidConfig, e.what());
    }
    std::uint64_t const max_iterations =
        cfg.max_iterations > 0 ? cfg.max_iterations : 100 * static_cast<std::uint64_t>(board.intersection_count());

    if (!cfg.no_seed_node && board.closed().empty())
        board.occupy(board.center());

    std::vector<Position> placed;
    placed.reserve(board.closed().size());
    for (auto const& p : board.closed())
        placed.push_back(p.position());
    ScoringContext ctx(board, placed);

    // N counts the nodes already on the board; with no_seed_node the count
    // starts at 1 on an empty board.
    long const initial_n = cfg.no_seed_node ? static_cast<long>(board.closed().size()) + 1
                                            : static_cast<long>(board.closed().size());
    LoopState state = evaluate(field, initial_n);

    PlacementResult result{Deployment{field, {}, Metric::Planar}, 0, 0.0, 0.0, 0, {}};
    Rng rng(cfg.seed);
    SelectionOptions const selection{cfg.smoothing, cfg.fig2_literal};

    while (!cfg.stopping.satisfied(state.p)) {
        if (board.free_count() == 0)
            throw Error(ErrorCode::BoardExhausted,
                        "all " + std::to_string(board.intersection_count())
                            + " intersections occupied at N = " + std::to_string(state.n));
        if (result.iterations >= max_iterations)
            throw Error(ErrorCode::IterationCapExceeded,
                        "no stop after " + std::to_string(max_iterations) + " iterations");

        GridPoint const current = random_select(ctx, hs, rng, selection);
        ++result.iterations;
        if (board.is_occupied(current)) {
            result.trace.push_back({result.iterations, state.n, state.lambda, state.p, std::nullopt, current});
            continue;
        }
        board.occupy(current);
        ctx.add_node(current.position());
        state = evaluate(field, state.n + 1);
        result.trace.push_back({result.iterations, state.n, state.lambda, state.p, current, current});
    }

    for (auto const& p : board.closed())
        result.deployment.nodes.push_back(p.position());
    result.n_final = state.n;
    result.lambda_final = state.lambda;
    result.p_final = state.p;
    return result;
}

PlacementResult uniform_random_place(const FieldSpec& field, long n_nodes, std::uint64_t seed)
{
    if (n_nodes < 1)
        throw Error(ErrorCode::InvalidConfig, "n_nodes must be at least 1");
    Rng rng(seed);
    PlacementResult result{Deployment{field, {}, Metric::Planar}, n_nodes, 0.0, 0.0, 0, {}};
    result.deployment.nodes.reserve(static_cast<std::size_t>(n_nodes));
    for (long i = 0; i < n_nodes; ++i) {
        double const x = rng.uniform(0.0, field.length_m());
        double const y = rng.uniform(0.0, field.width_m());
        result.deployment.nodes.push_back({x, y});
    }
    auto const state = evaluate(field, n_nodes);
    result.lambda_final = state.lambda;
    result.p_final = state.p;
    return result;
}

}  // namespace gowsn
