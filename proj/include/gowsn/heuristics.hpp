#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gowsn/field_model.hpp"
#include "gowsn/random.hpp"

namespace gowsn {

/// Board plus the nodes placed so far, with the planar distance from every
/// intersection to its nearest placed node kept current as nodes are added.
class ScoringContext {
public:
    ScoringContext(const GridBoard& board, std::vector<Position> placed);

    const GridBoard& board() const noexcept { return *board_; }
    const std::vector<Position>& placed() const noexcept { return placed_; }

    /// Distance from intersection `index` to the nearest placed node;
    /// infinity when nothing is placed.
    double nearest_placed(std::size_t index) const noexcept;

    void add_node(Position position);

private:
    const GridBoard* board_;
    std::vector<Position> placed_;
    std::vector<double> nearest_sq_;
};

/// Maps a candidate intersection to a score in [0, 1].
using Scorer = std::function<double(const ScoringContext&, const GridPoint&)>;

struct Heuristic {
    std::string name;
    double weight = 1.0;
    Scorer scorer;
};

/// Weighted-sum combination of named heuristics. An empty set is valid and
/// makes selection uniform.
class HeuristicSet {
public:
    HeuristicSet() = default;

    /// Throws InvalidConfig on a duplicate name, negative weight or empty scorer.
    HeuristicSet& add(Heuristic heuristic);

    const std::vector<Heuristic>& heuristics() const noexcept { return heuristics_; }
    bool empty() const noexcept { return heuristics_.empty(); }

    /// Sum of weight * score; throws InvalidParams if a scorer leaves [0, 1].
    double composite(const ScoringContext& ctx, const GridPoint& point) const;

private:
    std::vector<Heuristic> heuristics_;
};

struct ScoredCandidate {
    GridPoint point;
    double composite_score = 0.0;
    std::vector<std::pair<std::string, double>> per_heuristic;
};

/// One entry per free intersection, row-major. Throws BoardExhausted.
std::vector<ScoredCandidate> score_candidates(const ScoringContext& ctx, const HeuristicSet& hs);
std::vector<ScoredCandidate> score_candidates(const GridBoard& board, const Deployment& placed,
                                              const HeuristicSet& hs);

struct SelectionOptions {
    /// Added to every composite score before sampling.
    double smoothing = 0.01;
    /// Sample over every intersection, occupied or not.
    bool include_occupied = false;
};

/// Draws an intersection with probability proportional to composite + smoothing,
/// uniformly if every weight is zero. Only free intersections are eligible
/// unless `include_occupied`. Throws BoardExhausted.
GridPoint random_select(const ScoringContext& ctx, const HeuristicSet& hs, Rng& rng,
                        const SelectionOptions& options = {});

namespace scorers {

/// 1 at the nine star-point analogs, falling linearly with lattice distance.
double star_point(const ScoringContext& ctx, const GridPoint& point);
/// Peaks on the third and fourth lines from the nearest border, 0 on the first.
double edge_line(const ScoringContext& ctx, const GridPoint& point);
/// Distance to the nearest placed node over the field diagonal.
double dispersion(const ScoringContext& ctx, const GridPoint& point);
/// 1 within range of a placed node, else 0.
double attachment(const ScoringContext& ctx, const GridPoint& point);

}  // namespace scorers

/// Names accepted by builtin_heuristic, in catalog order.
const std::vector<std::string>& builtin_names();

/// Throws InvalidConfig for an unknown name.
Heuristic builtin_heuristic(const std::string& name, double weight = 1.0);

/// star_point, edge_line, dispersion and attachment, each with weight 1.
HeuristicSet builtin_catalog();

}  // namespace gowsn
