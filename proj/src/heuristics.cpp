#include "gowsn/heuristics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "gowsn/error.hpp"

namespace gowsn {

ScoringContext::ScoringContext(const GridBoard& board, std::vector<Position> placed)
    : board_(&board), nearest_sq_(board.intersection_count(), std::numeric_limits<double>::infinity())
{
    placed_.reserve(placed.size());
    for (auto const& p : placed)
        add_node(p);
}

double ScoringContext::nearest_placed(std::size_t index) const noexcept
{
    return std::sqrt(nearest_sq_[index]);
}

void ScoringContext::add_node(Position position)
{
    placed_.push_back(position);
    for (std::size_t i = 0; i < nearest_sq_.size(); ++i) {
        auto const p = board_->at(i);
        double const dx = p.x_m - position.x_m;
        double const dy = p.y_m - position.y_m;
        nearest_sq_[i] = std::min(nearest_sq_[i], dx * dx + dy * dy);
    }
}

//---------------------------------------------------------------------------//

HeuristicSet& HeuristicSet::add(Heuristic heuristic)
{
    if (!heuristic.scorer)
        throw Error(ErrorCode::InvalidConfig, "heuristic '" + heuristic.name + "' has no scorer");
    if (!(heuristic.weight >= 0.0) || !std::isfinite(heuristic.weight))
        throw Error(ErrorCode::InvalidConfig, "heuristic '" + heuristic.name + "' weight must be >= 0");
    for (auto const& h : heuristics_) {
        if (h.name == heuristic.name)
            throw Error(ErrorCode::InvalidConfig, "duplicate heuristic '" + heuristic.name + "'");
    }
    heuristics_.push_back(std::move(heuristic));
    return *this;
}

namespace {

double checked_score(const Heuristic& h, const ScoringContext& ctx, const GridPoint& point)
{
    double const s = h.scorer(ctx, point);
    if (!(s >= 0.0 && s <= 1.0))
        throw Error(ErrorCode::InvalidParams, "heuristic '" + h.name + "' scored outside [0, 1]");
    return s;
}

}  // namespace

double HeuristicSet::composite(const ScoringContext& ctx, const GridPoint& point) const
{
    double total = 0.0;
    for (auto const& h : heuristics_) {
        if (h.weight > 0.0)
            total += h.weight * checked_score(h, ctx, point);
    }
    return total;
}

std::vector<ScoredCandidate> score_candidates(const ScoringContext& ctx, const HeuristicSet& hs)
{
    auto const& board = ctx.board();
    if (board.free_count() == 0)
        throw Error(ErrorCode::BoardExhausted, "no free intersections");
    std::vector<ScoredCandidate> result;
    result.reserve(board.free_count());
    for (auto const& point : board.free_points()) {
        ScoredCandidate candidate{point, 0.0, {}};
        for (auto const& h : hs.heuristics()) {
            double const s = checked_score(h, ctx, point);
            candidate.per_heuristic.emplace_back(h.name, s);
            candidate.composite_score += h.weight * s;
        }
        result.push_back(std::move(candidate));
    }
    return result;
}

std::vector<ScoredCandidate> score_candidates(const GridBoard& board, const Deployment& placed,
                                              const HeuristicSet& hs)
{
    return score_candidates(ScoringContext(board, placed.nodes), hs);
}

GridPoint random_select(const ScoringContext& ctx, const HeuristicSet& hs, Rng& rng,
                        const SelectionOptions& options)
{
    auto const& board = ctx.board();
    if (!(options.smoothing >= 0.0) || !std::isfinite(options.smoothing))
        throw Error(ErrorCode::InvalidConfig, "smoothing must be >= 0");
    if (board.free_count() == 0)
        throw Error(ErrorCode::BoardExhausted, "no free intersections");

    std::size_t const count = board.intersection_count();
    std::vector<double> cumulative(count, 0.0);
    std::size_t eligible = 0;
    double total = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        bool const allowed = options.include_occupied || !board.is_occupied(i);
        if (allowed) {
            ++eligible;
            total += hs.composite(ctx, board.at(i)) + options.smoothing;
        }
        cumulative[i] = total;
    }

    bool const uniform = !(total > 0.0);
    double const target = rng.uniform() * (uniform ? static_cast<double>(eligible) : total);
    double running = 0.0;
    std::size_t last_allowed = count;
    for (std::size_t i = 0; i < count; ++i) {
        bool const allowed = options.include_occupied || !board.is_occupied(i);
        if (!allowed)
            continue;
        last_allowed = i;
        running = uniform ? running + 1.0 : cumulative[i];
        if (target < running)
            return board.at(i);
    }
    // Rounding can leave target == total; the last eligible point owns it.
    return board.at(last_allowed);
}

//---------------------------------------------------------------------------//

namespace scorers {

double star_point(const ScoringContext& ctx, const GridPoint& point)
{
    auto const& board = ctx.board();
    constexpr std::array<double, 3> fractions{3.0 / 18.0, 9.0 / 18.0, 15.0 / 18.0};
    auto line = [](double fraction, std::size_t lines) {
        return std::round(fraction * static_cast<double>(lines - 1));
    };
    double const span = static_cast<double>(std::min(board.rows(), board.cols()) - 1);
    double const decay = std::max(1.0, span / 6.0);

    double nearest = std::numeric_limits<double>::infinity();
    for (double fr : fractions) {
        for (double fc : fractions) {
            double const dr = static_cast<double>(point.row) - line(fr, board.rows());
            double const dc = static_cast<double>(point.col) - line(fc, board.cols());
            nearest = std::min(nearest, std::hypot(dr, dc));
        }
    }
    return std::max(0.0, 1.0 - nearest / decay);
}

double edge_line(const ScoringContext& ctx, const GridPoint& point)
{
    auto const& board = ctx.board();
    // 1-based line number counted from the nearest border.
    std::size_t const line = 1 + std::min({point.row, point.col, board.rows() - 1 - point.row,
                                           board.cols() - 1 - point.col});
    constexpr std::array<double, 7> by_line{0.0, 0.0, 0.5, 1.0, 1.0, 0.75, 0.5};
    return line < by_line.size() ? by_line[line] : 0.25;
}

double dispersion(const ScoringContext& ctx, const GridPoint& point)
{
    if (ctx.placed().empty())
        return 0.5;
    auto const& field = ctx.board().field();
    double const diagonal = std::hypot(field.length_m(), field.width_m());
    double const d = ctx.nearest_placed(ctx.board().index(point.row, point.col));
    return std::clamp(d / diagonal, 0.0, 1.0);
}

double attachment(const ScoringContext& ctx, const GridPoint& point)
{
    if (ctx.placed().empty())
        return 0.5;
    double const d = ctx.nearest_placed(ctx.board().index(point.row, point.col));
    return d <= ctx.board().field().range_m() ? 1.0 : 0.0;
}

}  // namespace scorers

const std::vector<std::string>& builtin_names()
{
    static const std::vector<std::string> names{"star_point", "edge_line", "dispersion", "attachment"};
    return names;
}

Heuristic builtin_heuristic(const std::string& name, double weight)
{
    if (name == "star_point")
        return {name, weight, scorers::star_point};
    if (name == "edge_line")
        return {name, weight, scorers::edge_line};
    if (name == "dispersion")
        return {name, weight, scorers::dispersion};
    if (name == "attachment")
        return {name, weight, scorers::attachment};
    throw Error(ErrorCode::InvalidConfig, "unknown heuristic '" + name + "'");
}

HeuristicSet builtin_catalog()
{
    HeuristicSet hs;
    for (auto const& name : builtin_names())
        hs.add(builtin_heuristic(name));
    return hs;
}

}  // namespace gowsn
