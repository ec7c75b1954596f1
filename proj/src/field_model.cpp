#include "gowsn/field_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gowsn/error.hpp"

namespace gowsn {
namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

// Relative slack when matching coordinates against the lattice and when
// flooring extent/pitch, so that e.g. pitch = 100/19 still yields 20 lines.
constexpr double kLatticeSlack = 1e-9;

std::size_t lattice_lines(double extent, double pitch)
{
    return static_cast<std::size_t>(std::floor(extent / pitch + kLatticeSlack)) + 1;
}

double axis_delta(double a, double b, double extent, Metric metric) noexcept
{
    double d = std::abs(a - b);
    if (metric == Metric::Toroidal) {
        d = std::fmod(d, extent);
        d = std::min(d, extent - d);
    }
    return d;
}

}  // namespace

FieldSpec::FieldSpec(double length_m, double width_m, double range_m)
    : length_m_(length_m), width_m_(width_m), range_m_(range_m)
{
    if (!positive_finite(length_m))
        throw Error(ErrorCode::InvalidParams, "length_m must be positive");
    if (!positive_finite(width_m))
        throw Error(ErrorCode::InvalidParams, "width_m must be positive");
    if (!positive_finite(range_m))
        throw Error(ErrorCode::InvalidParams, "range_m must be positive");
    if (range_m >= std::min(length_m, width_m))
        throw Error(ErrorCode::InvalidParams, "range_m must be smaller than the field's shorter side");
}

GridBoard::GridBoard(const FieldSpec& field, double pitch_m, std::size_t rows, std::size_t cols)
    : field_(field), pitch_m_(pitch_m), rows_(rows), cols_(cols), occupied_(rows * cols, false)
{
}

GridBoard make_board(const FieldSpec& field, double pitch_m)
{
    if (!positive_finite(pitch_m))
        throw Error(ErrorCode::NonPositivePitch, "pitch_m must be positive");
    if (pitch_m > std::min(field.length_m(), field.width_m()) * (1.0 + kLatticeSlack))
        throw Error(ErrorCode::PitchExceedsField, "pitch_m exceeds the field's shorter side");
    return GridBoard(field, pitch_m, lattice_lines(field.width_m(), pitch_m),
                     lattice_lines(field.length_m(), pitch_m));
}

GridPoint GridBoard::at(std::size_t row, std::size_t col) const
{
    if (row >= rows_ || col >= cols_)
        throw Error(ErrorCode::NotAnIntersection,
                    "(" + std::to_string(row) + "," + std::to_string(col) + ") is off the board");
    return {row, col, static_cast<double>(col) * pitch_m_, static_cast<double>(row) * pitch_m_};
}

bool GridBoard::is_intersection(const GridPoint& point) const noexcept
{
    if (point.row >= rows_ || point.col >= cols_)
        return false;
    double const tol = kLatticeSlack * std::max(1.0, pitch_m_ * static_cast<double>(std::max(rows_, cols_)));
    return std::abs(point.x_m - static_cast<double>(point.col) * pitch_m_) <= tol
           && std::abs(point.y_m - static_cast<double>(point.row) * pitch_m_) <= tol;
}

bool GridBoard::is_occupied(const GridPoint& point) const
{
    if (!is_intersection(point))
        throw Error(ErrorCode::NotAnIntersection, "point is not a board intersection");
    return occupied_[index(point.row, point.col)];
}

void GridBoard::occupy(const GridPoint& point)
{
    if (!is_intersection(point))
        throw Error(ErrorCode::NotAnIntersection, "point is not a board intersection");
    auto const i = index(point.row, point.col);
    if (occupied_[i])
        throw Error(ErrorCode::AlreadyOccupied,
                    "(" + std::to_string(point.row) + "," + std::to_string(point.col) + ") already occupied");
    occupied_[i] = true;
    closed_.push_back(at(i));
}

std::vector<GridPoint> GridBoard::free_points() const
{
    std::vector<GridPoint> result;
    result.reserve(free_count());
    for (std::size_t i = 0; i < intersection_count(); ++i) {
        if (!occupied_[i])
            result.push_back(at(i));
    }
    return result;
}

double distance(const FieldSpec& field, Metric metric, Position a, Position b) noexcept
{
    double const dx = axis_delta(a.x_m, b.x_m, field.length_m(), metric);
    double const dy = axis_delta(a.y_m, b.y_m, field.width_m(), metric);
    return std::hypot(dx, dy);
}

std::size_t count_neighbors(const Deployment& dep, std::size_t index, double radius_m)
{
    if (index >= dep.nodes.size())
        throw Error(ErrorCode::IndexOutOfRange,
                    "node index " + std::to_string(index) + " out of range");
    std::size_t count = 0;
    for (std::size_t j = 0; j < dep.nodes.size(); ++j) {
        if (j != index && distance(dep.field, dep.metric, dep.nodes[index], dep.nodes[j]) <= radius_m)
            ++count;
    }
    return count;
}

bool is_isolated(const Deployment& dep, std::size_t index, double radius_m)
{
    return count_neighbors(dep, index, radius_m) == 0;
}

//---------------------------------------------------------------------------//

NeighborIndex::NeighborIndex(const FieldSpec& field, Metric metric, double radius_m,
                             std::span<const Position> nodes)
    : field_(field), metric_(metric), radius_m_(radius_m), nodes_(nodes)
{
    // Cells at least one radius wide; never many more cells than nodes.
    double const max_cells = std::ceil(std::sqrt(4.0 * static_cast<double>(nodes.size()))) + 1.0;
    auto cells_along = [radius_m, max_cells](double extent) {
        double const n = std::floor(extent / std::max(radius_m, 1e-12));
        return static_cast<std::size_t>(std::clamp(n, 1.0, max_cells));
    };
    cells_x_ = cells_along(field.length_m());
    cells_y_ = cells_along(field.width_m());

    // Counting sort of node indices by cell.
    std::vector<std::size_t> cell_of_node(nodes.size());
    cell_start_.assign(cells_x_ * cells_y_ + 1, 0);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        auto const c = cell_of(nodes[i].y_m, field.width_m(), cells_y_) * cells_x_
                       + cell_of(nodes[i].x_m, field.length_m(), cells_x_);
        cell_of_node[i] = c;
        ++cell_start_[c + 1];
    }
    for (std::size_t c = 1; c < cell_start_.size(); ++c)
        cell_start_[c] += cell_start_[c - 1];
    cell_nodes_.resize(nodes.size());
    auto fill = cell_start_;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        cell_nodes_[fill[cell_of_node[i]]++] = i;
}

std::size_t NeighborIndex::cell_of(double coord, double extent, std::size_t cells) const noexcept
{
    double const scaled = std::floor(coord / extent * static_cast<double>(cells));
    return static_cast<std::size_t>(std::clamp(scaled, 0.0, static_cast<double>(cells - 1)));
}

template <typename Visit>
bool NeighborIndex::visit_candidates(Position point, Visit&& visit) const
{
    // Unique neighboring cell indices along one axis.
    auto axis_cells = [this](std::size_t center, std::size_t cells, std::size_t out[3]) {
        std::size_t n = 0;
        if (cells <= 3) {
            for (std::size_t c = 0; c < cells; ++c)
                out[n++] = c;
            return n;
        }
        for (int d = -1; d <= 1; ++d) {
            auto const shifted = static_cast<long>(center) + d;
            if (shifted < 0 || shifted >= static_cast<long>(cells)) {
                if (metric_ == Metric::Planar)
                    continue;
                out[n++] = static_cast<std::size_t>((shifted + static_cast<long>(cells)) % static_cast<long>(cells));
            } else {
                out[n++] = static_cast<std::size_t>(shifted);
            }
        }
        return n;
    };
    std::size_t xs[3];
    std::size_t ys[3];
    auto const nx = axis_cells(cell_of(point.x_m, field_.length_m(), cells_x_), cells_x_, xs);
    auto const ny = axis_cells(cell_of(point.y_m, field_.width_m(), cells_y_), cells_y_, ys);
    for (std::size_t iy = 0; iy < ny; ++iy) {
        for (std::size_t ix = 0; ix < nx; ++ix) {
            auto const c = ys[iy] * cells_x_ + xs[ix];
            for (auto k = cell_start_[c]; k < cell_start_[c + 1]; ++k) {
                if (!visit(cell_nodes_[k]))
                    return false;
            }
        }
    }
    return true;
}

std::size_t NeighborIndex::count_within(Position point, std::optional<std::size_t> exclude) const
{
    std::size_t count = 0;
    visit_candidates(point, [&](std::size_t j) {
        if (j != exclude && distance(field_, metric_, point, nodes_[j]) <= radius_m_)
            ++count;
        return true;
    });
    return count;
}

bool NeighborIndex::any_within(Position point, std::optional<std::size_t> exclude) const
{
    bool found = false;
    visit_candidates(point, [&](std::size_t j) {
        if (j != exclude && distance(field_, metric_, point, nodes_[j]) <= radius_m_)
            found = true;
        return !found;
    });
    return found;
}

bool no_isolated_nodes(const Deployment& dep, double radius_m)
{
    if (dep.nodes.size() < 2)
        return false;
    NeighborIndex const index(dep.field, dep.metric, radius_m, dep.nodes);
    for (std::size_t i = 0; i < dep.nodes.size(); ++i) {
        if (!index.any_within(dep.nodes[i], i))
            return false;
    }
    return true;
}

std::optional<double> min_pairwise_distance(const Deployment& dep)
{
    if (dep.nodes.size() < 2)
        return std::nullopt;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < dep.nodes.size(); ++i) {
        for (std::size_t j = i + 1; j < dep.nodes.size(); ++j)
            best = std::min(best, distance(dep.field, dep.metric, dep.nodes[i], dep.nodes[j]));
    }
    return best;
}

}  // namespace gowsn
