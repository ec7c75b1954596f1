#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace gowsn {

enum class Metric { Planar, Toroidal };

/// Rectangular sensor field. One radius serves as both sensing and
/// communication range.
class FieldSpec {
public:
    /// Throws InvalidParams naming the offending field.
    FieldSpec(double length_m, double width_m, double range_m);

    double length_m() const noexcept { return length_m_; }
    double width_m() const noexcept { return width_m_; }
    double range_m() const noexcept { return range_m_; }
    double area() const noexcept { return length_m_ * width_m_; }
    bool is_square() const noexcept { return length_m_ == width_m_; }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    double length_m_;
    double width_m_;
    double range_m_;
};

struct Position {
    double x_m = 0.0;
    double y_m = 0.0;

    friend bool operator==(const Position&, const Position&) = default;
};

struct GridPoint {
    std::size_t row = 0;
    std::size_t col = 0;
    double x_m = 0.0;
    double y_m = 0.0;

    Position position() const noexcept { return {x_m, y_m}; }

    friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

/// Square lattice of intersections at multiples of the pitch, both borders
/// included, plus the set of occupied ("closed") intersections.
class GridBoard {
public:
    const FieldSpec& field() const noexcept { return field_; }
    double pitch_m() const noexcept { return pitch_m_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t intersection_count() const noexcept { return rows_ * cols_; }

    /// Row-major index of an in-range (row, col).
    std::size_t index(std::size_t row, std::size_t col) const noexcept { return row * cols_ + col; }

    /// Throws NotAnIntersection when out of range.
    GridPoint at(std::size_t row, std::size_t col) const;
    GridPoint at(std::size_t index) const { return at(index / cols_, index % cols_); }
    GridPoint center() const { return at(rows_ / 2, cols_ / 2); }

    /// True iff row/col are in range and the coordinates are the lattice ones.
    bool is_intersection(const GridPoint& point) const noexcept;
    bool is_occupied(const GridPoint& point) const;
    bool is_occupied(std::size_t index) const noexcept { return occupied_[index]; }

    /// Throws AlreadyOccupied or NotAnIntersection; otherwise |closed| grows by one.
    void occupy(const GridPoint& point);

    /// Occupied intersections in the order they were occupied.
    const std::vector<GridPoint>& closed() const noexcept { return closed_; }
    std::size_t free_count() const noexcept { return intersection_count() - closed_.size(); }

    /// Free intersections in row-major order.
    std::vector<GridPoint> free_points() const;

private:
    friend GridBoard make_board(const FieldSpec& field, double pitch_m);
    GridBoard(const FieldSpec& field, double pitch_m, std::size_t rows, std::size_t cols);

    FieldSpec field_;
    double pitch_m_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<bool> occupied_;
    std::vector<GridPoint> closed_;
};

/// Throws NonPositivePitch or PitchExceedsField.
GridBoard make_board(const FieldSpec& field, double pitch_m);

struct Deployment {
    FieldSpec field;
    std::vector<Position> nodes;
    Metric metric = Metric::Planar;
};

/// Distance under `metric`; the toroidal metric wraps each axis independently.
double distance(const FieldSpec& field, Metric metric, Position a, Position b) noexcept;

/// Number of other nodes within `radius_m` (inclusive). Brute force over all
/// nodes; see NeighborIndex for bulk queries. Throws IndexOutOfRange.
std::size_t count_neighbors(const Deployment& dep, std::size_t index, double radius_m);
bool is_isolated(const Deployment& dep, std::size_t index, double radius_m);

/// Uniform cell grid over the field for radius queries in O(local density).
class NeighborIndex {
public:
    NeighborIndex(const FieldSpec& field, Metric metric, double radius_m,
                  std::span<const Position> nodes);

    /// Nodes within the index radius of `point`, skipping `exclude` if set.
    std::size_t count_within(Position point, std::optional<std::size_t> exclude = {}) const;
    bool any_within(Position point, std::optional<std::size_t> exclude = {}) const;

private:
    template <typename Visit>
    bool visit_candidates(Position point, Visit&& visit) const;
    std::size_t cell_of(double coord, double extent, std::size_t cells) const noexcept;

    FieldSpec field_;
    Metric metric_;
    double radius_m_;
    std::span<const Position> nodes_;
    std::size_t cells_x_;
    std::size_t cells_y_;
    std::vector<std::size_t> cell_start_;
    std::vector<std::size_t> cell_nodes_;
};

/// True iff no node of `dep` is isolated at `radius_m`.
bool no_isolated_nodes(const Deployment& dep, double radius_m);

/// Smallest distance between any two nodes; nullopt with fewer than two.
std::optional<double> min_pairwise_distance(const Deployment& dep);

}  // namespace gowsn
