#include "gowsn/field_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "gowsn/error.hpp"
#include "gowsn/io.hpp"
#include "gowsn/random.hpp"

namespace gowsn {
namespace {

ErrorCode code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no gowsn::Error thrown";
    return ErrorCode::InvalidParams;
}

FieldSpec benchmark_field() { return {100.0, 100.0, 7.0}; }

Deployment random_deployment(Rng& rng, const FieldSpec& field, std::size_t n, Metric metric)
{
    Deployment dep{field, {}, metric};
    for (std::size_t i = 0; i < n; ++i)
        dep.nodes.push_back({rng.uniform(0.0, field.length_m()), rng.uniform(0.0, field.width_m())});
    return dep;
}

TEST(FieldSpecTest, rejects_invalid_dimensions)
{
    EXPECT_EQ(ErrorCode::InvalidParams, code_of([] { FieldSpec(0.0, 10.0, 1.0); }));
    EXPECT_EQ(ErrorCode::InvalidParams, code_of([] { FieldSpec(10.0, -1.0, 1.0); }));
    EXPECT_EQ(ErrorCode::InvalidParams, code_of([] { FieldSpec(10.0, 10.0, -1.0); }));
    EXPECT_EQ(ErrorCode::InvalidParams, code_of([] { FieldSpec(10.0, 20.0, 10.0); }));
    try {
        FieldSpec(100.0, 100.0, -1.0);
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("range_m"), std::string::npos);
    }
    EXPECT_DOUBLE_EQ(200.0, FieldSpec(10.0, 20.0, 1.0).area());
}

TEST(GridBoardTest, dimensions)
{
    auto const field = benchmark_field();
    auto go = make_board(field, 100.0 / 19.0);
    EXPECT_EQ(20u, go.rows());
    EXPECT_EQ(20u, go.cols());
    EXPECT_EQ(400u, go.intersection_count());

    auto const truncated = make_board(field, 5.2631578947);
    EXPECT_EQ(400u, truncated.intersection_count());

    auto const corners = make_board(field, 100.0);
    EXPECT_EQ(2u, corners.rows());
    EXPECT_EQ(2u, corners.cols());

    auto const half_range = make_board(field, 3.5);
    EXPECT_EQ(29u, half_range.rows());
    EXPECT_EQ(841u, half_range.intersection_count());

    auto const rect = make_board(FieldSpec(100.0, 50.0, 7.0), 10.0);
    EXPECT_EQ(6u, rect.rows());
    EXPECT_EQ(11u, rect.cols());
}

TEST(GridBoardTest, pitch_errors)
{
    auto const field = benchmark_field();
    EXPECT_EQ(ErrorCode::NonPositivePitch, code_of([&] { make_board(field, 0.0); }));
    EXPECT_EQ(ErrorCode::NonPositivePitch, code_of([&] { make_board(field, -2.0); }));
    EXPECT_EQ(ErrorCode::PitchExceedsField, code_of([&] { make_board(field, 100.5); }));
}

TEST(GridBoardTest, occupy_and_free_points)
{
    auto board = make_board(benchmark_field(), 100.0 / 19.0);
    EXPECT_EQ(400u, board.free_points().size());

    board.occupy(board.at(0, 0));
    EXPECT_EQ(1u, board.closed().size());
    EXPECT_EQ(399u, board.free_points().size());
    EXPECT_EQ(ErrorCode::AlreadyOccupied, code_of([&] { board.occupy(board.at(0, 0)); }));

    GridPoint off_lattice = board.at(1, 1);
    off_lattice.x_m += 0.5;
    EXPECT_EQ(ErrorCode::NotAnIntersection, code_of([&] { board.occupy(off_lattice); }));
    EXPECT_EQ(ErrorCode::NotAnIntersection, code_of([&] { board.occupy({20, 0, 0.0, 0.0}); }));
    EXPECT_EQ(1u, board.closed().size());

    auto small = make_board(benchmark_field(), 50.0);
    for (auto const& p : small.free_points())
        small.occupy(p);
    EXPECT_TRUE(small.free_points().empty());
    EXPECT_EQ(9u, small.closed().size());
}

TEST(GridBoardTest, free_and_closed_partition)
{
    Rng rng(11);
    auto board = make_board(benchmark_field(), 12.5);
    for (int step = 0; step < 60; ++step) {
        auto const i = static_cast<std::size_t>(rng.next() % board.intersection_count());
        auto const before = board.closed().size();
        if (board.is_occupied(i)) {
            EXPECT_THROW(board.occupy(board.at(i)), Error);
            EXPECT_EQ(before, board.closed().size());
        } else {
            board.occupy(board.at(i));
            EXPECT_EQ(before + 1, board.closed().size());
        }
        auto const free = board.free_points();
        EXPECT_EQ(board.intersection_count(), free.size() + board.closed().size());
        for (auto const& p : free)
            EXPECT_FALSE(board.is_occupied(p));
        for (auto const& p : board.closed())
            EXPECT_TRUE(board.is_occupied(p));
    }
}

TEST(GridBoardTest, lattice_coordinates)
{
    auto const board = make_board(benchmark_field(), 3.5);
    auto const p = board.at(4, 7);
    EXPECT_DOUBLE_EQ(7 * 3.5, p.x_m);
    EXPECT_DOUBLE_EQ(4 * 3.5, p.y_m);
    EXPECT_EQ(14u, board.center().row);
    EXPECT_EQ(14u, board.center().col);
    for (auto const& q : board.free_points()) {
        EXPECT_LE(q.x_m, 100.0);
        EXPECT_LE(q.y_m, 100.0);
    }
}

TEST(NeighborTest, examples)
{
    auto const field = benchmark_field();
    Deployment pair{field, {{10.0, 10.0}, {15.0, 10.0}}, Metric::Planar};
    EXPECT_EQ(1u, count_neighbors(pair, 0, 7.0));
    EXPECT_EQ(1u, count_neighbors(pair, 1, 7.0));

    Deployment wrap{field, {{0.0, 0.0}, {99.0, 0.0}}, Metric::Planar};
    EXPECT_EQ(0u, count_neighbors(wrap, 0, 7.0));
    wrap.metric = Metric::Toroidal;
    EXPECT_EQ(1u, count_neighbors(wrap, 0, 7.0));
    EXPECT_DOUBLE_EQ(1.0, distance(field, Metric::Toroidal, wrap.nodes[0], wrap.nodes[1]));

    EXPECT_EQ(ErrorCode::IndexOutOfRange, code_of([&] { count_neighbors(pair, 2, 7.0); }));
    EXPECT_EQ(ErrorCode::IndexOutOfRange, code_of([&] { is_isolated(pair, 5, 7.0); }));
}

TEST(NeighborTest, isolation_examples)
{
    auto const field = benchmark_field();
    Deployment single{field, {{50.0, 50.0}}, Metric::Planar};
    EXPECT_TRUE(is_isolated(single, 0, 7.0));

    Deployment coincident{field, {{20.0, 30.0}, {20.0, 30.0}}, Metric::Planar};
    EXPECT_FALSE(is_isolated(coincident, 0, 7.0));

    Deployment far{field, {{0.0, 0.0}, {50.0, 50.0}}, Metric::Planar};
    EXPECT_TRUE(is_isolated(far, 0, 7.0));
    EXPECT_TRUE(is_isolated(far, 1, 7.0));
    EXPECT_FALSE(no_isolated_nodes(far, 7.0));
}

TEST(NeighborTest, properties_on_random_deployments)
{
    Rng rng(2024);
    for (int round = 0; round < 20; ++round) {
        double const length = rng.uniform(20.0, 200.0);
        double const width = rng.uniform(20.0, 200.0);
        FieldSpec const field(length, width, rng.uniform(0.5, std::min(length, width) * 0.6));
        auto const n = static_cast<std::size_t>(2 + rng.next() % 80);
        auto planar = random_deployment(rng, field, n, Metric::Planar);
        auto torus = planar;
        torus.metric = Metric::Toroidal;

        NeighborIndex const planar_index(field, Metric::Planar, field.range_m(), planar.nodes);
        NeighborIndex const torus_index(field, Metric::Toroidal, field.range_m(), torus.nodes);
        bool any_isolated = false;
        for (std::size_t i = 0; i < n; ++i) {
            auto const cp = count_neighbors(planar, i, field.range_m());
            auto const ct = count_neighbors(torus, i, field.range_m());
            EXPECT_EQ(cp == 0, is_isolated(planar, i, field.range_m()));
            EXPECT_GE(ct, cp);
            EXPECT_EQ(cp, planar_index.count_within(planar.nodes[i], i));
            EXPECT_EQ(ct, torus_index.count_within(torus.nodes[i], i));
            EXPECT_EQ(cp > 0, planar_index.any_within(planar.nodes[i], i));
            any_isolated = any_isolated || cp == 0;
            for (std::size_t j = 0; j < n; ++j) {
                EXPECT_LE(distance(field, Metric::Toroidal, planar.nodes[i], planar.nodes[j]),
                          distance(field, Metric::Planar, planar.nodes[i], planar.nodes[j]) + 1e-12);
            }
        }
        EXPECT_EQ(!any_isolated, no_isolated_nodes(planar, field.range_m()));

        // Relabeling changes indices only.
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i)
            order[i] = n - 1 - i;
        auto permuted = planar;
        for (std::size_t i = 0; i < n; ++i)
            permuted.nodes[i] = planar.nodes[order[i]];
        for (std::size_t i = 0; i < n; ++i)
            EXPECT_EQ(count_neighbors(planar, order[i], field.range_m()),
                      count_neighbors(permuted, i, field.range_m()));
    }
}

TEST(NeighborTest, mean_degree_matches_density)
{
    // Over 100 seeded 500-node deployments on the 100 m torus the mean
    // degree estimates N pi R^2 / A = 7.697 (exact expectation (N-1) pi R^2 / A
    // = 7.682 on the torus; sampling error ~0.02).
    auto const field = benchmark_field();
    double total = 0.0;
    long nodes = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Rng rng(derive_seed(99, 0, seed));
        auto const dep = random_deployment(rng, field, 500, Metric::Toroidal);
        NeighborIndex const index(field, Metric::Toroidal, 7.0, dep.nodes);
        for (std::size_t i = 0; i < dep.nodes.size(); ++i)
            total += static_cast<double>(index.count_within(dep.nodes[i], i));
        nodes += 500;
    }
    double const lambda = 500 * std::numbers::pi * 49.0 / 10000.0;
    EXPECT_NEAR(lambda, total / static_cast<double>(nodes), 0.1);
}

TEST(NeighborTest, min_pairwise_distance)
{
    auto const field = benchmark_field();
    Deployment dep{field, {{0.0, 0.0}}, Metric::Planar};
    EXPECT_FALSE(min_pairwise_distance(dep).has_value());
    dep.nodes.push_back({3.0, 4.0});
    dep.nodes.push_back({50.0, 50.0});
    EXPECT_DOUBLE_EQ(5.0, *min_pairwise_distance(dep));
}

TEST(DeploymentJsonTest, round_trip_and_schema)
{
    Rng rng(5);
    auto const dep = random_deployment(rng, FieldSpec(80.0, 60.0, 9.0), 25, Metric::Toroidal);
    auto const doc = deployment_to_json(dep);
    EXPECT_EQ("toroidal", doc.at("metric"));
    EXPECT_DOUBLE_EQ(80.0, doc.at("field").at("length_m").get<double>());
    auto const back = deployment_from_json(doc);
    EXPECT_EQ(dep.field, back.field);
    EXPECT_EQ(dep.metric, back.metric);
    EXPECT_EQ(dep.nodes, back.nodes);

    auto outside = doc;
    outside["nodes"].push_back({90.0, 10.0});
    EXPECT_EQ(ErrorCode::InvalidConfig, code_of([&] { deployment_from_json(outside); }));
    auto bad_metric = doc;
    bad_metric["metric"] = "spherical";
    EXPECT_EQ(ErrorCode::InvalidConfig, code_of([&] { deployment_from_json(bad_metric); }));
}

}  // namespace
}  // namespace gowsn
