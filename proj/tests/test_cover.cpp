#include "doctest.h"

#include "gtsp/cover.hpp"
#include "gtsp/error.hpp"

#include "test_support.hpp"

#include <random>
#include <vector>

using gtsp::errc;
using gtsp::WeightedGraph;

namespace {

WeightedGraph p3() {
    return WeightedGraph(3, {{0, 1, 1}, {1, 2, 1}});
}

// Independent minimum-cover size: branch on the endpoints of the first
// uncovered edge.
int min_cover_size(const WeightedGraph& g, std::vector<char>& chosen) {
    const WeightedGraph::Edge* open = nullptr;
    for (const auto& e : g.edges()) {
        if (!chosen[e.u] && !chosen[e.v]) {
            open = &e;
            break;
        }
    }
    if (!open) {
        int count = 0;
        for (char c : chosen) count += c;
        return count;
    }
    chosen[open->u] = 1;
    int with_u = min_cover_size(g, chosen);
    chosen[open->u] = 0;
    chosen[open->v] = 1;
    int with_v = min_cover_size(g, chosen);
    chosen[open->v] = 0;
    return std::min(with_u, with_v);
}

int min_cover_size(const WeightedGraph& g) {
    std::vector<char> chosen(g.vertex_count(), 0);
    return min_cover_size(g, chosen);
}

} // namespace

TEST_CASE("approx_cover takes both endpoints of a greedy matching") {
    CHECK(gtsp::approx_cover(p3()).vertices == std::vector<int>{0, 1});
    CHECK(gtsp::approx_cover(WeightedGraph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}})).vertices ==
          std::vector<int>{0, 1, 2, 3});
    CHECK(gtsp::approx_cover(WeightedGraph(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}})).vertices ==
          std::vector<int>{0, 1});
    CHECK(gtsp::approx_cover(WeightedGraph(3, {})).vertices.empty());
    CHECK(gtsp::approx_cover(p3()).kind == gtsp::CoverKind::approx2);
}

TEST_CASE("exact_cover finds minimum covers on small named graphs") {
    CHECK(gtsp::exact_cover(p3()).vertices == std::vector<int>{1});
    CHECK(gtsp::exact_cover(WeightedGraph(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}})).vertices ==
          std::vector<int>{0});
    // Cycle 0-1-2-3: {0,2} is the lexicographically first of the minimum covers.
    CHECK(gtsp::exact_cover(WeightedGraph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}})).vertices ==
          std::vector<int>{0, 2});
    CHECK(gtsp::exact_cover(WeightedGraph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}})).vertices ==
          std::vector<int>{0, 1});
    CHECK(gtsp::exact_cover(WeightedGraph(1, {})).vertices.empty());
    CHECK(gtsp::exact_cover(WeightedGraph(0, {})).vertices.empty());
    CHECK(gtsp::exact_cover(p3()).kind == gtsp::CoverKind::exact);
}

TEST_CASE("exact_cover enforces its size guard") {
    std::vector<WeightedGraph::Edge> star;
    for (int v = 1; v < 21; ++v) star.push_back({0, v, 1});
    WeightedGraph g(21, star);
    CHECK_FAILS_WITH(gtsp::exact_cover(g), errc::too_large);
    CHECK(gtsp::exact_cover(g, 21).vertices == std::vector<int>{0});
}

TEST_CASE("validate_cover checks the covering property and dedupes") {
    auto c = gtsp::validate_cover(p3(), {1, 1, 0});
    CHECK(c.vertices == std::vector<int>{0, 1});
    CHECK(c.kind == gtsp::CoverKind::user);
    CHECK(c.contains(0));
    CHECK(!c.contains(2));
    CHECK(gtsp::validate_cover(WeightedGraph(3, {}), {}).vertices.empty());
    CHECK_FAILS_WITH(gtsp::validate_cover(p3(), {0}), errc::not_a_cover);
    CHECK_FAILS_WITH(gtsp::validate_cover(p3(), {}), errc::not_a_cover);
    CHECK_FAILS_WITH(gtsp::validate_cover(p3(), {0, 5}), errc::invalid_argument);
    CHECK_FAILS_WITH(gtsp::validate_cover(p3(), {-1, 1}), errc::invalid_argument);
}

TEST_CASE("cover guarantees hold on random graphs") {
    std::mt19937_64 rng(911);
    for (int rep = 0; rep < 100; ++rep) {
        int n = 1 + static_cast<int>(rng() % 10);
        auto g = testsup::random_connected_graph(rng, n, 35, 1, 9);
        auto exact = gtsp::exact_cover(g);
        auto approx = gtsp::approx_cover(g);
        REQUIRE(exact.size() == min_cover_size(g));
        REQUIRE_NOTHROW(gtsp::validate_cover(g, exact.vertices));
        REQUIRE_NOTHROW(gtsp::validate_cover(g, approx.vertices));
        REQUIRE(exact.size() <= approx.size());
        REQUIRE(approx.size() <= 2 * exact.size());
    }
}
