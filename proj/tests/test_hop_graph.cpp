#include "doctest.h"

#include "gtsp/error.hpp"
#include "gtsp/hop_graph.hpp"

#include "test_support.hpp"

#include <algorithm>
#include <random>
#include <sstream>

using gtsp::errc;
using gtsp::WeightedGraph;

namespace {

// Triangle 0-1-2 plus an outside vertex 3 hooked to 0 and 1.
WeightedGraph triangle_plus() {
    return WeightedGraph(4, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {0, 3, 2}, {1, 3, 3}});
}

} // namespace

TEST_CASE("hop_penalty charges the detour minus the cheapest loop") {
    WeightedGraph g(4, {{0, 2, 5}, {1, 2, 7}, {2, 3, 2}});
    CHECK(gtsp::hop_penalty(g, 0, 2, 1) == 8);  // 5 + 7 - 2*2
    CHECK(gtsp::hop_penalty(g, 1, 2, 0) == 8);
    CHECK(gtsp::hop_penalty(triangle_plus(), 0, 3, 1) == 1);  // 2 + 3 - 2*2
}

TEST_CASE("hop_penalty rejects degenerate hops") {
    auto g = triangle_plus();
    CHECK_FAILS_WITH(gtsp::hop_penalty(g, 0, 3, 0), errc::invalid_argument);
    CHECK_FAILS_WITH(gtsp::hop_penalty(g, 2, 3, 1), errc::non_edge);
    CHECK_FAILS_WITH(gtsp::hop_penalty(g, 0, 3, 2), errc::non_edge);
}

TEST_CASE("build_hop_graph materializes ordered cover pairs and candidates") {
    auto h = gtsp::build_hop_graph(triangle_plus(), gtsp::VertexCover{{0, 1, 2}, gtsp::CoverKind::user});
    REQUIRE(h.hops.size() == 6);
    CHECK(h.hops[0].u == 0);
    CHECK(h.hops[0].v == 1);
    CHECK(h.hops[1].u == 0);
    CHECK(h.hops[1].v == 2);
    CHECK(h.hops[2].u == 1);
    CHECK(h.hops[2].v == 0);
    CHECK(h.hops[5].u == 2);
    CHECK(h.hops[5].v == 1);
    CHECK(h.candidates == std::vector<int>{3});
    REQUIRE(h.edges.size() == 2);
    CHECK(h.edges[0].hop == 0);
    CHECK(h.edges[0].candidate == 0);
    CHECK(h.edges[0].penalty == 1);
    CHECK(h.edges[1].hop == 2);
    CHECK(h.edges[1].candidate == 0);
    CHECK(h.edges[1].penalty == 1);
}

TEST_CASE("build_hop_graph with a single-vertex cover has no hops") {
    WeightedGraph star(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
    auto h = gtsp::build_hop_graph(star, gtsp::VertexCover{{0}, gtsp::CoverKind::user});
    CHECK(h.hops.empty());
    CHECK(h.candidates == std::vector<int>{1, 2, 3});
    CHECK(h.edges.empty());
}

TEST_CASE("build_hop_graph rejects isolated non-cover vertices") {
    WeightedGraph g(3, {{0, 1, 1}});
    CHECK_FAILS_WITH(gtsp::build_hop_graph(g, gtsp::VertexCover{{0, 1}, gtsp::CoverKind::user}),
                     errc::isolated_non_cover_vertex);
}

TEST_CASE("write_hop_graph emits one line per edge") {
    auto h = gtsp::build_hop_graph(triangle_plus(), gtsp::VertexCover{{0, 1, 2}, gtsp::CoverKind::user});
    std::ostringstream os;
    gtsp::write_hop_graph(os, h);
    CHECK(os.str() == "x:(0,1) y:3 penalty:1\nx:(1,0) y:3 penalty:1\n");
}

TEST_CASE("hop graph edges agree with a brute-force adjacency scan") {
    std::mt19937_64 rng(404);
    for (int rep = 0; rep < 200; ++rep) {
        int n = 2 + static_cast<int>(rng() % 11);
        auto g = testsup::random_connected_graph(rng, n, 40, 0, 9);
        auto cover = gtsp::approx_cover(g);
        auto h = gtsp::build_hop_graph(g, cover);

        int last_hop = 0, last_candidate = -1;
        for (const auto& e : h.edges) {
            REQUIRE(e.hop >= last_hop);
            if (e.hop > last_hop) last_candidate = -1;
            REQUIRE(e.candidate > last_candidate);
            last_hop = e.hop;
            last_candidate = e.candidate;
            REQUIRE(e.penalty >= 0);
        }

        for (std::size_t hi = 0; hi < h.hops.size(); ++hi) {
            for (std::size_t ci = 0; ci < h.candidates.size(); ++ci) {
                int u = h.hops[hi].u, v = h.hops[hi].v, s = h.candidates[ci];
                bool expected = g.has_edge(u, s) && g.has_edge(s, v);
                auto it = std::find_if(h.edges.begin(), h.edges.end(), [&](const auto& e) {
                    return e.hop == static_cast<int>(hi) && e.candidate == static_cast<int>(ci);
                });
                REQUIRE((it != h.edges.end()) == expected);
                if (expected) REQUIRE(it->penalty == gtsp::hop_penalty(g, u, s, v));
            }
        }
    }
}
