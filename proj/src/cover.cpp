#include "gtsp/cover.hpp"

#include "gtsp/error.hpp"

#include <algorithm>
#include <cstdint>

namespace gtsp {

bool VertexCover::contains(int v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

VertexCover approx_cover(const WeightedGraph& g) {
    std::vector<char> taken(g.vertex_count(), 0);
    std::vector<int> cover;
    for (const auto& e : g.edges()) {
        if (!taken[e.u] && !taken[e.v]) {
            taken[e.u] = taken[e.v] = 1;
            cover.push_back(e.u);
            cover.push_back(e.v);
        }
    }
    std::sort(cover.begin(), cover.end());
    return VertexCover{std::move(cover), CoverKind::approx2};
}

namespace {

using Word = std::uint64_t;

// Walks all k-subsets of {0..n-1} in lexicographic order; returns false when
// exhausted.
bool next_combination(std::vector<int>& pick, int n) {
    const int k = static_cast<int>(pick.size());
    for (int i = k - 1; i >= 0; --i) {
        if (pick[i] < n - (k - i)) {
            ++pick[i];
            for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

VertexCover exact_cover(const WeightedGraph& g, int limit) {
    const int n = g.vertex_count();
    if (n > limit) {
        fail(errc::too_large, "exact cover search limited to " + std::to_string(limit) +
                                  " vertices, got " + std::to_string(n));
    }
    const int m = g.edge_count();
    const int words = (m + 63) / 64;

    // incident[v] marks the edges v touches; a subset covers the graph when
    // the union of its members' masks is all edges.
    std::vector<std::vector<Word>> incident(n, std::vector<Word>(words, 0));
    {
        int idx = 0;
        for (const auto& e : g.edges()) {
            incident[e.u][idx / 64] |= Word{1} << (idx % 64);
            incident[e.v][idx / 64] |= Word{1} << (idx % 64);
            ++idx;
        }
    }
    std::vector<Word> full(words, 0);
    for (int idx = 0; idx < m; ++idx) full[idx / 64] |= Word{1} << (idx % 64);

    std::vector<Word> acc(words);
    for (int k = 0; k <= n; ++k) {
        std::vector<int> pick(k);
        for (int i = 0; i < k; ++i) pick[i] = i;
        bool more = true;
        while (more) {
            std::fill(acc.begin(), acc.end(), 0);
            for (int v : pick) {
                for (int w = 0; w < words; ++w) acc[w] |= incident[v][w];
            }
            if (acc == full) return VertexCover{pick, CoverKind::exact};
            more = next_combination(pick, n);
        }
    }
    // Unreachable: the full vertex set always covers.
    fail(errc::not_a_cover, "internal: no cover found");
}

VertexCover validate_cover(const WeightedGraph& g, std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (int v : vertices) {
        if (v < 0 || v >= g.vertex_count()) {
            fail(errc::invalid_argument, "cover vertex " + std::to_string(v) + " out of range");
        }
    }
    VertexCover c{std::move(vertices), CoverKind::user};
    for (const auto& e : g.edges()) {
        if (!c.contains(e.u) && !c.contains(e.v)) {
            fail(errc::not_a_cover, "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                        "} has no endpoint in the cover");
        }
    }
    return c;
}

} // namespace gtsp
