#pragma once

#include "gtsp/graph.hpp"

#include <vector>

namespace gtsp {

enum class CoverKind { approx2, exact, user };

// Set of vertices touching every edge of the reference graph.
struct VertexCover {
    std::vector<int> vertices;  // ascending
    CoverKind kind = CoverKind::user;

    int size() const { return static_cast<int>(vertices.size()); }
    bool contains(int v) const;
};

// Both endpoints of a greedily built maximal matching, edges scanned in
// ascending (u, v) order. At most twice the minimum cover size.
VertexCover approx_cover(const WeightedGraph& g);

// Minimum-cardinality cover by subset enumeration in increasing size.
// Desk-scale only; rejects vertex_count > limit.
VertexCover exact_cover(const WeightedGraph& g, int limit = 20);

// Wraps a user-supplied vertex set after checking the covering property.
// Duplicates are dropped.
VertexCover validate_cover(const WeightedGraph& g, std::vector<int> vertices);

} // namespace gtsp
