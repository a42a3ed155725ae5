#pragma once

#include "gtsp/cover.hpp"
#include "gtsp/graph.hpp"

#include <iosfwd>
#include <vector>

namespace gtsp {

// Bipartite penalty graph between ordered pairs of cover vertices ("hops")
// and non-cover vertices ("candidates"). An edge (hop (u,v), candidate s)
// exists iff s is adjacent to both u and v; its penalty is the extra cost of
// traversing s via the detour u-s-v instead of a cheapest loop from a single
// cover vertex:
//
//   penalty = w(u,s) + w(s,v) - 2 * min_incident_weight(s)
//
// Both orientations (u,v) and (v,u) are materialized and carry identical
// edge sets and penalties.
struct HopGraph {
    struct Hop {
        int u = -1, v = -1;     // distinct cover vertices, ordered pair
    };
    struct Edge {
        int hop = -1;           // index into hops
        int candidate = -1;     // index into candidates
        Weight penalty = 0;     // always >= 0
    };

    std::vector<Hop> hops;          // lexicographic by (u, v)
    std::vector<int> candidates;    // non-cover vertex ids, ascending
    std::vector<Edge> edges;        // grouped by hop, candidates ascending within
};

// Requires every non-cover vertex to have degree >= 1.
HopGraph build_hop_graph(const WeightedGraph& g, const VertexCover& c);

// Penalty of the single detour u-s-v; both {u,s} and {s,v} must be edges.
Weight hop_penalty(const WeightedGraph& g, int u, int s, int v);

// Debug dump, one line per edge: "x:(u,v) y:s penalty:p".
void write_hop_graph(std::ostream& out, const HopGraph& h);

} // namespace gtsp
