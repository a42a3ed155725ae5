#include "gtsp/hop_graph.hpp"

#include "gtsp/error.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace gtsp {

Weight hop_penalty(const WeightedGraph& g, int u, int s, int v) {
    if (u == v) fail(errc::invalid_argument, "hop endpoints must be distinct");
    auto wu = g.edge_weight(u, s);
    if (!wu) fail(errc::non_edge, "{" + std::to_string(u) + "," + std::to_string(s) + "} is not an edge");
    auto wv = g.edge_weight(s, v);
    if (!wv) fail(errc::non_edge, "{" + std::to_string(s) + "," + std::to_string(v) + "} is not an edge");
    Weight penalty = *wu + *wv - 2 * min_incident_weight(g, s).weight;
    if (penalty < 0) throw std::logic_error("hop penalty below zero");
    return penalty;
}

HopGraph build_hop_graph(const WeightedGraph& g, const VertexCover& c) {
    const int n = g.vertex_count();
    HopGraph h;

    std::vector<int> candidate_index(n, -1);
    for (int v = 0; v < n; ++v) {
        if (c.contains(v)) continue;
        if (g.degree(v) == 0) {
            fail(errc::isolated_non_cover_vertex,
                 "vertex " + std::to_string(v) + " is outside the cover and has no edges");
        }
        candidate_index[v] = static_cast<int>(h.candidates.size());
        h.candidates.push_back(v);
    }

    // Doubled cheapest incident weight per candidate: the detour u-s-v saves
    // exactly this much over visiting s by a cheapest out-and-back loop.
    std::vector<Weight> loop_cost(h.candidates.size(), 0);
    for (std::size_t i = 0; i < h.candidates.size(); ++i) {
        loop_cost[i] = 2 * min_incident_weight(g, h.candidates[i]).weight;
    }

    for (int u : c.vertices) {
        for (int v : c.vertices) {
            if (u == v) continue;
            h.hops.push_back({u, v});
        }
    }
    // c.vertices ascends, so the double loop above already emits hops in
    // lexicographic (u, v) order.

    for (int hi = 0; hi < static_cast<int>(h.hops.size()); ++hi) {
        const auto [u, v] = h.hops[hi];
        const auto& nu = g.neighbors(u);
        const auto& nv = g.neighbors(v);
        std::size_t i = 0, j = 0;
        while (i < nu.size() && j < nv.size()) {
            if (nu[i].to < nv[j].to) {
                ++i;
            } else if (nu[i].to > nv[j].to) {
                ++j;
            } else {
                int s = nu[i].to;
                int si = candidate_index[s];
                if (si >= 0) {
                    Weight penalty = nu[i].w + nv[j].w - loop_cost[si];
                    if (penalty < 0) throw std::logic_error("hop penalty below zero");
                    h.edges.push_back({hi, si, penalty});
                }
                ++i;
                ++j;
            }
        }
    }
    return h;
}

void write_hop_graph(std::ostream& out, const HopGraph& h) {
    for (const auto& e : h.edges) {
        const auto& hop = h.hops[e.hop];
        out << "x:(" << hop.u << ',' << hop.v << ") y:" << h.candidates[e.candidate]
            << " penalty:" << e.penalty << '\n';
    }
}

} // namespace gtsp
