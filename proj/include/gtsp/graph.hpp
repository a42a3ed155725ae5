#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gtsp {

using Weight = std::int64_t;

// Simple undirected graph with nonnegative integer edge weights.
// Vertices are dense ids 0..n-1. Immutable after construction.
class WeightedGraph {
public:
    struct Edge {
        int u = -1, v = -1;     // stored with u < v
        Weight w = 0;
    };
    struct Neighbor {
        int to = -1;
        Weight w = 0;
    };

    WeightedGraph() = default;

    // Validates: endpoints in range, no self-loops, no parallel edges,
    // nonnegative weights, total weight within the accumulator guard.
    // Edge endpoints may be given in either order.
    WeightedGraph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }       // sorted by (u, v)
    const std::vector<Neighbor>& neighbors(int v) const;            // ascending id
    int degree(int v) const;
    std::optional<Weight> edge_weight(int u, int v) const;
    bool has_edge(int u, int v) const { return edge_weight(u, v).has_value(); }
    Weight total_weight() const { return total_weight_; }

    friend bool operator==(const WeightedGraph& a, const WeightedGraph& b);

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Neighbor>> adj_;
    Weight total_weight_ = 0;
};

bool operator==(const WeightedGraph& a, const WeightedGraph& b);

// Closed walk over a reference graph together with its summed edge weight.
struct Tour {
    std::vector<int> vertices;
    Weight weight = 0;
};

// A graph plus an optional budget. With a budget the instance asks a yes/no
// question (does a tour of weight <= budget exist); without one it asks for
// a minimum-weight tour.
struct GtspInstance {
    WeightedGraph graph;
    std::optional<Weight> budget;
};

bool operator==(const GtspInstance& a, const GtspInstance& b);

// True iff every vertex is reachable from vertex 0 (vacuously true for n <= 1).
bool is_connected(const WeightedGraph& g);

// Checks that seq is a closed walk visiting every vertex of g and returns it
// with its computed weight. The single-vertex sequence (v) is a valid
// zero-weight tour of a one-vertex graph; the empty sequence is the tour of
// the empty graph.
Tour verify_tour(const WeightedGraph& g, const std::vector<int>& seq);

// All-pairs shortest-path distances with one recorded shortest path per pair.
// parent[s][v] is the predecessor of v on the recorded path from s;
// ties are resolved deterministically toward smaller vertex ids.
struct MetricClosure {
    std::vector<std::vector<Weight>> dist;
    std::vector<std::vector<int>> parent;

    int size() const { return static_cast<int>(dist.size()); }
    std::vector<int> path(int s, int t) const;  // inclusive of both endpoints
};

MetricClosure metric_closure(const WeightedGraph& g);

// Cheapest edge incident to v: the attaining neighbor (smallest id on ties)
// and its weight.
struct MinIncident {
    int anchor = -1;
    Weight weight = 0;
};

MinIncident min_incident_weight(const WeightedGraph& g, int v);

// --- instance text format -------------------------------------------------
//
//   # comment
//   gtsp <n> <m> <W|->
//   u v w            (m lines, 0 <= u < v < n, w >= 0)
//
// '-' in the header means optimization mode. Duplicate pairs are an error.

GtspInstance parse_instance(std::istream& in);
GtspInstance parse_instance_file(const std::string& path);
// Variant for composite files that embed an instance: stops after the declared
// edge count and leaves the rest of the stream untouched. lineno is advanced
// past the consumed lines so callers can report positions.
GtspInstance parse_instance_embedded(std::istream& in, int& lineno);
void write_instance(std::ostream& out, const GtspInstance& inst);
void write_instance_file(const std::string& path, const GtspInstance& inst);
std::string instance_to_string(const GtspInstance& inst);

// --- tour text format: one line of space-separated vertex ids -------------

std::vector<int> parse_tour_line(std::istream& in);
std::vector<int> parse_tour_file(const std::string& path);
void write_tour_file(const std::string& path, const std::vector<int>& vertices);

} // namespace gtsp
