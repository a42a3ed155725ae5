#pragma once

#include "gtsp/hop_graph.hpp"

#include <functional>
#include <vector>

namespace gtsp {

// Matching in a hop graph: hop/candidate index pairs, no two pairs sharing
// a hop or a candidate.
struct Matching {
    struct Pair {
        int hop = -1;
        int candidate = -1;
        friend bool operator==(const Pair&, const Pair&) = default;
    };

    std::vector<Pair> pairs;    // ascending by hop index
    Weight total_cost = 0;

    int cardinality() const { return static_cast<int>(pairs.size()); }
};

// Called after every augmentation with the intermediate matching; used by
// tests to assert that each intermediate is minimum-cost for its cardinality.
using AugmentObserver = std::function<void(const Matching&)>;

// Maximum-cardinality matching of minimum total penalty. Successive shortest
// augmenting paths with vertex potentials; penalties must be nonnegative.
// Deterministic for a fixed input ordering.
Matching min_cost_max_matching(const HopGraph& h, const AugmentObserver& on_augment = nullptr);

// Exhaustive enumeration over edge subsets; test oracle. Rejects more than
// `limit` edges.
Matching brute_force_matching(const HopGraph& h, int limit = 22);

} // namespace gtsp
