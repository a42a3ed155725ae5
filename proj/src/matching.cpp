#include "gtsp/matching.hpp"

#include "gtsp/error.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <utility>

namespace gtsp {

namespace {

constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;

struct CandidateArc {
    int hop = -1;
    Weight penalty = 0;
};

Weight arc_penalty(const std::vector<CandidateArc>& arcs, int hop) {
    auto it = std::lower_bound(arcs.begin(), arcs.end(), hop,
                               [](const CandidateArc& a, int h) { return a.hop < h; });
    if (it == arcs.end() || it->hop != hop) throw std::logic_error("matched arc missing from adjacency");
    return it->penalty;
}

} // namespace

Matching min_cost_max_matching(const HopGraph& h, const AugmentObserver& on_augment) {
    const int nc = static_cast<int>(h.candidates.size());
    const int nh = static_cast<int>(h.hops.size());

    // Per-candidate arcs sorted by hop; h.edges is grouped by ascending hop,
    // so appending in input order keeps each list sorted.
    std::vector<std::vector<CandidateArc>> adj(nc);
    for (const auto& e : h.edges) {
        if (e.penalty < 0) fail(errc::invalid_argument, "negative penalty in hop graph");
        adj[e.candidate].push_back({e.hop, e.penalty});
    }

    std::vector<int> match_c(nc, -1);           // candidate -> hop
    std::vector<int> match_h(nh, -1);           // hop -> candidate
    std::vector<Weight> match_cost_h(nh, 0);    // penalty of the matched arc, by hop
    std::vector<Weight> phi_c(nc, 0), phi_h(nh, 0);

    std::vector<Weight> dist_c(nc), dist_h(nh);
    std::vector<int> parent_h(nh);              // candidate that reached the hop
    std::vector<char> settled_c(nc), settled_h(nh);

    auto snapshot = [&]() {
        Matching m;
        for (int hi = 0; hi < nh; ++hi) {
            if (match_h[hi] >= 0) {
                m.pairs.push_back({hi, match_h[hi]});
                m.total_cost += match_cost_h[hi];
            }
        }
        return m;
    };

    while (true) {
        // One augmentation: shortest alternating path in reduced costs from
        // the set of free candidates to any free hop.
        std::fill(dist_c.begin(), dist_c.end(), kInf);
        std::fill(dist_h.begin(), dist_h.end(), kInf);
        std::fill(parent_h.begin(), parent_h.end(), -1);
        std::fill(settled_c.begin(), settled_c.end(), 0);
        std::fill(settled_h.begin(), settled_h.end(), 0);

        // Keys: candidate c -> c, hop hi -> nc + hi. Ordering by (dist, key)
        // settles candidates before hops at equal distance, so every free hop
        // at the minimum distance is queued before the first one pops; the
        // augmenting path target is therefore the free hop with the smallest
        // index among those at minimum distance.
        using Item = std::pair<Weight, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        bool any_free = false;
        for (int c = 0; c < nc; ++c) {
            if (match_c[c] == -1 && !adj[c].empty()) {
                dist_c[c] = 0;
                pq.emplace(0, c);
                any_free = true;
            }
        }
        if (!any_free) break;

        int target = -1;
        while (!pq.empty()) {
            auto [d, key] = pq.top();
            pq.pop();
            if (key < nc) {
                int c = key;
                if (settled_c[c] || d != dist_c[c]) continue;
                settled_c[c] = 1;
                for (const auto& arc : adj[c]) {
                    if (arc.hop == match_c[c]) continue;
                    Weight rc = arc.penalty + phi_c[c] - phi_h[arc.hop];
                    if (rc < 0) throw std::logic_error("reduced cost below zero");
                    Weight nd = d + rc;
                    if (nd < dist_h[arc.hop]) {
                        dist_h[arc.hop] = nd;
                        parent_h[arc.hop] = c;
                        pq.emplace(nd, nc + arc.hop);
                    }
                }
            } else {
                int hi = key - nc;
                if (settled_h[hi] || d != dist_h[hi]) continue;
                settled_h[hi] = 1;
                if (match_h[hi] == -1) {
                    target = hi;
                    break;
                }
                int c = match_h[hi];
                Weight rc = phi_h[hi] - match_cost_h[hi] - phi_c[c];
                if (rc < 0) throw std::logic_error("reduced cost below zero");
                Weight nd = d + rc;
                if (nd < dist_c[c]) {
                    dist_c[c] = nd;
                    pq.emplace(nd, c);
                }
            }
        }
        if (target == -1) break;    // no free hop reachable: matching is maximum

        const Weight dist_t = dist_h[target];
        for (int c = 0; c < nc; ++c) phi_c[c] += std::min(dist_c[c], dist_t);
        for (int hi = 0; hi < nh; ++hi) phi_h[hi] += std::min(dist_h[hi], dist_t);

        // Flip the path: every hop on it gets the candidate that reached it.
        int hi = target;
        while (true) {
            int c = parent_h[hi];
            int prev = match_c[c];
            match_h[hi] = c;
            match_c[c] = hi;
            match_cost_h[hi] = arc_penalty(adj[c], hi);
            if (prev == -1) break;
            hi = prev;
        }

        if (on_augment) on_augment(snapshot());
    }

    return snapshot();
}

Matching brute_force_matching(const HopGraph& h, int limit) {
    const int m = static_cast<int>(h.edges.size());
    if (m > limit) {
        fail(errc::too_large, "exhaustive matching limited to " + std::to_string(limit) +
                                  " edges, got " + std::to_string(m));
    }

    std::vector<char> used_c(h.candidates.size(), 0), used_h(h.hops.size(), 0);
    std::vector<Matching::Pair> current, best;
    Weight current_cost = 0, best_cost = 0;

    // Include-first depth-first walk over edge subsets; strict improvement
    // keeps the first maximizer found, making the result deterministic.
    auto walk = [&](auto&& self, int idx) -> void {
        if (idx == m) {
            if (current.size() > best.size() ||
                (current.size() == best.size() && current_cost < best_cost)) {
                best = current;
                best_cost = current_cost;
            }
            return;
        }
        const auto& e = h.edges[idx];
        if (!used_c[e.candidate] && !used_h[e.hop]) {
            used_c[e.candidate] = used_h[e.hop] = 1;
            current.push_back({e.hop, e.candidate});
            current_cost += e.penalty;
            self(self, idx + 1);
            current_cost -= e.penalty;
            current.pop_back();
            used_c[e.candidate] = used_h[e.hop] = 0;
        }
        self(self, idx + 1);
    };
    walk(walk, 0);

    std::sort(best.begin(), best.end(),
              [](const Matching::Pair& a, const Matching::Pair& b) { return a.hop < b.hop; });
    return Matching{std::move(best), best_cost};
}

} // namespace gtsp
