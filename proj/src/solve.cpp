#include "gtsp/solve.hpp"

#include "gtsp/error.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

namespace gtsp {

namespace {

Weight checked_add(Weight a, Weight b) {
    Weight r = 0;
    if (__builtin_add_overflow(a, b, &r)) fail(errc::overflow, "weight sum overflows the accumulator");
    return r;
}

// Turns a cyclic visiting order (distinct vertices, all of g) into a closed
// walk by expanding every leg into its recorded shortest path.
Tour expand_cycle(const MetricClosure& mc, const std::vector<int>& order) {
    Tour t;
    t.vertices.push_back(order.front());
    for (std::size_t i = 0; i < order.size(); ++i) {
        int a = order[i];
        int b = order[(i + 1) % order.size()];
        t.weight = checked_add(t.weight, mc.dist[a][b]);
        auto leg = mc.path(a, b);
        t.vertices.insert(t.vertices.end(), leg.begin() + 1, leg.end());
    }
    return t;
}

SolveResult trivial_solution(const GtspInstance& inst, bool optimal) {
    if (inst.graph.vertex_count() == 0) return {Tour{{}, 0}, optimal};
    return {Tour{{0}, 0}, optimal};
}

} // namespace

SolveResult solve_exact(const GtspInstance& inst, int limit) {
    const int n = inst.graph.vertex_count();
    if (n > limit) {
        fail(errc::too_large, "exact solver limited to " + std::to_string(limit) +
                                  " vertices, got " + std::to_string(n));
    }
    if (n <= 1) {
        if (!is_connected(inst.graph)) fail(errc::disconnected, "instance is disconnected");
        return trivial_solution(inst, true);
    }
    MetricClosure mc = metric_closure(inst.graph);
    const auto& D = mc.dist;

    // Subset dynamic programming over vertices 1..n-1 (bit j stands for
    // vertex j+1); dp[mask][j] is the cheapest closure path 0 -> ... -> j+1
    // visiting exactly mask.
    const int bits = n - 1;
    const std::uint32_t full = (std::uint32_t{1} << bits) - 1;
    constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;
    std::vector<std::vector<Weight>> dp(full + 1, std::vector<Weight>(bits, kInf));
    std::vector<std::vector<std::int8_t>> par(full + 1, std::vector<std::int8_t>(bits, -1));
    for (int j = 0; j < bits; ++j) dp[std::uint32_t{1} << j][j] = D[0][j + 1];

    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        for (int j = 0; j < bits; ++j) {
            if (!(mask & (std::uint32_t{1} << j)) || dp[mask][j] >= kInf) continue;
            for (int k = 0; k < bits; ++k) {
                if (mask & (std::uint32_t{1} << k)) continue;
                std::uint32_t next = mask | (std::uint32_t{1} << k);
                Weight nd = dp[mask][j] + D[j + 1][k + 1];
                if (nd < dp[next][k]) {
                    dp[next][k] = nd;
                    par[next][k] = static_cast<std::int8_t>(j);
                }
            }
        }
    }

    int best_j = -1;
    Weight best = kInf;
    for (int j = 0; j < bits; ++j) {
        Weight total = dp[full][j] + D[j + 1][0];
        if (total < best) {
            best = total;
            best_j = j;
        }
    }

    std::vector<int> order;
    std::uint32_t mask = full;
    int j = best_j;
    while (j != -1) {
        order.push_back(j + 1);
        int pj = par[mask][j];
        mask ^= std::uint32_t{1} << j;
        j = pj;
    }
    order.push_back(0);
    std::reverse(order.begin(), order.end());

    return {expand_cycle(mc, order), true};
}

SolveResult solve_permutation_bruteforce(const GtspInstance& inst, int limit) {
    const int n = inst.graph.vertex_count();
    if (n > limit) {
        fail(errc::too_large, "permutation solver limited to " + std::to_string(limit) +
                                  " vertices, got " + std::to_string(n));
    }
    if (n <= 1) {
        if (!is_connected(inst.graph)) fail(errc::disconnected, "instance is disconnected");
        return trivial_solution(inst, true);
    }
    MetricClosure mc = metric_closure(inst.graph);
    const auto& D = mc.dist;

    std::vector<int> perm(n - 1);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<int> best_order;
    Weight best = std::numeric_limits<Weight>::max() / 4;
    do {
        Weight total = D[0][perm.front()];
        for (std::size_t i = 1; i < perm.size(); ++i) total += D[perm[i - 1]][perm[i]];
        total += D[perm.back()][0];
        if (total < best) {
            best = total;
            best_order.assign(perm.begin(), perm.end());
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    best_order.insert(best_order.begin(), 0);
    return {expand_cycle(mc, best_order), true};
}

SolveResult solve_heuristic(const GtspInstance& inst, std::uint64_t seed) {
    const int n = inst.graph.vertex_count();
    if (n <= 1) {
        if (!is_connected(inst.graph)) fail(errc::disconnected, "instance is disconnected");
        return trivial_solution(inst, false);
    }
    MetricClosure mc = metric_closure(inst.graph);
    const auto& D = mc.dist;

    // Nearest neighbor from a seed-chosen start; ties go to the smaller id.
    int start = static_cast<int>(seed % static_cast<std::uint64_t>(n));
    std::vector<int> ord;
    std::vector<char> used(n, 0);
    ord.push_back(start);
    used[start] = 1;
    while (static_cast<int>(ord.size()) < n) {
        int cur = ord.back();
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (!used[v] && (pick == -1 || D[cur][v] < D[cur][pick])) pick = v;
        }
        ord.push_back(pick);
        used[pick] = 1;
    }

    // 2-opt, first improvement, restart after every applied move. The pair
    // (0, n-1) is skipped: both closure edges would share ord[0].
    bool improved = true;
    while (improved) {
        improved = false;
        for (int i = 0; i < n - 1 && !improved; ++i) {
            for (int jj = i + 1; jj < n && !improved; ++jj) {
                if (i == 0 && jj == n - 1) continue;
                int a = ord[i], b = ord[i + 1];
                int c = ord[jj], d = ord[(jj + 1) % n];
                Weight delta = D[a][c] + D[b][d] - D[a][b] - D[c][d];
                if (delta < 0) {
                    std::reverse(ord.begin() + i + 1, ord.begin() + jj + 1);
                    improved = true;
                }
            }
        }
    }

    return {expand_cycle(mc, ord), false};
}

} // namespace gtsp
