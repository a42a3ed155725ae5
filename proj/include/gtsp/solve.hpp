#pragma once

#include "gtsp/graph.hpp"

#include <cstdint>

namespace gtsp {

struct SolveResult {
    Tour tour;              // on the instance graph; vertices may repeat
    bool optimal = false;
};

// Minimum-weight closed walk visiting all vertices, by dynamic programming
// over subsets on the metric closure followed by shortest-path expansion.
// Desk-scale guard: rejects vertex_count > limit.
SolveResult solve_exact(const GtspInstance& inst, int limit = 13);

// Nearest-neighbor construction on the metric closure from a seeded start
// vertex, improved by 2-opt to local optimality, then expanded. Deterministic
// for a fixed seed. Never better than solve_exact, often equal.
SolveResult solve_heuristic(const GtspInstance& inst, std::uint64_t seed);

// Minimum over all vertex permutations on the metric closure. Second,
// independent oracle used to validate solve_exact.
SolveResult solve_permutation_bruteforce(const GtspInstance& inst, int limit = 8);

} // namespace gtsp
