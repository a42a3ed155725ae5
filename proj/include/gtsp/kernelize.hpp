#pragma once

#include "gtsp/cover.hpp"
#include "gtsp/graph.hpp"

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

namespace gtsp {

enum class CoverStrategy { approx, exact };

// Result of the reduction: the kernel instance together with everything
// needed to lift kernel tours back to the original graph.
struct KernelResult {
    GtspInstance kernel;        // induced on cover + matched candidates;
                                // budget set iff decision mode and feasible
    Weight delta = 0;           // twice the sum of min incident weights over deleted vertices
    std::vector<std::pair<int, int>> loop_map;  // (deleted vertex, anchor), ascending by vertex
    std::vector<int> id_map;    // kernel id -> original id, ascending
    std::vector<int> cover;     // cover used, original ids, ascending
    bool decision_mode = false;
    std::optional<Weight> original_budget;      // W, decision mode only
    bool infeasible = false;    // decision mode with W < delta

    int cover_size() const { return static_cast<int>(cover.size()); }
};

bool operator==(const KernelResult& a, const KernelResult& b);

// Runs the reduction: hop graph over the given cover, min-cost maximum
// matching, then deletion of all unmatched non-cover vertices. The budget,
// when present, shrinks by delta; a budget below delta marks the kernel
// trivially infeasible instead of failing. Requires a connected graph.
KernelResult reduce(const GtspInstance& inst, const VertexCover& cover);
KernelResult reduce(const GtspInstance& inst, CoverStrategy strategy, int cover_limit = 20);

// Turns a valid tour of the kernel into a tour of the original graph by
// reinserting a cheapest loop (anchor, v, anchor) for every deleted vertex v
// at the first occurrence of its anchor. The lifted weight is exactly
// kernel weight + delta.
Tour lift(const KernelResult& kr, const Tour& kernel_tour);

// Decision mode only: true iff a kernel tour of the given weight answers the
// original budget question, i.e. weight <= W - delta.
bool decide(const KernelResult& kr, Weight kernel_tour_weight);

// --- kernel metadata text format ------------------------------------------
//
// Self-contained: sections for delta, mode, budget/infeasible (decision
// mode), cover, id_map, loop_map, and the kernel instance itself embedded
// in the instance text format. Round-trips bit-exactly.

void write_kernel_meta(std::ostream& out, const KernelResult& kr);
void write_kernel_meta_file(const std::string& path, const KernelResult& kr);
std::string kernel_meta_to_string(const KernelResult& kr);
KernelResult parse_kernel_meta(std::istream& in);
KernelResult parse_kernel_meta_file(const std::string& path);

} // namespace gtsp
