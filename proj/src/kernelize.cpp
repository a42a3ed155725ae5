#include "gtsp/kernelize.hpp"

#include "gtsp/error.hpp"
#include "gtsp/hop_graph.hpp"
#include "gtsp/matching.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace gtsp {

namespace {

Weight checked_add(Weight a, Weight b) {
    Weight r = 0;
    if (__builtin_add_overflow(a, b, &r)) fail(errc::overflow, "weight sum overflows the accumulator");
    return r;
}

// The cover may come from anywhere (including a user file), so recheck it
// against this graph before trusting it.
std::vector<int> checked_cover(const WeightedGraph& g, const VertexCover& cover) {
    std::vector<int> vs = cover.vertices;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (int v : vs) {
        if (v < 0 || v >= g.vertex_count()) {
            fail(errc::invalid_argument, "cover vertex " + std::to_string(v) + " out of range");
        }
    }
    for (const auto& e : g.edges()) {
        if (!std::binary_search(vs.begin(), vs.end(), e.u) &&
            !std::binary_search(vs.begin(), vs.end(), e.v)) {
            fail(errc::not_a_cover, "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                        "} has no endpoint in the cover");
        }
    }
    return vs;
}

} // namespace

bool operator==(const KernelResult& a, const KernelResult& b) {
    return a.kernel == b.kernel && a.delta == b.delta && a.loop_map == b.loop_map &&
           a.id_map == b.id_map && a.cover == b.cover && a.decision_mode == b.decision_mode &&
           a.original_budget == b.original_budget && a.infeasible == b.infeasible;
}

KernelResult reduce(const GtspInstance& inst, const VertexCover& cover) {
    const auto& g = inst.graph;
    const int n = g.vertex_count();
    if (n == 0) fail(errc::invalid_argument, "cannot reduce an empty instance");
    if (!is_connected(g)) fail(errc::disconnected, "reduction requires a connected instance");

    KernelResult kr;
    kr.cover = checked_cover(g, cover);
    kr.decision_mode = inst.budget.has_value();
    kr.original_budget = inst.budget;

    if (n == 1) {
        kr.kernel = inst;
        kr.id_map = {0};
        return kr;
    }

    HopGraph h = build_hop_graph(g, VertexCover{kr.cover, CoverKind::user});
    Matching m = min_cost_max_matching(h);

    std::vector<char> kept(n, 0);
    for (int v : kr.cover) kept[v] = 1;
    for (const auto& p : m.pairs) kept[h.candidates[p.candidate]] = 1;

    for (int v = 0; v < n; ++v) {
        if (kept[v]) kr.id_map.push_back(v);
    }
    std::vector<int> kernel_id(n, -1);
    for (std::size_t i = 0; i < kr.id_map.size(); ++i) kernel_id[kr.id_map[i]] = static_cast<int>(i);

    for (int v = 0; v < n; ++v) {
        if (kept[v]) continue;
        auto mi = min_incident_weight(g, v);
        kr.loop_map.emplace_back(v, mi.anchor);
        kr.delta = checked_add(kr.delta, checked_add(mi.weight, mi.weight));
    }

    std::vector<WeightedGraph::Edge> kernel_edges;
    for (const auto& e : g.edges()) {
        if (kept[e.u] && kept[e.v]) kernel_edges.push_back({kernel_id[e.u], kernel_id[e.v], e.w});
    }
    kr.kernel.graph = WeightedGraph(static_cast<int>(kr.id_map.size()), std::move(kernel_edges));

    if (kr.decision_mode) {
        if (*inst.budget < kr.delta) {
            kr.infeasible = true;
        } else {
            kr.kernel.budget = *inst.budget - kr.delta;
        }
    }

    // Internal invariants of the reduction itself.
    const long long k = kr.cover.size();
    if (static_cast<long long>(kr.id_map.size()) > k * k && n > 1) {
        throw std::logic_error("kernel exceeds the cover-squared size bound");
    }
    if (!is_connected(kr.kernel.graph)) throw std::logic_error("kernel lost connectivity");
    return kr;
}

KernelResult reduce(const GtspInstance& inst, CoverStrategy strategy, int cover_limit) {
    VertexCover c = strategy == CoverStrategy::exact ? exact_cover(inst.graph, cover_limit)
                                                    : approx_cover(inst.graph);
    return reduce(inst, c);
}

Tour lift(const KernelResult& kr, const Tour& kernel_tour) {
    Tour checked;
    try {
        checked = verify_tour(kr.kernel.graph, kernel_tour.vertices);
    } catch (const Error& e) {
        fail(errc::invalid_kernel_tour, std::string("kernel tour rejected: ") + e.what());
    }
    if (checked.weight != kernel_tour.weight) {
        fail(errc::invalid_kernel_tour, "kernel tour declares weight " +
                                            std::to_string(kernel_tour.weight) + " but its edges sum to " +
                                            std::to_string(checked.weight));
    }

    // Loops to insert at the first visit of each anchor, in ascending order
    // of the reinserted vertex.
    std::map<int, std::vector<int>> loops_at;
    for (const auto& [v, anchor] : kr.loop_map) loops_at[anchor].push_back(v);

    Tour lifted;
    lifted.vertices.reserve(kernel_tour.vertices.size() + 2 * kr.loop_map.size());
    for (int kid : kernel_tour.vertices) {
        int orig = kr.id_map[kid];
        lifted.vertices.push_back(orig);
        auto it = loops_at.find(orig);
        if (it != loops_at.end()) {
            for (int v : it->second) {
                lifted.vertices.push_back(v);
                lifted.vertices.push_back(orig);
            }
            loops_at.erase(it);
        }
    }
    if (!loops_at.empty()) {
        fail(errc::anchor_not_on_tour,
             "anchor " + std::to_string(loops_at.begin()->first) + " never appears on the kernel tour");
    }
    lifted.weight = checked_add(checked.weight, kr.delta);
    return lifted;
}

bool decide(const KernelResult& kr, Weight kernel_tour_weight) {
    if (!kr.decision_mode) fail(errc::not_decision_mode, "kernel was built without a budget");
    if (kr.infeasible) return false;
    return kernel_tour_weight <= *kr.kernel.budget;
}

// --- kernel metadata text format ------------------------------------------

void write_kernel_meta(std::ostream& out, const KernelResult& kr) {
    out << "delta " << kr.delta << '\n';
    out << "mode " << (kr.decision_mode ? "decision" : "optimization") << '\n';
    if (kr.decision_mode) {
        out << "budget " << *kr.original_budget << '\n';
        out << "infeasible " << (kr.infeasible ? 1 : 0) << '\n';
    }
    out << "cover " << kr.cover.size() << '\n';
    for (int v : kr.cover) out << v << '\n';
    out << "id_map " << kr.id_map.size() << '\n';
    for (std::size_t i = 0; i < kr.id_map.size(); ++i) out << i << ' ' << kr.id_map[i] << '\n';
    out << "loop_map " << kr.loop_map.size() << '\n';
    for (const auto& [v, anchor] : kr.loop_map) out << v << ' ' << anchor << '\n';
    out << "kernel\n";
    write_instance(out, kr.kernel);
    out << "end\n";
}

void write_kernel_meta_file(const std::string& path, const KernelResult& kr) {
    std::ofstream out(path);
    if (!out) fail(errc::io, "cannot write metadata file '" + path + "'");
    write_kernel_meta(out, kr);
}

std::string kernel_meta_to_string(const KernelResult& kr) {
    std::ostringstream os;
    write_kernel_meta(os, kr);
    return os.str();
}

namespace {

[[noreturn]] void meta_fail(int lineno, const std::string& msg) {
    fail(errc::parse, "line " + std::to_string(lineno) + ": " + msg);
}

struct MetaReader {
    std::istream& in;
    int lineno = 0;

    // Next line carrying data; blanks and '#' comments are skipped.
    std::string next(const char* expected) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++lineno;
            auto first = raw.find_first_not_of(" \t\r");
            if (first == std::string::npos || raw[first] == '#') continue;
            return raw;
        }
        fail(errc::parse, std::string("unexpected end of metadata: expected ") + expected);
    }

    long long integer(const std::string& tok, const char* what) {
        std::size_t pos = 0;
        long long value = 0;
        try {
            value = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            meta_fail(lineno, std::string("expected integer for ") + what + ", got '" + tok + "'");
        }
        if (pos != tok.size()) meta_fail(lineno, std::string("trailing characters in '") + tok + "'");
        return value;
    }

    // Line of the form "<keyword> <integer>".
    long long keyed_int(const char* keyword) {
        std::string raw = next(keyword);
        std::istringstream ls(raw);
        std::string key, tok, extra;
        ls >> key >> tok;
        if (key != keyword || tok.empty() || (ls >> extra)) {
            meta_fail(lineno, std::string("expected '") + keyword + " <value>'");
        }
        return integer(tok, keyword);
    }

    std::pair<long long, long long> int_pair(const char* what) {
        std::string raw = next(what);
        std::istringstream ls(raw);
        std::string a, b, extra;
        ls >> a >> b;
        if (a.empty() || b.empty() || (ls >> extra)) {
            meta_fail(lineno, std::string("expected two integers for ") + what);
        }
        return {integer(a, what), integer(b, what)};
    }
};

} // namespace

KernelResult parse_kernel_meta(std::istream& in) {
    MetaReader r{in};
    KernelResult kr;

    long long delta = r.keyed_int("delta");
    if (delta < 0) meta_fail(r.lineno, "delta must be nonnegative");
    kr.delta = delta;

    {
        std::string raw = r.next("mode");
        std::istringstream ls(raw);
        std::string key, value, extra;
        ls >> key >> value;
        if (key != "mode" || (ls >> extra) || (value != "decision" && value != "optimization")) {
            meta_fail(r.lineno, "expected 'mode decision' or 'mode optimization'");
        }
        kr.decision_mode = (value == "decision");
    }
    if (kr.decision_mode) {
        long long budget = r.keyed_int("budget");
        if (budget < 0) meta_fail(r.lineno, "budget must be nonnegative");
        kr.original_budget = budget;
        long long inf = r.keyed_int("infeasible");
        if (inf != 0 && inf != 1) meta_fail(r.lineno, "infeasible must be 0 or 1");
        kr.infeasible = (inf == 1);
        if (kr.infeasible != (budget < delta)) {
            meta_fail(r.lineno, "infeasible flag disagrees with budget and delta");
        }
    }

    long long cover_count = r.keyed_int("cover");
    if (cover_count < 0) meta_fail(r.lineno, "negative cover count");
    for (long long i = 0; i < cover_count; ++i) {
        std::string raw = r.next("cover vertex");
        std::istringstream ls(raw);
        std::string tok, extra;
        ls >> tok;
        if (tok.empty() || (ls >> extra)) meta_fail(r.lineno, "expected a single cover vertex id");
        long long v = r.integer(tok, "cover vertex");
        if (!kr.cover.empty() && v <= kr.cover.back()) {
            meta_fail(r.lineno, "cover ids must be strictly ascending");
        }
        kr.cover.push_back(static_cast<int>(v));
    }

    long long map_count = r.keyed_int("id_map");
    if (map_count < 0) meta_fail(r.lineno, "negative id_map count");
    for (long long i = 0; i < map_count; ++i) {
        auto [kid, orig] = r.int_pair("id_map entry");
        if (kid != i) meta_fail(r.lineno, "id_map kernel ids must be 0,1,2,... in order");
        if (!kr.id_map.empty() && orig <= kr.id_map.back()) {
            meta_fail(r.lineno, "id_map original ids must be strictly ascending");
        }
        kr.id_map.push_back(static_cast<int>(orig));
    }

    long long loop_count = r.keyed_int("loop_map");
    if (loop_count < 0) meta_fail(r.lineno, "negative loop_map count");
    for (long long i = 0; i < loop_count; ++i) {
        auto [v, anchor] = r.int_pair("loop_map entry");
        if (!kr.loop_map.empty() && v <= kr.loop_map.back().first) {
            meta_fail(r.lineno, "loop_map vertices must be strictly ascending");
        }
        kr.loop_map.emplace_back(static_cast<int>(v), static_cast<int>(anchor));
    }

    {
        std::string raw = r.next("kernel");
        std::istringstream ls(raw);
        std::string key, extra;
        ls >> key;
        if (key != "kernel" || (ls >> extra)) meta_fail(r.lineno, "expected 'kernel'");
    }
    kr.kernel = parse_instance_embedded(in, r.lineno);
    {
        std::string raw = r.next("end");
        std::istringstream ls(raw);
        std::string key, extra;
        ls >> key;
        if (key != "end" || (ls >> extra)) meta_fail(r.lineno, "expected 'end'");
    }
    {
        std::string raw;
        while (std::getline(in, raw)) {
            ++r.lineno;
            auto first = raw.find_first_not_of(" \t\r");
            if (first != std::string::npos && raw[first] != '#') {
                meta_fail(r.lineno, "unexpected content after 'end'");
            }
        }
    }

    // Cross-section consistency.
    if (kr.kernel.graph.vertex_count() != static_cast<int>(kr.id_map.size())) {
        fail(errc::parse, "kernel vertex count disagrees with id_map size");
    }
    for (int v : kr.cover) {
        if (!std::binary_search(kr.id_map.begin(), kr.id_map.end(), v)) {
            fail(errc::parse, "cover vertex " + std::to_string(v) + " missing from id_map");
        }
    }
    for (const auto& [v, anchor] : kr.loop_map) {
        if (std::binary_search(kr.id_map.begin(), kr.id_map.end(), v)) {
            fail(errc::parse, "loop_map vertex " + std::to_string(v) + " also appears in id_map");
        }
        if (!std::binary_search(kr.id_map.begin(), kr.id_map.end(), anchor)) {
            fail(errc::parse, "loop anchor " + std::to_string(anchor) + " missing from id_map");
        }
    }
    if (kr.decision_mode) {
        if (kr.infeasible) {
            if (kr.kernel.budget) fail(errc::parse, "infeasible kernel must not carry a budget");
        } else if (!kr.kernel.budget || *kr.kernel.budget != *kr.original_budget - kr.delta) {
            fail(errc::parse, "kernel budget must equal the original budget minus delta");
        }
    } else if (kr.kernel.budget) {
        fail(errc::parse, "optimization-mode kernel must not carry a budget");
    }
    return kr;
}

KernelResult parse_kernel_meta_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io, "cannot open metadata file '" + path + "'");
    return parse_kernel_meta(in);
}

} // namespace gtsp
