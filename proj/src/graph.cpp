#include "gtsp/graph.hpp"

#include "gtsp/error.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <queue>
#include <set>
#include <sstream>
#include <utility>

namespace gtsp {

namespace {

// Budgets, penalties and tour weights are all sums over edge weights; keeping
// the total this far below the int64 range leaves room for every downstream
// accumulation.
constexpr Weight kMaxTotalWeight = Weight{1} << 40;

Weight checked_add(Weight a, Weight b) {
    Weight r = 0;
    if (__builtin_add_overflow(a, b, &r)) fail(errc::overflow, "weight sum overflows the accumulator");
    return r;
}

void check_vertex(int v, int n, const char* where) {
    if (v < 0 || v >= n) {
        fail(errc::invalid_argument,
             std::string(where) + ": vertex id " + std::to_string(v) + " out of range [0, " +
                 std::to_string(n) + ")");
    }
}

} // namespace

WeightedGraph::WeightedGraph(int vertex_count, std::vector<Edge> edges) {
    if (vertex_count < 0) fail(errc::invalid_argument, "vertex count must be nonnegative");
    n_ = vertex_count;
    for (auto& e : edges) {
        check_vertex(e.u, n_, "edge");
        check_vertex(e.v, n_, "edge");
        if (e.u == e.v) fail(errc::invalid_argument, "self-loop at vertex " + std::to_string(e.u));
        if (e.w < 0) fail(errc::invalid_argument, "negative edge weight");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i - 1].u == edges[i].u && edges[i - 1].v == edges[i].v) {
            fail(errc::invalid_argument, "parallel edge {" + std::to_string(edges[i].u) + "," +
                                             std::to_string(edges[i].v) + "}");
        }
    }
    edges_ = std::move(edges);

    Weight total = 0;
    for (const auto& e : edges_) total = checked_add(total, e.w);
    if (total > kMaxTotalWeight) fail(errc::overflow, "total edge weight exceeds the accumulator guard");
    total_weight_ = total;

    adj_.assign(n_, {});
    for (const auto& e : edges_) {
        adj_[e.u].push_back({e.v, e.w});
        adj_[e.v].push_back({e.u, e.w});
    }
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end(), [](const Neighbor& a, const Neighbor& b) { return a.to < b.to; });
    }
}

const std::vector<WeightedGraph::Neighbor>& WeightedGraph::neighbors(int v) const {
    check_vertex(v, n_, "neighbors");
    return adj_[v];
}

int WeightedGraph::degree(int v) const {
    check_vertex(v, n_, "degree");
    return static_cast<int>(adj_[v].size());
}

std::optional<Weight> WeightedGraph::edge_weight(int u, int v) const {
    check_vertex(u, n_, "edge_weight");
    check_vertex(v, n_, "edge_weight");
    const auto& nb = adj_[u];
    auto it = std::lower_bound(nb.begin(), nb.end(), v,
                               [](const Neighbor& a, int id) { return a.to < id; });
    if (it == nb.end() || it->to != v) return std::nullopt;
    return it->w;
}

bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    if (a.n_ != b.n_ || a.edges_.size() != b.edges_.size()) return false;
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
        const auto& x = a.edges_[i];
        const auto& y = b.edges_[i];
        if (x.u != y.u || x.v != y.v || x.w != y.w) return false;
    }
    return true;
}

bool operator==(const GtspInstance& a, const GtspInstance& b) {
    return a.graph == b.graph && a.budget == b.budget;
}

bool is_connected(const WeightedGraph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    seen[0] = 1;
    q.push(0);
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (const auto& nb : g.neighbors(u)) {
            if (!seen[nb.to]) {
                seen[nb.to] = 1;
                ++reached;
                q.push(nb.to);
            }
        }
    }
    return reached == n;
}

Tour verify_tour(const WeightedGraph& g, const std::vector<int>& seq) {
    const int n = g.vertex_count();
    if (seq.empty()) {
        if (n == 0) return Tour{{}, 0};
        fail(errc::missing_vertex, "empty sequence misses vertex 0");
    }
    for (int v : seq) check_vertex(v, n, "tour");
    if (seq.front() != seq.back()) {
        fail(errc::not_closed, "tour starts at " + std::to_string(seq.front()) + " but ends at " +
                                   std::to_string(seq.back()));
    }
    Weight total = 0;
    for (std::size_t i = 1; i < seq.size(); ++i) {
        auto w = g.edge_weight(seq[i - 1], seq[i]);
        if (!w) {
            fail(errc::non_edge_step, "step " + std::to_string(seq[i - 1]) + " -> " +
                                          std::to_string(seq[i]) + " is not an edge");
        }
        total = checked_add(total, *w);
    }
    std::vector<char> seen(n, 0);
    for (int v : seq) seen[v] = 1;
    for (int v = 0; v < n; ++v) {
        if (!seen[v]) fail(errc::missing_vertex, "vertex " + std::to_string(v) + " is never visited");
    }
    return Tour{seq, total};
}

MetricClosure metric_closure(const WeightedGraph& g) {
    if (!is_connected(g)) fail(errc::disconnected, "metric closure requires a connected graph");
    const int n = g.vertex_count();
    MetricClosure mc;
    mc.dist.assign(n, std::vector<Weight>(n, 0));
    mc.parent.assign(n, std::vector<int>(n, -1));

    constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;
    for (int s = 0; s < n; ++s) {
        auto& dist = mc.dist[s];
        auto& parent = mc.parent[s];
        std::vector<char> settled(n, 0);
        std::fill(dist.begin(), dist.end(), kInf);
        dist[s] = 0;
        // (distance, vertex) ordering makes the settle order, and with it the
        // recorded parents, deterministic: on equal distance the smaller id
        // settles first and ties prefer the smaller settled predecessor.
        std::priority_queue<std::pair<Weight, int>, std::vector<std::pair<Weight, int>>, std::greater<>>
            pq;
        pq.emplace(0, s);
        while (!pq.empty()) {
            auto [d, u] = pq.top();
            pq.pop();
            if (settled[u]) continue;
            settled[u] = 1;
            for (const auto& nb : g.neighbors(u)) {
                Weight nd = d + nb.w;
                if (nd < dist[nb.to]) {
                    dist[nb.to] = nd;
                    parent[nb.to] = u;
                    pq.emplace(nd, nb.to);
                } else if (nd == dist[nb.to] && !settled[nb.to] &&
                           (parent[nb.to] == -1 || u < parent[nb.to])) {
                    parent[nb.to] = u;
                }
            }
        }
    }
    return mc;
}

std::vector<int> MetricClosure::path(int s, int t) const {
    const int n = size();
    if (s < 0 || s >= n || t < 0 || t >= n) fail(errc::invalid_argument, "path endpoint out of range");
    std::vector<int> rev;
    int cur = t;
    while (cur != s) {
        rev.push_back(cur);
        cur = parent[s][cur];
        if (cur < 0) fail(errc::disconnected, "no recorded path");
    }
    rev.push_back(s);
    std::reverse(rev.begin(), rev.end());
    return rev;
}

MinIncident min_incident_weight(const WeightedGraph& g, int v) {
    const auto& nb = g.neighbors(v);
    if (nb.empty()) fail(errc::isolated_vertex, "vertex " + std::to_string(v) + " has no incident edges");
    MinIncident best{nb.front().to, nb.front().w};
    for (const auto& e : nb) {
        if (e.w < best.weight) best = {e.to, e.w};  // neighbors ascend by id, so ties keep the smallest
    }
    return best;
}

// --- instance text format -------------------------------------------------

namespace {

struct Line {
    int number = 0;
    std::string text;
};

// Reads the next line carrying data, skipping blanks and '#' comments.
std::optional<Line> next_data_line(std::istream& in, int& lineno) {
    std::string raw;
    while (std::getline(in, raw)) {
        ++lineno;
        auto first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos || raw[first] == '#') continue;
        return Line{lineno, raw};
    }
    return std::nullopt;
}

[[noreturn]] void parse_fail(int lineno, const std::string& msg) {
    fail(errc::parse, "line " + std::to_string(lineno) + ": " + msg);
}

long long parse_int(const std::string& tok, int lineno, const char* what) {
    std::size_t pos = 0;
    long long value = 0;
    try {
        value = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        parse_fail(lineno, std::string("expected integer for ") + what + ", got '" + tok + "'");
    }
    if (pos != tok.size()) {
        parse_fail(lineno, std::string("trailing characters after ") + what + " in '" + tok + "'");
    }
    return value;
}

GtspInstance parse_instance_impl(std::istream& in, int& lineno, bool allow_trailing) {
    auto header = next_data_line(in, lineno);
    if (!header) fail(errc::parse, "empty instance: missing 'gtsp' header");
    std::istringstream hs(header->text);
    std::string tag, ntok, mtok, wtok, extra;
    hs >> tag >> ntok >> mtok >> wtok;
    if (tag != "gtsp" || ntok.empty() || mtok.empty() || wtok.empty() || (hs >> extra)) {
        parse_fail(header->number, "expected header 'gtsp <n> <m> <W|->'");
    }
    long long n = parse_int(ntok, header->number, "vertex count");
    long long m = parse_int(mtok, header->number, "edge count");
    if (n < 0 || m < 0) parse_fail(header->number, "negative count in header");
    constexpr long long kMaxN = 10'000'000;
    if (n > kMaxN || m > kMaxN * 8) parse_fail(header->number, "header counts unreasonably large");
    std::optional<Weight> budget;
    if (wtok != "-") {
        long long w = parse_int(wtok, header->number, "budget");
        if (w < 0) parse_fail(header->number, "budget must be nonnegative");
        budget = w;
    }

    std::vector<WeightedGraph::Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::set<std::pair<int, int>> seen_pairs;
    for (long long i = 0; i < m; ++i) {
        auto line = next_data_line(in, lineno);
        if (!line) fail(errc::parse, "unexpected end of input: expected " + std::to_string(m) +
                                         " edge lines, got " + std::to_string(i));
        std::istringstream es(line->text);
        std::string utok, vtok, wwtok;
        es >> utok >> vtok >> wwtok;
        if (utok.empty() || vtok.empty() || wwtok.empty() || (es >> extra)) {
            parse_fail(line->number, "expected edge line 'u v w'");
        }
        long long u = parse_int(utok, line->number, "endpoint");
        long long v = parse_int(vtok, line->number, "endpoint");
        long long w = parse_int(wwtok, line->number, "weight");
        if (u < 0 || v >= n || u >= v) {
            parse_fail(line->number, "edge endpoints must satisfy 0 <= u < v < n");
        }
        if (w < 0) parse_fail(line->number, "edge weight must be nonnegative");
        if (!seen_pairs.emplace(static_cast<int>(u), static_cast<int>(v)).second) {
            parse_fail(line->number, "duplicate edge {" + utok + "," + vtok + "}");
        }
        edges.push_back({static_cast<int>(u), static_cast<int>(v), w});
    }
    if (!allow_trailing) {
        if (auto stray = next_data_line(in, lineno)) {
            parse_fail(stray->number, "unexpected content after " + std::to_string(m) + " edges");
        }
    }
    try {
        return GtspInstance{WeightedGraph(static_cast<int>(n), std::move(edges)), budget};
    } catch (const Error& e) {
        fail(errc::parse, std::string("invalid instance: ") + e.what());
    }
}

} // namespace

GtspInstance parse_instance(std::istream& in) {
    int lineno = 0;
    return parse_instance_impl(in, lineno, /*allow_trailing=*/false);
}

GtspInstance parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io, "cannot open instance file '" + path + "'");
    return parse_instance(in);
}

void write_instance(std::ostream& out, const GtspInstance& inst) {
    const auto& g = inst.graph;
    out << "gtsp " << g.vertex_count() << ' ' << g.edge_count() << ' ';
    if (inst.budget) {
        out << *inst.budget;
    } else {
        out << '-';
    }
    out << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.w << '\n';
}

void write_instance_file(const std::string& path, const GtspInstance& inst) {
    std::ofstream out(path);
    if (!out) fail(errc::io, "cannot write instance file '" + path + "'");
    write_instance(out, inst);
}

std::string instance_to_string(const GtspInstance& inst) {
    std::ostringstream os;
    write_instance(os, inst);
    return os.str();
}

// Internal hook for embedding an instance inside another text file; stops
// after the declared edge count instead of demanding end-of-stream.
GtspInstance parse_instance_embedded(std::istream& in, int& lineno) {
    return parse_instance_impl(in, lineno, /*allow_trailing=*/true);
}

std::vector<int> parse_tour_line(std::istream& in) {
    int lineno = 0;
    auto line = next_data_line(in, lineno);
    if (!line) fail(errc::parse, "empty tour file");
    std::istringstream ls(line->text);
    std::vector<int> vertices;
    std::string tok;
    while (ls >> tok) {
        long long v = parse_int(tok, line->number, "vertex id");
        if (v < 0 || v > std::numeric_limits<int>::max()) parse_fail(line->number, "vertex id out of range");
        vertices.push_back(static_cast<int>(v));
    }
    if (auto stray = next_data_line(in, lineno)) {
        parse_fail(stray->number, "tour file must contain a single data line");
    }
    return vertices;
}

std::vector<int> parse_tour_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io, "cannot open tour file '" + path + "'");
    return parse_tour_line(in);
}

void write_tour_file(const std::string& path, const std::vector<int>& vertices) {
    std::ofstream out(path);
    if (!out) fail(errc::io, "cannot write tour file '" + path + "'");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) out << ' ';
        out << vertices[i];
    }
    out << '\n';
}

} // namespace gtsp
