#include "gtsp/bench.hpp"

#include "gtsp/cover.hpp"
#include "gtsp/error.hpp"
#include "gtsp/solve.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gtsp {

std::string family_name(Family f) {
    switch (f) {
        case Family::random_connected: return "random_connected";
        case Family::planted_cover: return "planted_cover";
        case Family::star: return "star";
        case Family::path: return "path";
        case Family::cycle: return "cycle";
    }
    throw std::logic_error("unhandled family");
}

Family parse_family(const std::string& name) {
    if (name == "random_connected") return Family::random_connected;
    if (name == "planted_cover") return Family::planted_cover;
    if (name == "star") return Family::star;
    if (name == "path") return Family::path;
    if (name == "cycle") return Family::cycle;
    fail(errc::parse, "unknown family '" + name + "'");
}

namespace {

long long parse_ll(const std::string& tok, const char* what) {
    std::size_t pos = 0;
    long long value = 0;
    try {
        value = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        fail(errc::parse, std::string("expected integer for ") + what + ", got '" + tok + "'");
    }
    if (pos != tok.size()) fail(errc::parse, std::string("trailing characters in '") + tok + "'");
    return value;
}

} // namespace

Rational parse_rational(const std::string& text) {
    if (auto slash = text.find('/'); slash != std::string::npos) {
        long long num = parse_ll(text.substr(0, slash), "numerator");
        long long den = parse_ll(text.substr(slash + 1), "denominator");
        if (num < 0 || den < 1) fail(errc::parse, "probability fraction out of range in '" + text + "'");
        return {num, den};
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
        std::string ip = text.substr(0, dot), fp = text.substr(dot + 1);
        if (ip.empty() || fp.empty() || fp.size() > 18) {
            fail(errc::parse, "malformed decimal probability '" + text + "'");
        }
        long long whole = parse_ll(ip, "integer part");
        long long frac = parse_ll(fp, "fractional part");
        if (whole < 0 || frac < 0) fail(errc::parse, "probability must be nonnegative");
        long long den = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
        return {whole * den + frac, den};
    }
    long long whole = parse_ll(text, "probability");
    if (whole < 0) fail(errc::parse, "probability must be nonnegative");
    return {whole, 1};
}

namespace {

void check_spec(const GenSpec& spec) {
    if (spec.n < 1) fail(errc::invalid_spec, "n must be at least 1");
    if (spec.weight_min < 0 || spec.weight_min > spec.weight_max) {
        fail(errc::invalid_spec, "need 0 <= wmin <= wmax");
    }
    const auto& p = spec.edge_probability;
    if (p.den < 1 || p.num < 0 || p.num > p.den) {
        fail(errc::invalid_spec, "edge probability must lie in [0, 1]");
    }
    switch (spec.family) {
        case Family::random_connected:
            if (spec.cover_size != 0) fail(errc::invalid_spec, "cover_size applies to planted_cover only");
            if (spec.n > 2000) fail(errc::invalid_spec, "random_connected limited to n <= 2000");
            break;
        case Family::planted_cover:
            if (spec.cover_size < 1) fail(errc::invalid_spec, "planted_cover needs cover_size >= 1");
            if (spec.n < 3 * spec.cover_size) {
                fail(errc::invalid_spec, "planted_cover needs n >= 3 * cover_size");
            }
            if (spec.n > 2000) fail(errc::invalid_spec, "planted_cover limited to n <= 2000");
            break;
        case Family::star:
        case Family::path:
            if (spec.cover_size != 0) fail(errc::invalid_spec, "cover_size applies to planted_cover only");
            if (spec.n > 1000000) fail(errc::invalid_spec, "family limited to n <= 1000000");
            break;
        case Family::cycle:
            if (spec.cover_size != 0) fail(errc::invalid_spec, "cover_size applies to planted_cover only");
            if (spec.n < 3) fail(errc::invalid_spec, "cycle needs n >= 3");
            if (spec.n > 1000000) fail(errc::invalid_spec, "family limited to n <= 1000000");
            break;
    }
}

} // namespace

GtspInstance generate(const GenSpec& spec) {
    check_spec(spec);
    const int n = spec.n;
    std::mt19937_64 rng(spec.seed);
    // Raw modular draws keep the byte stream identical across platforms;
    // draw order below is part of the format and must not change.
    auto draw_w = [&]() -> Weight {
        auto span = static_cast<std::uint64_t>(spec.weight_max - spec.weight_min + 1);
        return spec.weight_min + static_cast<Weight>(rng() % span);
    };
    auto bern = [&]() {
        return rng() % static_cast<std::uint64_t>(spec.edge_probability.den) <
               static_cast<std::uint64_t>(spec.edge_probability.num);
    };

    std::vector<WeightedGraph::Edge> edges;
    switch (spec.family) {
        case Family::random_connected: {
            // Random labelled tree (parent draw per vertex), relabelled by a
            // Fisher-Yates shuffle, then one ascending pass over all pairs:
            // tree pairs draw a weight, the rest draw a coin and, on heads,
            // a weight.
            std::vector<int> parent(n, -1);
            for (int i = 1; i < n; ++i) parent[i] = static_cast<int>(rng() % static_cast<std::uint64_t>(i));
            std::vector<int> label(n);
            for (int i = 0; i < n; ++i) label[i] = i;
            for (int i = n - 1; i >= 1; --i) {
                int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
                std::swap(label[i], label[j]);
            }
            std::set<std::pair<int, int>> tree;
            for (int i = 1; i < n; ++i) {
                int a = label[i], b = label[parent[i]];
                tree.emplace(std::min(a, b), std::max(a, b));
            }
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    if (tree.count({u, v})) {
                        edges.push_back({u, v, draw_w()});
                    } else if (bern()) {
                        edges.push_back({u, v, draw_w()});
                    }
                }
            }
            break;
        }
        case Family::planted_cover: {
            // Layout: cover 0..k-1 (a clique), two private leaves k+2j and
            // k+2j+1 per cover vertex j, remaining vertices attached to a
            // random cover vertex. Extra cover-to-remainder edges by coin.
            // Leaves stay private and non-cover vertices stay independent,
            // which pins the minimum cover at exactly k.
            const int k = spec.cover_size;
            for (int u = 0; u < k; ++u) {
                for (int v = u + 1; v < k; ++v) edges.push_back({u, v, draw_w()});
            }
            for (int j = 0; j < k; ++j) {
                edges.push_back({j, k + 2 * j, draw_w()});
                edges.push_back({j, k + 2 * j + 1, draw_w()});
            }
            std::set<std::pair<int, int>> attached;
            for (int v = 3 * k; v < n; ++v) {
                int c = static_cast<int>(rng() % static_cast<std::uint64_t>(k));
                edges.push_back({c, v, draw_w()});
                attached.emplace(c, v);
            }
            for (int u = 0; u < k; ++u) {
                for (int v = 3 * k; v < n; ++v) {
                    if (attached.count({u, v})) continue;
                    if (bern()) edges.push_back({u, v, draw_w()});
                }
            }
            break;
        }
        case Family::star:
            for (int v = 1; v < n; ++v) edges.push_back({0, v, draw_w()});
            break;
        case Family::path:
            for (int v = 1; v < n; ++v) edges.push_back({v - 1, v, draw_w()});
            break;
        case Family::cycle:
            for (int v = 1; v < n; ++v) edges.push_back({v - 1, v, draw_w()});
            edges.push_back({0, n - 1, draw_w()});
            break;
    }
    return GtspInstance{WeightedGraph(n, std::move(edges)), std::nullopt};
}

std::optional<GenSpec> parse_genspec_line(const std::string& line) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') return std::nullopt;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    std::string t;
    while (ls >> t) tok.push_back(t);
    if (tok.size() != 7) {
        fail(errc::parse, "expected 7 fields 'family n p wmin wmax cover_size seed', got " +
                              std::to_string(tok.size()));
    }
    GenSpec s;
    if (tok[0] != "-") s.family = parse_family(tok[0]);
    if (tok[1] != "-") {
        long long v = parse_ll(tok[1], "n");
        if (v < 0 || v > 1000000000) fail(errc::parse, "n out of range");
        s.n = static_cast<int>(v);
    }
    if (tok[2] != "-") s.edge_probability = parse_rational(tok[2]);
    if (tok[3] != "-") s.weight_min = parse_ll(tok[3], "wmin");
    if (tok[4] != "-") s.weight_max = parse_ll(tok[4], "wmax");
    if (tok[5] != "-") {
        long long v = parse_ll(tok[5], "cover_size");
        if (v < 0 || v > 1000000000) fail(errc::parse, "cover_size out of range");
        s.cover_size = static_cast<int>(v);
    }
    if (tok[6] != "-") {
        if (tok[6].find('-') != std::string::npos) fail(errc::parse, "seed must be nonnegative");
        try {
            s.seed = std::stoull(tok[6]);
        } catch (const std::exception&) {
            fail(errc::parse, "expected integer seed, got '" + tok[6] + "'");
        }
    }
    return s;
}

std::string genspec_to_line(const GenSpec& spec) {
    std::ostringstream os;
    os << family_name(spec.family) << ' ' << spec.n << ' ' << spec.edge_probability.num << '/'
       << spec.edge_probability.den << ' ' << spec.weight_min << ' ' << spec.weight_max << ' '
       << spec.cover_size << ' ' << spec.seed;
    return os.str();
}

const char* const kBenchCsvHeader =
    "id,family,seed,n,m,cover_size,tau,kernel_n,kernel_m,delta,"
    "reduce_us,solve_direct_us,solve_kernel_us,opt_g,opt_kernel";

std::string bench_record_to_csv(const BenchRecord& r) {
    std::ostringstream os;
    auto opt = [&](const auto& o) {
        if (o) {
            os << *o;
        } else {
            os << '-';
        }
    };
    os << r.id << ',' << family_name(r.family) << ',' << r.seed << ',' << r.n << ',' << r.m << ','
       << r.cover_size << ',';
    opt(r.tau);
    os << ',' << r.kernel_n << ',' << r.kernel_m << ',' << r.delta << ',';
    opt(r.reduce_us);
    os << ',';
    opt(r.solve_direct_us);
    os << ',';
    opt(r.solve_kernel_us);
    os << ',';
    opt(r.opt_g);
    os << ',';
    opt(r.opt_kernel);
    return os.str();
}

std::vector<BenchRecord> run_bench(const std::vector<GenSpec>& specs, const std::string& csv_path,
                                   const BenchOptions& opts) {
    std::ofstream csv(csv_path);
    if (!csv) fail(errc::io, "cannot write csv file '" + csv_path + "'");
    csv << kBenchCsvHeader << '\n';

    using clock = std::chrono::steady_clock;
    auto us_between = [](clock::time_point a, clock::time_point b) {
        return std::chrono::duration_cast<std::chrono::microseconds>(b - a).count();
    };

    std::vector<BenchRecord> records;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const auto& spec = specs[i];
        try {
            GtspInstance inst = generate(spec);

            VertexCover cover;
            std::optional<int> tau;
            switch (opts.cover) {
                case BenchCover::automatic:
                    if (spec.family == Family::planted_cover) {
                        std::vector<int> planted(spec.cover_size);
                        for (int j = 0; j < spec.cover_size; ++j) planted[j] = j;
                        cover = validate_cover(inst.graph, std::move(planted));
                        tau = spec.cover_size;  // pinned by construction
                    } else {
                        cover = approx_cover(inst.graph);
                    }
                    break;
                case BenchCover::approx:
                    cover = approx_cover(inst.graph);
                    break;
                case BenchCover::exact:
                    if (inst.graph.vertex_count() <= opts.exact_cover_limit) {
                        cover = exact_cover(inst.graph, opts.exact_cover_limit);
                        tau = cover.size();
                    } else {
                        cover = approx_cover(inst.graph);
                    }
                    break;
            }

            BenchRecord r;
            r.id = static_cast<int>(i);
            r.family = spec.family;
            r.seed = spec.seed;
            r.n = inst.graph.vertex_count();
            r.m = inst.graph.edge_count();
            r.cover_size = cover.size();
            r.tau = tau;

            auto t0 = clock::now();
            KernelResult kr = reduce(inst, cover);
            auto t1 = clock::now();
            if (opts.with_timing) r.reduce_us = us_between(t0, t1);
            r.kernel_n = kr.kernel.graph.vertex_count();
            r.kernel_m = kr.kernel.graph.edge_count();
            r.delta = kr.delta;

            // Size guarantees, checked on every run: cover-squared always,
            // and the tighter polynomial-in-tau bounds when the cover used
            // is known to be minimum.
            const long long c = r.cover_size;
            if (r.n > 1 && r.kernel_n > c * c) throw std::logic_error("kernel exceeds |C|^2 vertices");
            if (tau) {
                const long long tt = *tau;
                if (r.n > 1 && r.kernel_n > tt * tt + tt) {
                    throw std::logic_error("kernel exceeds tau^2 + tau vertices");
                }
                if (r.n > 1 && r.kernel_m > 2 * tt * tt * tt - tt) {
                    throw std::logic_error("kernel exceeds 2*tau^3 - tau edges");
                }
            }

            if (r.n <= opts.oracle_limit) {
                auto s0 = clock::now();
                SolveResult direct = solve_exact(inst, opts.oracle_limit);
                auto s1 = clock::now();
                if (opts.with_timing) r.solve_direct_us = us_between(s0, s1);
                r.opt_g = direct.tour.weight;
            }
            if (r.kernel_n <= opts.oracle_limit) {
                auto s0 = clock::now();
                SolveResult onk = solve_exact(kr.kernel, opts.oracle_limit);
                auto s1 = clock::now();
                if (opts.with_timing) r.solve_kernel_us = us_between(s0, s1);
                r.opt_kernel = onk.tour.weight;
            }
            if (r.opt_g && r.opt_kernel && *r.opt_g != *r.opt_kernel + r.delta) {
                throw std::logic_error("optimum drifted across the reduction");
            }

            csv << bench_record_to_csv(r) << '\n';
            records.push_back(std::move(r));
        } catch (const std::exception& e) {
            std::cerr << "bench: spec " << i << " (" << genspec_to_line(spec) << ") failed: " << e.what()
                      << '\n';
        }
    }
    return records;
}

} // namespace gtsp
