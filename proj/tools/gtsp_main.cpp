// Command-line front end: generate, reduce, solve, lift, verify, bench.
// Exit codes: 0 success, 1 domain failure, 2 malformed input or usage.

#include "CLI11.hpp"

#include "gtsp/bench.hpp"
#include "gtsp/cover.hpp"
#include "gtsp/error.hpp"
#include "gtsp/graph.hpp"
#include "gtsp/hop_graph.hpp"
#include "gtsp/kernelize.hpp"
#include "gtsp/solve.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

struct GenArgs {
    std::string out;
    std::string family = "random_connected";
    int n = 1;
    std::string p = "1/2";
    long long wmin = 1, wmax = 10;
    int cover_size = 0;
    std::uint64_t seed = 0;
    long long budget = 0;
    bool has_budget = false;
};

int run_gen(const GenArgs& a) {
    gtsp::GenSpec spec;
    spec.family = gtsp::parse_family(a.family);
    spec.n = a.n;
    spec.edge_probability = gtsp::parse_rational(a.p);
    spec.weight_min = a.wmin;
    spec.weight_max = a.wmax;
    spec.cover_size = a.cover_size;
    spec.seed = a.seed;

    gtsp::GtspInstance inst = gtsp::generate(spec);
    if (a.has_budget) {
        if (a.budget < 0) gtsp::fail(gtsp::errc::invalid_argument, "budget must be nonnegative");
        inst.budget = a.budget;
    }
    if (a.out.empty()) {
        gtsp::write_instance(std::cout, inst);
    } else {
        gtsp::write_instance_file(a.out, inst);
    }
    return 0;
}

struct ReduceArgs {
    std::string input;
    std::string kernel_out;
    std::string meta_out;
    std::string cover = "approx";
    std::string mode;
    std::string hopgraph_out;
    int limit = 20;
    bool verbose = false;
};

int run_reduce(const ReduceArgs& a) {
    gtsp::GtspInstance inst = gtsp::parse_instance_file(a.input);
    if (a.mode == "optimization") {
        inst.budget.reset();
    } else if (a.mode == "decision" && !inst.budget) {
        gtsp::fail(gtsp::errc::invalid_argument,
                   "decision mode requires a budget in the instance header");
    }

    gtsp::KernelResult kr;
    if (a.cover.rfind("file:", 0) == 0) {
        std::vector<int> ids = gtsp::parse_tour_file(a.cover.substr(5));
        kr = gtsp::reduce(inst, gtsp::validate_cover(inst.graph, std::move(ids)));
    } else if (a.cover == "approx") {
        kr = gtsp::reduce(inst, gtsp::CoverStrategy::approx);
    } else if (a.cover == "exact") {
        kr = gtsp::reduce(inst, gtsp::CoverStrategy::exact, a.limit);
    } else {
        gtsp::fail(gtsp::errc::invalid_argument,
                   "--cover must be approx, exact, or file:<path>, got '" + a.cover + "'");
    }

    if (!a.kernel_out.empty()) gtsp::write_instance_file(a.kernel_out, kr.kernel);
    if (!a.meta_out.empty()) gtsp::write_kernel_meta_file(a.meta_out, kr);
    if (!a.hopgraph_out.empty()) {
        std::ofstream hout(a.hopgraph_out);
        if (!hout) gtsp::fail(gtsp::errc::io, "cannot write '" + a.hopgraph_out + "'");
        if (inst.graph.vertex_count() > 1) {
            auto h = gtsp::build_hop_graph(inst.graph, gtsp::VertexCover{kr.cover, gtsp::CoverKind::user});
            gtsp::write_hop_graph(hout, h);
        }
    }

    std::cout << inst.graph.vertex_count() << ' ' << kr.kernel.graph.vertex_count() << ' '
              << inst.graph.edge_count() << ' ' << kr.kernel.graph.edge_count() << ' ' << kr.delta
              << '\n';
    if (a.verbose) {
        std::cerr << "cover size " << kr.cover_size() << ", deleted " << kr.loop_map.size()
                  << " vertices";
        if (kr.decision_mode) std::cerr << (kr.infeasible ? ", infeasible" : ", feasible budget");
        std::cerr << '\n';
    }
    return 0;
}

struct SolveArgs {
    std::string input;
    std::string out;
    std::string method = "exact";
    int limit = 0;
    bool has_limit = false;
    std::uint64_t seed = 0;
};

int run_solve(const SolveArgs& a) {
    gtsp::GtspInstance inst = gtsp::parse_instance_file(a.input);
    gtsp::SolveResult sr;
    if (a.method == "exact") {
        sr = gtsp::solve_exact(inst, a.has_limit ? a.limit : 13);
    } else if (a.method == "brute") {
        sr = gtsp::solve_permutation_bruteforce(inst, a.has_limit ? a.limit : 8);
    } else if (a.method == "heuristic") {
        sr = gtsp::solve_heuristic(inst, a.seed);
    } else {
        gtsp::fail(gtsp::errc::invalid_argument,
                   "--method must be exact, heuristic, or brute, got '" + a.method + "'");
    }

    if (a.out.empty()) {
        for (std::size_t i = 0; i < sr.tour.vertices.size(); ++i) {
            if (i) std::cout << ' ';
            std::cout << sr.tour.vertices[i];
        }
        std::cout << '\n' << sr.tour.weight << '\n';
    } else {
        gtsp::write_tour_file(a.out, sr.tour.vertices);
        std::cout << sr.tour.weight << '\n';
    }
    return 0;
}

struct LiftArgs {
    std::string tour_in;
    std::string meta_in;
    std::string out;
};

int run_lift(const LiftArgs& a) {
    gtsp::KernelResult kr = gtsp::parse_kernel_meta_file(a.meta_in);
    std::vector<int> ids = gtsp::parse_tour_file(a.tour_in);
    gtsp::Tour kernel_tour;
    try {
        kernel_tour = gtsp::verify_tour(kr.kernel.graph, ids);
    } catch (const gtsp::Error& e) {
        gtsp::fail(gtsp::errc::invalid_kernel_tour, std::string("kernel tour rejected: ") + e.what());
    }
    gtsp::Tour lifted = gtsp::lift(kr, kernel_tour);
    gtsp::write_tour_file(a.out, lifted.vertices);
    std::cout << lifted.weight << '\n';
    return 0;
}

struct VerifyArgs {
    std::string instance_in;
    std::string tour_in;
    long long budget = 0;
    bool has_budget = false;
};

int run_verify(const VerifyArgs& a) {
    gtsp::GtspInstance inst = gtsp::parse_instance_file(a.instance_in);
    std::vector<int> ids = gtsp::parse_tour_file(a.tour_in);
    gtsp::Tour t = gtsp::verify_tour(inst.graph, ids);
    std::optional<gtsp::Weight> budget = inst.budget;
    if (a.has_budget) {
        if (a.budget < 0) gtsp::fail(gtsp::errc::invalid_argument, "budget must be nonnegative");
        budget = a.budget;
    }
    if (budget && t.weight > *budget) {
        std::cerr << "gtsp: tour weight " << t.weight << " exceeds budget " << *budget << '\n';
        return 1;
    }
    std::cout << t.weight << '\n';
    return 0;
}

struct BenchArgs {
    std::string specs_in;
    std::string csv_out;
    std::string cover = "auto";
    int limit = 10;
    bool no_timing = false;
};

int run_bench_cmd(const BenchArgs& a) {
    std::ifstream in(a.specs_in);
    if (!in) gtsp::fail(gtsp::errc::io, "cannot open specs file '" + a.specs_in + "'");
    std::vector<gtsp::GenSpec> specs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        try {
            if (auto s = gtsp::parse_genspec_line(line)) specs.push_back(*s);
        } catch (const gtsp::Error& e) {
            gtsp::fail(gtsp::errc::parse,
                       "specs line " + std::to_string(lineno) + ": " + e.what());
        }
    }

    gtsp::BenchOptions opts;
    opts.cover = a.cover == "approx"  ? gtsp::BenchCover::approx
                 : a.cover == "exact" ? gtsp::BenchCover::exact
                                      : gtsp::BenchCover::automatic;
    opts.oracle_limit = a.limit;
    opts.with_timing = !a.no_timing;
    auto records = gtsp::run_bench(specs, a.csv_out, opts);
    std::cerr << "wrote " << records.size() << " of " << specs.size() << " records to " << a.csv_out
              << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graphical TSP kernelization toolkit"};
    app.require_subcommand(1);

    GenArgs ga;
    auto* gen = app.add_subcommand("gen", "Generate a benchmark instance");
    gen->add_option("-o,--output", ga.out, "Output file (default: stdout)");
    gen->add_option("--family", ga.family, "random_connected, planted_cover, star, path, cycle");
    gen->add_option("--n", ga.n, "Vertex count");
    gen->add_option("--p", ga.p, "Extra-edge probability, e.g. 1/2 or 0.3");
    gen->add_option("--wmin", ga.wmin, "Minimum edge weight");
    gen->add_option("--wmax", ga.wmax, "Maximum edge weight");
    gen->add_option("--cover-size", ga.cover_size, "Planted cover size (planted_cover only)");
    gen->add_option("--seed", ga.seed, "Random seed");
    auto* gen_budget = gen->add_option("--budget", ga.budget, "Attach a decision budget");

    ReduceArgs ra;
    auto* red = app.add_subcommand("reduce", "Shrink an instance to its kernel");
    red->add_option("input", ra.input, "Instance file")->required();
    red->add_option("-o,--kernel", ra.kernel_out, "Kernel instance output file");
    red->add_option("-m,--meta", ra.meta_out, "Lifting metadata output file");
    red->add_option("--cover", ra.cover, "approx, exact, or file:<path>");
    red->add_option("--mode", ra.mode, "Force decision or optimization mode")
        ->check(CLI::IsMember({"decision", "optimization"}));
    red->add_option("--emit-hopgraph", ra.hopgraph_out, "Dump the hop graph to a file");
    red->add_option("--limit", ra.limit, "Exact cover size guard (default 20)");
    red->add_flag("--verbose", ra.verbose, "Extra detail on stderr");

    SolveArgs sa;
    auto* sol = app.add_subcommand("solve", "Find a tour");
    sol->add_option("input", sa.input, "Instance file")->required();
    sol->add_option("-o,--output", sa.out, "Tour output file (weight then goes to stdout)");
    sol->add_option("--method", sa.method, "exact, heuristic, or brute");
    auto* sol_limit = sol->add_option("--limit", sa.limit, "Size guard (default 13 exact, 8 brute)");
    sol->add_option("--seed", sa.seed, "Heuristic start seed");

    LiftArgs la;
    auto* lif = app.add_subcommand("lift", "Lift a kernel tour back to the original instance");
    lif->add_option("kernel_tour", la.tour_in, "Kernel tour file")->required();
    lif->add_option("meta", la.meta_in, "Metadata file from reduce")->required();
    lif->add_option("output", la.out, "Lifted tour output file")->required();

    VerifyArgs va;
    auto* ver = app.add_subcommand("verify", "Check a tour against an instance");
    ver->add_option("instance", va.instance_in, "Instance file")->required();
    ver->add_option("tour", va.tour_in, "Tour file")->required();
    auto* ver_budget = ver->add_option("--budget", va.budget, "Override the instance budget");

    BenchArgs ba;
    auto* ben = app.add_subcommand("bench", "Run the reduction over a batch of generated instances");
    ben->add_option("--specs", ba.specs_in, "Generator spec file, one instance per line")->required();
    ben->add_option("-o,--output", ba.csv_out, "CSV output file")->required();
    ben->add_option("--cover", ba.cover, "auto, approx, or exact")
        ->check(CLI::IsMember({"auto", "approx", "exact"}));
    ben->add_option("--limit", ba.limit, "Exact-solve size guard (default 10)");
    ben->add_flag("--no-timing", ba.no_timing, "Write '-' in the timing columns");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            ga.has_budget = gen_budget->count() > 0;
            return run_gen(ga);
        }
        if (red->parsed()) return run_reduce(ra);
        if (sol->parsed()) {
            sa.has_limit = sol_limit->count() > 0;
            return run_solve(sa);
        }
        if (lif->parsed()) return run_lift(la);
        if (ver->parsed()) {
            va.has_budget = ver_budget->count() > 0;
            return run_verify(va);
        }
        if (ben->parsed()) return run_bench_cmd(ba);
    } catch (const gtsp::Error& e) {
        std::cerr << "gtsp: " << e.what() << '\n';
        return e.code() == gtsp::errc::parse ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "gtsp: internal error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
