// Shared helpers for the test suite: process execution, scratch files, and
// an instance generator independent of the library's own one.
#pragma once

#include "gtsp/error.hpp"
#include "gtsp/graph.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace testsup {

struct CliResult {
    int status = -1;
    std::string output;
};

// Runs a shell command, capturing stdout; stderr is dropped unless the
// caller redirects it in the command string (e.g. with a trailing "2>&1").
inline CliResult run_command(const std::string& cmd) {
    CliResult r;
    std::string full = cmd;
    if (cmd.find("2>") == std::string::npos) full += " 2>/dev/null";
    FILE* pipe = popen(full.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
    int rc = pclose(pipe);
    if (WIFEXITED(rc)) r.status = WEXITSTATUS(rc);
    return r;
}

inline std::filesystem::path fresh_dir(const std::string& name) {
    auto d = std::filesystem::current_path() / name;
    std::filesystem::remove_all(d);
    std::filesystem::create_directories(d);
    return d;
}

inline void write_file(const std::filesystem::path& p, const std::string& content) {
    std::ofstream out(p);
    out << content;
}

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return s;
}

// Random connected graph built from a random spanning tree plus coin-flipped
// extra edges. Deliberately distinct from the library's generator so the two
// can check each other.
inline gtsp::WeightedGraph random_connected_graph(std::mt19937_64& rng, int n, int extra_percent,
                                                 gtsp::Weight wmin, gtsp::Weight wmax) {
    auto weight = [&]() {
        return wmin + static_cast<gtsp::Weight>(rng() % static_cast<std::uint64_t>(wmax - wmin + 1));
    };
    std::vector<gtsp::WeightedGraph::Edge> edges;
    std::vector<std::vector<char>> present(n, std::vector<char>(n, 0));
    for (int v = 1; v < n; ++v) {
        int u = static_cast<int>(rng() % static_cast<std::uint64_t>(v));
        edges.push_back({u, v, weight()});
        present[u][v] = 1;
    }
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (present[u][v]) continue;
            if (static_cast<int>(rng() % 100) < extra_percent) edges.push_back({u, v, weight()});
        }
    }
    return gtsp::WeightedGraph(n, std::move(edges));
}

} // namespace testsup

// Asserts that evaluating the expression raises a gtsp::Error with the given
// code.
#define CHECK_FAILS_WITH(expr, expected)                                        \
    do {                                                                        \
        bool caught_ = false;                                                   \
        try {                                                                   \
            (void)(expr);                                                       \
        } catch (const gtsp::Error& e_) {                                       \
            caught_ = true;                                                     \
            CHECK(e_.code() == (expected));                                     \
        }                                                                       \
        CHECK_MESSAGE(caught_, #expr " did not raise");                         \
    } while (0)
