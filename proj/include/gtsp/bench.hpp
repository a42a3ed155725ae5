#pragma once

#include "gtsp/graph.hpp"
#include "gtsp/kernelize.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gtsp {

enum class Family { random_connected, planted_cover, star, path, cycle };

std::string family_name(Family f);
Family parse_family(const std::string& name);

// Exact probability as a fraction; keeps generation free of floating point.
struct Rational {
    std::int64_t num = 1;
    std::int64_t den = 2;
};

Rational parse_rational(const std::string& text);  // "3/10", "0.3", "1"

struct GenSpec {
    Family family = Family::random_connected;
    int n = 1;
    Rational edge_probability{1, 2};   // extra-edge density where applicable
    Weight weight_min = 1;
    Weight weight_max = 10;
    int cover_size = 0;                // planted_cover only; requires n >= 3*cover_size
    std::uint64_t seed = 0;
};

// Deterministic for a fixed spec. All families produce connected simple
// graphs. planted_cover pins the minimum cover size to exactly cover_size:
// the planted set forms a clique and every planted vertex gets two dedicated
// leaves, so no smaller cover exists; the rest stays an independent set.
GtspInstance generate(const GenSpec& spec);

// Spec-file line: "family n p wmin wmax cover_size seed", '-' for defaults,
// '#' for comments. Returns nullopt for blank/comment lines.
std::optional<GenSpec> parse_genspec_line(const std::string& line);
std::string genspec_to_line(const GenSpec& spec);

enum class BenchCover {
    automatic,  // planted set for planted_cover, 2-approx otherwise
    approx,
    exact,      // exact cover when n permits, else 2-approx
};

struct BenchOptions {
    BenchCover cover = BenchCover::automatic;
    int exact_cover_limit = 20;
    int oracle_limit = 10;      // skip exact solves above this order
    bool with_timing = true;    // false writes '-' in the timing columns
};

struct BenchRecord {
    int id = 0;
    Family family = Family::random_connected;
    std::uint64_t seed = 0;
    int n = 0, m = 0;
    int cover_size = 0;
    std::optional<int> tau;     // recorded only when the cover used is minimum
    int kernel_n = 0, kernel_m = 0;
    Weight delta = 0;
    std::optional<std::int64_t> reduce_us, solve_direct_us, solve_kernel_us;
    std::optional<Weight> opt_g, opt_kernel;
};

extern const char* const kBenchCsvHeader;

std::string bench_record_to_csv(const BenchRecord& r);

// One record per instance, CSV written to csv_path in spec order. Kernel
// size bounds are validated inline. Per-instance failures go to stderr and
// skip the record without aborting the batch.
std::vector<BenchRecord> run_bench(const std::vector<GenSpec>& specs, const std::string& csv_path,
                                   const BenchOptions& opts = {});

} // namespace gtsp
