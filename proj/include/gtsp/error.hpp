#pragma once

#include <stdexcept>
#include <string>

namespace gtsp {

// Failure categories. Parse-type failures map to CLI exit code 2,
// everything else to exit code 1.
enum class errc {
    parse,                     // malformed input text
    invalid_argument,          // precondition breach (bad vertex id, empty graph, ...)
    not_closed,                // tour does not return to its start
    non_edge_step,             // tour steps between non-adjacent vertices
    missing_vertex,            // tour skips a vertex
    disconnected,
    isolated_vertex,
    too_large,                 // desk-scale guard tripped
    not_a_cover,
    isolated_non_cover_vertex,
    non_edge,
    invalid_kernel_tour,
    anchor_not_on_tour,
    not_decision_mode,
    invalid_spec,              // inconsistent generator spec
    overflow,                  // weight accumulator guard
    io,                        // file open/write failure
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

} // namespace gtsp
