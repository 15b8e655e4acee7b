#pragma once

#include <stdexcept>
#include <string>

namespace cc {

// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Input violates a structural precondition (malformed matrix, broken axiom,
// inconsistent numerics). CLI maps this to exit code 2.
struct validation_error : error {
    explicit validation_error(const std::string& what) : error(what) {}
};

// A configured resource bound was exceeded. CLI maps this to exit code 3.
struct bound_error : error {
    explicit bound_error(const std::string& what) : error(what) {}
};

// Runtime-configurable size limits (CC_MAX_N environment variable overrides
// the vertex bound).
struct limits {
    static int max_n();                  // default 128
    static int max_rank_algebraic();     // default 80
    static int max_rank_parabolics();    // default 40
    static long long max_search_nodes(); // default 10^8
    static long long max_group_order();  // default 2*10^6
};

} // namespace cc
