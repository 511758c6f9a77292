#pragma once

#include <cstddef>

namespace algdct {

// Compile-time defaults that bound resource use.  All limits are checked at
// runtime and produce a clear std::domain_error when exceeded.
struct limits {
    // Deepest tower level k that may be constructed (field degree 2^k).
    static constexpr int max_tower_level = 12;
    // Deepest level at which Galois groups are built (Cayley tables are
    // Theta(4^k) exact compositions).
    static constexpr int max_galois_level = 8;
    // Largest transform size for which exact verification/materialization
    // is permitted.
    static constexpr std::size_t max_exact_verify_n = 64;
    // JSON serialization emits power-basis coefficient vectors only up to
    // this level; above it, constants are serialized in exact angle form.
    static constexpr int max_json_coeff_level = 8;
};

} // namespace algdct
