#pragma once

#include <stdexcept>

namespace specsat {

// Input text that does not parse (graph6, JSON, malformed files).
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Family multiplicities that cannot produce the requested graph.
struct InfeasibleSpec : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Requests beyond a documented size cap (64-vertex graphs, graph6 order
// field, enumeration levels, long-tier gating).
struct CapExceeded : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace specsat
