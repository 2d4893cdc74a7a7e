#pragma once

#include "geodkit/graph.hpp"
#include "geodkit/verdict.hpp"

namespace geodkit {

// Brute-force checkers built directly on the definitions: one full
// distance/geodesic-count row per source. They accept weighted graphs too
// and serve as the reference the fast recognizers are tested against.

/// Holds iff every ordered pair is joined by exactly one geodesic. The
/// witness is the lexicographically first (source, target) pair whose
/// geodesic count is at least 2. Throws InputError on a disconnected graph.
Verdict oracle_is_geodetic(const Graph& g);

/// Holds iff every vertex has exactly one farthest vertex. The witness is
/// the first vertex with two or more, together with all of them.
/// Throws InputError on a disconnected graph.
Verdict oracle_is_antipodal(const Graph& g);

}  // namespace geodkit
