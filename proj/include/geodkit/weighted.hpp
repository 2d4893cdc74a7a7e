#pragma once

#include "geodkit/graph.hpp"

namespace geodkit {

/// Weights that make g geodetic and antipodal at once. Vertices are added
/// in BFS order from 0; with S the total weight so far, a new vertex gets
/// S+1 on the edge to its BFS parent and 2S+2 on every other edge back to
/// already added vertices. Throws InputError on disconnected input.
Graph assign_weights(const Graph& g);

/// Weighted geodetic supergraph of h that contains h as an induced
/// subgraph and only adds edges of weight 1 or 2. Vertices n.. are the
/// added apexes in creation order.
///
/// Requires h connected and no pair at distance exactly 2 joined by two
/// geodesics (InputError naming the pair otherwise).
Graph embed_weighted_geodetic(const Graph& h);

}  // namespace geodkit
