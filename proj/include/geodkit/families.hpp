#pragma once

#include <cstdint>
#include <random>

#include "geodkit/graph.hpp"

namespace geodkit {

/// Seeded generator used by every randomized corpus.
using Rng = std::mt19937_64;
inline constexpr std::uint64_t kDefaultSeed = 20240601;

Graph complete_graph(int n);
/// C_n, n >= 3: edges i -- i+1 mod n.
Graph cycle_graph(int n);
/// P_n on n vertices: edges i -- i+1.
Graph path_graph(int n);
/// K_{1,m}: center 0, leaves 1..m.
Graph star_graph(int m);
/// Hub 0 joined to the rim cycle 1..rim.
Graph wheel_graph(int rim);
/// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
Graph petersen_graph();

/// Uniform random recursive tree on n vertices, then randomly relabelled.
Graph random_tree(int n, Rng& rng);
/// Random spanning tree plus every other pair independently with
/// probability p; always connected.
Graph random_connected_graph(int n, double p, Rng& rng);
/// Cactus whose blocks are bridges and odd cycles (lengths 3, 5, 7), grown
/// until it has at least `min_order` vertices.
Graph random_odd_cactus(int min_order, Rng& rng);

}  // namespace geodkit
