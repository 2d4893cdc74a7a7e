#pragma once

#include <utility>
#include <vector>

#include "geodkit/graph.hpp"

// Graphs redrawn from the figures, vertex labels shifted to start at 0.
namespace fixtures {

using geodkit::Graph;
using Pairs = std::vector<std::pair<int, int>>;

inline Graph make(int n, const Pairs& p) { return Graph::from_pairs(n, p); }

// Hexagon 0..5 with 1-3, 2-6, 6-5.
inline Graph bearing_tree_three_balks() {
  return make(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {1, 3}, {2, 6}, {6, 5}});
}

// Root 0; stems of lengths 1, 2, 2, 3, 3.
inline Graph five_stem_tree() {
  return make(9, {{0, 1}, {0, 2}, {0, 3}, {2, 4}, {3, 5}, {3, 6}, {6, 7}, {6, 8}});
}

// Longest path 4-2-0-3-6-7 has 5 edges.
inline Graph antipodal_tree() { return make(8, {{0, 1}, {0, 2}, {0, 3}, {2, 4}, {3, 5}, {3, 6}, {6, 7}}); }

// C5 with triangles and bridges hanging off it; 8 blocks.
inline Graph odd_cactus() {
  return make(16, {{0, 1},  {1, 2},  {2, 3},   {3, 4},   {4, 0},   {1, 5},   {1, 6},
                   {6, 5},  {7, 5},  {5, 8},   {5, 9},   {8, 7},   {4, 10},  {4, 11},
                   {10, 11}, {10, 12}, {10, 13}, {11, 15}, {11, 14}, {14, 15}});
}

// Two transversal blocks, one with three stems meeting a fourth at tier 4
// and a tier-3 triangle, one with two stems meeting a third at tier 3 and
// a tier-2 balk; plus three bridges and a pendant at the root.
inline Graph six_block_geodetic() {
  Pairs p;
  const auto chain = [&](int first, int len) {
    p.emplace_back(0, first);
    for (int i = 0; i + 1 < len; ++i) {
      p.emplace_back(first + i, first + i + 1);
    }
  };
  chain(1, 5);   // a1..a5
  chain(6, 4);   // b1..b4
  chain(10, 4);  // c1..c4
  chain(14, 4);  // d1..d4
  p.insert(p.end(), {{8, 12}, {8, 16}, {12, 16}, {4, 9}, {4, 13}, {4, 17}});
  chain(18, 5);  // x1..x5
  chain(23, 3);  // y1..y3
  chain(26, 3);  // z1..z3
  p.insert(p.end(), {{24, 27}, {20, 25}, {20, 28}});
  p.emplace_back(0, 29);
  return make(30, p);
}

// C8 with a chord, carrying the doubling weights from the figure.
inline Graph weighted_c8_chord() {
  Graph g(8);
  g.add_edge(0, 1, 1);
  g.add_edge(1, 2, 2);
  g.add_edge(2, 3, 4);
  g.add_edge(3, 4, 8);
  g.add_edge(4, 5, 16);
  g.add_edge(5, 6, 32);
  g.add_edge(6, 7, 64);
  g.add_edge(7, 0, 128);
  g.add_edge(7, 4, 128);
  return g;
}

inline Graph c8_chord() { return weighted_c8_chord().unweighted(); }

}  // namespace fixtures
