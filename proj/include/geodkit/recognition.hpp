#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "geodkit/graph.hpp"
#include "geodkit/verdict.hpp"

namespace geodkit {

/// Shortest-path tree grown from `root`: tier[v] is the exact distance from
/// the root (hop count, or weight sum for the weighted variant) and
/// parent[v] is a neighbour with tier[parent] + w(parent, v) = tier[v].
struct BearingTree {
  Vertex root = 0;
  std::vector<std::optional<Vertex>> parent;
  std::vector<BigInt> tier;

  int order() const { return static_cast<int>(parent.size()); }
  bool is_tree_edge(Vertex u, Vertex v) const;
  /// Children of every vertex, ascending.
  std::vector<std::vector<Vertex>> children() const;
};

/// Which shortest-path predecessor becomes the parent when several exist.
enum class TieBreak { ascending, descending };

/// BFS bearing tree. Throws InputError on weighted or disconnected input.
BearingTree build_bearing_tree(const Graph& g, Vertex root, TieBreak tie = TieBreak::ascending);
/// Label-setting (Dijkstra) bearing tree with exact integer tiers.
/// Throws InputError on disconnected input.
BearingTree build_weighted_bearing_tree(const Graph& g, Vertex root, TieBreak tie = TieBreak::ascending);

/// Non-tree edge with both ends in the same tier.
struct Balk {
  Vertex u = 0;  // u < v
  Vertex v = 0;
  BigInt tier;
  friend bool operator==(const Balk&, const Balk&) = default;
};

struct EdgeClassification {
  std::vector<Balk> balks;
  /// Non-tree edges whose ends lie in different tiers, as (min, max) pairs.
  std::vector<std::pair<Vertex, Vertex>> violations;
};

/// Splits every non-tree edge of g into balks and cross-tier violations,
/// both in (min, max) edge order.
EdgeClassification classify_non_tree_edges(const Graph& g, const BearingTree& t);

/// Root-to-leaf path of a bearing tree.
struct Stem {
  std::vector<Vertex> vertices;
  int length() const { return static_cast<int>(vertices.size()) - 1; }
  Vertex leaf() const { return vertices.back(); }
};

/// One stem per leaf, ordered by leaf id. A single-vertex tree has none.
std::vector<Stem> extract_stems(const BearingTree& t);
/// True iff no two stems share a vertex other than the root.
bool stems_meet_only_at_root(const BearingTree& t);

/// Both verdicts of one sweep over all roots; optionally keeps the tree of
/// every root (index = root).
struct RecognitionReport {
  Verdict geodetic;
  Verdict antipodal;
  std::vector<BearingTree> trees;
};

/// Unweighted recognition: one BFS per root. Geodetic fails at the first
/// root where some vertex has two neighbours in the previous tier; the
/// witness names the smallest such vertex and its two smallest
/// predecessors. Antipodal fails at the first root whose last tier holds
/// more than one vertex. Per-root passes run on OpenMP threads for larger
/// graphs; the report does not depend on scheduling.
/// Throws InputError on weighted or disconnected input.
RecognitionReport recognize(const Graph& g, bool keep_trees = false);
/// Single-threaded reference for recognize().
RecognitionReport recognize_serial(const Graph& g, bool keep_trees = false);

Verdict check_geodetic_fast(const Graph& g);
Verdict check_antipodal_fast(const Graph& g);

/// Weighted recognition with exact label-setting passes; same verdict and
/// witness rules as recognize(). Accepts unit weights too.
RecognitionReport check_weighted(const Graph& g, bool keep_trees = false);
RecognitionReport check_weighted_serial(const Graph& g, bool keep_trees = false);

}  // namespace geodkit
