#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace geodkit {

/// Exact integer used for edge weights, path lengths and geodesic counts.
using BigInt = boost::multiprecision::cpp_int;

using Vertex = int;

/// Base class for every rejected input: malformed text, violated
/// preconditions (disconnected graph, weighted input to an unweighted
/// routine, ...). The CLI maps it to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  Vertex u;
  Vertex v;
  BigInt weight;
};

/// Simple undirected graph on vertices 0..n-1 with positive integer edge
/// weights (all 1 for an unweighted graph).
///
/// Neighbour lists are kept sorted by vertex id so every traversal visits
/// vertices in ascending order; all tie-breaking in the library relies on it.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Unit-weight graph from an edge list.
  static Graph from_pairs(int n, std::span<const std::pair<Vertex, Vertex>> pairs);

  /// Throws InputError on a self-loop, a duplicate edge, an out-of-range
  /// endpoint or a weight below 1. Returns the new edge id.
  int add_edge(Vertex u, Vertex v, BigInt weight = 1);

  int order() const { return static_cast<int>(neighbors_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }

  std::span<const Vertex> neighbors(Vertex v) const { return neighbors_[static_cast<std::size_t>(v)]; }
  /// Edge ids parallel to neighbors(v).
  std::span<const int> incident(Vertex v) const { return incident_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors_[static_cast<std::size_t>(v)].size()); }

  /// Edge id of {u,v}, or -1.
  int edge_id(Vertex u, Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const { return edge_id(u, v) >= 0; }

  const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }
  const BigInt& weight(int id) const { return edges_[static_cast<std::size_t>(id)].weight; }
  /// Throws std::out_of_range if {u,v} is not an edge.
  const BigInt& weight(Vertex u, Vertex v) const;

  /// Edges in insertion order.
  const std::vector<Edge>& edges() const { return edges_; }
  /// Edges with u < v, sorted by (u, v).
  std::vector<Edge> sorted_edges() const;

  /// True iff some edge weight differs from 1.
  bool is_weighted() const { return non_unit_ > 0; }
  bool valid_vertex(Vertex v) const { return v >= 0 && v < order(); }

  /// Same vertices and edges, every weight reset to 1.
  Graph unweighted() const;
  /// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
  Graph induced(std::span<const Vertex> vertices) const;
  /// Relabel: vertex v becomes perm[v].
  Graph permuted(std::span<const Vertex> perm) const;

  /// Equal vertex count, edge set and weights.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<std::vector<int>> incident_;
  std::vector<Edge> edges_;
  int non_unit_ = 0;
};

}  // namespace geodkit
