#pragma once

#include <optional>
#include <vector>

#include "geodkit/graph.hpp"

namespace geodkit {

/// Exact single-source distances and geodesic counts.
/// dist[v] is empty when v is unreachable from source (count[v] is then 0).
struct DistanceRow {
  Vertex source = 0;
  std::vector<std::optional<BigInt>> dist;
  std::vector<BigInt> count;
};

/// BFS layering when every weight is 1, label-setting relaxation otherwise;
/// count[v] is the sum of count[u] over all u with dist[u] + w(u,v) = dist[v].
DistanceRow shortest_path_counts(const Graph& g, Vertex source);

/// Hop distances by plain BFS; -1 for unreachable vertices. Ignores weights.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Exact weighted distances (Dijkstra); empty for unreachable vertices.
std::vector<std::optional<BigInt>> weighted_distances(const Graph& g, Vertex source);

bool is_connected(const Graph& g);
/// Throws InputError("... disconnected ...") unless g is connected.
void require_connected(const Graph& g, const char* operation);

/// Connected, n-1 edges.
bool is_tree(const Graph& g);

/// Weighted eccentricity of every vertex. Requires a connected graph.
std::vector<BigInt> eccentricities(const Graph& g);
/// Largest eccentricity. Requires a connected graph.
BigInt diameter(const Graph& g);

}  // namespace geodkit
