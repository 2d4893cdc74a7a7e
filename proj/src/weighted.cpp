#include "geodkit/weighted.hpp"

#include <queue>
#include <stdexcept>
#include <string>

#include "geodkit/paths.hpp"

namespace geodkit {

Graph assign_weights(const Graph& g) {
  require_connected(g, "assign_weights");
  const int n = g.order();
  std::vector<Vertex> order;
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::queue<Vertex> queue;
  queue.push(0);
  seen[0] = 1;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop();
    order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        parent[static_cast<std::size_t>(w)] = v;
        queue.push(w);
      }
    }
  }

  Graph out(n);
  std::vector<char> added(static_cast<std::size_t>(n), 0);
  BigInt total = 0;
  for (Vertex v : order) {
    const BigInt s = total;
    for (Vertex w : g.neighbors(v)) {
      if (!added[static_cast<std::size_t>(w)]) {
        continue;
      }
      BigInt w8 = w == parent[static_cast<std::size_t>(v)] ? BigInt(s + 1) : BigInt(2 * s + 2);
      total += w8;
      out.add_edge(v, w, std::move(w8));
    }
    added[static_cast<std::size_t>(v)] = 1;
  }
  return out;
}

namespace {

std::vector<BigInt> distances_from(const Graph& g, Vertex s) {
  std::vector<BigInt> out;
  for (auto& d : weighted_distances(g, s)) {
    out.push_back(std::move(*d));
  }
  return out;
}

}  // namespace

Graph embed_weighted_geodetic(const Graph& h) {
  require_connected(h, "embed_weighted_geodetic");
  const int n = h.order();
  for (Vertex s = 0; s < n; ++s) {
    const auto row = shortest_path_counts(h, s);
    for (Vertex t = s + 1; t < n; ++t) {
      if (*row.dist[static_cast<std::size_t>(t)] == 2 && row.count[static_cast<std::size_t>(t)] >= 2) {
        throw InputError("embed_weighted_geodetic: vertices " + std::to_string(s) + " and " + std::to_string(t) +
                         " are joined by several geodesics of length 2");
      }
    }
  }

  // Apex vertices are appended, so the graph is rebuilt with spare room.
  std::vector<Edge> edges = h.sorted_edges();
  int order = n;
  const auto rebuild = [&] {
    Graph g(order);
    for (const auto& e : edges) {
      g.add_edge(e.u, e.v, e.weight);
    }
    return g;
  };

  // Pairs of original vertices farther apart than 2 get a common apex.
  for (Vertex v = 0; v < n; ++v) {
    const auto dist = distances_from(rebuild(), v);
    for (Vertex u = 0; u < n; ++u) {
      if (dist[static_cast<std::size_t>(u)] > 2) {
        const Vertex t = order++;
        edges.push_back({v, t, 1});
        edges.push_back({u, t, 1});
      }
    }
  }

  // Every apex is pulled within distance 3 of everything.
  Graph g = rebuild();
  for (Vertex v = n; v < order; ++v) {
    while (true) {
      const auto dist = distances_from(g, v);
      Vertex far = -1;
      for (Vertex u = 0; u < order; ++u) {
        if (dist[static_cast<std::size_t>(u)] > 3) {
          far = u;
          break;
        }
      }
      if (far < 0) {
        break;
      }
      g.add_edge(v, far, 1);
    }
  }

  // Remaining ties are at distance 3 and are cut by weight-2 shortcuts.
  while (true) {
    bool changed = false;
    for (Vertex s = 0; s < order && !changed; ++s) {
      const auto row = shortest_path_counts(g, s);
      for (Vertex t = s + 1; t < order; ++t) {
        if (row.count[static_cast<std::size_t>(t)] >= 2) {
          if (*row.dist[static_cast<std::size_t>(t)] != 3) {
            throw std::logic_error("embed_weighted_geodetic: tie at distance " +
                                   row.dist[static_cast<std::size_t>(t)]->str() + " between " + std::to_string(s) +
                                   " and " + std::to_string(t));
          }
          g.add_edge(s, t, 2);
          changed = true;
          break;
        }
      }
    }
    if (!changed) {
      break;
    }
  }
  return g;
}

}  // namespace geodkit
