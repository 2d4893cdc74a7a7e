#include "geodkit/paths.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace geodkit {

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> queue;
  queue.reserve(static_cast<std::size_t>(g.order()));
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex v : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::vector<std::optional<BigInt>> weighted_distances(const Graph& g, Vertex source) {
  using Entry = std::pair<BigInt, Vertex>;
  std::vector<std::optional<BigInt>> dist(static_cast<std::size_t>(g.order()));
  std::vector<char> settled(static_cast<std::size_t>(g.order()), 0);
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  dist[static_cast<std::size_t>(source)] = BigInt(0);
  heap.emplace(BigInt(0), source);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (settled[static_cast<std::size_t>(u)]) {
      continue;
    }
    settled[static_cast<std::size_t>(u)] = 1;
    const auto nbrs = g.neighbors(u);
    const auto ids = g.incident(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const Vertex v = nbrs[i];
      if (settled[static_cast<std::size_t>(v)]) {
        continue;
      }
      BigInt candidate = d + g.weight(ids[i]);
      auto& slot = dist[static_cast<std::size_t>(v)];
      if (!slot || candidate < *slot) {
        slot = candidate;
        heap.emplace(std::move(candidate), v);
      }
    }
  }
  return dist;
}

DistanceRow shortest_path_counts(const Graph& g, Vertex source) {
  const auto n = static_cast<std::size_t>(g.order());
  DistanceRow row;
  row.source = source;
  row.dist.assign(n, std::nullopt);
  row.count.assign(n, BigInt(0));

  if (!g.is_weighted()) {
    const auto hops = bfs_distances(g, source);
    std::vector<Vertex> order;
    order.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
      if (hops[v] >= 0) {
        row.dist[v] = BigInt(hops[v]);
        order.push_back(static_cast<Vertex>(v));
      }
    }
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
      return hops[static_cast<std::size_t>(a)] < hops[static_cast<std::size_t>(b)];
    });
    row.count[static_cast<std::size_t>(source)] = 1;
    for (Vertex v : order) {
      if (v == source) {
        continue;
      }
      BigInt total = 0;
      for (Vertex u : g.neighbors(v)) {
        if (hops[static_cast<std::size_t>(u)] == hops[static_cast<std::size_t>(v)] - 1) {
          total += row.count[static_cast<std::size_t>(u)];
        }
      }
      row.count[static_cast<std::size_t>(v)] = std::move(total);
    }
    return row;
  }

  row.dist = weighted_distances(g, source);
  std::vector<Vertex> order;
  order.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (row.dist[v]) {
      order.push_back(static_cast<Vertex>(v));
    }
  }
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return *row.dist[static_cast<std::size_t>(a)] < *row.dist[static_cast<std::size_t>(b)];
  });
  row.count[static_cast<std::size_t>(source)] = 1;
  for (Vertex v : order) {
    if (v == source) {
      continue;
    }
    const BigInt& dv = *row.dist[static_cast<std::size_t>(v)];
    BigInt total = 0;
    const auto nbrs = g.neighbors(v);
    const auto ids = g.incident(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const auto& du = row.dist[static_cast<std::size_t>(nbrs[i])];
      if (du && *du + g.weight(ids[i]) == dv) {
        total += row.count[static_cast<std::size_t>(nbrs[i])];
      }
    }
    row.count[static_cast<std::size_t>(v)] = std::move(total);
  }
  return row;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) {
    return false;
  }
  const auto dist = bfs_distances(g, 0);
  return std::all_of(dist.begin(), dist.end(), [](int d) { return d >= 0; });
}

void require_connected(const Graph& g, const char* operation) {
  if (!is_connected(g)) {
    throw InputError(std::string(operation) + ": input graph is disconnected");
  }
}

bool is_tree(const Graph& g) { return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g); }

std::vector<BigInt> eccentricities(const Graph& g) {
  require_connected(g, "eccentricities");
  std::vector<BigInt> ecc(static_cast<std::size_t>(g.order()));
  for (Vertex s = 0; s < g.order(); ++s) {
    BigInt best = 0;
    if (g.is_weighted()) {
      for (const auto& d : weighted_distances(g, s)) {
        best = std::max(best, *d);
      }
    } else {
      const auto hops = bfs_distances(g, s);
      best = *std::max_element(hops.begin(), hops.end());
    }
    ecc[static_cast<std::size_t>(s)] = std::move(best);
  }
  return ecc;
}

BigInt diameter(const Graph& g) {
  const auto ecc = eccentricities(g);
  return *std::max_element(ecc.begin(), ecc.end());
}

}  // namespace geodkit
