#include "geodkit/families.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace geodkit {

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      g.add_edge(u, v);
    }
  }
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) {
    throw InputError("a cycle needs at least 3 vertices");
  }
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    g.add_edge(i, (i + 1) % n);
  }
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) {
    g.add_edge(i, i + 1);
  }
  return g;
}

Graph star_graph(int m) {
  Graph g(m + 1);
  for (int i = 1; i <= m; ++i) {
    g.add_edge(0, i);
  }
  return g;
}

Graph wheel_graph(int rim) {
  Graph g(rim + 1);
  for (int i = 1; i <= rim; ++i) {
    g.add_edge(0, i);
    g.add_edge(i, i % rim + 1);
  }
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

namespace {

std::vector<Vertex> random_permutation(int n, Rng& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Graph random_tree(int n, Rng& rng) {
  const auto perm = random_permutation(n, rng);
  Graph g(n);
  for (int v = 1; v < n; ++v) {
    const int parent = uniform(rng, 0, v - 1);
    g.add_edge(perm[static_cast<std::size_t>(v)], perm[static_cast<std::size_t>(parent)]);
  }
  return g;
}

Graph random_connected_graph(int n, double p, Rng& rng) {
  Graph g = random_tree(n, rng);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v) && coin(rng)) {
        g.add_edge(u, v);
      }
    }
  }
  return g;
}

Graph random_odd_cactus(int min_order, Rng& rng) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  int n = 1;
  while (n < min_order) {
    const Vertex anchor = uniform(rng, 0, n - 1);
    const int pick = uniform(rng, 0, 3);
    if (pick == 0) {
      edges.emplace_back(anchor, n++);
      continue;
    }
    const int length = 2 * pick + 1;  // 3, 5 or 7
    Vertex prev = anchor;
    for (int i = 1; i < length; ++i) {
      edges.emplace_back(prev, n);
      prev = n++;
    }
    edges.emplace_back(prev, anchor);
  }
  return Graph::from_pairs(n, edges);
}

}  // namespace geodkit
