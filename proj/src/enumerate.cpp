#include "geodkit/enumerate.hpp"

#include <array>
#include <string>

namespace geodkit {
namespace {

struct PairTable {
  int count = 0;
  std::array<std::pair<int, int>, 21> pairs{};
};

PairTable pair_table(int n) {
  PairTable t;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      t.pairs[static_cast<std::size_t>(t.count++)] = {u, v};
    }
  }
  return t;
}

bool mask_connected(int n, const PairTable& t, std::uint64_t mask) {
  std::array<std::uint32_t, kMaxEnumerationOrder> adj{};
  for (int i = 0; i < t.count; ++i) {
    if (mask >> i & 1U) {
      const auto [u, v] = t.pairs[static_cast<std::size_t>(i)];
      adj[static_cast<std::size_t>(u)] |= 1U << v;
      adj[static_cast<std::size_t>(v)] |= 1U << u;
    }
  }
  std::uint32_t seen = 1;
  std::uint32_t frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (int v = 0; v < n; ++v) {
      if (frontier >> v & 1U) {
        next |= adj[static_cast<std::size_t>(v)];
      }
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1U << n) - 1U;
}

void check_order(int n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw InputError("enumeration order must be between 1 and " + std::to_string(kMaxEnumerationOrder));
  }
}

}  // namespace

Graph graph_from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++bit) {
      if (mask >> bit & 1U) {
        g.add_edge(u, v);
      }
    }
  }
  return g;
}

std::uint64_t enumerate_connected_graphs(int n, const GraphVisitor& visit) {
  check_order(n);
  const auto table = pair_table(n);
  const std::uint64_t limit = std::uint64_t{1} << table.count;
  std::uint64_t emitted = 0;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    if (mask_connected(n, table, mask)) {
      visit(mask, graph_from_mask(n, mask));
      ++emitted;
    }
  }
  return emitted;
}

std::uint64_t enumerate_connected_graphs_parallel(int n, const GraphVisitor& visit) {
  check_order(n);
  const auto table = pair_table(n);
  const auto limit = static_cast<std::int64_t>(std::uint64_t{1} << table.count);
  std::uint64_t emitted = 0;
#pragma omp parallel for schedule(dynamic, 1024) reduction(+ : emitted)
  for (std::int64_t m = 0; m < limit; ++m) {
    const auto mask = static_cast<std::uint64_t>(m);
    if (mask_connected(n, table, mask)) {
      visit(mask, graph_from_mask(n, mask));
      ++emitted;
    }
  }
  return emitted;
}

std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> out;
  enumerate_connected_graphs(n, [&](std::uint64_t, const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace geodkit
