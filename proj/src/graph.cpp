#include "geodkit/graph.hpp"

#include <algorithm>
#include <tuple>

namespace geodkit {

Graph::Graph(int n) {
  if (n < 0) {
    throw InputError("vertex count must be non-negative");
  }
  neighbors_.resize(static_cast<std::size_t>(n));
  incident_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_pairs(int n, std::span<const std::pair<Vertex, Vertex>> pairs) {
  Graph g(n);
  for (const auto& [u, v] : pairs) {
    g.add_edge(u, v);
  }
  return g;
}

int Graph::add_edge(Vertex u, Vertex v, BigInt weight) {
  if (!valid_vertex(u) || !valid_vertex(v)) {
    throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint outside 0.." +
                     std::to_string(order() - 1));
  }
  if (u == v) {
    throw InputError("self-loop at vertex " + std::to_string(u));
  }
  if (weight < 1) {
    throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has non-positive weight");
  }
  if (has_edge(u, v)) {
    throw InputError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  const int id = size();
  if (weight != 1) {
    ++non_unit_;
  }
  edges_.push_back(Edge{u, v, std::move(weight)});
  auto insert = [&](Vertex a, Vertex b) {
    auto& nb = neighbors_[static_cast<std::size_t>(a)];
    auto& inc = incident_[static_cast<std::size_t>(a)];
    const auto pos = std::lower_bound(nb.begin(), nb.end(), b) - nb.begin();
    nb.insert(nb.begin() + pos, b);
    inc.insert(inc.begin() + pos, id);
  };
  insert(u, v);
  insert(v, u);
  return id;
}

int Graph::edge_id(Vertex u, Vertex v) const {
  if (!valid_vertex(u) || !valid_vertex(v)) {
    return -1;
  }
  // Search the shorter list.
  if (degree(u) > degree(v)) {
    std::swap(u, v);
  }
  const auto& nb = neighbors_[static_cast<std::size_t>(u)];
  const auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) {
    return -1;
  }
  return incident_[static_cast<std::size_t>(u)][static_cast<std::size_t>(it - nb.begin())];
}

const BigInt& Graph::weight(Vertex u, Vertex v) const {
  const int id = edge_id(u, v);
  if (id < 0) {
    throw std::out_of_range("no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  return weight(id);
}

std::vector<Edge> Graph::sorted_edges() const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) {
    out.push_back(Edge{std::min(e.u, e.v), std::max(e.u, e.v), e.weight});
  }
  std::sort(out.begin(), out.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  return out;
}

Graph Graph::unweighted() const {
  Graph g(order());
  for (const auto& e : edges_) {
    g.add_edge(e.u, e.v);
  }
  return g;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<int> index(static_cast<std::size_t>(order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    index[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
  }
  Graph g(static_cast<int>(vertices.size()));
  for (const auto& e : sorted_edges()) {
    const int a = index[static_cast<std::size_t>(e.u)];
    const int b = index[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) {
      g.add_edge(a, b, e.weight);
    }
  }
  return g;
}

Graph Graph::permuted(std::span<const Vertex> perm) const {
  Graph g(order());
  for (const auto& e : edges_) {
    g.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)], e.weight);
  }
  return g;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) {
    return false;
  }
  for (const auto& e : a.edges_) {
    const int id = b.edge_id(e.u, e.v);
    if (id < 0 || b.weight(id) != e.weight) {
      return false;
    }
  }
  return true;
}

}  // namespace geodkit
