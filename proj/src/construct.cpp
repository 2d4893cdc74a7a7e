#include "geodkit/construct.hpp"

#include <algorithm>

#include "geodkit/paths.hpp"
#include "geodkit/projective.hpp"

namespace geodkit {

namespace {

std::vector<Vertex> levi_cycle(const Graph& levi, int q, std::uint64_t budget) {
  auto r = find_hamiltonian_cycle(levi, budget);
  if (r.status != HamiltonianStatus::found) {
    throw InputError("no Hamiltonian cycle of Levi(PG(2," + std::to_string(q) + ")) found within budget " +
                     std::to_string(budget) + "; raise --budget");
  }
  return std::move(r.cycle);
}

void add_clique(Graph& g, const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!g.has_edge(vs[i], vs[j])) {
        g.add_edge(vs[i], vs[j]);
      }
    }
  }
}

}  // namespace

Construction build_levi(int q, std::uint64_t budget) {
  const auto plane = projective_plane(q);
  Construction c;
  c.graph = levi_graph(plane);
  c.hamiltonian_cycle = levi_cycle(c.graph, q, budget);
  c.name = "levi";
  c.q = q;
  return c;
}

Construction build_diameter4(int q, std::uint64_t budget) {
  const auto plane = projective_plane(q);
  const Graph levi = levi_graph(plane);
  const auto cycle = levi_cycle(levi, q, budget);
  const int n = plane.size();
  const int k = q + 1;
  const auto clique_vertex = [&](int line, int i) { return n + line * k + i; };
  const auto slot = [&](int line, Vertex point) {
    const auto& pts = plane.points_on_line[static_cast<std::size_t>(line)];
    return static_cast<int>(std::lower_bound(pts.begin(), pts.end(), point) - pts.begin());
  };

  Graph g(n + n * k);
  for (int l = 0; l < n; ++l) {
    const auto& pts = plane.points_on_line[static_cast<std::size_t>(l)];
    std::vector<Vertex> clique;
    for (int i = 0; i < k; ++i) {
      g.add_edge(pts[static_cast<std::size_t>(i)], clique_vertex(l, i));
      clique.push_back(clique_vertex(l, i));
    }
    add_clique(g, clique);
  }

  std::vector<Vertex> lifted;
  const std::size_t len = cycle.size();
  for (std::size_t i = 0; i < len; ++i) {
    const Vertex v = cycle[i];
    if (v < n) {
      lifted.push_back(v);
      continue;
    }
    const int line = v - n;
    const int in = slot(line, cycle[(i + len - 1) % len]);
    const int out = slot(line, cycle[(i + 1) % len]);
    lifted.push_back(clique_vertex(line, in));
    for (int j = 0; j < k; ++j) {
      if (j != in && j != out) {
        lifted.push_back(clique_vertex(line, j));
      }
    }
    lifted.push_back(clique_vertex(line, out));
  }

  Construction c;
  c.graph = std::move(g);
  c.hamiltonian_cycle = std::move(lifted);
  c.name = "diam4";
  c.q = q;
  return c;
}

Construction build_diameter2(int q, std::uint64_t budget) {
  const auto plane = projective_plane(q);
  const Graph levi = levi_graph(plane);
  const auto cycle = levi_cycle(levi, q, budget);
  const int n = plane.size();
  const Vertex p = cycle[0];
  const Vertex merged = cycle[1];
  const int line = merged - n;
  const auto id = [&](Vertex v) { return v == merged ? p : (v > merged ? v - 1 : v); };

  Graph g(2 * n - 1);
  for (const auto& e : levi.sorted_edges()) {
    const Vertex a = id(e.u);
    const Vertex b = id(e.v);
    if (a != b && !g.has_edge(a, b)) {
      g.add_edge(a, b);
    }
  }

  std::vector<Vertex> on_line;
  for (int x : plane.points_on_line[static_cast<std::size_t>(line)]) {
    if (x != p) {
      on_line.push_back(id(x));
    }
  }
  add_clique(g, on_line);
  std::vector<Vertex> through_p;
  for (int l : plane.lines_through_point[static_cast<std::size_t>(p)]) {
    if (l == line) {
      continue;
    }
    through_p.push_back(id(n + l));
    std::vector<Vertex> group;
    for (int x : plane.points_on_line[static_cast<std::size_t>(l)]) {
      if (x != p) {
        group.push_back(id(x));
      }
    }
    add_clique(g, group);
  }
  add_clique(g, through_p);

  std::vector<Vertex> lifted{id(p)};
  for (std::size_t i = 2; i < cycle.size(); ++i) {
    lifted.push_back(id(cycle[i]));
  }

  Construction c;
  c.graph = std::move(g);
  c.hamiltonian_cycle = std::move(lifted);
  c.name = "diam2";
  c.q = q;
  return c;
}

Graph subdivide(const Graph& g, int k) {
  if (k < 2 || k % 2 != 0) {
    throw InputError("subdivide: k must be a positive even integer, got " + std::to_string(k));
  }
  if (g.is_weighted()) {
    throw InputError("subdivide: weighted input");
  }
  const auto edges = g.sorted_edges();
  Graph out(g.order() + k * static_cast<int>(edges.size()));
  Vertex next = g.order();
  for (const auto& e : edges) {
    Vertex prev = e.u;
    for (int i = 0; i < k; ++i) {
      out.add_edge(prev, next);
      prev = next++;
    }
    out.add_edge(prev, e.v);
  }
  return out;
}

Graph extend_to_antipodal(const Graph& g) {
  if (g.is_weighted()) {
    throw InputError("extend_to_antipodal: weighted input");
  }
  require_connected(g, "extend_to_antipodal");
  const int n = g.order();
  const auto ecc = eccentricities(g);
  const BigInt d_big = *std::max_element(ecc.begin(), ecc.end());
  const int d = d_big.convert_to<int>();

  Vertex junction = 0;
  int a = d + 1;
  if (n == 1) {
    a = 0;
  } else {
    for (Vertex v = 0; v < n; ++v) {
      if (ecc[static_cast<std::size_t>(v)] < d_big) {
        junction = v;
        a = d;
        break;
      }
    }
  }
  const int b = a + 1;

  Graph out(n + a + b);
  for (const auto& e : g.sorted_edges()) {
    out.add_edge(e.u, e.v);
  }
  Vertex prev = junction;
  for (int i = 0; i < a; ++i) {
    out.add_edge(prev, n + i);
    prev = n + i;
  }
  prev = junction;
  for (int i = 0; i < b; ++i) {
    out.add_edge(prev, n + a + i);
    prev = n + a + i;
  }
  return out;
}

}  // namespace geodkit
