#include "geodkit/recognition.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "geodkit/paths.hpp"

namespace geodkit {

bool BearingTree::is_tree_edge(Vertex u, Vertex v) const {
  return parent[static_cast<std::size_t>(u)] == v || parent[static_cast<std::size_t>(v)] == u;
}

std::vector<std::vector<Vertex>> BearingTree::children() const {
  std::vector<std::vector<Vertex>> out(parent.size());
  for (std::size_t v = 0; v < parent.size(); ++v) {
    if (parent[v]) {
      out[static_cast<std::size_t>(*parent[v])].push_back(static_cast<Vertex>(v));
    }
  }
  return out;
}

namespace {

// Graphs below this order are swept on the calling thread; the per-root
// work is too small to pay for a parallel region.
constexpr int kParallelMinOrder = 48;

struct RootPass {
  std::optional<GeodesicWitness> geodesic_failure;
  std::optional<AntipodeWitness> antipode_failure;
  std::optional<BearingTree> tree;
};

// Shared tail of both passes: `is_pred(u, edge, v)` tells whether u is a
// shortest-path predecessor of v; `tiers` are exact distances from root.
template <class Tier, class IsPred>
RootPass finish_pass(const Graph& g, Vertex root, const std::vector<Tier>& tiers, bool keep_tree,
                     IsPred is_pred) {
  const auto n = static_cast<std::size_t>(g.order());
  RootPass out;
  std::vector<std::optional<Vertex>> parent(n);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v == root) {
      continue;
    }
    const auto nbrs = g.neighbors(v);
    const auto ids = g.incident(v);
    int found = 0;
    std::array<Vertex, 2> preds{};
    for (std::size_t i = 0; i < nbrs.size() && found < 2; ++i) {
      if (is_pred(nbrs[i], ids[i], v)) {
        preds[static_cast<std::size_t>(found++)] = nbrs[i];
      }
    }
    parent[static_cast<std::size_t>(v)] = preds[0];
    if (found == 2 && !out.geodesic_failure) {
      out.geodesic_failure = GeodesicWitness{root, v, preds};
    }
  }

  const Tier far = *std::max_element(tiers.begin(), tiers.end());
  std::vector<Vertex> farthest;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (tiers[static_cast<std::size_t>(v)] == far) {
      farthest.push_back(v);
    }
  }
  if (farthest.size() != 1) {
    out.antipode_failure = AntipodeWitness{root, std::move(farthest)};
  }

  if (keep_tree) {
    BearingTree t;
    t.root = root;
    t.parent = std::move(parent);
    t.tier.reserve(n);
    for (const auto& d : tiers) {
      t.tier.emplace_back(d);
    }
    out.tree = std::move(t);
  }
  return out;
}

RootPass unit_pass(const Graph& g, Vertex root, bool keep_tree) {
  const auto hops = bfs_distances(g, root);
  return finish_pass(g, root, hops, keep_tree, [&](Vertex u, int, Vertex v) {
    return hops[static_cast<std::size_t>(u)] + 1 == hops[static_cast<std::size_t>(v)];
  });
}

RootPass weighted_pass(const Graph& g, Vertex root, bool keep_tree) {
  const auto dist = weighted_distances(g, root);
  std::vector<BigInt> tiers;
  tiers.reserve(dist.size());
  for (const auto& d : dist) {
    tiers.push_back(*d);
  }
  return finish_pass(g, root, tiers, keep_tree, [&](Vertex u, int edge, Vertex v) {
    return tiers[static_cast<std::size_t>(u)] + g.weight(edge) == tiers[static_cast<std::size_t>(v)];
  });
}

template <class Pass>
RecognitionReport sweep(const Graph& g, bool keep_trees, bool parallel, Pass pass) {
  const int n = g.order();
  std::vector<RootPass> results(static_cast<std::size_t>(n));
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 1) if (n >= kParallelMinOrder)
    for (int r = 0; r < n; ++r) {
      results[static_cast<std::size_t>(r)] = pass(g, r, keep_trees);
    }
  } else {
    for (int r = 0; r < n; ++r) {
      results[static_cast<std::size_t>(r)] = pass(g, r, keep_trees);
    }
  }

  RecognitionReport report;
  for (auto& r : results) {
    if (report.geodetic.holds && r.geodesic_failure) {
      report.geodetic = Verdict::fail(std::move(*r.geodesic_failure));
    }
    if (report.antipodal.holds && r.antipode_failure) {
      report.antipodal = Verdict::fail(std::move(*r.antipode_failure));
    }
    if (keep_trees) {
      report.trees.push_back(std::move(*r.tree));
    }
  }
  return report;
}

void require_unit_weights(const Graph& g, const char* operation) {
  if (g.is_weighted()) {
    throw InputError(std::string(operation) + ": weighted input; use the weighted checker");
  }
}

void require_root(const Graph& g, Vertex root) {
  if (!g.valid_vertex(root)) {
    throw InputError("root " + std::to_string(root) + " is not a vertex");
  }
}

template <class IsPred>
std::vector<std::optional<Vertex>> choose_parents(const Graph& g, Vertex root, TieBreak tie, IsPred is_pred) {
  std::vector<std::optional<Vertex>> parent(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v == root) {
      continue;
    }
    const auto nbrs = g.neighbors(v);
    const auto ids = g.incident(v);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      const std::size_t i = tie == TieBreak::ascending ? k : nbrs.size() - 1 - k;
      if (is_pred(nbrs[i], ids[i], v)) {
        parent[static_cast<std::size_t>(v)] = nbrs[i];
        break;
      }
    }
  }
  return parent;
}

}  // namespace

BearingTree build_bearing_tree(const Graph& g, Vertex root, TieBreak tie) {
  require_unit_weights(g, "build_bearing_tree");
  require_root(g, root);
  require_connected(g, "build_bearing_tree");
  const auto hops = bfs_distances(g, root);
  BearingTree t;
  t.root = root;
  t.parent = choose_parents(g, root, tie, [&](Vertex u, int, Vertex v) {
    return hops[static_cast<std::size_t>(u)] + 1 == hops[static_cast<std::size_t>(v)];
  });
  for (int h : hops) {
    t.tier.emplace_back(h);
  }
  return t;
}

BearingTree build_weighted_bearing_tree(const Graph& g, Vertex root, TieBreak tie) {
  require_root(g, root);
  require_connected(g, "build_weighted_bearing_tree");
  const auto dist = weighted_distances(g, root);
  BearingTree t;
  t.root = root;
  for (const auto& d : dist) {
    t.tier.push_back(*d);
  }
  t.parent = choose_parents(g, root, tie, [&](Vertex u, int edge, Vertex v) {
    return t.tier[static_cast<std::size_t>(u)] + g.weight(edge) == t.tier[static_cast<std::size_t>(v)];
  });
  return t;
}

EdgeClassification classify_non_tree_edges(const Graph& g, const BearingTree& t) {
  EdgeClassification out;
  for (const auto& e : g.sorted_edges()) {
    if (t.is_tree_edge(e.u, e.v)) {
      continue;
    }
    const auto& tu = t.tier[static_cast<std::size_t>(e.u)];
    if (tu == t.tier[static_cast<std::size_t>(e.v)]) {
      out.balks.push_back(Balk{e.u, e.v, tu});
    } else {
      out.violations.emplace_back(e.u, e.v);
    }
  }
  return out;
}

std::vector<Stem> extract_stems(const BearingTree& t) {
  const auto kids = t.children();
  std::vector<Stem> stems;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (v == t.root || !kids[static_cast<std::size_t>(v)].empty()) {
      continue;
    }
    Stem s;
    for (std::optional<Vertex> x = v; x; x = t.parent[static_cast<std::size_t>(*x)]) {
      s.vertices.push_back(*x);
    }
    std::reverse(s.vertices.begin(), s.vertices.end());
    stems.push_back(std::move(s));
  }
  return stems;
}

bool stems_meet_only_at_root(const BearingTree& t) {
  const auto kids = t.children();
  for (Vertex v = 0; v < t.order(); ++v) {
    if (v != t.root && kids[static_cast<std::size_t>(v)].size() > 1) {
      return false;
    }
  }
  return true;
}

RecognitionReport recognize(const Graph& g, bool keep_trees) {
  require_unit_weights(g, "recognize");
  require_connected(g, "recognize");
  return sweep(g, keep_trees, true, unit_pass);
}

RecognitionReport recognize_serial(const Graph& g, bool keep_trees) {
  require_unit_weights(g, "recognize");
  require_connected(g, "recognize");
  return sweep(g, keep_trees, false, unit_pass);
}

Verdict check_geodetic_fast(const Graph& g) { return recognize(g).geodetic; }

Verdict check_antipodal_fast(const Graph& g) { return recognize(g).antipodal; }

RecognitionReport check_weighted(const Graph& g, bool keep_trees) {
  require_connected(g, "check_weighted");
  return sweep(g, keep_trees, true, weighted_pass);
}

RecognitionReport check_weighted_serial(const Graph& g, bool keep_trees) {
  require_connected(g, "check_weighted");
  return sweep(g, keep_trees, false, weighted_pass);
}

}  // namespace geodkit
