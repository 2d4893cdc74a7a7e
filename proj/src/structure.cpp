#include "geodkit/structure.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>

#include "geodkit/paths.hpp"

namespace geodkit {

BlockDecomposition block_decomposition(const Graph& g) {
  const int n = g.order();
  const auto un = static_cast<std::size_t>(n);
  std::vector<int> disc(un, -1);
  std::vector<int> low(un, 0);
  std::vector<char> is_cut(un, 0);
  std::vector<std::pair<Vertex, Vertex>> edge_stack;
  BlockDecomposition out;
  int clock = 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };

  for (Vertex s = 0; s < n; ++s) {
    if (disc[static_cast<std::size_t>(s)] >= 0) {
      continue;
    }
    if (g.degree(s) == 0) {
      disc[static_cast<std::size_t>(s)] = clock++;
      out.blocks.push_back({s});
      continue;
    }
    int root_children = 0;
    std::vector<Frame> stack{{s, -1, 0}};
    disc[static_cast<std::size_t>(s)] = low[static_cast<std::size_t>(s)] = clock++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        const Vertex w = nbrs[f.next++];
        if (w == f.parent) {
          continue;
        }
        const auto uw = static_cast<std::size_t>(w);
        const auto uv = static_cast<std::size_t>(f.v);
        if (disc[uw] < 0) {
          edge_stack.emplace_back(f.v, w);
          disc[uw] = low[uw] = clock++;
          if (f.v == s) {
            ++root_children;
          }
          stack.push_back({w, f.v, 0});
        } else if (disc[uw] < disc[uv]) {
          edge_stack.emplace_back(f.v, w);
          low[uv] = std::min(low[uv], disc[uw]);
        }
        continue;
      }
      const Vertex child = f.v;
      stack.pop_back();
      if (stack.empty()) {
        break;
      }
      const Vertex u = stack.back().v;
      const auto uu = static_cast<std::size_t>(u);
      const auto uc = static_cast<std::size_t>(child);
      low[uu] = std::min(low[uu], low[uc]);
      if (low[uc] >= disc[uu]) {
        if (u != s) {
          is_cut[uu] = 1;
        }
        std::vector<Vertex> block;
        while (true) {
          const auto [a, b] = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(a);
          block.push_back(b);
          if (a == u && b == child) {
            break;
          }
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        out.blocks.push_back(std::move(block));
      }
    }
    if (root_children > 1) {
      is_cut[static_cast<std::size_t>(s)] = 1;
    }
  }
  std::sort(out.blocks.begin(), out.blocks.end());
  for (Vertex v = 0; v < n; ++v) {
    if (is_cut[static_cast<std::size_t>(v)]) {
      out.cut_vertices.push_back(v);
    }
  }
  return out;
}

Verdict geodetic_via_blocks(const Graph& g) {
  require_connected(g, "geodetic_via_blocks");
  for (const auto& block : block_decomposition(g).blocks) {
    const Graph h = g.induced(block);
    const Verdict v = h.is_weighted() ? check_weighted(h).geodetic : recognize(h).geodetic;
    if (!v.holds) {
      auto w = std::get<GeodesicWitness>(*v.witness);
      const auto map = [&](Vertex x) { return block[static_cast<std::size_t>(x)]; };
      w.source = map(w.source);
      w.target = map(w.target);
      if (w.predecessors) {
        (*w.predecessors)[0] = map((*w.predecessors)[0]);
        (*w.predecessors)[1] = map((*w.predecessors)[1]);
      }
      return Verdict::fail(w);
    }
  }
  return Verdict::pass();
}

const char* to_string(BlockShape s) {
  switch (s) {
    case BlockShape::complete:
      return "complete";
    case BlockShape::odd_cycle:
      return "odd_cycle";
    case BlockShape::other:
      return "other";
  }
  return "?";
}

BlockShape classify_block(const Graph& g, const std::vector<Vertex>& block) {
  const Graph h = g.induced(block);
  const long k = h.order();
  if (h.size() == k * (k - 1) / 2) {
    return BlockShape::complete;
  }
  if (k >= 3 && k % 2 == 1 && h.size() == k && is_connected(h)) {
    bool two_regular = true;
    for (Vertex v = 0; v < h.order(); ++v) {
      two_regular = two_regular && h.degree(v) == 2;
    }
    if (two_regular) {
      return BlockShape::odd_cycle;
    }
  }
  return BlockShape::other;
}

namespace {

std::vector<BlockShape> shapes_of(const Graph& g, const BlockDecomposition& bd) {
  std::vector<BlockShape> shapes;
  shapes.reserve(bd.blocks.size());
  for (const auto& b : bd.blocks) {
    shapes.push_back(classify_block(g, b));
  }
  return shapes;
}

bool is_odd_cycle_graph(const Graph& g) {
  if (g.order() < 3 || g.order() % 2 == 0 || g.size() != g.order() || !is_connected(g)) {
    return false;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) {
      return false;
    }
  }
  return true;
}

}  // namespace

ClassVerdict claw_free_geodetic_characterization(const Graph& g) {
  require_connected(g, "claw_free_geodetic_characterization");
  const auto bd = block_decomposition(g);
  ClassVerdict out;
  out.block_shapes = shapes_of(g, bd);
  if (is_odd_cycle_graph(g)) {
    return out;
  }
  for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
    if (out.block_shapes[i] != BlockShape::complete) {
      out.member = false;
      out.reason = "block is not complete";
      out.witness = bd.blocks[i];
      break;
    }
  }
  if (out.member) {
    std::vector<int> blocks_at(static_cast<std::size_t>(g.order()), 0);
    for (const auto& b : bd.blocks) {
      for (Vertex v : b) {
        ++blocks_at[static_cast<std::size_t>(v)];
      }
    }
    for (Vertex v = 0; v < g.order(); ++v) {
      if (blocks_at[static_cast<std::size_t>(v)] > 2) {
        out.member = false;
        out.reason = "vertex lies in more than two blocks";
        out.witness = {v};
        break;
      }
    }
  }
  if (!out.member) {
    if (auto claw = find_induced_star(g, 3)) {
      out.reason = "induced claw";
      out.witness = std::move(*claw);
    }
  }
  return out;
}

std::optional<std::vector<Vertex>> find_induced_star(const Graph& g, int m) {
  if (m < 2) {
    throw InputError("find_induced_star: m must be at least 2");
  }
  std::vector<Vertex> chosen;
  for (Vertex c = 0; c < g.order(); ++c) {
    const auto nbrs = g.neighbors(c);
    if (static_cast<int>(nbrs.size()) < m) {
      continue;
    }
    chosen.clear();
    // Depth-first over ascending neighbour indices.
    std::vector<std::size_t> idx;
    std::size_t next = 0;
    while (true) {
      if (static_cast<int>(chosen.size()) == m) {
        std::vector<Vertex> out{c};
        out.insert(out.end(), chosen.begin(), chosen.end());
        return out;
      }
      bool advanced = false;
      for (; next < nbrs.size(); ++next) {
        const Vertex cand = nbrs[next];
        const bool independent =
            std::none_of(chosen.begin(), chosen.end(), [&](Vertex x) { return g.has_edge(x, cand); });
        if (independent) {
          chosen.push_back(cand);
          idx.push_back(next);
          next = next + 1;
          advanced = true;
          break;
        }
      }
      if (advanced) {
        continue;
      }
      if (idx.empty()) {
        break;
      }
      next = idx.back() + 1;
      idx.pop_back();
      chosen.pop_back();
    }
  }
  return std::nullopt;
}

ClassVerdict in_floor_geodetic(const Graph& g) {
  require_connected(g, "in_floor_geodetic");
  const auto bd = block_decomposition(g);
  ClassVerdict out;
  out.block_shapes = shapes_of(g, bd);
  for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
    if (out.block_shapes[i] == BlockShape::other) {
      out.member = false;
      out.reason = "block is neither complete nor an odd cycle";
      out.witness = bd.blocks[i];
      break;
    }
  }
  return out;
}

const char* to_string(EvenStructureKind k) {
  return k == EvenStructureKind::even_cycle ? "even_cycle" : "chorded_cycle";
}

namespace {

using Mask = std::uint64_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.order()), 0);
  for (const auto& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)] |= Mask{1} << e.v;
    adj[static_cast<std::size_t>(e.v)] |= Mask{1} << e.u;
  }
  return adj;
}

bool connected_within(const std::vector<Mask>& adj, Mask set) {
  if (set == 0) {
    return true;
  }
  Mask seen = set & (~set + 1);
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) {
      next |= adj[static_cast<std::size_t>(std::countr_zero(f))] & set;
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == set;
}

// Classifies the subgraph induced by `set` (|set| = s, even, >= 4).
std::optional<EvenStructureKind> classify_even_subset(const std::vector<Mask>& adj, Mask set, int s) {
  int edges2 = 0;  // twice the edge count
  int deg3 = 0;
  Vertex a = -1;
  Vertex b = -1;
  for (Mask f = set; f; f &= f - 1) {
    const Vertex v = std::countr_zero(f);
    const int d = std::popcount(adj[static_cast<std::size_t>(v)] & set);
    edges2 += d;
    if (d == 3) {
      ++deg3;
      (a < 0 ? a : b) = v;
    } else if (d != 2) {
      return std::nullopt;
    }
  }
  if (deg3 == 0 && edges2 == 2 * s) {
    if (connected_within(adj, set)) {
      return EvenStructureKind::even_cycle;
    }
    return std::nullopt;
  }
  if (deg3 != 2 || edges2 != 2 * (s + 1) || !(adj[static_cast<std::size_t>(a)] >> b & 1U)) {
    return std::nullopt;
  }
  // Drop the chord ab; the rest must be one cycle on which a and b sit an
  // even number of steps apart.
  std::vector<Mask> cyc(adj);
  cyc[static_cast<std::size_t>(a)] &= ~(Mask{1} << b);
  cyc[static_cast<std::size_t>(b)] &= ~(Mask{1} << a);
  if (!connected_within(cyc, set)) {
    return std::nullopt;
  }
  int steps = 0;
  Vertex prev = a;
  Vertex cur = std::countr_zero(cyc[static_cast<std::size_t>(a)] & set);
  ++steps;
  while (cur != b) {
    const Mask nxt = cyc[static_cast<std::size_t>(cur)] & set & ~(Mask{1} << prev);
    prev = cur;
    cur = std::countr_zero(nxt);
    ++steps;
  }
  if (steps % 2 == 0) {
    return EvenStructureKind::chorded_cycle;
  }
  return std::nullopt;
}

std::vector<Vertex> members(Mask set) {
  std::vector<Vertex> out;
  for (Mask f = set; f; f &= f - 1) {
    out.push_back(std::countr_zero(f));
  }
  return out;
}

// Calls fn(mask) for every s-subset of {0..n-1} in lexicographic order of
// the sorted member lists; stops early when fn returns true.
template <class Fn>
bool for_each_subset(int n, int s, Fn fn) {
  std::vector<int> idx(static_cast<std::size_t>(s));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    Mask m = 0;
    for (int i : idx) {
      m |= Mask{1} << i;
    }
    if (fn(m)) {
      return true;
    }
    int i = s - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - s + i) {
      --i;
    }
    if (i < 0) {
      return false;
    }
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < s; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

}  // namespace

std::optional<EvenStructure> search_forbidden_even_structure(const Graph& g, int max_order, int max_half) {
  max_order = std::min(max_order, 64);
  if (g.order() > max_order) {
    throw InputError("search_forbidden_even_structure: graph has " + std::to_string(g.order()) +
                     " vertices, limit is " + std::to_string(max_order));
  }
  const auto adj = adjacency_masks(g);
  std::optional<EvenStructure> found;
  for (int half = 2; half <= max_half && 2 * half <= g.order(); ++half) {
    const int s = 2 * half;
    const bool hit = for_each_subset(g.order(), s, [&](Mask m) {
      if (auto kind = classify_even_subset(adj, m, s)) {
        found = EvenStructure{*kind, members(m)};
        return true;
      }
      return false;
    });
    if (hit) {
      break;
    }
  }
  return found;
}

std::optional<EvenStructure> has_induced_C4_or_K4e(const Graph& g) {
  const int n = g.order();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) {
        for (Vertex d = c + 1; d < n; ++d) {
          const std::array<Vertex, 4> q{a, b, c, d};
          std::array<int, 4> deg{};
          int edges = 0;
          for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = i + 1; j < 4; ++j) {
              if (g.has_edge(q[i], q[j])) {
                ++edges;
                ++deg[i];
                ++deg[j];
              }
            }
          }
          const bool all_two = std::all_of(deg.begin(), deg.end(), [](int x) { return x == 2; });
          if (edges == 4 && all_two) {
            return EvenStructure{EvenStructureKind::even_cycle, {a, b, c, d}};
          }
          if (edges == 5) {
            return EvenStructure{EvenStructureKind::chorded_cycle, {a, b, c, d}};
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool is_locally_connected(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto nbrs = g.neighbors(v);
    if (nbrs.size() <= 1) {
      continue;
    }
    std::vector<Vertex> nb(nbrs.begin(), nbrs.end());
    if (!is_connected(g.induced(nb))) {
      return false;
    }
  }
  return true;
}

Verdict tree_antipodal_criterion(const Graph& g) {
  if (!is_tree(g)) {
    throw InputError("tree_antipodal_criterion: input is not a tree");
  }
  if (g.order() == 1) {
    return Verdict::pass();
  }
  int longest = 0;
  std::vector<std::pair<Vertex, Vertex>> ends;
  for (Vertex a = 0; a < g.order(); ++a) {
    const auto dist = bfs_distances(g, a);
    for (Vertex b = a + 1; b < g.order(); ++b) {
      const int d = dist[static_cast<std::size_t>(b)];
      if (d > longest) {
        longest = d;
        ends.clear();
      }
      if (d == longest) {
        ends.emplace_back(a, b);
      }
    }
  }
  if (ends.size() == 1 && longest % 2 == 1) {
    return Verdict::pass();
  }
  SubgraphWitness w;
  for (std::size_t i = 0; i < std::min<std::size_t>(2, ends.size()); ++i) {
    w.vertices.push_back(ends[i].first);
    w.vertices.push_back(ends[i].second);
  }
  return Verdict::fail(std::move(w));
}

std::vector<int> antipode_counts(const Graph& g) {
  require_connected(g, "antipode_counts");
  std::vector<int> out(static_cast<std::size_t>(g.order()), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (g.is_weighted()) {
      const auto dist = weighted_distances(g, s);
      BigInt far = 0;
      for (const auto& d : dist) {
        far = std::max(far, *d);
      }
      out[static_cast<std::size_t>(s)] =
          static_cast<int>(std::count_if(dist.begin(), dist.end(), [&](const auto& d) { return *d == far; }));
    } else {
      const auto dist = bfs_distances(g, s);
      const int far = *std::max_element(dist.begin(), dist.end());
      out[static_cast<std::size_t>(s)] = static_cast<int>(std::count(dist.begin(), dist.end(), far));
    }
  }
  return out;
}

const char* to_string(BlockRole r) {
  switch (r) {
    case BlockRole::stem_segment:
      return "stem_segment";
    case BlockRole::transversal:
      return "transversal";
    case BlockRole::not_transversal:
      return "not_transversal";
  }
  return "?";
}

bool TransversalityReport::all_transversal() const {
  return applicable && std::all_of(blocks.begin(), blocks.end(),
                                   [](const BlockTransversality& b) { return b.role != BlockRole::not_transversal; });
}

namespace {

struct StemIndex {
  std::vector<int> stem_of;  // -1 for the root
  std::vector<int> depth;    // tier along the stem
};

StemIndex index_stems(const std::vector<Stem>& stems, int n) {
  StemIndex idx{std::vector<int>(static_cast<std::size_t>(n), -1), std::vector<int>(static_cast<std::size_t>(n), 0)};
  for (std::size_t s = 0; s < stems.size(); ++s) {
    const auto& vs = stems[s].vertices;
    for (std::size_t i = 1; i < vs.size(); ++i) {
      idx.stem_of[static_cast<std::size_t>(vs[i])] = static_cast<int>(s);
      idx.depth[static_cast<std::size_t>(vs[i])] = static_cast<int>(i);
    }
  }
  return idx;
}

BlockTransversality match_block(const Graph& g, const BearingTree& t, const StemIndex& idx,
                                const std::vector<Vertex>& block) {
  BlockTransversality out;
  out.vertices = block;
  if (block.size() <= 1) {
    out.role = BlockRole::stem_segment;
    return out;
  }

  std::vector<std::pair<Vertex, Vertex>> tree_edges;
  std::vector<std::pair<Vertex, Vertex>> other_edges;
  for (std::size_t i = 0; i < block.size(); ++i) {
    for (std::size_t j = i + 1; j < block.size(); ++j) {
      if (g.has_edge(block[i], block[j])) {
        (t.is_tree_edge(block[i], block[j]) ? tree_edges : other_edges).emplace_back(block[i], block[j]);
      }
    }
  }

  if (other_edges.empty()) {
    // A block made of tree edges alone is a single edge, hence a stem piece.
    out.role = BlockRole::stem_segment;
    return out;
  }

  const bool has_root = std::binary_search(block.begin(), block.end(), t.root);
  if (!has_root) {
    return out;
  }

  // Stems meeting the block, and the tier range the block covers on each.
  std::map<int, std::vector<int>> depths;
  for (Vertex v : block) {
    if (v != t.root) {
      depths[idx.stem_of[static_cast<std::size_t>(v)]].push_back(idx.depth[static_cast<std::size_t>(v)]);
    }
  }
  if (depths.size() < 2) {
    return out;
  }
  int k = -1;
  for (auto& [stem, ds] : depths) {
    std::sort(ds.begin(), ds.end());
    for (std::size_t i = 0; i < ds.size(); ++i) {
      if (ds[i] != static_cast<int>(i) + 1) {
        return out;
      }
    }
    const int top = static_cast<int>(ds.size());
    if (k >= 0 && top != k) {
      return out;
    }
    k = top;
  }

  // Every non-tree edge must be a balk joining two different stems, and
  // every pair of stems must be joined by exactly one balk.
  std::vector<int> stems;
  for (const auto& entry : depths) {
    stems.push_back(entry.first);
  }
  const std::size_t count = stems.size();
  std::map<std::pair<int, int>, int> balk_tier;
  for (const auto& [a, b] : other_edges) {
    if (t.tier[static_cast<std::size_t>(a)] != t.tier[static_cast<std::size_t>(b)]) {
      return out;
    }
    int sa = idx.stem_of[static_cast<std::size_t>(a)];
    int sb = idx.stem_of[static_cast<std::size_t>(b)];
    if (sa == sb || sa < 0 || sb < 0) {
      return out;
    }
    if (sa > sb) {
      std::swap(sa, sb);
    }
    if (!balk_tier.emplace(std::make_pair(sa, sb), idx.depth[static_cast<std::size_t>(a)]).second) {
      return out;
    }
  }
  if (balk_tier.size() != count * (count - 1) / 2) {
    return out;
  }
  const auto tier_between = [&](int a, int b) { return balk_tier.at({std::min(a, b), std::max(a, b)}); };

  // Role assignment: try every stem as s_0.
  for (std::size_t zero = 0; zero < count; ++zero) {
    bool ok = true;
    for (std::size_t i = 0; i < count && ok; ++i) {
      if (i != zero) {
        ok = tier_between(stems[zero], stems[i]) == k;
      }
    }
    int l = k;
    bool have_l = false;
    for (std::size_t i = 0; i < count && ok; ++i) {
      for (std::size_t j = i + 1; j < count && ok; ++j) {
        if (i == zero || j == zero) {
          continue;
        }
        const int tij = tier_between(stems[i], stems[j]);
        if (!have_l) {
          l = tij;
          have_l = true;
        }
        ok = tij == l && l <= k;
      }
    }
    if (ok) {
      out.role = BlockRole::transversal;
      out.stems.push_back(stems[zero]);
      for (std::size_t i = 0; i < count; ++i) {
        if (i != zero) {
          out.stems.push_back(stems[i]);
        }
      }
      out.n = static_cast<int>(count) - 1;
      out.k = k;
      out.l = l;
      return out;
    }
  }
  return out;
}

}  // namespace

TransversalityReport verify_transversal_blocks(const Graph& g, Vertex root) {
  if (!g.valid_vertex(root)) {
    throw InputError("verify_transversal_blocks: root " + std::to_string(root) + " is not a vertex");
  }
  const BearingTree t = build_bearing_tree(g, root);
  TransversalityReport report;
  report.root = root;
  report.stems = extract_stems(t);
  report.applicable = stems_meet_only_at_root(t);
  if (!report.applicable) {
    return report;
  }
  const auto idx = index_stems(report.stems, g.order());
  for (const auto& block : block_decomposition(g).blocks) {
    report.blocks.push_back(match_block(g, t, idx, block));
  }
  return report;
}

}  // namespace geodkit
