#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <atomic>
#include <set>

#include "fixtures.hpp"
#include "geodkit/construct.hpp"
#include "geodkit/enumerate.hpp"
#include "geodkit/families.hpp"
#include "geodkit/oracle.hpp"
#include "geodkit/paths.hpp"
#include "geodkit/recognition.hpp"
#include "geodkit/structure.hpp"

using namespace geodkit;

namespace {

// Two triangles sharing vertex 0, or a triangle and a C4.
Graph bowtie() { return Graph::from_pairs(5, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}}); }

Graph triangle_and_c4() {
  return Graph::from_pairs(6, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 5}, {5, 0}});
}

Graph glued(const Graph& a, const Graph& b) {
  // b's vertex 0 is identified with a's vertex 0.
  Graph g(a.order() + b.order() - 1);
  for (const auto& e : a.edges()) {
    g.add_edge(e.u, e.v);
  }
  const auto id = [&](Vertex v) { return v == 0 ? 0 : a.order() + v - 1; };
  for (const auto& e : b.edges()) {
    g.add_edge(id(e.u), id(e.v));
  }
  return g;
}

// Triangles (0,1,2), (2,3,4), (4,5,6), ...
Graph triangle_chain(int count) {
  Graph g(2 * count + 1);
  for (int i = 0; i < count; ++i) {
    g.add_edge(2 * i, 2 * i + 1);
    g.add_edge(2 * i + 1, 2 * i + 2);
    g.add_edge(2 * i, 2 * i + 2);
  }
  return g;
}

bool has_edge_in_exactly_one_block(const Graph& g, const BlockDecomposition& bd) {
  for (const auto& e : g.edges()) {
    int hits = 0;
    for (const auto& b : bd.blocks) {
      hits += std::binary_search(b.begin(), b.end(), e.u) && std::binary_search(b.begin(), b.end(), e.v);
    }
    if (hits != 1) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("block decomposition examples") {
  const auto cactus = block_decomposition(fixtures::odd_cactus());
  CHECK(cactus.blocks.size() == 8);
  CHECK(cactus.cut_vertices == std::vector<Vertex>{1, 4, 5, 10, 11});
  for (const auto& b : cactus.blocks) {
    CHECK((b.size() == 2 || b.size() == 3 || b.size() == 5));
  }
  CHECK(block_decomposition(complete_graph(5)).blocks.size() == 1);
  CHECK(block_decomposition(complete_graph(5)).cut_vertices.empty());
  CHECK(block_decomposition(fixtures::six_block_geodetic()).blocks.size() == 6);
  CHECK(block_decomposition(Graph(1)).blocks == std::vector<std::vector<Vertex>>{{0}});
  CHECK(block_decomposition(path_graph(4)).cut_vertices == std::vector<Vertex>{1, 2});
}

TEST_CASE("block decomposition invariants") {
  Rng rng(kDefaultSeed);
  for (int i = 0; i < 300; ++i) {
    const Graph g = random_connected_graph(std::uniform_int_distribution<int>(1, 25)(rng), 0.1, rng);
    const auto bd = block_decomposition(g);
    REQUIRE(has_edge_in_exactly_one_block(g, bd));
    const std::set<Vertex> cuts(bd.cut_vertices.begin(), bd.cut_vertices.end());
    for (std::size_t a = 0; a < bd.blocks.size(); ++a) {
      for (std::size_t b = a + 1; b < bd.blocks.size(); ++b) {
        std::vector<Vertex> shared;
        std::set_intersection(bd.blocks[a].begin(), bd.blocks[a].end(), bd.blocks[b].begin(), bd.blocks[b].end(),
                              std::back_inserter(shared));
        REQUIRE(shared.size() <= 1);
        if (!shared.empty()) {
          REQUIRE(cuts.count(shared[0]) == 1);
        }
      }
    }
    // Removing a cut vertex disconnects, removing another vertex does not.
    for (Vertex v = 0; v < g.order() && g.order() > 2; ++v) {
      std::vector<Vertex> rest;
      for (Vertex x = 0; x < g.order(); ++x) {
        if (x != v) {
          rest.push_back(x);
        }
      }
      REQUIRE(!is_connected(g.induced(rest)) == (cuts.count(v) == 1));
    }
  }
}

TEST_CASE("geodetic via blocks examples") {
  CHECK(geodetic_via_blocks(bowtie()).holds);
  CHECK_FALSE(geodetic_via_blocks(triangle_and_c4()).holds);
  const auto v = geodetic_via_blocks(triangle_and_c4());
  const auto w = std::get<GeodesicWitness>(*v.witness);
  CHECK(w.source >= 0);
  CHECK(!oracle_is_geodetic(triangle_and_c4()).holds);
  Rng rng(kDefaultSeed + 1);
  CHECK(geodetic_via_blocks(random_tree(12, rng)).holds);
}

TEST_CASE("block lemma, n <= 6 and random") {
  for (int n = 1; n <= 6; ++n) {
    enumerate_connected_graphs(n, [&](std::uint64_t, const Graph& g) {
      REQUIRE(geodetic_via_blocks(g).holds == check_geodetic_fast(g).holds);
    });
  }
  Rng rng(kDefaultSeed + 2);
  for (int i = 0; i < 500; ++i) {
    const Graph g = random_connected_graph(std::uniform_int_distribution<int>(1, 25)(rng), 0.08, rng);
    REQUIRE(geodetic_via_blocks(g).holds == check_geodetic_fast(g).holds);
  }
}

TEST_CASE("claw-free characterization examples") {
  CHECK(claw_free_geodetic_characterization(cycle_graph(7)).member);
  CHECK(claw_free_geodetic_characterization(triangle_chain(4)).member);
  CHECK(check_geodetic_fast(triangle_chain(4)).holds);
  CHECK_FALSE(find_induced_star(triangle_chain(4), 3).has_value());
  const auto claw = claw_free_geodetic_characterization(star_graph(3));
  CHECK_FALSE(claw.member);
  CHECK(claw.witness == std::vector<Vertex>{0, 1, 2, 3});
}

TEST_CASE("induced stars") {
  CHECK(find_induced_star(star_graph(3), 3) == std::vector<Vertex>{0, 1, 2, 3});
  CHECK_FALSE(find_induced_star(complete_graph(5), 2).has_value());
  const auto p = find_induced_star(petersen_graph(), 3);
  REQUIRE(p.has_value());
  const Graph pg = petersen_graph();
  for (std::size_t i = 1; i < p->size(); ++i) {
    CHECK(pg.has_edge((*p)[0], (*p)[i]));
    for (std::size_t j = i + 1; j < p->size(); ++j) {
      CHECK_FALSE(pg.has_edge((*p)[i], (*p)[j]));
    }
  }
  CHECK_THROWS_AS(find_induced_star(pg, 1), InputError);
}

TEST_CASE("claw-free theorem, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    enumerate_connected_graphs(n, [&](std::uint64_t, const Graph& g) {
      const bool expected = check_geodetic_fast(g).holds && !find_induced_star(g, 3).has_value();
      REQUIRE(claw_free_geodetic_characterization(g).member == expected);
    });
  }
}

TEST_CASE("floor of the geodetic class") {
  CHECK(in_floor_geodetic(fixtures::odd_cactus()).member);
  CHECK_FALSE(in_floor_geodetic(cycle_graph(4)).member);
  const auto k4c5 = in_floor_geodetic(glued(complete_graph(4), cycle_graph(5)));
  CHECK(k4c5.member);
  std::multiset<BlockShape> shapes(k4c5.block_shapes.begin(), k4c5.block_shapes.end());
  CHECK(shapes == std::multiset<BlockShape>{BlockShape::complete, BlockShape::odd_cycle});
}

TEST_CASE("forbidden even structures") {
  const auto c4 = search_forbidden_even_structure(cycle_graph(4));
  REQUIRE(c4.has_value());
  CHECK(c4->kind == EvenStructureKind::even_cycle);
  Graph k4e = complete_graph(4);
  k4e = Graph::from_pairs(4, std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
  const auto d = search_forbidden_even_structure(k4e);
  REQUIRE(d.has_value());
  CHECK(d->kind == EvenStructureKind::chorded_cycle);
  CHECK_FALSE(search_forbidden_even_structure(cycle_graph(7)).has_value());
  // the chord 4-7 closes an induced C4, found before anything larger
  const auto c8 = search_forbidden_even_structure(fixtures::c8_chord());
  REQUIRE(c8.has_value());
  CHECK(c8->kind == EvenStructureKind::even_cycle);
  CHECK(c8->vertices == std::vector<Vertex>{4, 5, 6, 7});
  Graph split = cycle_graph(8);
  split.add_edge(0, 4);
  const auto s8 = search_forbidden_even_structure(split);
  REQUIRE(s8.has_value());
  CHECK(s8->kind == EvenStructureKind::chorded_cycle);
  CHECK(s8->vertices.size() == 8);
  CHECK_THROWS_AS(search_forbidden_even_structure(cycle_graph(13)), InputError);
  CHECK(search_forbidden_even_structure(cycle_graph(14), 14, 7).has_value());
}

TEST_CASE("C4 and K4-e scan") {
  CHECK(has_induced_C4_or_K4e(cycle_graph(4)).has_value());
  CHECK_FALSE(has_induced_C4_or_K4e(complete_graph(4)).has_value());
  CHECK_FALSE(has_induced_C4_or_K4e(build_diameter2(2).graph).has_value());
}

TEST_CASE("hereditary properties, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    enumerate_connected_graphs(n, [&](std::uint64_t, const Graph& g) {
      const bool geodetic = check_geodetic_fast(g).holds;
      if (geodetic) {
        REQUIRE_FALSE(has_induced_C4_or_K4e(g).has_value());
        if (is_locally_connected(g)) {
          REQUIRE(g.size() == n * (n - 1) / 2);
        }
      }
      REQUIRE(in_floor_geodetic(g).member == !search_forbidden_even_structure(g).has_value());
    });
  }
}

TEST_CASE("local connectivity") {
  CHECK(is_locally_connected(complete_graph(6)));
  CHECK_FALSE(is_locally_connected(cycle_graph(5)));
  CHECK(is_locally_connected(wheel_graph(5)));
}

TEST_CASE("tree criterion examples") {
  CHECK(tree_antipodal_criterion(path_graph(4)).holds);
  CHECK_FALSE(tree_antipodal_criterion(star_graph(3)).holds);
  CHECK(tree_antipodal_criterion(fixtures::antipodal_tree()).holds);
  CHECK(tree_antipodal_criterion(Graph(1)).holds);
  CHECK(tree_antipodal_criterion(path_graph(2)).holds);
  CHECK_FALSE(tree_antipodal_criterion(path_graph(3)).holds);
  CHECK_THROWS_AS(tree_antipodal_criterion(cycle_graph(3)), InputError);
}

TEST_CASE("antipode counts") {
  CHECK(antipode_counts(cycle_graph(6)) == std::vector<int>(6, 1));
  CHECK(antipode_counts(complete_graph(4)) == std::vector<int>(4, 3));
  CHECK(antipode_counts(cycle_graph(5)) == std::vector<int>(5, 2));
}

TEST_CASE("transversality of complete graphs") {
  for (int n : {4, 5}) {
    const Graph k = complete_graph(n);
    for (Vertex r = 0; r < n; ++r) {
      const auto rep = verify_transversal_blocks(k, r);
      REQUIRE(rep.applicable);
      REQUIRE(rep.blocks.size() == 1);
      const auto& b = rep.blocks[0];
      CHECK(b.role == BlockRole::transversal);
      CHECK(b.n == n - 2);
      CHECK(b.k == 1);
      CHECK(b.l == 1);
    }
  }
}

TEST_CASE("transversality of the six-block graph") {
  const Graph g = fixtures::six_block_geodetic();
  REQUIRE(oracle_is_geodetic(g).holds);
  const auto rep = verify_transversal_blocks(g, 0);
  REQUIRE(rep.applicable);
  REQUIRE(rep.blocks.size() == 6);
  std::vector<std::array<int, 3>> shapes;
  int segments = 0;
  for (const auto& b : rep.blocks) {
    if (b.role == BlockRole::transversal) {
      shapes.push_back({b.n, b.k, b.l});
    } else {
      CHECK(b.role == BlockRole::stem_segment);
      CHECK(b.vertices.size() == 2);
      ++segments;
    }
  }
  std::sort(shapes.begin(), shapes.end());
  CHECK(shapes == std::vector<std::array<int, 3>>{{2, 3, 2}, {3, 4, 3}});
  CHECK(segments == 4);
  CHECK(rep.all_transversal());
}

TEST_CASE("C6 is not transversal") {
  for (Vertex r = 0; r < 6; ++r) {
    const auto rep = verify_transversal_blocks(cycle_graph(6), r);
    REQUIRE(rep.applicable);
    REQUIRE(rep.blocks.size() == 1);
    CHECK(rep.blocks[0].role == BlockRole::not_transversal);
  }
  CHECK_THROWS_AS(verify_transversal_blocks(cycle_graph(6), 6), InputError);
}

TEST_CASE("transversality theorem, n <= 7") {
  int checked = 0;
  for (int n = 1; n <= 7; ++n) {
    enumerate_connected_graphs(n, [&](std::uint64_t, const Graph& g) {
      if (!check_geodetic_fast(g).holds) {
        return;
      }
      for (Vertex r = 0; r < n; ++r) {
        const auto rep = verify_transversal_blocks(g, r);
        if (!rep.applicable) {
          continue;
        }
        ++checked;
        REQUIRE(rep.all_transversal());
        for (const auto& b : rep.blocks) {
          if (b.role == BlockRole::transversal) {
            const Graph h = g.induced(b.vertices);
            REQUIRE(h.order() == b.k * (b.n + 1) + 1);
            REQUIRE(h.size() == b.k * (b.n + 1) + b.n * (b.n + 1) / 2);
          }
        }
      }
    });
  }
  CHECK(checked > 0);
}

TEST_CASE("min-degree proposition, n <= 7") {
  std::atomic<int> bad{0};
  std::atomic<int> seen{0};
  for (int n = 1; n <= 7; ++n) {
    enumerate_connected_graphs_parallel(n, [&](std::uint64_t, const Graph& g) {
      for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) < 2) {
          return;
        }
      }
      if (!check_geodetic_fast(g).holds) {
        return;
      }
      ++seen;
      for (int c : antipode_counts(g)) {
        if (c < 2) {
          ++bad;
          return;
        }
      }
    });
  }
  CHECK(seen.load() > 0);
  CHECK(bad.load() == 0);
}
