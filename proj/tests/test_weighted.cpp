#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "fixtures.hpp"
#include "geodkit/enumerate.hpp"
#include "geodkit/families.hpp"
#include "geodkit/oracle.hpp"
#include "geodkit/paths.hpp"
#include "geodkit/recognition.hpp"
#include "geodkit/weighted.hpp"
#include "path_oracle.hpp"

using namespace geodkit;

namespace {

bool restricts_to(const Graph& g, const Graph& h) {
  std::vector<Vertex> old(static_cast<std::size_t>(h.order()));
  std::iota(old.begin(), old.end(), 0);
  return g.induced(old) == h;
}

bool added_weights_small(const Graph& g, int n) {
  for (const auto& e : g.edges()) {
    if ((e.u >= n || e.v >= n) && e.weight != 1 && e.weight != 2) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("P2 gets weight 1") {
  const Graph w = assign_weights(path_graph(2));
  CHECK(w.weight(0, 1) == 1);
  CHECK(assign_weights(Graph(1)).order() == 1);
}

TEST_CASE("weights for C8 with a chord") {
  const Graph w = assign_weights(fixtures::c8_chord());
  CHECK(w.unweighted() == fixtures::c8_chord());
  const auto r = check_weighted(w);
  CHECK(r.geodetic.holds);
  CHECK(r.antipodal.holds);
  CHECK(path_oracle::is_geodetic(w));
  CHECK(path_oracle::is_antipodal(w));
}

TEST_CASE("weights grow exactly") {
  const Graph w = assign_weights(complete_graph(20));
  BigInt biggest = 0;
  for (const auto& e : w.edges()) {
    biggest = std::max(biggest, e.weight);
  }
  CHECK(biggest > BigInt(std::numeric_limits<std::uint64_t>::max()));
  CHECK(check_weighted(w).geodetic.holds);
  CHECK(check_weighted(w).antipodal.holds);
}

TEST_CASE("weight assignment on all graphs with n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    enumerate_connected_graphs(n, [&](std::uint64_t, const Graph& g) {
      const Graph w = assign_weights(g);
      REQUIRE(w.unweighted() == g);
      const auto r = check_weighted(w);
      REQUIRE(r.geodetic.holds);
      REQUIRE(r.antipodal.holds);
      REQUIRE(oracle_is_geodetic(w).holds);
      REQUIRE(oracle_is_antipodal(w).holds);
    });
  }
}

TEST_CASE("weight assignment on random graphs") {
  Rng rng(kDefaultSeed);
  for (int i = 0; i < 200; ++i) {
    const int n = std::uniform_int_distribution<int>(1, 12)(rng);
    const Graph g = random_connected_graph(n, std::uniform_real_distribution<double>(0.0, 0.6)(rng), rng);
    const Graph w = assign_weights(g);
    REQUIRE(w.unweighted() == g);
    const auto r = check_weighted(w);
    REQUIRE(r.geodetic.holds);
    REQUIRE(r.antipodal.holds);
  }
}

TEST_CASE("embedding examples") {
  Graph edge(2);
  edge.add_edge(0, 1, 5);
  const Graph e = embed_weighted_geodetic(edge);
  CHECK(oracle_is_geodetic(e).holds);
  CHECK(restricts_to(e, edge));

  CHECK_THROWS_AS(embed_weighted_geodetic(cycle_graph(4)), InputError);
  try {
    embed_weighted_geodetic(cycle_graph(4));
  } catch (const InputError& err) {
    CHECK(std::string(err.what()).find("0 and 2") != std::string::npos);
  }

  Graph p4(4);
  p4.add_edge(0, 1, 3);
  p4.add_edge(1, 2, 4);
  p4.add_edge(2, 3, 3);
  const Graph g = embed_weighted_geodetic(p4);
  CHECK(oracle_is_geodetic(g).holds);
  CHECK(check_weighted(g).geodetic.holds);
  CHECK(restricts_to(g, p4));
  CHECK(added_weights_small(g, 4));

  Graph split(3);
  split.add_edge(0, 1);
  CHECK_THROWS_AS(embed_weighted_geodetic(split), InputError);
}

TEST_CASE("embedding on random weighted graphs") {
  Rng rng(kDefaultSeed + 1);
  int done = 0;
  for (int attempt = 0; done < 100 && attempt < 100000; ++attempt) {
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    const Graph base = random_connected_graph(n, 0.3, rng);
    Graph h(n);
    for (const auto& e : base.edges()) {
      h.add_edge(e.u, e.v, std::uniform_int_distribution<int>(1, 5)(rng));
    }
    Graph g;
    try {
      g = embed_weighted_geodetic(h);
    } catch (const InputError&) {
      continue;
    }
    ++done;
    REQUIRE(oracle_is_geodetic(g).holds);
    REQUIRE(restricts_to(g, h));
    REQUIRE(added_weights_small(g, n));
  }
  CHECK(done == 100);
}
