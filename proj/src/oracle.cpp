#include "geodkit/oracle.hpp"

#include "geodkit/paths.hpp"

namespace geodkit {

Verdict oracle_is_geodetic(const Graph& g) {
  require_connected(g, "oracle_is_geodetic");
  for (Vertex s = 0; s < g.order(); ++s) {
    const auto row = shortest_path_counts(g, s);
    for (Vertex t = 0; t < g.order(); ++t) {
      if (row.count[static_cast<std::size_t>(t)] >= 2) {
        return Verdict::fail(GeodesicWitness{s, t, std::nullopt});
      }
    }
  }
  return Verdict::pass();
}

Verdict oracle_is_antipodal(const Graph& g) {
  require_connected(g, "oracle_is_antipodal");
  for (Vertex s = 0; s < g.order(); ++s) {
    const auto row = shortest_path_counts(g, s);
    BigInt far = 0;
    for (const auto& d : row.dist) {
      if (*d > far) {
        far = *d;
      }
    }
    std::vector<Vertex> farthest;
    for (Vertex t = 0; t < g.order(); ++t) {
      if (*row.dist[static_cast<std::size_t>(t)] == far) {
        farthest.push_back(t);
      }
    }
    if (farthest.size() != 1) {
      return Verdict::fail(AntipodeWitness{s, std::move(farthest)});
    }
  }
  return Verdict::pass();
}

}  // namespace geodkit
