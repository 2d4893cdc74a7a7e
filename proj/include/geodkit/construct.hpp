#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geodkit/graph.hpp"
#include "geodkit/hamiltonian.hpp"

namespace geodkit {

/// Generated graph with an optional Hamiltonian cycle (starting at vertex
/// 0) and the parameters it was built from.
struct Construction {
  Graph graph;
  std::optional<std::vector<Vertex>> hamiltonian_cycle;
  std::string name;
  int q = 0;
};

/// Levi graph of PG(2, q) together with a Hamiltonian cycle. Throws
/// InputError for an unsupported q or when the cycle search runs out of
/// budget.
Construction build_levi(int q, std::uint64_t budget = kDefaultHamiltonianBudget);

/// (q+1)-regular geodetic graph of diameter 4 on (q+1)^3 + 1 vertices:
/// every line vertex of Levi(PG(2,q)) becomes a K_{q+1}, and clique vertex i
/// of line j (id N + j(q+1) + i, N = q^2+q+1) is matched to the i-th
/// smallest point of the line.
Construction build_diameter4(int q, std::uint64_t budget = kDefaultHamiltonianBudget);

/// Geodetic graph of diameter 2 on 2q^2+2q+1 vertices. The first edge
/// (point 0, line L) of the Levi cycle is contracted into vertex 0 and the
/// vertex id L is removed (larger ids shift down by one). The other points
/// of L form a clique, the other lines through point 0 form a clique, and
/// the points off L are made into one clique per line through point 0.
Construction build_diameter2(int q, std::uint64_t budget = kDefaultHamiltonianBudget);

/// Each edge (in sorted order, i-th edge u < v) becomes the path
/// u, n+ik, ..., n+ik+k-1, v. k must be even and positive; unit weights only.
Graph subdivide(const Graph& g, int k);

/// Antipodal supergraph: a path hangs on one junction vertex x with a
/// vertices on one side and a+1 on the other. x is the smallest vertex whose
/// eccentricity is below the diameter d, with a = d; when every vertex is
/// peripheral x = 0 and a = d+1. A single vertex yields P2. New vertices are
/// numbered side a first (moving away from x), then the long side.
/// Unit weights only; throws InputError on disconnected input.
Graph extend_to_antipodal(const Graph& g);

}  // namespace geodkit
