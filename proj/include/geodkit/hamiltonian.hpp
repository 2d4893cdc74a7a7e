#pragma once

#include <cstdint>
#include <vector>

#include "geodkit/graph.hpp"

namespace geodkit {

inline constexpr std::uint64_t kDefaultHamiltonianBudget = 10'000'000;

enum class HamiltonianStatus { found, proven_absent, budget_exhausted };
const char* to_string(HamiltonianStatus s);

struct HamiltonianResult {
  HamiltonianStatus status = HamiltonianStatus::budget_exhausted;
  /// Vertex sequence starting at 0; the closing edge back to 0 is implied.
  std::vector<Vertex> cycle;
  std::uint64_t expansions = 0;
};

/// Exact backtracking from vertex 0, neighbours in ascending order, pruned
/// when an unvisited vertex is left with fewer than two usable neighbours.
/// The first cycle found is the lexicographically least one. When the
/// budget runs out a randomized-rotation (Posa) heuristic with a fixed seed
/// gets the remaining attempt. A search that completes without a cycle is
/// a proof of absence.
HamiltonianResult find_hamiltonian_cycle(const Graph& g, std::uint64_t budget = kDefaultHamiltonianBudget);

/// Rotation heuristic alone; never proves absence.
HamiltonianResult posa_heuristic(const Graph& g, std::uint64_t budget);

/// Visits every vertex once, consecutive vertices (cyclically) adjacent.
bool is_hamiltonian_cycle(const Graph& g, const std::vector<Vertex>& cycle);

}  // namespace geodkit
