#pragma once

#include <array>
#include <string>
#include <vector>

#include "geodkit/graph.hpp"

namespace geodkit {

/// PG(2, q). Points and lines are normalized nonzero triples over GF(q)
/// (first nonzero coordinate 1) listed in lexicographic order; point x lies
/// on line a iff a0*x0 + a1*x1 + a2*x2 = 0.
struct ProjectivePlane {
  int q = 0;
  std::vector<std::array<int, 3>> points;
  std::vector<std::array<int, 3>> lines;
  /// Point ids on each line, ascending.
  std::vector<std::vector<int>> points_on_line;
  /// Line ids through each point, ascending.
  std::vector<std::vector<int>> lines_through_point;

  int size() const { return static_cast<int>(points.size()); }
};

/// Builds PG(2, q) and checks the incidence axioms (throws std::logic_error
/// if they fail). Throws InputError for an unsupported q.
ProjectivePlane projective_plane(int q);

/// Empty when the four incidence axioms hold, else a description of the
/// first broken one.
std::vector<std::string> incidence_axiom_failures(const ProjectivePlane& p);

/// Point i is vertex i, line j is vertex size() + j.
Graph levi_graph(const ProjectivePlane& p);

}  // namespace geodkit
