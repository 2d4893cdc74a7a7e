#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "geodkit/graph.hpp"

namespace geodkit {

/// Two distinct geodesics join source and target. The fast checkers also
/// name the two shortest-path predecessors of target (pred[0] < pred[1]).
struct GeodesicWitness {
  Vertex source = 0;
  Vertex target = 0;
  std::optional<std::array<Vertex, 2>> predecessors;
  friend bool operator==(const GeodesicWitness&, const GeodesicWitness&) = default;
};

/// `vertex` has more than one farthest vertex; `antipodes` lists all of
/// them in ascending order.
struct AntipodeWitness {
  Vertex vertex = 0;
  std::vector<Vertex> antipodes;
  friend bool operator==(const AntipodeWitness&, const AntipodeWitness&) = default;
};

/// A vertex set whose induced subgraph (or listed path) shows the failure.
struct SubgraphWitness {
  std::vector<Vertex> vertices;
  friend bool operator==(const SubgraphWitness&, const SubgraphWitness&) = default;
};

using Witness = std::variant<GeodesicWitness, AntipodeWitness, SubgraphWitness>;

/// Outcome of a property check. A witness is present exactly when the
/// property fails.
struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;

  static Verdict pass() { return Verdict{}; }
  static Verdict fail(Witness w) { return Verdict{false, std::move(w)}; }

  explicit operator bool() const { return holds; }
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

}  // namespace geodkit
