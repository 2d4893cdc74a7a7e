#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geodkit/graph.hpp"
#include "geodkit/recognition.hpp"
#include "geodkit/verdict.hpp"

namespace geodkit {

/// Biconnected decomposition. Blocks are ascending vertex lists ordered by
/// their smallest vertex (then lexicographically); an isolated vertex is a
/// one-vertex block.
struct BlockDecomposition {
  std::vector<Vertex> cut_vertices;
  std::vector<std::vector<Vertex>> blocks;
};

BlockDecomposition block_decomposition(const Graph& g);

/// Geodeticity decided block by block. Witness ids refer to g.
Verdict geodetic_via_blocks(const Graph& g);

enum class BlockShape { complete, odd_cycle, other };
const char* to_string(BlockShape s);
/// K1, K2 and K3 count as complete.
BlockShape classify_block(const Graph& g, const std::vector<Vertex>& block);

/// Membership in a structural graph class. `block_shapes` is parallel to
/// block_decomposition(g).blocks. For non-members `witness` is an induced
/// subgraph (vertex list) explaining the failure and `reason` names it.
struct ClassVerdict {
  bool member = true;
  std::vector<BlockShape> block_shapes;
  std::vector<Vertex> witness;
  std::string reason;
};

/// Geodetic claw-free graphs: an odd cycle, or every block complete and
/// every vertex in at most two blocks.
ClassVerdict claw_free_geodetic_characterization(const Graph& g);

/// Center followed by m pairwise non-adjacent neighbours, or nothing.
/// Centers and leaves are tried in ascending order. Requires m >= 2.
std::optional<std::vector<Vertex>> find_induced_star(const Graph& g, int m);

/// Every block complete or an odd cycle (the largest hereditary class of
/// geodetic graphs).
ClassVerdict in_floor_geodetic(const Graph& g);

enum class EvenStructureKind {
  even_cycle,     // induced C_2k
  chorded_cycle,  // induced C_2k plus one chord splitting it into two odd cycles
};
const char* to_string(EvenStructureKind k);

struct EvenStructure {
  EvenStructureKind kind;
  std::vector<Vertex> vertices;  // ascending
};

inline constexpr int kEvenSearchMaxOrder = 12;
inline constexpr int kEvenSearchMaxHalf = 6;

/// Exhaustive search over vertex subsets of size 2k (2 <= k <= max_half),
/// smallest size first, lexicographic within a size. Throws InputError when
/// g has more than max_order vertices (max_order is capped at 64).
std::optional<EvenStructure> search_forbidden_even_structure(const Graph& g, int max_order = kEvenSearchMaxOrder,
                                                             int max_half = kEvenSearchMaxHalf);

/// Induced C4 or K4 minus an edge, first quadruple in lexicographic order.
std::optional<EvenStructure> has_induced_C4_or_K4e(const Graph& g);

/// Every open neighbourhood induces a connected subgraph.
bool is_locally_connected(const Graph& g);

/// A tree is antipodal iff its longest path is unique and of odd length.
/// The one-vertex tree counts as antipodal. On failure the witness lists the
/// endpoints of the longest path(s) found (two pairs when not unique).
/// Throws InputError if g is not a tree.
Verdict tree_antipodal_criterion(const Graph& g);

/// Number of farthest vertices of every vertex. Requires a connected graph.
std::vector<int> antipode_counts(const Graph& g);

enum class BlockRole { stem_segment, transversal, not_transversal };
const char* to_string(BlockRole r);

struct BlockTransversality {
  std::vector<Vertex> vertices;
  BlockRole role = BlockRole::not_transversal;
  /// For transversal blocks: stem indices with the distinguished s_0 first,
  /// the remaining n stems ascending, and the shape parameters.
  std::vector<int> stems;
  int n = 0;
  int k = 0;
  int l = 0;
};

struct TransversalityReport {
  Vertex root = 0;
  /// False when two stems of the bearing tree share a non-root vertex; the
  /// block analysis is then skipped.
  bool applicable = false;
  std::vector<Stem> stems;
  std::vector<BlockTransversality> blocks;

  bool all_transversal() const;
};

/// Matches every block against the transversal shape relative to the BFS
/// bearing tree rooted at `root`. Throws InputError on a bad root or on
/// weighted / disconnected input.
TransversalityReport verify_transversal_blocks(const Graph& g, Vertex root);

}  // namespace geodkit
