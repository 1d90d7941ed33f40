#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rcoptoric/colored_graph.hpp"

namespace rcoptoric {

/// A concrete path with its color trace.
struct PathDescriptor {
  std::vector<VertexId> vertices;             // s+1 vertices for s edges
  std::vector<std::string> vertex_colors;     // labels, one per vertex
  std::vector<std::string> edge_colors;       // labels, one per edge
  friend bool operator==(const PathDescriptor&, const PathDescriptor&) = default;
};

/// The unordered color content of a path: endpoint vertex colors plus the
/// multiset of its edge colors. Two paths with equal content are called
/// combinatorially equivalent.
struct LambdaMultiset {
  std::array<std::string, 2> endpoint_colors; // sorted
  std::vector<std::string> edge_colors;       // sorted, with multiplicity
  friend auto operator<=>(const LambdaMultiset&, const LambdaMultiset&) = default;
};

std::string to_string(const LambdaMultiset& lambda); // canonical "{a,b|e1,e2}"

struct BlockDecomposition {
  std::vector<std::vector<VertexId>> blocks; // biconnected components, sorted
  std::vector<VertexId> cut_vertices;        // sorted
};

struct BlockResult {
  bool is_block_graph = false;
  BlockDecomposition decomposition;          // always filled
  // When some biconnected component is not complete: that component plus one
  // of its missing edges.
  std::optional<std::vector<VertexId>> witness_component;
  std::optional<std::pair<VertexId, VertexId>> witness_non_edge;
};

/// Decomposes into biconnected components and checks that each one induces a
/// complete subgraph. Requires a valid connected graph.
BlockResult is_block_graph(const ColoredGraph& g);

/// The unique shortest path from u to v. Throws PreconditionError when the
/// shortest path is not unique (so non-block graphs like cycles are rejected
/// pair by pair) or when v is unreachable.
PathDescriptor shortest_path(const ColoredGraph& g, VertexId u, VertexId v);

/// Color content of the unique shortest u-v path.
LambdaMultiset path_lambda(const ColoredGraph& g, VertexId u, VertexId v);

enum class PathRelation {
  none,          // different color content
  combinatorial, // same content, but not alignable as sequences
  isomorphic,    // ordered color sequences equal, possibly after reversal
};

/// Compares two paths by color. Isomorphic implies combinatorial; the
/// strongest applicable relation is returned.
PathRelation paths_equivalent(const PathDescriptor& p, const PathDescriptor& q);

struct AuditCheck {
  std::string name;
  bool passed = true;
  long long instances = 0;      // applicable instances actually checked
  std::string witness;          // set when failed
};

/// Exhaustive structural scan over all shortest paths of a connected block
/// graph. All five checks hold on every properly colored block graph whose
/// color classes are automorphism orbits; on other inputs they may fail with
/// witnesses, and checks with no applicable instance pass vacuously
/// (instances == 0).
struct AuditReport {
  AuditCheck endpoint_symmetry;       // same-colored endpoints give palindromic traces
  AuditCheck color_multiplicity;      // no color appears three times on one path
  AuditCheck concatenation;           // edge-overlapping shortest paths compose
  AuditCheck equivalence_isomorphism; // equal color content forces alignable sequences
  AuditCheck branching_exclusion;     // no swapped first-edge colors across a branch
  bool passed() const {
    return endpoint_symmetry.passed && color_multiplicity.passed && concatenation.passed &&
           equivalence_isomorphism.passed && branching_exclusion.passed;
  }
};

/// Size guard: instances above `max_vertices` vertices are rejected (the scan
/// is quartic in the vertex count).
AuditReport structural_audit(const ColoredGraph& g, int max_vertices = 32);

} // namespace rcoptoric
