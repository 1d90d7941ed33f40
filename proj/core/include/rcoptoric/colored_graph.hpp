#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rcoptoric/errors.hpp"

namespace rcoptoric {

/// Vertices are 1-based contiguous integers 1..n.
using VertexId = int;

/// An undirected edge with normalized endpoint order (u <= v; u == v only in
/// deliberately malformed graphs built for validation testing).
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Normalizes endpoint order.
inline Edge make_edge(VertexId a, VertexId b) {
  return a <= b ? Edge{a, b} : Edge{b, a};
}

enum class ColorKind { vertex, edge };

/// A color is a (kind, label) pair. Vertex colors and edge colors live in
/// disjoint namespaces even when their labels coincide textually, so the
/// disjointness required of a coloring is enforced structurally.
struct ColorId {
  ColorKind kind = ColorKind::vertex;
  std::string label;
  friend auto operator<=>(const ColorId&, const ColorId&) = default;
};

std::string to_string(const ColorId& c); // "v:label" / "e:label"

struct VertexSpec {
  VertexId id = 0;
  std::string color;
};

struct EdgeSpec {
  VertexId u = 0;
  VertexId v = 0;
  std::string color;
};

struct Violation {
  std::string kind;   // "loop", "duplicate-edge", "id-range", "missing-color"
  std::string detail;
};

struct ValidationReport {
  bool valid = true;      // structure satisfies every graph invariant
  bool connected = true;  // single component (checked on the simple skeleton)
  std::vector<Violation> violations;
};

/// A vertex- and edge-colored undirected graph, immutable after construction.
///
/// Color classes are kept in a canonical order used everywhere downstream
/// (matrix rows, sampling offsets): vertex classes sorted by their smallest
/// member vertex, then edge classes sorted by their least member edge. The
/// order is therefore independent of the label strings.
class ColoredGraph {
public:
  ColoredGraph() = default;

  /// Validates and canonicalizes; throws ParseError listing every violation.
  static ColoredGraph from_data(std::vector<VertexSpec> vertices,
                                std::vector<EdgeSpec> edges);

  /// Builds without rejecting invalid structure, so that validate() has
  /// something to report on. Operations other than validate() require a
  /// graph that passes validation.
  static ColoredGraph from_data_unchecked(std::vector<VertexSpec> vertices,
                                          std::vector<EdgeSpec> edges);

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(VertexId a, VertexId b) const;
  const std::vector<VertexId>& neighbors(VertexId v) const;
  int degree(VertexId v) const;
  bool structurally_valid() const { return structurally_valid_; }
  bool connected() const { return connected_; }

  const std::string& vertex_color_label(VertexId v) const;
  const std::string& edge_color_label(const Edge& e) const;
  ColorId vertex_color(VertexId v) const;
  ColorId edge_color(const Edge& e) const;

  // Canonical color classes.
  int vertex_class_count() const { return static_cast<int>(vertex_classes_.size()); }
  int edge_class_count() const { return static_cast<int>(edge_classes_.size()); }
  int color_count() const { return vertex_class_count() + edge_class_count(); }
  int vertex_class_of(VertexId v) const;
  int edge_class_of(const Edge& e) const;
  const std::vector<VertexId>& vertex_class(int k) const { return vertex_classes_.at(k); }
  const std::vector<Edge>& edge_class(int k) const { return edge_classes_.at(k); }
  const std::string& vertex_class_label(int k) const { return vertex_class_labels_.at(k); }
  const std::string& edge_class_label(int k) const { return edge_class_labels_.at(k); }

private:
  static ColoredGraph build(std::vector<VertexSpec> vertices,
                            std::vector<EdgeSpec> edges, bool strict);

  int n_ = 0;
  std::vector<Edge> edges_;                      // sorted, may hold junk if unchecked
  std::vector<std::string> vertex_color_labels_; // index v-1
  std::vector<std::string> edge_color_of_edge_;  // parallel to edges_
  std::vector<std::vector<VertexId>> adj_;       // simple skeleton, sorted
  bool structurally_valid_ = true;
  bool connected_ = true;

  std::vector<std::vector<VertexId>> vertex_classes_;
  std::vector<std::vector<Edge>> edge_classes_;
  std::vector<std::string> vertex_class_labels_;
  std::vector<std::string> edge_class_labels_;
  std::vector<int> vertex_class_of_;             // index v-1
  std::vector<int> edge_class_of_;               // parallel to edges_

  std::vector<Violation> violations_;

  friend ValidationReport validate(const ColoredGraph& g);
};

/// Reads a graph document:
///   { "vertices": [{"id": 1, "color": "r"}, ...],
///     "edges":    [{"u": 1, "v": 2, "color": "c"}, ...] }
/// Throws ParseError on malformed JSON or any schema/invariant violation.
ColoredGraph parse_graph(std::string_view json_text);

/// Canonical serialization: vertices sorted by id, edges sorted by (u, v).
/// parse_graph(serialize_graph(g)) reproduces g exactly.
std::string serialize_graph(const ColoredGraph& g);

/// Pure check; violations are reported, never thrown.
ValidationReport validate(const ColoredGraph& g);

struct EdgeRegularityWitness {
  Edge a, b;                 // same color, different endpoint-color pairs
};
struct VertexRegularityWitness {
  VertexId u = 0, v = 0;     // same color...
  std::string edge_color;    // ...but different incidence counts for this color
  int count_u = 0, count_v = 0;
};

struct RegularityReport {
  bool edge_regular = true;    // same-colored edges join the same vertex-color pairs
  bool vertex_regular = true;  // same-colored vertices meet each edge color equally often
  std::optional<EdgeRegularityWitness> edge_witness;
  std::optional<VertexRegularityWitness> vertex_witness;
};

RegularityReport regularity_report(const ColoredGraph& g);

/// A vertex-induced subgraph, referenced back to the parent for colors.
struct Subgraph {
  std::vector<VertexId> vertices; // sorted
  std::vector<Edge> edges;        // induced, sorted
};

Subgraph induced_subgraph(const ColoredGraph& g, std::vector<VertexId> vertices);

/// Closed neighborhood: the subgraph induced by c and everything adjacent.
Subgraph neighborhood(const ColoredGraph& g, VertexId c);

/// The components-through-c decomposition: for each connected component S of
/// g minus c, the subgraph induced on S together with c. Components are
/// ordered by smallest vertex; their pairwise intersection is exactly {c}.
/// Requires a connected graph.
std::vector<Subgraph> c_components(const ColoredGraph& g, VertexId c);

} // namespace rcoptoric
