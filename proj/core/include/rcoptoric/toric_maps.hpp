#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rcoptoric/blockpath.hpp"
#include "rcoptoric/colored_graph.hpp"
#include "rcoptoric/rational_linalg.hpp"

namespace rcoptoric {

/// Index of one covariance entry: an unordered vertex pair with i <= j.
struct SigmaIndex {
  VertexId i = 0, j = 0;
  friend auto operator<=>(const SigmaIndex&, const SigmaIndex&) = default;
};

inline SigmaIndex make_sigma(VertexId a, VertexId b) {
  return a <= b ? SigmaIndex{a, b} : SigmaIndex{b, a};
}

/// All n(n+1)/2 indices in lexicographic order (1,1),(1,2),...,(n,n).
std::vector<SigmaIndex> sigma_indices(int n);

/// An integer exponent matrix whose rows are colors and whose columns are
/// covariance entries. Row order: vertex color classes (by smallest member),
/// then edge color classes (by least member edge). Column order:
/// lexicographic. This layout is independent of label strings.
struct ExponentMatrix {
  std::vector<ColorId> rows;
  std::vector<SigmaIndex> cols;
  std::vector<std::vector<int>> entries; // rows x cols

  int col_of(const SigmaIndex& s) const;
  std::vector<long long> column(int c) const;
  RationalMatrix as_rational() const;
};

/// Exponents of the endpoint monomial map: column (i,j) counts the colors of
/// the two endpoints (so a diagonal column carries 2) plus the colors of the
/// edges on the unique shortest i-j path. Requires a valid connected graph
/// with unique shortest paths between all pairs.
ExponentMatrix exponent_matrix_endpoint(const ColoredGraph& g);

/// Exponents of the full-trace monomial map: column (i,j) counts the color
/// of every vertex on the unique shortest i-j path once (so a diagonal
/// column carries 1) plus the path's edge colors.
ExponentMatrix exponent_matrix_full(const ColoredGraph& g);

std::string matrix_to_text(const ExponentMatrix& m);

struct RowspanCheck {
  std::string vertex_color;
  bool holds = false;
};

/// Certifies that the endpoint and full-trace matrices have the same row
/// span: equal ranks (also of the stacked matrix) plus the per-vertex-color
/// half-sum identity
///   2*b_v = a_v + sum over edge colors with one v-colored end of a_e
///               + 2 * sum over edge colors with two v-colored ends of a_e.
struct RowspanReport {
  int rank_endpoint = 0;
  int rank_full = 0;
  int rank_stacked = 0;
  bool ranks_equal = false;
  std::vector<RowspanCheck> half_sum_checks;
  bool identity_holds = false;
  bool passed() const { return ranks_equal && identity_holds; }
};

RowspanReport rowspan_equal(const ColoredGraph& g, const ExponentMatrix& endpoint,
                            const ExponentMatrix& full);

/// The completed graph plus the color content that justified each new edge.
struct CompletionGraph {
  ColoredGraph graph;
  std::vector<std::pair<Edge, LambdaMultiset>> added; // sorted by edge
};

/// Completes a connected block graph to a complete graph: every non-edge
/// {i,j} receives a fresh color shared exactly by the non-edges whose
/// shortest-path color content matches. Fresh labels are namespaced with a
/// "cmp:" prefix (extended if user labels collide) followed by the canonical
/// content string. When `verify_closure` is set and the input has orbit
/// color classes, the output is checked to have them too (a guaranteed
/// postcondition; failure reports an internal error).
CompletionGraph completion(const ColoredGraph& g, bool verify_closure = true);

} // namespace rcoptoric
