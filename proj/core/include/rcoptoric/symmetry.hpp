#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rcoptoric/colored_graph.hpp"

namespace rcoptoric {

/// A permutation of 1..n, stored by images.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(int n); // identity

  static Permutation from_images(std::vector<VertexId> images);
  /// Parses cycle notation, e.g. "(1 2)(4 5)"; "()" is the identity.
  static Permutation from_cycles(const std::string& text, int n);

  int size() const { return static_cast<int>(images_.size()); }
  VertexId apply(VertexId v) const { return images_.at(static_cast<std::size_t>(v - 1)); }
  Edge apply(const Edge& e) const { return make_edge(apply(e.u), apply(e.v)); }
  const std::vector<VertexId>& images() const { return images_; }

  Permutation inverse() const;
  /// (a.then(b)).apply(v) == b.apply(a.apply(v)) — apply a first, then b.
  Permutation then(const Permutation& b) const;
  bool is_identity() const;

  /// Cycle notation: fixed points omitted, cycles sorted by smallest element,
  /// each cycle starting at its smallest element. Identity renders as "()".
  std::string to_cycles() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<VertexId> images_;
};

struct GroupDescription {
  std::vector<Permutation> generators;              // deterministic order
  std::vector<std::vector<VertexId>> vertex_orbits; // sorted, by smallest member
  std::vector<std::vector<Edge>> edge_orbits;
};

/// Generators of the full color-preserving automorphism group, found by a
/// backtracking search over vertex images ordered by (color class size,
/// degree). Requires a valid connected graph.
GroupDescription automorphism_group(const ColoredGraph& g);

struct RcopVerdict {
  bool rcop = false;
  // On failure: two same-colored objects no automorphism identifies.
  std::optional<std::pair<VertexId, VertexId>> vertex_witness;
  std::optional<std::pair<Edge, Edge>> edge_witness;
};

/// True iff every vertex and edge color class is a single orbit of the
/// color-preserving automorphism group.
RcopVerdict is_rcop(const ColoredGraph& g);

/// Searches for a color-preserving automorphism extending the given partial
/// assignment (pairs (v, image)); std::nullopt if none exists.
std::optional<Permutation> find_automorphism_extending(
    const ColoredGraph& g, const std::vector<std::pair<VertexId, VertexId>>& prescribed);

/// For two vertex sequences p, q of equal length: an automorphism mapping
/// p[i] to q[i] for every i, or p[i] to q[len-1-i] if only the reversed
/// orientation admits one. std::nullopt when neither does.
std::optional<Permutation> path_automorphism(const ColoredGraph& g,
                                             const std::vector<VertexId>& p,
                                             const std::vector<VertexId>& q);

/// Every element of the group generated by `generators`, found by closure
/// enumeration. Throws LimitError when the order exceeds `ceiling` — a
/// reported limit, never a silent truncation.
std::vector<Permutation> group_elements(int n, const std::vector<Permutation>& generators,
                                        std::size_t ceiling = 1'000'000);

std::size_t group_order(int n, const std::vector<Permutation>& generators,
                        std::size_t ceiling = 1'000'000);

std::vector<std::vector<VertexId>> vertex_orbits_of(int n,
                                                    const std::vector<Permutation>& generators);

std::vector<std::vector<Edge>> edge_orbits_of(const std::vector<Edge>& edges,
                                              const std::vector<Permutation>& generators);

} // namespace rcoptoric
