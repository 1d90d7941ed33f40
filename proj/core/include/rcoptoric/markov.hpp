#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rcoptoric/toric_maps.hpp"

namespace rcoptoric {

/// A binomial move sigma_plus - sigma_minus between covariance monomials.
/// Both sides are sorted multisets of equal size with disjoint supports, and
/// the smallest index overall lies in `plus`.
struct MarkovMove {
  std::vector<SigmaIndex> plus;
  std::vector<SigmaIndex> minus;
  int degree() const { return static_cast<int>(plus.size()); }
  friend auto operator<=>(const MarkovMove&, const MarkovMove&) = default;
};

/// Cancels shared entries, sorts both sides, and orients the move so the
/// least index overall is positive. A fully cancelled (degenerate) move
/// comes back with both sides empty.
MarkovMove normalize_move(std::vector<SigmaIndex> plus, std::vector<SigmaIndex> minus);

/// Basis ordering used in every emitted list: by degree, then plus, then
/// minus, lexicographically.
bool move_order(const MarkovMove& a, const MarkovMove& b);

/// Quadratic moves of the underlying uncolored graph: sigma_ij*sigma_kl -
/// sigma_ik*sigma_jl whenever the two unions of shortest-path edge sets
/// agree as multisets of edges (colors ignored). Enumerated by a direct
/// quartic scan over ordered vertex 4-tuples, deduplicated and normalized.
/// Requires a valid connected block graph.
std::vector<MarkovMove> uncolored_basis(const ColoredGraph& g);

/// Linear moves sigma_ij - sigma_kl for entries whose shortest paths carry
/// the same color content. Emitted as a star against the least entry of each
/// content class (a spanning set for the class), or as all pairs when
/// `all_pairs` is set. Only color-content equality is consulted — no
/// automorphism search. Requires a valid connected block graph whose color
/// classes are automorphism orbits (checked upstream).
std::vector<MarkovMove> completion_basis(const ColoredGraph& g, bool all_pairs = false);

/// The union of the quadratic and linear moves, each re-validated to lie in
/// the integer kernel of the endpoint exponent matrix (internal check).
std::vector<MarkovMove> rcop_basis(const ColoredGraph& g);

/// Whether the move's exponent vector lies in ker_Z of the matrix: the
/// column sums over `plus` and `minus` agree.
bool kernel_member(const ExponentMatrix& a, const MarkovMove& m);

/// All nonnegative integer exponent vectors p with a*p == target.
struct Fiber {
  std::vector<long long> target;        // indexed like a.rows
  std::vector<std::vector<int>> points; // each indexed like a.cols, lex sorted
};

/// Exhaustive depth-first enumeration with feasibility pruning. Throws
/// LimitError when more than `cap` points exist (reported, never truncated).
Fiber enumerate_fiber(const ExponentMatrix& a, const std::vector<long long>& target,
                      std::size_t cap);

struct FiberConnectivity {
  bool connected = true;
  std::size_t component_count = 0;
};

/// Connectivity of the fiber graph whose edges join points differing by one
/// move (applied in either direction).
FiberConnectivity fiber_connected(const Fiber& fiber, const std::vector<MarkovMove>& moves,
                                  const ExponentMatrix& a);

/// Sweep over every fiber whose target is a sum of at most `degree_bound`
/// columns: each must be connected under `moves`. Fibers larger than `cap`
/// are reported as skipped rather than silently ignored.
struct FiberCertification {
  int degree_bound = 0;
  std::size_t cap = 0;
  long long fibers_checked = 0;
  std::size_t max_fiber_size = 0;
  bool all_connected = true;
  std::vector<std::vector<long long>> disconnected_targets;
  std::vector<std::vector<long long>> skipped_targets;
};

FiberCertification certify_fibers(const ColoredGraph& g, const std::vector<MarkovMove>& moves,
                                  int degree_bound, std::size_t cap);

} // namespace rcoptoric
