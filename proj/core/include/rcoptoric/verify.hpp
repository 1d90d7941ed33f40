#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rcoptoric/colored_graph.hpp"
#include "rcoptoric/markov.hpp"
#include "rcoptoric/rational_linalg.hpp"

namespace rcoptoric {

/// Spreads a base seed across trials so per-trial streams never overlap.
std::uint64_t derive_seed(std::uint64_t seed, int trial);

/// A concentration matrix drawn from the model's pattern space: one exact
/// rational per color class, symmetric, zero on non-edges, strictly
/// diagonally dominant (hence positive definite and invertible).
struct ConcentrationSample {
  RationalMatrix k;
  std::vector<std::pair<ColorId, Rational>> class_values; // canonical class order
};

/// Deterministic in (g, seed): off-diagonal class values are rationals in
/// (-1, 1) with denominator at most 1000; diagonal class values sit one unit
/// above the largest off-diagonal row sum, separated by per-class offsets of
/// (class index)/97. A redraw budget of 8 guards the dominance certificate.
ConcentrationSample sample_concentration(const ColoredGraph& g, std::uint64_t seed);

/// Sigma = K^{-1}, computed exactly and checked against K (internal check).
RationalMatrix covariance_from(const ConcentrationSample& sample);

struct VanishingReport {
  int trials = 0;
  long long evaluations = 0;
  bool all_zero = true;
  struct Witness {
    int trial = 0;
    std::size_t move_index = 0;
    std::string value; // the nonzero difference
  };
  std::optional<Witness> witness;
};

/// Evaluates every move on the exact covariance of `trials` deterministic
/// samples (trial t reseeds from (seed, t)); every binomial must vanish
/// identically.
VanishingReport verify_vanishing(const ColoredGraph& g, const std::vector<MarkovMove>& moves,
                                 int trials, std::uint64_t seed);

struct JordanReport {
  int trials = 0;
  bool closed = true;
  struct Witness {
    int trial = 0;
    std::string kind;  // "vertex" or "edge"
    VertexId i = 0, j = 0, k = 0, l = 0;
    std::string lhs, rhs;
  };
  std::optional<Witness> witness;
};

/// For a complete colored graph: whether K*K stays inside the pattern space
/// (constant over each vertex class diagonal and each edge class
/// off-diagonal) for every sampled K. Requires a complete graph.
JordanReport jordan_square_closed(const ColoredGraph& g, int trials, std::uint64_t seed);

struct DimensionReport {
  int rank = 0;
  int color_count = 0;
  bool matches = false;
};

/// Rank of the endpoint exponent matrix against the number of colors; these
/// agree exactly on orbit-colored block graphs.
DimensionReport rank_dimension_check(const ColoredGraph& g);

} // namespace rcoptoric
