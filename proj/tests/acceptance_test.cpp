// Acceptance gate for the library: every criterion that defines "done" runs
// here, one PASS/FAIL line each, with wall-clock budgets enforced. The
// checks are deliberately independent of the unit suite: golden values are
// written out in full and every property is recomputed from scratch.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "rcoptoric/blockpath.hpp"
#include "rcoptoric/colored_graph.hpp"
#include "rcoptoric/errors.hpp"
#include "rcoptoric/markov.hpp"
#include "rcoptoric/symmetry.hpp"
#include "rcoptoric/toric_maps.hpp"
#include "rcoptoric/verify.hpp"

using namespace rcoptoric;
using rcoptoric::testing::load_graph_file;
using rcoptoric::testing::random_orbit_block_graph;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

// ---------------------------------------------------------------------------
// 1. The endpoint exponent matrix of the worked example, entry by entry.

void golden_exponent_matrix() {
  ColoredGraph g = load_graph_file("paw.json");
  ExponentMatrix m = exponent_matrix_endpoint(g);

  std::vector<std::string> rows = {"v:r", "v:b", "v:p", "e:c", "e:g", "e:y"};
  require(m.rows.size() == rows.size(), "expected six color rows");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(to_string(m.rows[r]) == rows[r], "row " + std::to_string(r) + " is not " + rows[r]);
  }
  require(m.cols == sigma_indices(4), "columns must be the ten ordered pairs");

  std::vector<std::vector<int>> expected = {
      {2, 2, 1, 1, 2, 1, 1, 0, 0, 0}, // v:r
      {0, 0, 1, 0, 0, 1, 0, 2, 1, 0}, // v:b
      {0, 0, 0, 1, 0, 0, 1, 0, 1, 2}, // v:p
      {0, 1, 0, 0, 0, 0, 0, 0, 0, 0}, // e:c
      {0, 0, 1, 1, 0, 1, 1, 0, 0, 0}, // e:g
      {0, 0, 0, 1, 0, 0, 1, 0, 1, 0}, // e:y
  };
  require(m.entries == expected, "entries differ from the golden matrix");
}

// ---------------------------------------------------------------------------
// 2. Both halves of the Markov basis of the worked example.

void golden_bases() {
  ColoredGraph g = load_graph_file("paw.json");

  std::vector<MarkovMove> quads = uncolored_basis(g);
  std::vector<MarkovMove> expected_quads = {
      normalize_move({{1, 3}, {2, 4}}, {{1, 4}, {2, 3}}),
      normalize_move({{1, 3}, {3, 4}}, {{1, 4}, {3, 3}}),
      normalize_move({{2, 3}, {3, 4}}, {{2, 4}, {3, 3}}),
  };
  std::sort(expected_quads.begin(), expected_quads.end(), move_order);
  require(quads == expected_quads, "quadratic moves differ from the golden three");

  std::vector<MarkovMove> linear = completion_basis(g);
  std::vector<MarkovMove> expected_linear = {
      normalize_move({{1, 1}}, {{2, 2}}),
      normalize_move({{1, 3}}, {{2, 3}}),
      normalize_move({{1, 4}}, {{2, 4}}),
  };
  std::sort(expected_linear.begin(), expected_linear.end(), move_order);
  require(linear == expected_linear, "linear moves differ from the golden three");

  std::vector<MarkovMove> all = rcop_basis(g);
  require(all.size() == 6, "combined basis must hold six moves");
  require(all[0].degree() == 1 && all[2].degree() == 1 && all[3].degree() == 2,
          "combined basis must list linear moves first");
  for (const MarkovMove& m : expected_quads) {
    require(std::find(all.begin(), all.end(), m) != all.end(), "quadratic move missing");
  }
  for (const MarkovMove& m : expected_linear) {
    require(std::find(all.begin(), all.end(), m) != all.end(), "linear move missing");
  }
}

// ---------------------------------------------------------------------------
// 3. The printed generators of the vanishing ideal: integer kernel
//    membership plus exact vanishing on sampled covariances.

void ideal_membership_and_vanishing() {
  ColoredGraph g = load_graph_file("paw.json");
  ExponentMatrix a = exponent_matrix_endpoint(g);

  std::vector<MarkovMove> generators = {
      normalize_move({{1, 1}}, {{2, 2}}),
      normalize_move({{1, 3}}, {{2, 3}}),
      normalize_move({{1, 4}}, {{2, 4}}),
      normalize_move({{2, 4}, {3, 3}}, {{2, 3}, {3, 4}}),
  };
  for (std::size_t k = 0; k < generators.size(); ++k) {
    require(kernel_member(a, generators[k]),
            "generator " + std::to_string(k) + " is outside the integer kernel");
  }

  // A hands-on kernel witness: columns (1,3)+(3,4) and (1,4)+(3,3) add to
  // the same color vector (1,2,1,0,1,1).
  auto add = [&](SigmaIndex s, SigmaIndex t) {
    std::vector<long long> u = a.column(a.col_of(s));
    std::vector<long long> v = a.column(a.col_of(t));
    for (std::size_t r = 0; r < u.size(); ++r) u[r] += v[r];
    return u;
  };
  std::vector<long long> left = add({1, 3}, {3, 4});
  std::vector<long long> right = add({1, 4}, {3, 3});
  require(left == right, "kernel witness columns disagree");
  require(left == std::vector<long long>{1, 2, 1, 0, 1, 1}, "kernel witness vector is wrong");

  VanishingReport report = verify_vanishing(g, generators, 10, 1);
  require(report.all_zero, "a generator failed to vanish on an exact covariance");
  require(report.evaluations == 40, "expected 10 trials x 4 generators");
}

// ---------------------------------------------------------------------------
// 4. Structure verdicts across the curated graphs, witnesses included.

void structure_verdicts() {
  ColoredGraph paw = load_graph_file("paw.json");
  require(is_block_graph(paw).is_block_graph, "the example graph is a block graph");
  require(is_rcop(paw).rcop, "the example graph has orbit color classes");

  ColoredGraph lobed = load_graph_file("twostar.json");
  require(is_block_graph(lobed).is_block_graph, "the lobed graph is a block graph");
  require(is_rcop(lobed).rcop, "the lobed graph has orbit color classes");
  GroupDescription group = automorphism_group(lobed);
  require(group_order(11, group.generators) == 16, "the lobed graph has 16 symmetries");

  // The discovered group coincides, by order and orbits, with the group
  // generated by the four hand-written symmetries of this graph.
  std::vector<Permutation> printed = {
      Permutation::from_cycles("(1 2)", 11),
      Permutation::from_cycles("(4 5)(6 7)(8 10)(9 11)", 11),
      Permutation::from_cycles("(8 9)", 11),
      Permutation::from_cycles("(10 11)", 11),
  };
  require(group_order(11, printed) == 16, "the hand-written generators reach order 16");
  require(vertex_orbits_of(11, printed) == group.vertex_orbits,
          "vertex orbits differ from the hand-written group");
  require(edge_orbits_of(lobed.edges(), printed) == group.edge_orbits,
          "edge orbits differ from the hand-written group");

  RcopVerdict recolored = is_rcop(load_graph_file("twostar_recolored.json"));
  require(!recolored.rcop, "recoloring one leaf must break the orbit property");
  require(recolored.edge_witness.has_value(), "expected an edge witness");
  require(recolored.edge_witness->first == Edge{1, 3} &&
              recolored.edge_witness->second == Edge{2, 3},
          "expected the edges at the recolored leaf as witness");

  ColoredGraph cycle = load_graph_file("fourcycle.json");
  require(is_rcop(cycle).rcop, "the colored cycle has orbit classes");
  require(!is_block_graph(cycle).is_block_graph, "the cycle is not a block graph");
  bool ambiguous = false;
  try {
    shortest_path(cycle, 1, 3);
  } catch (const PreconditionError&) {
    ambiguous = true;
  }
  require(ambiguous, "opposite cycle corners must have no unique shortest path");

  ColoredGraph path = load_graph_file("path3.json");
  require(is_block_graph(path).is_block_graph, "the path is a block graph");
  RcopVerdict pv = is_rcop(path);
  require(!pv.rcop, "equal edge colors with rigid endpoints are not orbits");
  require(pv.edge_witness.has_value(), "expected an edge witness on the path");
}

// ---------------------------------------------------------------------------
// 5. Completion: the added edges, the fresh color, and closure under
//    squaring.

void completion_criterion() {
  ColoredGraph g = load_graph_file("paw.json");
  CompletionGraph comp = completion(g);

  require(comp.added.size() == 2, "the example graph completes with two edges");
  require(comp.added[0].first == Edge{1, 4} && comp.added[1].first == Edge{2, 4},
          "expected the two missing edges at vertex 4");
  std::string c14 = comp.graph.edge_color_label(Edge{1, 4});
  std::string c24 = comp.graph.edge_color_label(Edge{2, 4});
  require(c14 == c24, "both added edges must share one color");
  std::set<std::string> user;
  for (const Edge& e : g.edges()) user.insert(g.edge_color_label(e));
  require(!user.count(c14), "the added color must be fresh");
  require(comp.graph.edges().size() == 6, "the completion of four vertices has six edges");
  require(is_rcop(comp.graph).rcop, "the completed example keeps orbit classes");

  JordanReport jordan = jordan_square_closed(comp.graph, 10, 1);
  require(jordan.closed, "squares must stay inside the completed pattern");

  CompletionGraph lobed = completion(load_graph_file("twostar.json"));
  require(is_rcop(lobed.graph).rcop, "the completed lobed graph keeps orbit classes");
  require(lobed.graph.edges().size() == 55, "eleven vertices complete to 55 edges");
}

// ---------------------------------------------------------------------------
// 6. The two monomial maps have the same row span, on the curated graphs
//    and across a random family.

void row_span_identity() {
  std::vector<ColoredGraph> family = {load_graph_file("paw.json"),
                                      load_graph_file("twostar.json")};
  for (std::uint64_t seed = 201; seed <= 210; ++seed) {
    family.push_back(random_orbit_block_graph(seed, 12));
  }
  require(family.size() >= 12, "family must include at least ten random graphs");
  for (std::size_t k = 0; k < family.size(); ++k) {
    const ColoredGraph& g = family[k];
    RowspanReport r = rowspan_equal(g, exponent_matrix_endpoint(g), exponent_matrix_full(g));
    std::ostringstream tag;
    tag << "graph " << k << " (n=" << g.vertex_count() << ")";
    require(r.ranks_equal, tag.str() + ": ranks differ");
    require(r.identity_holds, tag.str() + ": half-sum identity fails");
  }
}

// ---------------------------------------------------------------------------
// 7. Every small fiber is connected by the emitted basis; withholding the
//    linear moves breaks connectivity.

void fiber_connectivity() {
  ColoredGraph paw = load_graph_file("paw.json");
  FiberCertification cert = certify_fibers(paw, rcop_basis(paw), 3, 5000);
  require(cert.all_connected, "a fiber of the example graph is disconnected");
  require(cert.skipped_targets.empty(), "no example fiber should exceed the cap");
  require(cert.fibers_checked > 0, "the sweep must check fibers");

  int random_graphs = 0;
  for (std::uint64_t seed : {101u, 102u, 103u, 104u, 105u, 106u}) {
    ColoredGraph g = random_orbit_block_graph(seed, 8);
    FiberCertification c = certify_fibers(g, rcop_basis(g), 3, 5000);
    std::ostringstream tag;
    tag << "seed " << seed << " (n=" << g.vertex_count() << ")";
    require(c.all_connected, tag.str() + ": disconnected fiber");
    require(c.fibers_checked > 0, tag.str() + ": empty sweep");
    ++random_graphs;
  }
  require(random_graphs >= 5, "at least five random graphs must be certified");

  // Dropping the linear moves must disconnect some fiber: entries with equal
  // path content sit in one fiber that quadratic moves cannot bridge.
  FiberCertification broken = certify_fibers(paw, uncolored_basis(paw), 2, 5000);
  require(!broken.all_connected, "withholding linear moves must disconnect a fiber");
  require(!broken.disconnected_targets.empty(), "expected recorded disconnected targets");
}

// ---------------------------------------------------------------------------
// 8. The rank of the exponent matrix equals the number of colors.

void rank_dimension() {
  std::vector<ColoredGraph> family = {load_graph_file("paw.json"),
                                      load_graph_file("twostar.json")};
  for (std::uint64_t seed = 301; seed <= 310; ++seed) {
    family.push_back(random_orbit_block_graph(seed, 12));
  }
  for (std::size_t k = 0; k < family.size(); ++k) {
    DimensionReport d = rank_dimension_check(family[k]);
    std::ostringstream tag;
    tag << "graph " << k << ": rank " << d.rank << " vs " << d.color_count << " colors";
    require(d.matches, tag.str());
  }
}

// ---------------------------------------------------------------------------
// 9. Structural audits pass, and every pair of content-equal paths is
//    realized by an actual automorphism.

void structural_audits() {
  std::vector<ColoredGraph> family = {load_graph_file("paw.json"),
                                      load_graph_file("twostar.json")};
  for (std::uint64_t seed : {401u, 402u, 403u, 404u, 405u, 406u}) {
    family.push_back(random_orbit_block_graph(seed, 12));
  }
  for (std::size_t k = 0; k < family.size(); ++k) {
    AuditReport report = structural_audit(family[k]);
    for (const AuditCheck* c :
         {&report.endpoint_symmetry, &report.color_multiplicity, &report.concatenation,
          &report.equivalence_isomorphism, &report.branching_exclusion}) {
      require(c->passed, "graph " + std::to_string(k) + ": audit '" + c->name +
                             "' failed: " + c->witness);
    }

    // Every linear move pairs entries whose paths an automorphism can swap.
    for (const MarkovMove& mv : completion_basis(family[k])) {
      PathDescriptor p = shortest_path(family[k], mv.plus[0].i, mv.plus[0].j);
      PathDescriptor q = shortest_path(family[k], mv.minus[0].i, mv.minus[0].j);
      require(path_automorphism(family[k], p.vertices, q.vertices).has_value(),
              "graph " + std::to_string(k) + ": a linear move pairs entries no " +
                  "automorphism aligns");
    }
  }

  // Path-automorphism consistency on small graphs: equal content implies an
  // automorphism aligning the paths.
  std::vector<ColoredGraph> small = {load_graph_file("paw.json")};
  for (std::uint64_t seed : {13u, 29u, 47u}) small.push_back(random_orbit_block_graph(seed, 9));
  for (const ColoredGraph& g : small) {
    const int n = g.vertex_count();
    for (VertexId u = 1; u <= n; ++u) {
      for (VertexId v = u; v <= n; ++v) {
        for (VertexId x = 1; x <= n; ++x) {
          for (VertexId y = x; y <= n; ++y) {
            if (path_lambda(g, u, v) != path_lambda(g, x, y)) continue;
            PathDescriptor p = shortest_path(g, u, v);
            PathDescriptor q = shortest_path(g, x, y);
            require(paths_equivalent(p, q) == PathRelation::isomorphic,
                    "content-equal paths failed to align as sequences");
            require(path_automorphism(g, p.vertices, q.vertices).has_value(),
                    "no automorphism carries a path onto its content twin");
          }
        }
      }
    }
  }
}

struct Criterion {
  const char* name;
  double budget_seconds;
  std::function<void()> body;
};

} // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"golden-exponent-matrix", 1.0, golden_exponent_matrix},
      {"golden-bases", 1.0, golden_bases},
      {"ideal-membership-and-vanishing", 5.0, ideal_membership_and_vanishing},
      {"structure-verdicts", 10.0, structure_verdicts},
      {"completion", 5.0, completion_criterion},
      {"row-span-identity", 30.0, row_span_identity},
      {"fiber-connectivity", 120.0, fiber_connectivity},
      {"rank-dimension", 10.0, rank_dimension},
      {"structural-audits", 60.0, structural_audits},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.body();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (error.empty() && elapsed > c.budget_seconds) {
      std::ostringstream o;
      o << "exceeded " << c.budget_seconds << "s budget";
      error = o.str();
    }
    if (error.empty()) {
      std::printf("PASS %s (%.2fs)\n", c.name, elapsed);
    } else {
      std::printf("FAIL %s: %s (%.2fs)\n", c.name, error.c_str(), elapsed);
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}
