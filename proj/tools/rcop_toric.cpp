// rcop-toric: decide structural properties of colored graphs, build the
// exponent matrices of their covariance monomial maps, complete them, and
// emit/certify Markov bases of the corresponding toric vanishing ideals.
//
// Exit codes: 0 success (and true verdicts), 1 false verdict or failure of a
// user-supplied basis, 2 input/usage error, 3 internal verification failure.
// All artifacts go to stdout; diagnostics go to stderr. Output is
// byte-identical across runs for fixed input and flags.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rcoptoric/blockpath.hpp"
#include "rcoptoric/colored_graph.hpp"
#include "rcoptoric/errors.hpp"
#include "rcoptoric/json_io.hpp"
#include "rcoptoric/markov.hpp"
#include "rcoptoric/symmetry.hpp"
#include "rcoptoric/toric_maps.hpp"
#include "rcoptoric/verify.hpp"

namespace {

using namespace rcoptoric;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ColoredGraph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

void emit(const std::string& body) { std::cout << body << "\n"; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string set_to_text(const std::vector<VertexId>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(vs[i]);
  }
  return out + "}";
}

std::string edge_to_text(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

std::string sigma_to_text(const SigmaIndex& s) {
  return "s(" + std::to_string(s.i) + "," + std::to_string(s.j) + ")";
}

std::string side_to_text(const std::vector<SigmaIndex>& side) {
  std::string out;
  for (std::size_t i = 0; i < side.size(); ++i) {
    if (i) out += "*";
    out += sigma_to_text(side[i]);
  }
  return out;
}

std::string move_to_text(const MarkovMove& m) {
  return side_to_text(m.plus) + " - " + side_to_text(m.minus);
}

// ---------------------------------------------------------------------------
// check

int run_check(const ColoredGraph& g, const std::string& format) {
  ValidationReport validation = validate(g);
  RegularityReport regularity = regularity_report(g);

  std::optional<BlockResult> block;
  std::optional<GroupDescription> group;
  std::optional<RcopVerdict> rcop;
  if (validation.connected) {
    block = is_block_graph(g);
    group = automorphism_group(g);
    rcop = is_rcop(g);
  }
  bool verdict = validation.valid && validation.connected && block && block->is_block_graph &&
                 rcop && rcop->rcop;

  if (format == "json") {
    ordered_json j;
    j["validation"] = ordered_json::parse(to_json(validation));
    j["regularity"] = ordered_json::parse(to_json(regularity));
    if (block) j["block"] = ordered_json::parse(to_json(*block));
    if (group) j["group"] = ordered_json::parse(to_json(*group));
    if (rcop) j["rcop"] = ordered_json::parse(to_json(*rcop));
    j["verdict"] = verdict;
    emit(j.dump(2));
  } else {
    std::ostringstream out;
    out << "valid: " << yes_no(validation.valid) << "\n";
    out << "connected: " << yes_no(validation.connected) << "\n";
    out << "edge-regular: " << yes_no(regularity.edge_regular) << "\n";
    out << "vertex-regular: " << yes_no(regularity.vertex_regular) << "\n";
    if (block) {
      out << "block graph: " << yes_no(block->is_block_graph) << "\n";
      out << "  blocks:";
      for (const auto& b : block->decomposition.blocks) out << " " << set_to_text(b);
      out << "\n  cut vertices:";
      for (VertexId c : block->decomposition.cut_vertices) out << " " << c;
      out << "\n";
      if (block->witness_non_edge) {
        out << "  missing edge " << block->witness_non_edge->first << "-"
            << block->witness_non_edge->second << " inside a biconnected component\n";
      }
    }
    if (group && rcop) {
      out << "orbit coloring: " << yes_no(rcop->rcop) << "\n";
      out << "  generators:";
      for (const Permutation& p : group->generators) out << " " << p.to_cycles();
      out << "\n  vertex orbits:";
      for (const auto& orbit : group->vertex_orbits) out << " " << set_to_text(orbit);
      out << "\n  edge orbits:";
      for (const auto& orbit : group->edge_orbits) {
        out << " {";
        for (std::size_t i = 0; i < orbit.size(); ++i) {
          if (i) out << ",";
          out << edge_to_text(orbit[i]);
        }
        out << "}";
      }
      out << "\n";
      if (rcop->vertex_witness) {
        out << "  vertices " << rcop->vertex_witness->first << " and "
            << rcop->vertex_witness->second << " share a color but no symmetry\n";
      }
      if (rcop->edge_witness) {
        out << "  edges " << edge_to_text(rcop->edge_witness->first) << " and "
            << edge_to_text(rcop->edge_witness->second) << " share a color but no symmetry\n";
      }
    }
    out << "verdict: " << (verdict ? "true" : "false");
    emit(out.str());
  }
  return verdict ? kExitTrue : kExitFalse;
}

// ---------------------------------------------------------------------------
// matrix

int run_matrix(const ColoredGraph& g, const std::string& map, const std::string& format) {
  ExponentMatrix m = map == "full" ? exponent_matrix_full(g) : exponent_matrix_endpoint(g);
  if (format == "json") {
    emit(to_json(m));
  } else {
    emit(matrix_to_text(m));
  }
  return kExitTrue;
}

// ---------------------------------------------------------------------------
// completion

int run_completion(const ColoredGraph& g, const std::string& format) {
  CompletionGraph comp = completion(g);
  if (format == "json") {
    emit(serialize_graph(comp.graph));
  } else {
    std::ostringstream out;
    out << "added " << comp.added.size() << " edge(s)";
    for (const auto& [edge, lambda] : comp.added) {
      out << "\n  " << edge_to_text(edge) << "  color "
          << comp.graph.edge_color_label(edge) << "  content " << to_string(lambda);
    }
    emit(out.str());
  }
  return kExitTrue;
}

// ---------------------------------------------------------------------------
// basis

int run_basis(const ColoredGraph& g, const std::string& part, const std::string& format) {
  if (part != "uncolored") {
    RcopVerdict verdict = is_rcop(g);
    if (!verdict.rcop) {
      throw PreconditionError(
          "color classes are not automorphism orbits; only --part uncolored applies");
    }
  }
  std::vector<MarkovMove> moves;
  if (part == "uncolored") {
    moves = uncolored_basis(g);
  } else if (part == "linear") {
    moves = completion_basis(g);
  } else {
    moves = rcop_basis(g);
  }
  if (format == "json") {
    emit(to_json(moves));
  } else {
    std::ostringstream out;
    for (std::size_t i = 0; i < moves.size(); ++i) {
      if (i) out << "\n";
      out << move_to_text(moves[i]);
    }
    emit(out.str());
  }
  return kExitTrue;
}

// ---------------------------------------------------------------------------
// fibers

int run_fibers(const ColoredGraph& g, int degree, std::size_t cap,
               const std::optional<std::string>& basis_path, const std::string& format) {
  std::vector<MarkovMove> moves =
      basis_path ? parse_moves(read_file(*basis_path)) : rcop_basis(g);
  FiberCertification cert = certify_fibers(g, moves, degree, cap);
  if (format == "json") {
    emit(to_json(cert));
  } else {
    std::ostringstream out;
    out << "fibers checked: " << cert.fibers_checked << "\n";
    out << "largest fiber: " << cert.max_fiber_size << "\n";
    out << "all connected: " << yes_no(cert.all_connected) << "\n";
    out << "disconnected targets: " << cert.disconnected_targets.size() << "\n";
    out << "skipped (over cap): " << cert.skipped_targets.size();
    emit(out.str());
  }
  if (!cert.all_connected) {
    if (basis_path) return kExitFalse;
    throw InternalCheckError("computed basis fails to connect some fiber");
  }
  return kExitTrue;
}

// ---------------------------------------------------------------------------
// verify

int run_verify(const ColoredGraph& g, int trials, std::uint64_t seed,
               const std::optional<std::string>& basis_path, const std::string& format) {
  BlockResult block = is_block_graph(g);
  RcopVerdict verdict = is_rcop(g);
  if (!block.is_block_graph || !verdict.rcop) {
    throw PreconditionError("verify requires a block graph whose color classes are orbits");
  }

  std::vector<MarkovMove> moves =
      basis_path ? parse_moves(read_file(*basis_path)) : rcop_basis(g);
  VanishingReport vanishing = verify_vanishing(g, moves, trials, seed);
  ExponentMatrix endpoint = exponent_matrix_endpoint(g);
  ExponentMatrix full = exponent_matrix_full(g);
  RowspanReport rowspan = rowspan_equal(g, endpoint, full);
  DimensionReport dimension = rank_dimension_check(g);
  CompletionGraph comp = completion(g);
  JordanReport jordan = jordan_square_closed(comp.graph, trials, seed);
  bool passed = vanishing.all_zero && rowspan.passed() && dimension.matches && jordan.closed;

  if (format == "json") {
    ordered_json j;
    j["vanishing"] = ordered_json::parse(to_json(vanishing));
    j["rowspan"] = ordered_json::parse(to_json(rowspan));
    j["dimension"] = ordered_json::parse(to_json(dimension));
    j["jordan"] = ordered_json::parse(to_json(jordan));
    j["passed"] = passed;
    emit(j.dump(2));
  } else {
    std::ostringstream out;
    out << "basis moves: " << moves.size() << "\n";
    out << "vanishing on " << vanishing.trials << " exact covariance samples: "
        << yes_no(vanishing.all_zero) << " (" << vanishing.evaluations << " evaluations)\n";
    out << "row spans agree: " << yes_no(rowspan.passed()) << " (ranks " << rowspan.rank_endpoint
        << "/" << rowspan.rank_full << "/" << rowspan.rank_stacked << ")\n";
    out << "rank equals color count: " << yes_no(dimension.matches) << " (" << dimension.rank
        << " vs " << dimension.color_count << ")\n";
    out << "completion square-closed: " << yes_no(jordan.closed) << "\n";
    out << "passed: " << yes_no(passed);
    emit(out.str());
  }
  if (!vanishing.all_zero && basis_path) return kExitFalse;
  if (!passed) throw InternalCheckError("verification battery failed on computed artifacts");
  return kExitTrue;
}

// ---------------------------------------------------------------------------
// audit

int run_audit(const ColoredGraph& g, const std::string& format) {
  AuditReport report = structural_audit(g);
  if (format == "json") {
    emit(to_json(report));
  } else {
    std::ostringstream out;
    for (const AuditCheck* c : {&report.endpoint_symmetry, &report.color_multiplicity,
                                &report.concatenation, &report.equivalence_isomorphism,
                                &report.branching_exclusion}) {
      out << c->name << ": " << (c->passed ? "pass" : "FAIL") << " (" << c->instances
          << " instances)";
      if (!c->passed) out << "  " << c->witness;
      out << "\n";
    }
    out << "passed: " << yes_no(report.passed());
    emit(out.str());
  }
  return report.passed() ? kExitTrue : kExitFalse;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toric structure of covariance models on colored block graphs"};
  app.require_subcommand(1);

  std::string graph_path;
  std::string format = "json";
  std::string map = "endpoint";
  std::string part = "all";
  int degree = 3;
  std::size_t cap = 5000;
  int trials = 10;
  std::uint64_t seed = 1;
  std::optional<std::string> basis_path;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("graph", graph_path, "graph document (JSON; '-' reads stdin)")->required();
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
  };

  CLI::App* check = app.add_subcommand(
      "check", "Decide connectivity, block structure, and orbit coloring");
  add_common(check);

  CLI::App* matrix =
      app.add_subcommand("matrix", "Print the exponent matrix of a monomial covariance map");
  add_common(matrix);
  matrix->add_option("--map", map, "endpoint or full-trace map")
      ->check(CLI::IsMember({"endpoint", "full"}))
      ->capture_default_str();

  CLI::App* completion_cmd = app.add_subcommand(
      "completion", "Complete a block graph, coloring new edges by path content");
  add_common(completion_cmd);

  CLI::App* basis = app.add_subcommand("basis", "Emit a Markov basis of the vanishing ideal");
  add_common(basis);
  basis->add_option("--part", part, "uncolored, linear, or all moves")
      ->check(CLI::IsMember({"uncolored", "linear", "all"}))
      ->capture_default_str();

  CLI::App* fibers =
      app.add_subcommand("fibers", "Certify fiber connectivity under a move set");
  add_common(fibers);
  fibers->add_option("--degree", degree, "largest fiber degree to sweep")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  fibers->add_option("--cap", cap, "skip fibers with more points than this")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  fibers->add_option("--basis", basis_path, "certify this move list instead of the computed one");

  CLI::App* verify =
      app.add_subcommand("verify", "Run the exact-arithmetic verification battery");
  add_common(verify);
  verify->add_option("--trials", trials, "number of sampled concentration matrices")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--seed", seed, "base seed for deterministic sampling")
      ->capture_default_str();
  verify->add_option("--basis", basis_path, "verify this move list instead of the computed one");

  CLI::App* audit =
      app.add_subcommand("audit", "Exhaustively audit shortest-path structure and coloring");
  add_common(audit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitTrue : kExitInput;
  }

  try {
    const ColoredGraph g = load_graph(graph_path);
    if (check->parsed()) return run_check(g, format);
    if (matrix->parsed()) return run_matrix(g, map, format);
    if (completion_cmd->parsed()) return run_completion(g, format);
    if (basis->parsed()) return run_basis(g, part, format);
    if (fibers->parsed()) return run_fibers(g, degree, cap, basis_path, format);
    if (verify->parsed()) return run_verify(g, trials, seed, basis_path, format);
    if (audit->parsed()) return run_audit(g, format);
    std::cerr << "error: no command selected\n";
    return kExitInput;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const LimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InternalCheckError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
