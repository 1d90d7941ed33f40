#include "rcoptoric/json_io.hpp"

#include <json.hpp>

#include "rcoptoric/errors.hpp"

namespace rcoptoric {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json edge_json(const Edge& e) { return ordered_json::array({e.u, e.v}); }

ordered_json sigma_json(const SigmaIndex& s) { return ordered_json::array({s.i, s.j}); }

ordered_json sigma_list_json(const std::vector<SigmaIndex>& side) {
  ordered_json arr = ordered_json::array();
  for (const SigmaIndex& s : side) arr.push_back(sigma_json(s));
  return arr;
}

ordered_json move_json(const MarkovMove& m) {
  ordered_json j;
  j["plus"] = sigma_list_json(m.plus);
  j["minus"] = sigma_list_json(m.minus);
  return j;
}

ordered_json check_json(const AuditCheck& c) {
  ordered_json j;
  j["name"] = c.name;
  j["passed"] = c.passed;
  j["instances"] = c.instances;
  if (!c.passed) j["witness"] = c.witness;
  return j;
}

std::string dump(const ordered_json& j) { return j.dump(2); }

} // namespace

std::string to_json(const ValidationReport& report) {
  ordered_json j;
  j["valid"] = report.valid;
  j["connected"] = report.connected;
  ordered_json violations = ordered_json::array();
  for (const Violation& v : report.violations) {
    violations.push_back({{"kind", v.kind}, {"detail", v.detail}});
  }
  j["violations"] = violations;
  return dump(j);
}

std::string to_json(const RegularityReport& report) {
  ordered_json j;
  j["edge_regular"] = report.edge_regular;
  j["vertex_regular"] = report.vertex_regular;
  if (report.edge_witness) {
    j["edge_witness"] = {{"a", edge_json(report.edge_witness->a)},
                         {"b", edge_json(report.edge_witness->b)}};
  }
  if (report.vertex_witness) {
    const VertexRegularityWitness& w = *report.vertex_witness;
    j["vertex_witness"] = {{"u", w.u},
                           {"v", w.v},
                           {"edge_color", w.edge_color},
                           {"count_u", w.count_u},
                           {"count_v", w.count_v}};
  }
  return dump(j);
}

std::string to_json(const RcopVerdict& verdict) {
  ordered_json j;
  j["rcop"] = verdict.rcop;
  if (verdict.vertex_witness) {
    j["vertex_witness"] =
        ordered_json::array({verdict.vertex_witness->first, verdict.vertex_witness->second});
  }
  if (verdict.edge_witness) {
    j["edge_witness"] = ordered_json::array(
        {edge_json(verdict.edge_witness->first), edge_json(verdict.edge_witness->second)});
  }
  return dump(j);
}

std::string to_json(const BlockResult& result) {
  ordered_json j;
  j["block"] = result.is_block_graph;
  ordered_json blocks = ordered_json::array();
  for (const auto& b : result.decomposition.blocks) blocks.push_back(b);
  j["blocks"] = blocks;
  j["cut_vertices"] = result.decomposition.cut_vertices;
  if (result.witness_component) j["witness_component"] = *result.witness_component;
  if (result.witness_non_edge) {
    j["witness_non_edge"] =
        ordered_json::array({result.witness_non_edge->first, result.witness_non_edge->second});
  }
  return dump(j);
}

std::string to_json(const GroupDescription& group) {
  ordered_json j;
  ordered_json gens = ordered_json::array();
  for (const Permutation& p : group.generators) gens.push_back(p.to_cycles());
  j["generators"] = gens;
  ordered_json vorbits = ordered_json::array();
  for (const auto& orbit : group.vertex_orbits) vorbits.push_back(orbit);
  j["vertex_orbits"] = vorbits;
  ordered_json eorbits = ordered_json::array();
  for (const auto& orbit : group.edge_orbits) {
    ordered_json arr = ordered_json::array();
    for (const Edge& e : orbit) arr.push_back(edge_json(e));
    eorbits.push_back(arr);
  }
  j["edge_orbits"] = eorbits;
  return dump(j);
}

std::string to_json(const PathDescriptor& path) {
  ordered_json j;
  j["vertices"] = path.vertices;
  j["vertex_colors"] = path.vertex_colors;
  j["edge_colors"] = path.edge_colors;
  return dump(j);
}

std::string to_json(const ExponentMatrix& matrix) {
  ordered_json j;
  ordered_json rows = ordered_json::array();
  for (const ColorId& c : matrix.rows) rows.push_back(to_string(c));
  j["rows"] = rows;
  ordered_json cols = ordered_json::array();
  for (const SigmaIndex& s : matrix.cols) cols.push_back(sigma_json(s));
  j["cols"] = cols;
  j["entries"] = matrix.entries;
  return dump(j);
}

std::string to_json(const RowspanReport& report) {
  ordered_json j;
  j["rank_endpoint"] = report.rank_endpoint;
  j["rank_full"] = report.rank_full;
  j["rank_stacked"] = report.rank_stacked;
  j["ranks_equal"] = report.ranks_equal;
  ordered_json checks = ordered_json::array();
  for (const RowspanCheck& c : report.half_sum_checks) {
    checks.push_back({{"vertex_color", c.vertex_color}, {"holds", c.holds}});
  }
  j["half_sum_checks"] = checks;
  j["identity_holds"] = report.identity_holds;
  j["passed"] = report.passed();
  return dump(j);
}

std::string to_json(const std::vector<MarkovMove>& moves) {
  ordered_json arr = ordered_json::array();
  for (const MarkovMove& m : moves) arr.push_back(move_json(m));
  return dump(arr);
}

std::string to_json(const AuditReport& report) {
  ordered_json j;
  ordered_json checks = ordered_json::array();
  checks.push_back(check_json(report.endpoint_symmetry));
  checks.push_back(check_json(report.color_multiplicity));
  checks.push_back(check_json(report.concatenation));
  checks.push_back(check_json(report.equivalence_isomorphism));
  checks.push_back(check_json(report.branching_exclusion));
  j["checks"] = checks;
  j["passed"] = report.passed();
  return dump(j);
}

std::string to_json(const FiberCertification& cert) {
  ordered_json j;
  j["degree_bound"] = cert.degree_bound;
  j["cap"] = cert.cap;
  j["fibers_checked"] = cert.fibers_checked;
  j["max_fiber_size"] = cert.max_fiber_size;
  j["all_connected"] = cert.all_connected;
  j["disconnected_targets"] = cert.disconnected_targets;
  j["skipped_targets"] = cert.skipped_targets;
  return dump(j);
}

std::string to_json(const VanishingReport& report) {
  ordered_json j;
  j["trials"] = report.trials;
  j["evaluations"] = report.evaluations;
  j["all_zero"] = report.all_zero;
  if (report.witness) {
    j["witness"] = {{"trial", report.witness->trial},
                    {"move_index", report.witness->move_index},
                    {"value", report.witness->value}};
  }
  return dump(j);
}

std::string to_json(const JordanReport& report) {
  ordered_json j;
  j["trials"] = report.trials;
  j["closed"] = report.closed;
  if (report.witness) {
    const JordanReport::Witness& w = *report.witness;
    j["witness"] = {{"trial", w.trial}, {"kind", w.kind}, {"i", w.i}, {"j", w.j},
                    {"k", w.k},         {"l", w.l},       {"lhs", w.lhs}, {"rhs", w.rhs}};
  }
  return dump(j);
}

std::string to_json(const DimensionReport& report) {
  ordered_json j;
  j["rank"] = report.rank;
  j["color_count"] = report.color_count;
  j["matches"] = report.matches;
  return dump(j);
}

namespace {

std::vector<SigmaIndex> parse_side(const ordered_json& side, const char* key) {
  if (!side.is_array()) throw ParseError(std::string("move field '") + key + "' must be an array");
  std::vector<SigmaIndex> out;
  for (const ordered_json& entry : side) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
        !entry[1].is_number_integer()) {
      throw ParseError(std::string("each entry of '") + key + "' must be a pair of vertex ids");
    }
    int a = entry[0].get<int>();
    int b = entry[1].get<int>();
    if (a < 1 || b < 1) throw ParseError("vertex ids in moves must be positive");
    out.push_back(make_sigma(a, b));
  }
  return out;
}

} // namespace

std::vector<MarkovMove> parse_moves(std::string_view json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("a move list must be a JSON array");
  std::vector<MarkovMove> moves;
  for (const ordered_json& entry : doc) {
    if (!entry.is_object() || !entry.contains("plus") || !entry.contains("minus")) {
      throw ParseError("each move must be an object with 'plus' and 'minus' arrays");
    }
    MarkovMove m = normalize_move(parse_side(entry["plus"], "plus"),
                                  parse_side(entry["minus"], "minus"));
    if (m.plus.empty()) throw ParseError("a move cancelled to zero after normalization");
    moves.push_back(std::move(m));
  }
  return moves;
}

} // namespace rcoptoric
