#include "rcoptoric/colored_graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace rcoptoric {

using ordered_json = nlohmann::ordered_json;

std::string to_string(const ColorId& c) {
  return (c.kind == ColorKind::vertex ? "v:" : "e:") + c.label;
}

ColoredGraph ColoredGraph::build(std::vector<VertexSpec> vertices,
                                 std::vector<EdgeSpec> edges, bool strict) {
  ColoredGraph g;
  auto flag = [&](std::string kind, std::string detail) {
    g.structurally_valid_ = false;
    g.violations_.push_back({std::move(kind), std::move(detail)});
  };

  std::sort(vertices.begin(), vertices.end(),
            [](const VertexSpec& a, const VertexSpec& b) { return a.id < b.id; });
  g.n_ = static_cast<int>(vertices.size());
  if (g.n_ == 0) flag("id-range", "graph has no vertices");

  g.vertex_color_labels_.assign(static_cast<std::size_t>(g.n_), "");
  for (int k = 0; k < g.n_; ++k) {
    const VertexSpec& vs = vertices[static_cast<std::size_t>(k)];
    if (vs.id != k + 1) {
      flag("id-range", "vertex ids must be exactly 1.." + std::to_string(g.n_) +
                           "; saw id " + std::to_string(vs.id));
    }
    if (vs.color.empty()) flag("missing-color", "vertex " + std::to_string(vs.id));
    if (vs.id >= 1 && vs.id <= g.n_)
      g.vertex_color_labels_[static_cast<std::size_t>(vs.id - 1)] = vs.color;
  }

  std::vector<std::pair<Edge, std::string>> raw;
  raw.reserve(edges.size());
  for (const EdgeSpec& es : edges) {
    Edge e = make_edge(es.u, es.v);
    if (es.u == es.v)
      flag("loop", "edge {" + std::to_string(es.u) + "," + std::to_string(es.v) + "}");
    if (es.u < 1 || es.u > g.n_ || es.v < 1 || es.v > g.n_)
      flag("id-range", "edge {" + std::to_string(es.u) + "," + std::to_string(es.v) +
                           "} leaves 1.." + std::to_string(g.n_));
    if (es.color.empty())
      flag("missing-color", "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    raw.emplace_back(e, es.color);
  }
  std::sort(raw.begin(), raw.end());
  for (std::size_t k = 0; k + 1 < raw.size(); ++k) {
    if (raw[k].first == raw[k + 1].first)
      flag("duplicate-edge", "edge {" + std::to_string(raw[k].first.u) + "," +
                                 std::to_string(raw[k].first.v) + "} repeats");
  }
  for (auto& [e, color] : raw) {
    g.edges_.push_back(e);
    g.edge_color_of_edge_.push_back(std::move(color));
  }

  if (strict && !g.structurally_valid_) {
    std::ostringstream msg;
    msg << "invalid graph document:";
    for (const Violation& v : g.violations_) msg << " [" << v.kind << "] " << v.detail << ";";
    throw ParseError(msg.str());
  }

  // Simple skeleton adjacency (loops and duplicates dropped) so connectivity
  // is well defined even for graphs kept only to be validated.
  g.adj_.assign(static_cast<std::size_t>(g.n_), {});
  std::set<Edge> seen;
  for (const Edge& e : g.edges_) {
    if (e.u == e.v || e.u < 1 || e.v > g.n_ || !seen.insert(e).second) continue;
    g.adj_[static_cast<std::size_t>(e.u - 1)].push_back(e.v);
    g.adj_[static_cast<std::size_t>(e.v - 1)].push_back(e.u);
  }
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());

  if (g.n_ > 0) {
    std::vector<char> reached(static_cast<std::size_t>(g.n_), 0);
    std::vector<VertexId> stack{1};
    reached[0] = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : g.adj_[static_cast<std::size_t>(v - 1)])
        if (!reached[static_cast<std::size_t>(w - 1)]) {
          reached[static_cast<std::size_t>(w - 1)] = 1;
          stack.push_back(w);
        }
    }
    g.connected_ = std::all_of(reached.begin(), reached.end(), [](char c) { return c != 0; });
  } else {
    g.connected_ = false;
  }

  // Canonical color classes: vertex classes by smallest member, edge classes
  // by least member edge. Independent of the label strings.
  std::map<std::string, std::vector<VertexId>> by_vlabel;
  for (int v = 1; v <= g.n_; ++v)
    by_vlabel[g.vertex_color_labels_[static_cast<std::size_t>(v - 1)]].push_back(v);
  std::vector<const std::vector<VertexId>*> vgroups;
  std::vector<std::string> vlabels;
  for (auto& [label, members] : by_vlabel) {
    vgroups.push_back(&members);
    vlabels.push_back(label);
  }
  std::vector<std::size_t> vorder(vgroups.size());
  for (std::size_t k = 0; k < vorder.size(); ++k) vorder[k] = k;
  std::sort(vorder.begin(), vorder.end(), [&](std::size_t a, std::size_t b) {
    return vgroups[a]->front() < vgroups[b]->front();
  });
  g.vertex_class_of_.assign(static_cast<std::size_t>(g.n_), -1);
  for (std::size_t k : vorder) {
    for (VertexId v : *vgroups[k])
      g.vertex_class_of_[static_cast<std::size_t>(v - 1)] =
          static_cast<int>(g.vertex_classes_.size());
    g.vertex_classes_.push_back(*vgroups[k]);
    g.vertex_class_labels_.push_back(vlabels[k]);
  }

  std::map<std::string, std::vector<std::size_t>> by_elabel;
  for (std::size_t k = 0; k < g.edges_.size(); ++k)
    by_elabel[g.edge_color_of_edge_[k]].push_back(k);
  std::vector<std::pair<Edge, std::string>> eorder;
  for (auto& [label, members] : by_elabel) eorder.emplace_back(g.edges_[members.front()], label);
  std::sort(eorder.begin(), eorder.end());
  g.edge_class_of_.assign(g.edges_.size(), -1);
  for (auto& [least, label] : eorder) {
    std::vector<Edge> members;
    for (std::size_t k : by_elabel[label]) {
      members.push_back(g.edges_[k]);
      g.edge_class_of_[k] = static_cast<int>(g.edge_classes_.size());
    }
    g.edge_classes_.push_back(std::move(members));
    g.edge_class_labels_.push_back(label);
  }

  return g;
}

ColoredGraph ColoredGraph::from_data(std::vector<VertexSpec> vertices,
                                     std::vector<EdgeSpec> edges) {
  return build(std::move(vertices), std::move(edges), /*strict=*/true);
}

ColoredGraph ColoredGraph::from_data_unchecked(std::vector<VertexSpec> vertices,
                                               std::vector<EdgeSpec> edges) {
  return build(std::move(vertices), std::move(edges), /*strict=*/false);
}

bool ColoredGraph::has_edge(VertexId a, VertexId b) const {
  if (a < 1 || b < 1 || a > n_ || b > n_ || a == b) return false;
  const auto& nbrs = adj_[static_cast<std::size_t>(a - 1)];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

const std::vector<VertexId>& ColoredGraph::neighbors(VertexId v) const {
  return adj_.at(static_cast<std::size_t>(v - 1));
}

int ColoredGraph::degree(VertexId v) const {
  return static_cast<int>(neighbors(v).size());
}

const std::string& ColoredGraph::vertex_color_label(VertexId v) const {
  return vertex_color_labels_.at(static_cast<std::size_t>(v - 1));
}

const std::string& ColoredGraph::edge_color_label(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || !(*it == e))
    throw PreconditionError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            "} is not in the graph");
  return edge_color_of_edge_[static_cast<std::size_t>(it - edges_.begin())];
}

ColorId ColoredGraph::vertex_color(VertexId v) const {
  return {ColorKind::vertex, vertex_color_label(v)};
}

ColorId ColoredGraph::edge_color(const Edge& e) const {
  return {ColorKind::edge, edge_color_label(e)};
}

int ColoredGraph::vertex_class_of(VertexId v) const {
  return vertex_class_of_.at(static_cast<std::size_t>(v - 1));
}

int ColoredGraph::edge_class_of(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || !(*it == e))
    throw PreconditionError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            "} is not in the graph");
  return edge_class_of_[static_cast<std::size_t>(it - edges_.begin())];
}

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
  throw ParseError("invalid graph document: " + what);
}

int require_int(const ordered_json& node, const char* where) {
  if (!node.is_number_integer()) parse_fail(std::string(where) + " must be an integer");
  return node.get<int>();
}

std::string require_string(const ordered_json& node, const char* where) {
  if (!node.is_string()) parse_fail(std::string(where) + " must be a string");
  return node.get<std::string>();
}

const ordered_json& require_key(const ordered_json& obj, const char* key, const char* where) {
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(std::string(where) + " is missing key \"" + key + "\"");
  return *it;
}

} // namespace

ColoredGraph parse_graph(std::string_view json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("invalid graph document: JSON syntax: ") + ex.what());
  }
  if (!doc.is_object()) parse_fail("top level must be an object");
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (it.key() != "vertices" && it.key() != "edges")
      parse_fail("unknown top-level key \"" + it.key() + "\"");
  const ordered_json& jverts = require_key(doc, "vertices", "document");
  const ordered_json& jedges = require_key(doc, "edges", "document");
  if (!jverts.is_array()) parse_fail("\"vertices\" must be an array");
  if (!jedges.is_array()) parse_fail("\"edges\" must be an array");

  std::vector<VertexSpec> vertices;
  for (const ordered_json& jv : jverts) {
    if (!jv.is_object()) parse_fail("vertex entries must be objects");
    for (auto it = jv.begin(); it != jv.end(); ++it)
      if (it.key() != "id" && it.key() != "color")
        parse_fail("unknown vertex key \"" + it.key() + "\"");
    VertexSpec vs;
    vs.id = require_int(require_key(jv, "id", "vertex"), "vertex id");
    vs.color = require_string(require_key(jv, "color", "vertex"), "vertex color");
    if (vs.color.empty()) parse_fail("vertex color must be nonempty");
    vertices.push_back(std::move(vs));
  }
  std::vector<EdgeSpec> edges;
  for (const ordered_json& je : jedges) {
    if (!je.is_object()) parse_fail("edge entries must be objects");
    for (auto it = je.begin(); it != je.end(); ++it)
      if (it.key() != "u" && it.key() != "v" && it.key() != "color")
        parse_fail("unknown edge key \"" + it.key() + "\"");
    EdgeSpec es;
    es.u = require_int(require_key(je, "u", "edge"), "edge endpoint");
    es.v = require_int(require_key(je, "v", "edge"), "edge endpoint");
    es.color = require_string(require_key(je, "color", "edge"), "edge color");
    if (es.color.empty()) parse_fail("edge color must be nonempty");
    edges.push_back(std::move(es));
  }
  return ColoredGraph::from_data(std::move(vertices), std::move(edges));
}

std::string serialize_graph(const ColoredGraph& g) {
  ordered_json doc;
  doc["vertices"] = ordered_json::array();
  for (VertexId v = 1; v <= g.vertex_count(); ++v) {
    ordered_json jv;
    jv["id"] = v;
    jv["color"] = g.vertex_color_label(v);
    doc["vertices"].push_back(std::move(jv));
  }
  doc["edges"] = ordered_json::array();
  for (const Edge& e : g.edges()) {
    ordered_json je;
    je["u"] = e.u;
    je["v"] = e.v;
    je["color"] = g.edge_color_label(e);
    doc["edges"].push_back(std::move(je));
  }
  return doc.dump(2);
}

ValidationReport validate(const ColoredGraph& g) {
  ValidationReport report;
  report.valid = g.structurally_valid_;
  report.connected = g.connected_;
  report.violations = g.violations_;
  return report;
}

RegularityReport regularity_report(const ColoredGraph& g) {
  RegularityReport report;

  // Edge regularity: all edges of one color join the same unordered pair of
  // vertex colors.
  for (int k = 0; k < g.edge_class_count() && report.edge_regular; ++k) {
    const auto& members = g.edge_class(k);
    auto pair_of = [&](const Edge& e) {
      std::string a = g.vertex_color_label(e.u), b = g.vertex_color_label(e.v);
      return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
    };
    for (std::size_t m = 1; m < members.size(); ++m) {
      if (pair_of(members[m]) != pair_of(members[0])) {
        report.edge_regular = false;
        report.edge_witness = EdgeRegularityWitness{members[0], members[m]};
        break;
      }
    }
  }

  // Vertex regularity: same-colored vertices have the same number of
  // incident edges of every edge color.
  auto incidence = [&](VertexId v, int edge_class) {
    int count = 0;
    for (VertexId w : g.neighbors(v))
      if (g.edge_class_of(make_edge(v, w)) == edge_class) ++count;
    return count;
  };
  for (int k = 0; k < g.vertex_class_count() && report.vertex_regular; ++k) {
    const auto& members = g.vertex_class(k);
    for (int c = 0; c < g.edge_class_count() && report.vertex_regular; ++c) {
      int expected = incidence(members[0], c);
      for (std::size_t m = 1; m < members.size(); ++m) {
        int got = incidence(members[m], c);
        if (got != expected) {
          report.vertex_regular = false;
          report.vertex_witness = VertexRegularityWitness{
              members[0], members[m], g.edge_class_label(c), expected, got};
          break;
        }
      }
    }
  }
  return report;
}

Subgraph induced_subgraph(const ColoredGraph& g, std::vector<VertexId> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  Subgraph s;
  s.vertices = std::move(vertices);
  for (std::size_t a = 0; a < s.vertices.size(); ++a)
    for (std::size_t b = a + 1; b < s.vertices.size(); ++b)
      if (g.has_edge(s.vertices[a], s.vertices[b]))
        s.edges.push_back(make_edge(s.vertices[a], s.vertices[b]));
  std::sort(s.edges.begin(), s.edges.end());
  return s;
}

Subgraph neighborhood(const ColoredGraph& g, VertexId c) {
  if (c < 1 || c > g.vertex_count())
    throw PreconditionError("vertex " + std::to_string(c) + " is not in the graph");
  std::vector<VertexId> vs = g.neighbors(c);
  vs.push_back(c);
  return induced_subgraph(g, std::move(vs));
}

std::vector<Subgraph> c_components(const ColoredGraph& g, VertexId c) {
  if (c < 1 || c > g.vertex_count())
    throw PreconditionError("vertex " + std::to_string(c) + " is not in the graph");
  if (!g.connected()) throw PreconditionError("components through a vertex need a connected graph");

  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  seen[static_cast<std::size_t>(c - 1)] = 1;
  std::vector<Subgraph> result;
  for (VertexId start = 1; start <= g.vertex_count(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)]) continue;
    std::vector<VertexId> component{c};
    std::vector<VertexId> stack{start};
    seen[static_cast<std::size_t>(start - 1)] = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (VertexId w : g.neighbors(v))
        if (!seen[static_cast<std::size_t>(w - 1)]) {
          seen[static_cast<std::size_t>(w - 1)] = 1;
          stack.push_back(w);
        }
    }
    result.push_back(induced_subgraph(g, std::move(component)));
  }
  if (result.empty()) result.push_back(induced_subgraph(g, {c})); // K1
  return result;
}

} // namespace rcoptoric
