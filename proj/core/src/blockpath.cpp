#include "rcoptoric/blockpath.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace rcoptoric {

namespace {

void require_usable(const ColoredGraph& g) {
  if (!g.structurally_valid()) throw PreconditionError("graph failed validation");
  if (!g.connected()) throw PreconditionError("graph must be connected");
}

std::string join_path(const std::vector<VertexId>& vs) {
  std::ostringstream out;
  for (std::size_t k = 0; k < vs.size(); ++k) out << (k ? "-" : "") << vs[k];
  return out.str();
}

} // namespace

std::string to_string(const LambdaMultiset& lambda) {
  std::ostringstream out;
  out << '{' << lambda.endpoint_colors[0] << ',' << lambda.endpoint_colors[1] << '|';
  for (std::size_t k = 0; k < lambda.edge_colors.size(); ++k)
    out << (k ? "," : "") << lambda.edge_colors[k];
  out << '}';
  return out.str();
}

BlockResult is_block_graph(const ColoredGraph& g) {
  require_usable(g);
  const int n = g.vertex_count();
  BlockResult result;

  // Biconnected components by the classic lowpoint algorithm with an edge
  // stack; every popped bundle of edges spans one component.
  std::vector<int> disc(static_cast<std::size_t>(n), 0), low(static_cast<std::size_t>(n), 0);
  std::vector<VertexId> parent(static_cast<std::size_t>(n), 0);
  std::vector<Edge> edge_stack;
  std::set<VertexId> cuts;
  int timer = 0;

  auto emit_component = [&](const Edge& top) {
    std::set<VertexId> vs;
    while (!edge_stack.empty()) {
      Edge e = edge_stack.back();
      edge_stack.pop_back();
      vs.insert(e.u);
      vs.insert(e.v);
      if (e == top) break;
    }
    result.decomposition.blocks.emplace_back(vs.begin(), vs.end());
  };

  auto dfs = [&](auto&& self, VertexId u) -> void {
    disc[static_cast<std::size_t>(u - 1)] = low[static_cast<std::size_t>(u - 1)] = ++timer;
    int children = 0;
    for (VertexId w : g.neighbors(u)) {
      if (disc[static_cast<std::size_t>(w - 1)] == 0) {
        ++children;
        parent[static_cast<std::size_t>(w - 1)] = u;
        Edge te = make_edge(u, w);
        edge_stack.push_back(te);
        self(self, w);
        low[static_cast<std::size_t>(u - 1)] =
            std::min(low[static_cast<std::size_t>(u - 1)], low[static_cast<std::size_t>(w - 1)]);
        if (low[static_cast<std::size_t>(w - 1)] >= disc[static_cast<std::size_t>(u - 1)]) {
          if (parent[static_cast<std::size_t>(u - 1)] != 0 || children > 1) cuts.insert(u);
          emit_component(te);
        }
      } else if (w != parent[static_cast<std::size_t>(u - 1)] &&
                 disc[static_cast<std::size_t>(w - 1)] < disc[static_cast<std::size_t>(u - 1)]) {
        edge_stack.push_back(make_edge(u, w));
        low[static_cast<std::size_t>(u - 1)] =
            std::min(low[static_cast<std::size_t>(u - 1)], disc[static_cast<std::size_t>(w - 1)]);
      }
    }
  };
  dfs(dfs, 1);

  if (result.decomposition.blocks.empty()) result.decomposition.blocks.push_back({1}); // K1
  std::sort(result.decomposition.blocks.begin(), result.decomposition.blocks.end());
  result.decomposition.cut_vertices.assign(cuts.begin(), cuts.end());

  result.is_block_graph = true;
  for (const auto& block : result.decomposition.blocks) {
    for (std::size_t a = 0; a < block.size() && result.is_block_graph; ++a)
      for (std::size_t b = a + 1; b < block.size(); ++b)
        if (!g.has_edge(block[a], block[b])) {
          result.is_block_graph = false;
          result.witness_component = block;
          result.witness_non_edge = std::make_pair(block[a], block[b]);
          break;
        }
    if (!result.is_block_graph) break;
  }
  return result;
}

PathDescriptor shortest_path(const ColoredGraph& g, VertexId u, VertexId v) {
  require_usable(g);
  const int n = g.vertex_count();
  if (u < 1 || u > n || v < 1 || v > n)
    throw PreconditionError("path endpoints must be vertices of the graph");

  // BFS from u, counting shortest paths (saturated at 2) so non-uniqueness
  // is detected exactly.
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::vector<int> ways(static_cast<std::size_t>(n), 0);
  std::queue<VertexId> queue;
  dist[static_cast<std::size_t>(u - 1)] = 0;
  ways[static_cast<std::size_t>(u - 1)] = 1;
  queue.push(u);
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop();
    for (VertexId w : g.neighbors(x)) {
      if (dist[static_cast<std::size_t>(w - 1)] == -1) {
        dist[static_cast<std::size_t>(w - 1)] = dist[static_cast<std::size_t>(x - 1)] + 1;
        ways[static_cast<std::size_t>(w - 1)] = ways[static_cast<std::size_t>(x - 1)];
        queue.push(w);
      } else if (dist[static_cast<std::size_t>(w - 1)] == dist[static_cast<std::size_t>(x - 1)] + 1) {
        ways[static_cast<std::size_t>(w - 1)] =
            std::min(2, ways[static_cast<std::size_t>(w - 1)] + ways[static_cast<std::size_t>(x - 1)]);
      }
    }
  }
  if (dist[static_cast<std::size_t>(v - 1)] == -1)
    throw PreconditionError("vertex " + std::to_string(v) + " unreachable from " + std::to_string(u));
  if (ways[static_cast<std::size_t>(v - 1)] > 1)
    throw PreconditionError("shortest path " + std::to_string(u) + "..." + std::to_string(v) +
                            " is not unique");

  std::vector<VertexId> rev{v};
  VertexId cur = v;
  while (cur != u) {
    VertexId pred = 0;
    for (VertexId w : g.neighbors(cur))
      if (dist[static_cast<std::size_t>(w - 1)] == dist[static_cast<std::size_t>(cur - 1)] - 1) {
        pred = w;
        break; // unique because ways[v] == 1
      }
    cur = pred;
    rev.push_back(cur);
  }
  PathDescriptor path;
  path.vertices.assign(rev.rbegin(), rev.rend());
  for (VertexId x : path.vertices) path.vertex_colors.push_back(g.vertex_color_label(x));
  for (std::size_t k = 0; k + 1 < path.vertices.size(); ++k)
    path.edge_colors.push_back(g.edge_color_label(make_edge(path.vertices[k], path.vertices[k + 1])));
  return path;
}

LambdaMultiset path_lambda(const ColoredGraph& g, VertexId u, VertexId v) {
  PathDescriptor path = shortest_path(g, u, v);
  LambdaMultiset lambda;
  lambda.endpoint_colors = {path.vertex_colors.front(), path.vertex_colors.back()};
  std::sort(lambda.endpoint_colors.begin(), lambda.endpoint_colors.end());
  lambda.edge_colors = path.edge_colors;
  std::sort(lambda.edge_colors.begin(), lambda.edge_colors.end());
  return lambda;
}

PathRelation paths_equivalent(const PathDescriptor& p, const PathDescriptor& q) {
  auto lambda_of = [](const PathDescriptor& path) {
    LambdaMultiset lambda;
    lambda.endpoint_colors = {path.vertex_colors.front(), path.vertex_colors.back()};
    std::sort(lambda.endpoint_colors.begin(), lambda.endpoint_colors.end());
    lambda.edge_colors = path.edge_colors;
    std::sort(lambda.edge_colors.begin(), lambda.edge_colors.end());
    return lambda;
  };
  if (p.vertex_colors.empty() || q.vertex_colors.empty())
    throw PreconditionError("paths must be nonempty");
  if (lambda_of(p) != lambda_of(q)) return PathRelation::none;

  bool forward = p.vertex_colors == q.vertex_colors && p.edge_colors == q.edge_colors;
  std::vector<std::string> qv(q.vertex_colors.rbegin(), q.vertex_colors.rend());
  std::vector<std::string> qe(q.edge_colors.rbegin(), q.edge_colors.rend());
  bool backward = p.vertex_colors == qv && p.edge_colors == qe;
  return (forward || backward) ? PathRelation::isomorphic : PathRelation::combinatorial;
}

AuditReport structural_audit(const ColoredGraph& g, int max_vertices) {
  require_usable(g);
  const int n = g.vertex_count();
  if (n > max_vertices)
    throw PreconditionError("structural audit limited to " + std::to_string(max_vertices) +
                            " vertices; got " + std::to_string(n));
  if (!is_block_graph(g).is_block_graph)
    throw PreconditionError("structural audit requires a block graph");

  AuditReport report;
  report.endpoint_symmetry.name = "endpoint-symmetry";
  report.color_multiplicity.name = "color-multiplicity";
  report.concatenation.name = "concatenation";
  report.equivalence_isomorphism.name = "equivalence-isomorphism";
  report.branching_exclusion.name = "branching-exclusion";

  // All shortest paths, u <= v, plus both orientations for scanning.
  std::map<std::pair<VertexId, VertexId>, PathDescriptor> paths;
  for (VertexId u = 1; u <= n; ++u)
    for (VertexId v = u; v <= n; ++v) paths[{u, v}] = shortest_path(g, u, v);
  auto oriented = [&](VertexId from, VertexId to) {
    if (from <= to) return paths[{from, to}];
    PathDescriptor p = paths[{to, from}];
    std::reverse(p.vertices.begin(), p.vertices.end());
    std::reverse(p.vertex_colors.begin(), p.vertex_colors.end());
    std::reverse(p.edge_colors.begin(), p.edge_colors.end());
    return p;
  };

  // Same-colored endpoints force palindromic vertex and edge color traces.
  for (VertexId u = 1; u <= n && report.endpoint_symmetry.passed; ++u)
    for (VertexId v = u + 1; v <= n; ++v) {
      if (g.vertex_color_label(u) != g.vertex_color_label(v)) continue;
      const PathDescriptor& p = paths[{u, v}];
      ++report.endpoint_symmetry.instances;
      auto is_palindrome = [](const std::vector<std::string>& xs) {
        return std::equal(xs.begin(), xs.begin() + static_cast<long>(xs.size() / 2), xs.rbegin());
      };
      if (!is_palindrome(p.vertex_colors) || !is_palindrome(p.edge_colors)) {
        report.endpoint_symmetry.passed = false;
        report.endpoint_symmetry.witness = "path " + join_path(p.vertices);
        break;
      }
    }

  // No vertex color occurs three times on a single shortest path.
  for (VertexId u = 1; u <= n && report.color_multiplicity.passed; ++u)
    for (VertexId v = u; v <= n; ++v) {
      const PathDescriptor& p = paths[{u, v}];
      ++report.color_multiplicity.instances;
      std::map<std::string, int> count;
      for (const std::string& c : p.vertex_colors)
        if (++count[c] > 2) {
          report.color_multiplicity.passed = false;
          report.color_multiplicity.witness =
              "color " + c + " appears " + std::to_string(count[c]) + " times on " +
              join_path(p.vertices);
          break;
        }
      if (!report.color_multiplicity.passed) break;
    }

  // Two shortest paths that overlap in exactly one edge, head to tail,
  // concatenate to the shortest path between their far endpoints.
  {
    std::map<std::pair<VertexId, VertexId>, std::vector<std::pair<VertexId, VertexId>>> by_first_edge;
    for (VertexId a = 1; a <= n; ++a)
      for (VertexId b = 1; b <= n; ++b) {
        if (a == b) continue;
        PathDescriptor q = oriented(a, b);
        if (q.vertices.size() >= 2)
          by_first_edge[{q.vertices[0], q.vertices[1]}].emplace_back(a, b);
      }
    for (VertexId a = 1; a <= n && report.concatenation.passed; ++a)
      for (VertexId b = 1; b <= n; ++b) {
        if (a == b) continue;
        PathDescriptor p = oriented(a, b);
        if (p.vertices.size() < 2) continue;
        auto x = p.vertices[p.vertices.size() - 2], y = p.vertices.back();
        auto it = by_first_edge.find({x, y});
        if (it == by_first_edge.end()) continue;
        for (auto [qa, qb] : it->second) {
          PathDescriptor q = oriented(qa, qb);
          std::vector<VertexId> composed = p.vertices;
          composed.insert(composed.end(), q.vertices.begin() + 2, q.vertices.end());
          ++report.concatenation.instances;
          PathDescriptor expected = oriented(a, qb);
          if (composed != expected.vertices) {
            report.concatenation.passed = false;
            report.concatenation.witness = "paths " + join_path(p.vertices) + " and " +
                                           join_path(q.vertices) + " compose to " +
                                           join_path(composed) + ", expected " +
                                           join_path(expected.vertices);
            break;
          }
        }
        if (!report.concatenation.passed) break;
      }
  }

  // Equal color content (endpoints + edge color multiset) forces the ordered
  // color sequences to agree up to reversal.
  {
    std::vector<const PathDescriptor*> flat;
    for (auto& [key, p] : paths) flat.push_back(&p);
    for (std::size_t a = 0; a < flat.size() && report.equivalence_isomorphism.passed; ++a)
      for (std::size_t b = a + 1; b < flat.size(); ++b) {
        PathRelation rel = paths_equivalent(*flat[a], *flat[b]);
        if (rel == PathRelation::none) continue;
        ++report.equivalence_isomorphism.instances;
        if (rel != PathRelation::isomorphic) {
          report.equivalence_isomorphism.passed = false;
          report.equivalence_isomorphism.witness =
              "paths " + join_path(flat[a]->vertices) + " and " + join_path(flat[b]->vertices) +
              " share color content but do not align";
          break;
        }
      }
  }

  // Branching exclusion: two paths leaving c through differently colored
  // first edges, meeting only at c, never swap those colors downstream (the
  // scan covers every branching configuration regardless of adjacency
  // between the two second vertices).
  for (VertexId c = 1; c <= n && report.branching_exclusion.passed; ++c) {
    for (VertexId j = 1; j <= n; ++j) {
      if (j == c) continue;
      for (VertexId l = j + 1; l <= n; ++l) {
        if (l == c) continue;
        PathDescriptor p = oriented(c, j), q = oriented(c, l);
        std::set<VertexId> pv(p.vertices.begin(), p.vertices.end());
        bool disjoint = true;
        for (VertexId w : q.vertices)
          if (w != c && pv.count(w)) {
            disjoint = false;
            break;
          }
        if (!disjoint) continue;
        const std::string& first_p = p.edge_colors.front();
        const std::string& first_q = q.edge_colors.front();
        if (first_p == first_q) continue;
        ++report.branching_exclusion.instances;
        bool p_tail_has_q = std::find(p.edge_colors.begin() + 1, p.edge_colors.end(), first_q) !=
                            p.edge_colors.end();
        bool q_tail_has_p = std::find(q.edge_colors.begin() + 1, q.edge_colors.end(), first_p) !=
                            q.edge_colors.end();
        if (p_tail_has_q && q_tail_has_p) {
          report.branching_exclusion.passed = false;
          report.branching_exclusion.witness = "paths " + join_path(p.vertices) + " and " +
                                               join_path(q.vertices) + " swap colors " + first_p +
                                               "/" + first_q + " after branching at " +
                                               std::to_string(c);
          break;
        }
      }
      if (!report.branching_exclusion.passed) break;
    }
  }

  return report;
}

} // namespace rcoptoric
