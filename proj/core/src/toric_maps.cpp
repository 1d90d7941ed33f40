#include "rcoptoric/toric_maps.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "rcoptoric/symmetry.hpp"

namespace rcoptoric {

std::vector<SigmaIndex> sigma_indices(int n) {
  std::vector<SigmaIndex> out;
  out.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1) / 2);
  for (VertexId i = 1; i <= n; ++i)
    for (VertexId j = i; j <= n; ++j) out.push_back({i, j});
  return out;
}

int ExponentMatrix::col_of(const SigmaIndex& s) const {
  auto it = std::lower_bound(cols.begin(), cols.end(), s);
  if (it == cols.end() || !(*it == s))
    throw PreconditionError("no column for entry (" + std::to_string(s.i) + "," +
                            std::to_string(s.j) + ")");
  return static_cast<int>(it - cols.begin());
}

std::vector<long long> ExponentMatrix::column(int c) const {
  std::vector<long long> out;
  out.reserve(rows.size());
  for (const auto& row : entries) out.push_back(row.at(static_cast<std::size_t>(c)));
  return out;
}

RationalMatrix ExponentMatrix::as_rational() const {
  std::vector<std::vector<long long>> rows_ll;
  for (const auto& row : entries) rows_ll.emplace_back(row.begin(), row.end());
  return RationalMatrix::from_int_rows(rows_ll);
}

namespace {

void require_usable(const ColoredGraph& g) {
  if (!g.structurally_valid()) throw PreconditionError("graph failed validation");
  if (!g.connected()) throw PreconditionError("graph must be connected");
}

ExponentMatrix build_matrix(const ColoredGraph& g, bool full_trace) {
  require_usable(g);
  ExponentMatrix m;
  for (int k = 0; k < g.vertex_class_count(); ++k)
    m.rows.push_back({ColorKind::vertex, g.vertex_class_label(k)});
  for (int k = 0; k < g.edge_class_count(); ++k)
    m.rows.push_back({ColorKind::edge, g.edge_class_label(k)});
  m.cols = sigma_indices(g.vertex_count());
  m.entries.assign(m.rows.size(), std::vector<int>(m.cols.size(), 0));

  const int vclasses = g.vertex_class_count();
  for (std::size_t c = 0; c < m.cols.size(); ++c) {
    const SigmaIndex s = m.cols[c];
    PathDescriptor path = shortest_path(g, s.i, s.j);
    if (full_trace) {
      for (VertexId w : path.vertices)
        m.entries[static_cast<std::size_t>(g.vertex_class_of(w))][c] += 1;
    } else {
      m.entries[static_cast<std::size_t>(g.vertex_class_of(s.i))][c] += 1;
      m.entries[static_cast<std::size_t>(g.vertex_class_of(s.j))][c] += 1;
    }
    for (std::size_t k = 0; k + 1 < path.vertices.size(); ++k) {
      Edge e = make_edge(path.vertices[k], path.vertices[k + 1]);
      m.entries[static_cast<std::size_t>(vclasses + g.edge_class_of(e))][c] += 1;
    }
  }
  return m;
}

} // namespace

ExponentMatrix exponent_matrix_endpoint(const ColoredGraph& g) {
  return build_matrix(g, /*full_trace=*/false);
}

ExponentMatrix exponent_matrix_full(const ColoredGraph& g) {
  return build_matrix(g, /*full_trace=*/true);
}

std::string matrix_to_text(const ExponentMatrix& m) {
  auto col_label = [&](const SigmaIndex& s) {
    bool wide = !m.cols.empty() && m.cols.back().j > 9;
    return wide ? std::to_string(s.i) + "," + std::to_string(s.j)
                : std::to_string(s.i) + std::to_string(s.j);
  };
  std::vector<std::string> row_labels;
  std::size_t label_width = 0;
  for (const ColorId& c : m.rows) {
    row_labels.push_back(to_string(c));
    label_width = std::max(label_width, row_labels.back().size());
  }
  std::vector<std::size_t> widths;
  for (const SigmaIndex& s : m.cols) widths.push_back(col_label(s).size());

  std::ostringstream out;
  out << std::string(label_width, ' ');
  for (std::size_t c = 0; c < m.cols.size(); ++c) {
    std::string h = col_label(m.cols[c]);
    out << "  " << std::string(widths[c] - h.size(), ' ') << h;
  }
  out << '\n';
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    out << row_labels[r] << std::string(label_width - row_labels[r].size(), ' ');
    for (std::size_t c = 0; c < m.cols.size(); ++c) {
      std::string v = std::to_string(m.entries[r][c]);
      out << "  " << std::string(widths[c] > v.size() ? widths[c] - v.size() : 0, ' ') << v;
    }
    if (r + 1 < m.rows.size()) out << '\n';
  }
  return out.str();
}

RowspanReport rowspan_equal(const ColoredGraph& g, const ExponentMatrix& endpoint,
                            const ExponentMatrix& full) {
  if (endpoint.cols != full.cols || endpoint.rows != full.rows)
    throw PreconditionError("matrices must share the same rows and columns");

  RowspanReport report;
  RationalMatrix a = endpoint.as_rational();
  RationalMatrix b = full.as_rational();
  report.rank_endpoint = rational_rank(a);
  report.rank_full = rational_rank(b);
  report.rank_stacked = rational_rank(a.stacked_below(b));
  report.ranks_equal =
      report.rank_endpoint == report.rank_full && report.rank_full == report.rank_stacked;

  // Endpoint-count pattern of each edge color class against each vertex
  // color: how many ends of one such edge carry the vertex color. Edge
  // regularity makes this well defined per class.
  const int vclasses = g.vertex_class_count();
  report.identity_holds = true;
  for (int nu = 0; nu < vclasses; ++nu) {
    std::vector<int> ends_with_nu(static_cast<std::size_t>(g.edge_class_count()), 0);
    for (int k = 0; k < g.edge_class_count(); ++k) {
      const auto& members = g.edge_class(k);
      int pattern = -1;
      for (const Edge& e : members) {
        int count = (g.vertex_class_of(e.u) == nu ? 1 : 0) + (g.vertex_class_of(e.v) == nu ? 1 : 0);
        if (pattern == -1) pattern = count;
        if (pattern != count)
          throw PreconditionError("edge color class mixes endpoint color patterns (color " +
                                  g.edge_class_label(k) + ")");
      }
      ends_with_nu[static_cast<std::size_t>(k)] = pattern < 0 ? 0 : pattern;
    }

    bool holds = true;
    for (std::size_t c = 0; c < endpoint.cols.size() && holds; ++c) {
      long long rhs = endpoint.entries[static_cast<std::size_t>(nu)][c];
      for (int k = 0; k < g.edge_class_count(); ++k) {
        if (ends_with_nu[static_cast<std::size_t>(k)] == 0) continue;
        rhs += static_cast<long long>(ends_with_nu[static_cast<std::size_t>(k)]) *
               endpoint.entries[static_cast<std::size_t>(vclasses + k)][c];
      }
      holds = rhs == 2LL * full.entries[static_cast<std::size_t>(nu)][c];
    }
    report.half_sum_checks.push_back({g.vertex_class_label(nu), holds});
    if (!holds) report.identity_holds = false;
  }
  return report;
}

CompletionGraph completion(const ColoredGraph& g, bool verify_closure) {
  require_usable(g);
  BlockResult block = is_block_graph(g);
  if (!block.is_block_graph)
    throw PreconditionError("completion requires a block graph");

  // A fresh-label prefix no user edge color starts with.
  std::string prefix = "cmp:";
  for (bool clash = true; clash;) {
    clash = false;
    for (int k = 0; k < g.edge_class_count(); ++k)
      if (g.edge_class_label(k).rfind(prefix, 0) == 0) {
        clash = true;
        break;
      }
    if (clash) prefix.insert(prefix.size() - 1, ":");
  }

  std::vector<VertexSpec> vertices;
  for (VertexId v = 1; v <= g.vertex_count(); ++v)
    vertices.push_back({v, g.vertex_color_label(v)});
  std::vector<EdgeSpec> edges;
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, g.edge_color_label(e)});

  CompletionGraph result;
  for (VertexId i = 1; i <= g.vertex_count(); ++i)
    for (VertexId j = i + 1; j <= g.vertex_count(); ++j) {
      if (g.has_edge(i, j)) continue;
      LambdaMultiset lambda = path_lambda(g, i, j);
      edges.push_back({i, j, prefix + to_string(lambda)});
      result.added.emplace_back(Edge{i, j}, std::move(lambda));
    }
  result.graph = ColoredGraph::from_data(std::move(vertices), std::move(edges));

  if (verify_closure && is_rcop(g).rcop) {
    RcopVerdict closed = is_rcop(result.graph);
    if (!closed.rcop)
      throw InternalCheckError("completion of an orbit-colored block graph lost the orbit property");
  }
  return result;
}

} // namespace rcoptoric
