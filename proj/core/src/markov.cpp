#include "rcoptoric/markov.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace rcoptoric {

namespace {

void require_block(const ColoredGraph& g) {
  if (!g.structurally_valid()) throw PreconditionError("graph failed validation");
  if (!g.connected()) throw PreconditionError("graph must be connected");
  if (!is_block_graph(g).is_block_graph)
    throw PreconditionError("operation requires a block graph");
}

struct DisjointSet {
  std::vector<std::size_t> parent;
  explicit DisjointSet(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t a) { return parent[a] == a ? a : parent[a] = find(parent[a]); }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

} // namespace

MarkovMove normalize_move(std::vector<SigmaIndex> plus, std::vector<SigmaIndex> minus) {
  std::sort(plus.begin(), plus.end());
  std::sort(minus.begin(), minus.end());

  // Multiset cancellation of shared entries.
  std::vector<SigmaIndex> p2, m2;
  std::size_t a = 0, b = 0;
  while (a < plus.size() && b < minus.size()) {
    if (plus[a] == minus[b]) {
      ++a;
      ++b;
    } else if (plus[a] < minus[b]) {
      p2.push_back(plus[a++]);
    } else {
      m2.push_back(minus[b++]);
    }
  }
  p2.insert(p2.end(), plus.begin() + static_cast<long>(a), plus.end());
  m2.insert(m2.end(), minus.begin() + static_cast<long>(b), minus.end());

  MarkovMove move{std::move(p2), std::move(m2)};
  if (move.plus.empty() || move.minus.empty()) return {{}, {}};
  if (move.minus.front() < move.plus.front()) std::swap(move.plus, move.minus);
  return move;
}

bool move_order(const MarkovMove& a, const MarkovMove& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  if (a.plus != b.plus) return a.plus < b.plus;
  return a.minus < b.minus;
}

std::vector<MarkovMove> uncolored_basis(const ColoredGraph& g) {
  require_block(g);
  const int n = g.vertex_count();

  // Edge sets of every shortest path, as sorted lists of edge indices.
  std::map<std::pair<VertexId, VertexId>, std::vector<int>> path_edges;
  std::map<Edge, int> edge_index;
  for (std::size_t k = 0; k < g.edges().size(); ++k) edge_index[g.edges()[k]] = static_cast<int>(k);
  for (VertexId i = 1; i <= n; ++i)
    for (VertexId j = i; j <= n; ++j) {
      PathDescriptor p = shortest_path(g, i, j);
      std::vector<int> ids;
      for (std::size_t k = 0; k + 1 < p.vertices.size(); ++k)
        ids.push_back(edge_index.at(make_edge(p.vertices[k], p.vertices[k + 1])));
      std::sort(ids.begin(), ids.end());
      path_edges[{i, j}] = std::move(ids);
    }
  auto edges_of = [&](VertexId a, VertexId b) -> const std::vector<int>& {
    return path_edges.at(a <= b ? std::make_pair(a, b) : std::make_pair(b, a));
  };
  auto merged = [](const std::vector<int>& x, const std::vector<int>& y) {
    std::vector<int> out;
    out.reserve(x.size() + y.size());
    std::merge(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return out;
  };

  std::set<MarkovMove> found;
  for (VertexId i = 1; i <= n; ++i)
    for (VertexId j = 1; j <= n; ++j)
      for (VertexId k = 1; k <= n; ++k)
        for (VertexId l = 1; l <= n; ++l) {
          if (merged(edges_of(i, j), edges_of(k, l)) != merged(edges_of(i, k), edges_of(j, l)))
            continue;
          MarkovMove move =
              normalize_move({make_sigma(i, j), make_sigma(k, l)}, {make_sigma(i, k), make_sigma(j, l)});
          if (!move.plus.empty()) found.insert(std::move(move));
        }

  std::vector<MarkovMove> result(found.begin(), found.end());
  std::sort(result.begin(), result.end(), move_order);
  return result;
}

std::vector<MarkovMove> completion_basis(const ColoredGraph& g, bool all_pairs) {
  require_block(g);

  std::map<LambdaMultiset, std::vector<SigmaIndex>> classes;
  for (const SigmaIndex& s : sigma_indices(g.vertex_count()))
    classes[path_lambda(g, s.i, s.j)].push_back(s);

  std::vector<MarkovMove> result;
  for (auto& [lambda, members] : classes) {
    std::sort(members.begin(), members.end());
    if (all_pairs) {
      for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b)
          result.push_back(normalize_move({members[a]}, {members[b]}));
    } else {
      for (std::size_t b = 1; b < members.size(); ++b)
        result.push_back(normalize_move({members.front()}, {members[b]}));
    }
  }
  std::sort(result.begin(), result.end(), move_order);
  return result;
}

std::vector<MarkovMove> rcop_basis(const ColoredGraph& g) {
  std::vector<MarkovMove> result = completion_basis(g);
  std::vector<MarkovMove> quadratic = uncolored_basis(g);
  result.insert(result.end(), quadratic.begin(), quadratic.end());
  std::sort(result.begin(), result.end(), move_order);
  result.erase(std::unique(result.begin(), result.end()), result.end());

  ExponentMatrix a = exponent_matrix_endpoint(g);
  for (const MarkovMove& m : result)
    if (!kernel_member(a, m))
      throw InternalCheckError("emitted move leaves the kernel of the endpoint matrix");
  return result;
}

bool kernel_member(const ExponentMatrix& a, const MarkovMove& m) {
  std::vector<long long> sum(a.rows.size(), 0);
  for (const SigmaIndex& s : m.plus) {
    int c = a.col_of(s);
    for (std::size_t r = 0; r < a.rows.size(); ++r) sum[r] += a.entries[r][static_cast<std::size_t>(c)];
  }
  for (const SigmaIndex& s : m.minus) {
    int c = a.col_of(s);
    for (std::size_t r = 0; r < a.rows.size(); ++r) sum[r] -= a.entries[r][static_cast<std::size_t>(c)];
  }
  return std::all_of(sum.begin(), sum.end(), [](long long v) { return v == 0; });
}

Fiber enumerate_fiber(const ExponentMatrix& a, const std::vector<long long>& target,
                      std::size_t cap) {
  if (target.size() != a.rows.size())
    throw PreconditionError("target length must match the matrix row count");
  const std::size_t rows = a.rows.size(), cols = a.cols.size();

  // suffix_support[c][r]: some column >= c has a nonzero entry in row r.
  std::vector<std::vector<char>> suffix_support(cols + 1, std::vector<char>(rows, 0));
  for (std::size_t c = cols; c-- > 0;) {
    for (std::size_t r = 0; r < rows; ++r)
      suffix_support[c][r] =
          suffix_support[c + 1][r] || (a.entries[r][c] != 0 ? 1 : 0);
  }

  Fiber fiber;
  fiber.target = target;
  std::vector<long long> rest = target;
  std::vector<int> point(cols, 0);

  auto dfs = [&](auto&& self, std::size_t c) -> void {
    if (c == cols) {
      if (std::all_of(rest.begin(), rest.end(), [](long long v) { return v == 0; })) {
        if (fiber.points.size() >= cap)
          throw LimitError("fiber exceeds cap of " + std::to_string(cap) + " points");
        fiber.points.push_back(point);
      }
      return;
    }
    for (std::size_t r = 0; r < rows; ++r)
      if (rest[r] > 0 && !suffix_support[c][r]) return; // no column left can pay this row
    // Highest exponent this column can take without overdrawing a row.
    long long max_e = -1;
    for (std::size_t r = 0; r < rows; ++r) {
      int entry = a.entries[r][c];
      if (entry > 0) {
        long long bound = rest[r] / entry;
        max_e = max_e < 0 ? bound : std::min(max_e, bound);
      }
    }
    if (max_e < 0) max_e = 0; // zero column (cannot happen for these matrices)
    for (long long e = 0; e <= max_e; ++e) {
      if (e > 0)
        for (std::size_t r = 0; r < rows; ++r) rest[r] -= a.entries[r][c];
      point[c] = static_cast<int>(e);
      self(self, c + 1);
    }
    for (long long e = max_e; e > 0; --e)
      for (std::size_t r = 0; r < rows; ++r) rest[r] += a.entries[r][c];
    point[c] = 0;
  };
  dfs(dfs, 0);
  // Ascending exponents at each column in depth-first order produce the
  // points already in lexicographic order.
  return fiber;
}

FiberConnectivity fiber_connected(const Fiber& fiber, const std::vector<MarkovMove>& moves,
                                  const ExponentMatrix& a) {
  FiberConnectivity result;
  if (fiber.points.empty()) {
    result.connected = true;
    result.component_count = 0;
    return result;
  }

  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t k = 0; k < fiber.points.size(); ++k) index[fiber.points[k]] = k;

  std::vector<std::vector<int>> deltas;
  for (const MarkovMove& m : moves) {
    std::vector<int> d(a.cols.size(), 0);
    for (const SigmaIndex& s : m.plus) ++d[static_cast<std::size_t>(a.col_of(s))];
    for (const SigmaIndex& s : m.minus) --d[static_cast<std::size_t>(a.col_of(s))];
    deltas.push_back(std::move(d));
  }

  DisjointSet dsu(fiber.points.size());
  std::vector<int> candidate(a.cols.size());
  for (std::size_t k = 0; k < fiber.points.size(); ++k)
    for (const auto& d : deltas) {
      bool feasible = true;
      for (std::size_t c = 0; c < d.size(); ++c) {
        candidate[c] = fiber.points[k][c] + d[c];
        if (candidate[c] < 0) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;
      auto it = index.find(candidate);
      if (it != index.end()) dsu.unite(k, it->second);
    }

  std::set<std::size_t> roots;
  for (std::size_t k = 0; k < fiber.points.size(); ++k) roots.insert(dsu.find(k));
  result.component_count = roots.size();
  result.connected = roots.size() <= 1;
  return result;
}

FiberCertification certify_fibers(const ColoredGraph& g, const std::vector<MarkovMove>& moves,
                                  int degree_bound, std::size_t cap) {
  ExponentMatrix a = exponent_matrix_endpoint(g);
  FiberCertification cert;
  cert.degree_bound = degree_bound;
  cert.cap = cap;

  // Distinct targets reachable as sums of at most degree_bound columns.
  std::set<std::vector<long long>> targets;
  std::vector<long long> sum(a.rows.size(), 0);
  auto collect = [&](auto&& self, std::size_t first_col, int depth) -> void {
    if (depth > 0) targets.insert(sum);
    if (depth == degree_bound) return;
    for (std::size_t c = first_col; c < a.cols.size(); ++c) {
      for (std::size_t r = 0; r < a.rows.size(); ++r) sum[r] += a.entries[r][c];
      self(self, c, depth + 1);
      for (std::size_t r = 0; r < a.rows.size(); ++r) sum[r] -= a.entries[r][c];
    }
  };
  collect(collect, 0, 0);

  for (const auto& target : targets) {
    Fiber fiber;
    try {
      fiber = enumerate_fiber(a, target, cap);
    } catch (const LimitError&) {
      cert.skipped_targets.push_back(target);
      continue;
    }
    ++cert.fibers_checked;
    cert.max_fiber_size = std::max(cert.max_fiber_size, fiber.points.size());
    FiberConnectivity conn = fiber_connected(fiber, moves, a);
    if (!conn.connected) {
      cert.all_connected = false;
      cert.disconnected_targets.push_back(target);
    }
  }
  return cert;
}

} // namespace rcoptoric
