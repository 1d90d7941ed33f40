#include "rcoptoric/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace rcoptoric {

Permutation::Permutation(int n) {
  images_.resize(static_cast<std::size_t>(n));
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_images(std::vector<VertexId> images) {
  std::vector<char> seen(images.size(), 0);
  for (VertexId w : images) {
    if (w < 1 || w > static_cast<int>(images.size()) || seen[static_cast<std::size_t>(w - 1)])
      throw PreconditionError("not a permutation of 1..n");
    seen[static_cast<std::size_t>(w - 1)] = 1;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(const std::string& text, int n) {
  std::vector<VertexId> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<bool> moved(static_cast<std::size_t>(n), false);
  std::size_t pos = 0;
  auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("cycle notation: expected '(' in \"" + text + "\"");
    ++pos;
    std::vector<VertexId> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      std::size_t end = pos;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      if (end == pos) throw ParseError("cycle notation: expected a vertex id in \"" + text + "\"");
      cycle.push_back(std::stoi(text.substr(pos, end - pos)));
      pos = end;
      skip_ws();
    }
    if (pos == text.size()) throw ParseError("cycle notation: missing ')' in \"" + text + "\"");
    ++pos; // ')'
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      VertexId a = cycle[k], b = cycle[(k + 1) % cycle.size()];
      if (a < 1 || a > n) throw ParseError("cycle notation: vertex out of range");
      if (moved[static_cast<std::size_t>(a - 1)])
        throw ParseError("cycle notation: vertex " + std::to_string(a) + " appears twice");
      moved[static_cast<std::size_t>(a - 1)] = true;
      images[static_cast<std::size_t>(a - 1)] = b;
    }
    skip_ws();
  }
  return from_images(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<VertexId> inv(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k)
    inv[static_cast<std::size_t>(images_[k] - 1)] = static_cast<VertexId>(k + 1);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

Permutation Permutation::then(const Permutation& b) const {
  std::vector<VertexId> out(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) out[k] = b.apply(images_[k]);
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < images_.size(); ++k)
    if (images_[k] != static_cast<VertexId>(k + 1)) return false;
  return true;
}

std::string Permutation::to_cycles() const {
  std::ostringstream out;
  std::vector<char> seen(images_.size(), 0);
  bool any = false;
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (seen[k] || images_[k] == static_cast<VertexId>(k + 1)) continue;
    // Cycles discovered by ascending start vertex are already sorted by
    // their smallest element.
    out << '(';
    VertexId v = static_cast<VertexId>(k + 1);
    bool first = true;
    while (!seen[static_cast<std::size_t>(v - 1)]) {
      seen[static_cast<std::size_t>(v - 1)] = 1;
      if (!first) out << ' ';
      out << v;
      first = false;
      v = apply(v);
    }
    out << ')';
    any = true;
  }
  return any ? out.str() : "()";
}

namespace {

/// Backtracking extension of a partial vertex map to a full color-preserving
/// automorphism. Vertices are assigned most-constrained-first; candidate
/// images run in ascending id, so results are deterministic.
class ExtensionSearch {
public:
  explicit ExtensionSearch(const ColoredGraph& g) : g_(g), n_(g.vertex_count()) {
    image_.assign(static_cast<std::size_t>(n_), 0);
    used_.assign(static_cast<std::size_t>(n_), 0);
  }

  /// Assignment priority: small color classes and high degree first.
  std::vector<VertexId> default_order() const {
    std::vector<VertexId> order(static_cast<std::size_t>(n_));
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
      auto key = [&](VertexId v) {
        return std::make_tuple(g_.vertex_class(g_.vertex_class_of(v)).size(), -g_.degree(v), v);
      };
      return key(a) < key(b);
    });
    return order;
  }

  /// Finds one automorphism consistent with `prescribed`; deterministic.
  std::optional<Permutation> find(const std::vector<std::pair<VertexId, VertexId>>& prescribed) {
    std::fill(image_.begin(), image_.end(), 0);
    std::fill(used_.begin(), used_.end(), 0);
    assigned_.clear();

    for (auto [v, w] : prescribed) {
      if (v < 1 || v > n_ || w < 1 || w > n_)
        throw PreconditionError("prescribed vertex out of range");
      VertexId have = image_[static_cast<std::size_t>(v - 1)];
      if (have == w) continue;           // duplicate, consistent
      if (have != 0) return std::nullopt; // duplicate, conflicting
      if (used_[static_cast<std::size_t>(w - 1)]) return std::nullopt;
      if (!compatible(v, w)) return std::nullopt;
      assign(v, w);
    }

    rest_.clear();
    for (VertexId v : default_order())
      if (image_[static_cast<std::size_t>(v - 1)] == 0) rest_.push_back(v);

    if (!extend(0)) return std::nullopt;

    std::vector<VertexId> images(image_.begin(), image_.end());
    Permutation result = Permutation::from_images(std::move(images));
    if (!is_automorphism(g_, result))
      throw InternalCheckError("extension search produced a non-automorphism");
    return result;
  }

  static bool is_automorphism(const ColoredGraph& g, const Permutation& p) {
    if (p.size() != g.vertex_count()) return false;
    for (VertexId v = 1; v <= g.vertex_count(); ++v)
      if (g.vertex_class_of(p.apply(v)) != g.vertex_class_of(v)) return false;
    for (VertexId v = 1; v <= g.vertex_count(); ++v)
      for (VertexId w = v + 1; w <= g.vertex_count(); ++w) {
        bool e = g.has_edge(v, w);
        Edge img = make_edge(p.apply(v), p.apply(w));
        if (e != g.has_edge(img.u, img.v)) return false;
        if (e && g.edge_class_of(Edge{v, w}) != g.edge_class_of(img)) return false;
      }
    return true;
  }

private:
  bool compatible(VertexId v, VertexId w) const {
    if (g_.vertex_class_of(v) != g_.vertex_class_of(w)) return false;
    if (g_.degree(v) != g_.degree(w)) return false;
    for (VertexId u : assigned_) {
      VertexId wu = image_[static_cast<std::size_t>(u - 1)];
      bool e1 = g_.has_edge(v, u);
      bool e2 = g_.has_edge(w, wu);
      if (e1 != e2) return false;
      if (e1 && g_.edge_class_of(make_edge(v, u)) != g_.edge_class_of(make_edge(w, wu)))
        return false;
    }
    return true;
  }

  void assign(VertexId v, VertexId w) {
    image_[static_cast<std::size_t>(v - 1)] = w;
    used_[static_cast<std::size_t>(w - 1)] = 1;
    assigned_.push_back(v);
  }

  void unassign(VertexId v) {
    VertexId w = image_[static_cast<std::size_t>(v - 1)];
    image_[static_cast<std::size_t>(v - 1)] = 0;
    used_[static_cast<std::size_t>(w - 1)] = 0;
    assigned_.pop_back();
  }

  bool extend(std::size_t depth) {
    if (depth == rest_.size()) return true;
    VertexId v = rest_[depth];
    for (VertexId w = 1; w <= n_; ++w) {
      if (used_[static_cast<std::size_t>(w - 1)] || !compatible(v, w)) continue;
      assign(v, w);
      if (extend(depth + 1)) return true;
      unassign(v);
    }
    return false;
  }

  const ColoredGraph& g_;
  int n_;
  std::vector<VertexId> image_;
  std::vector<char> used_;
  std::vector<VertexId> assigned_;
  std::vector<VertexId> rest_;
};

void require_usable(const ColoredGraph& g) {
  if (!g.structurally_valid())
    throw PreconditionError("graph failed validation");
  if (!g.connected()) throw PreconditionError("graph must be connected");
}

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) { return parent[static_cast<std::size_t>(a)] == a ? a : parent[static_cast<std::size_t>(a)] = find(parent[static_cast<std::size_t>(a)]); }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

} // namespace

std::optional<Permutation> find_automorphism_extending(
    const ColoredGraph& g, const std::vector<std::pair<VertexId, VertexId>>& prescribed) {
  require_usable(g);
  ExtensionSearch search(g);
  return search.find(prescribed);
}

GroupDescription automorphism_group(const ColoredGraph& g) {
  require_usable(g);
  const int n = g.vertex_count();
  ExtensionSearch search(g);
  std::vector<VertexId> base = search.default_order();

  // Stabilizer-chain generator discovery: at level i, with base[0..i-1]
  // pinned, one automorphism per reachable image of base[i] generates the
  // whole group together with the deeper levels' output.
  GroupDescription group;
  std::vector<std::pair<VertexId, VertexId>> prescribed;
  for (int level = 0; level < n; ++level) {
    VertexId b = base[static_cast<std::size_t>(level)];
    for (VertexId c = 1; c <= n; ++c) {
      if (c == b) continue;
      if (g.vertex_class_of(c) != g.vertex_class_of(b)) continue;
      if (g.degree(c) != g.degree(b)) continue;
      prescribed.emplace_back(b, c);
      if (auto found = search.find(prescribed)) group.generators.push_back(*found);
      prescribed.pop_back();
    }
    prescribed.emplace_back(b, b);
  }

  group.vertex_orbits = vertex_orbits_of(n, group.generators);
  group.edge_orbits = edge_orbits_of(g.edges(), group.generators);
  return group;
}

std::vector<std::vector<VertexId>> vertex_orbits_of(
    int n, const std::vector<Permutation>& generators) {
  DisjointSet dsu(static_cast<std::size_t>(n));
  for (const Permutation& p : generators)
    for (VertexId v = 1; v <= n; ++v) dsu.unite(v - 1, p.apply(v) - 1);
  std::map<int, std::vector<VertexId>> buckets;
  for (VertexId v = 1; v <= n; ++v) buckets[dsu.find(v - 1)].push_back(v);
  std::vector<std::vector<VertexId>> orbits;
  for (auto& [root, members] : buckets) orbits.push_back(std::move(members));
  std::sort(orbits.begin(), orbits.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return orbits;
}

std::vector<std::vector<Edge>> edge_orbits_of(const std::vector<Edge>& edges,
                                              const std::vector<Permutation>& generators) {
  std::map<Edge, int> index;
  for (std::size_t k = 0; k < edges.size(); ++k) index[edges[k]] = static_cast<int>(k);
  DisjointSet dsu(edges.size());
  for (const Permutation& p : generators)
    for (std::size_t k = 0; k < edges.size(); ++k) {
      Edge img = p.apply(edges[k]);
      auto it = index.find(img);
      if (it == index.end())
        throw InternalCheckError("generator does not permute the edge set");
      dsu.unite(static_cast<int>(k), it->second);
    }
  std::map<int, std::vector<Edge>> buckets;
  for (std::size_t k = 0; k < edges.size(); ++k)
    buckets[dsu.find(static_cast<int>(k))].push_back(edges[k]);
  std::vector<std::vector<Edge>> orbits;
  for (auto& [root, members] : buckets) {
    std::sort(members.begin(), members.end());
    orbits.push_back(std::move(members));
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return orbits;
}

RcopVerdict is_rcop(const ColoredGraph& g) {
  require_usable(g);
  GroupDescription group = automorphism_group(g);

  RcopVerdict verdict;
  verdict.rcop = true;

  std::vector<int> vorbit(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t k = 0; k < group.vertex_orbits.size(); ++k)
    for (VertexId v : group.vertex_orbits[k]) vorbit[static_cast<std::size_t>(v - 1)] = static_cast<int>(k);
  for (int k = 0; k < g.vertex_class_count(); ++k) {
    const auto& members = g.vertex_class(k);
    for (VertexId v : members)
      if (vorbit[static_cast<std::size_t>(v - 1)] != vorbit[static_cast<std::size_t>(members[0] - 1)]) {
        verdict.rcop = false;
        verdict.vertex_witness = std::make_pair(members[0], v);
        return verdict;
      }
  }

  std::map<Edge, int> eorbit;
  for (std::size_t k = 0; k < group.edge_orbits.size(); ++k)
    for (const Edge& e : group.edge_orbits[k]) eorbit[e] = static_cast<int>(k);
  for (int k = 0; k < g.edge_class_count(); ++k) {
    const auto& members = g.edge_class(k);
    for (const Edge& e : members)
      if (eorbit[e] != eorbit[members[0]]) {
        verdict.rcop = false;
        verdict.edge_witness = std::make_pair(members[0], e);
        return verdict;
      }
  }
  return verdict;
}

std::optional<Permutation> path_automorphism(const ColoredGraph& g,
                                             const std::vector<VertexId>& p,
                                             const std::vector<VertexId>& q) {
  require_usable(g);
  if (p.size() != q.size() || p.empty())
    throw PreconditionError("paths must have equal positive length");

  std::vector<std::pair<VertexId, VertexId>> forward, backward;
  for (std::size_t k = 0; k < p.size(); ++k) {
    forward.emplace_back(p[k], q[k]);
    backward.emplace_back(p[k], q[q.size() - 1 - k]);
  }
  if (auto found = find_automorphism_extending(g, forward)) return found;
  return find_automorphism_extending(g, backward);
}

std::vector<Permutation> group_elements(int n, const std::vector<Permutation>& generators,
                                        std::size_t ceiling) {
  std::set<Permutation> elements;
  elements.insert(Permutation(n));
  std::vector<Permutation> frontier{Permutation(n)};
  while (!frontier.empty()) {
    Permutation current = std::move(frontier.back());
    frontier.pop_back();
    for (const Permutation& gen : generators) {
      if (gen.size() != n) throw PreconditionError("generator size mismatch");
      Permutation next = current.then(gen);
      if (elements.insert(next).second) {
        if (elements.size() > ceiling)
          throw LimitError("group closure exceeds ceiling of " + std::to_string(ceiling));
        frontier.push_back(std::move(next));
      }
    }
  }
  return {elements.begin(), elements.end()};
}

std::size_t group_order(int n, const std::vector<Permutation>& generators, std::size_t ceiling) {
  return group_elements(n, generators, ceiling).size();
}

} // namespace rcoptoric
