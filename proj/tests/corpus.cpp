#include "corpus.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "rcoptoric/errors.hpp"

namespace rcoptoric::testing {

std::string load_data(const std::string& name) {
  std::string path = std::string(RCOPTORIC_DATA_DIR) + "/" + name;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("missing test data file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ColoredGraph load_graph_file(const std::string& name) { return parse_graph(load_data(name)); }

ColoredGraph random_orbit_block_graph(std::uint64_t seed, int max_vertices) {
  std::mt19937_64 rng(seed);
  auto draw = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };

  // Glue random cliques onto random existing vertices. Every biconnected
  // component is one of the glued cliques, so the result is a block graph.
  int n = draw(2, std::min(4, max_vertices));
  std::vector<Edge> edges;
  for (VertexId u = 1; u <= n; ++u) {
    for (VertexId v = u + 1; v <= n; ++v) edges.push_back(make_edge(u, v));
  }
  while (true) {
    int k = draw(1, 3); // vertices the new clique adds
    if (n + k > max_vertices) break;
    VertexId base = draw(1, n);
    for (int a = 1; a <= k; ++a) {
      VertexId fresh = n + a;
      edges.push_back(make_edge(base, fresh));
      for (int b = 1; b < a; ++b) edges.push_back(make_edge(n + b, fresh));
    }
    n += k;
    if (draw(0, 3) == 0) break; // occasional early stop for size variety
  }
  std::sort(edges.begin(), edges.end());

  // Color by the orbits of the full automorphism group: color everything
  // alike, read off the group, then name each orbit. Orbits of the full
  // group are preserved by every automorphism, so the orbit coloring has
  // exactly those orbits as color classes.
  std::vector<VertexSpec> mono_vertices;
  for (VertexId v = 1; v <= n; ++v) mono_vertices.push_back({v, "x"});
  std::vector<EdgeSpec> mono_edges;
  for (const Edge& e : edges) mono_edges.push_back({e.u, e.v, "y"});
  ColoredGraph mono = ColoredGraph::from_data(mono_vertices, mono_edges);
  GroupDescription full = automorphism_group(mono);

  std::vector<VertexSpec> vertices;
  for (std::size_t k = 0; k < full.vertex_orbits.size(); ++k) {
    for (VertexId v : full.vertex_orbits[k]) {
      vertices.push_back({v, "v" + std::to_string(k)});
    }
  }
  std::sort(vertices.begin(), vertices.end(),
            [](const VertexSpec& a, const VertexSpec& b) { return a.id < b.id; });
  std::vector<EdgeSpec> colored_edges;
  for (std::size_t k = 0; k < full.edge_orbits.size(); ++k) {
    for (const Edge& e : full.edge_orbits[k]) {
      colored_edges.push_back({e.u, e.v, "e" + std::to_string(k)});
    }
  }
  std::sort(colored_edges.begin(), colored_edges.end(), [](const EdgeSpec& a, const EdgeSpec& b) {
    return make_edge(a.u, a.v) < make_edge(b.u, b.v);
  });
  return ColoredGraph::from_data(vertices, colored_edges);
}

std::vector<Permutation> brute_force_automorphisms(const ColoredGraph& g) {
  const int n = g.vertex_count();
  if (n > 8) throw std::runtime_error("brute force oracle is limited to 8 vertices");
  std::vector<VertexId> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> found;
  do {
    Permutation p = Permutation::from_images(images);
    bool ok = true;
    for (VertexId v = 1; v <= n && ok; ++v) {
      ok = g.vertex_color_label(v) == g.vertex_color_label(p.apply(v));
    }
    for (VertexId u = 1; u <= n && ok; ++u) {
      for (VertexId v = u + 1; v <= n && ok; ++v) {
        Edge e = make_edge(u, v);
        bool present = g.has_edge(u, v);
        Edge image = p.apply(e);
        if (present != g.has_edge(image.u, image.v)) {
          ok = false;
        } else if (present) {
          ok = g.edge_color_label(e) == g.edge_color_label(image);
        }
      }
    }
    if (ok) found.push_back(std::move(p));
  } while (std::next_permutation(images.begin(), images.end()));
  std::sort(found.begin(), found.end());
  return found;
}

} // namespace rcoptoric::testing
