// Micro-benchmarks for the hot paths: symmetry discovery, exponent matrix
// construction, basis generation, and fiber enumeration.
#include <benchmark/benchmark.h>

#include <string>

#include "rcoptoric/blockpath.hpp"
#include "rcoptoric/colored_graph.hpp"
#include "rcoptoric/markov.hpp"
#include "rcoptoric/symmetry.hpp"
#include "rcoptoric/toric_maps.hpp"

namespace {

using namespace rcoptoric;

// An 11-vertex block graph with a rich symmetry group: two pendant leaves on
// a triangle vertex, stems off the other two, and leaf pairs on the stems.
ColoredGraph lobed_graph() {
  return parse_graph(R"({
    "vertices": [
      {"id": 1, "color": "a"}, {"id": 2, "color": "a"}, {"id": 3, "color": "b"},
      {"id": 4, "color": "c"}, {"id": 5, "color": "c"}, {"id": 6, "color": "d"},
      {"id": 7, "color": "d"}, {"id": 8, "color": "e"}, {"id": 9, "color": "e"},
      {"id": 10, "color": "e"}, {"id": 11, "color": "e"}
    ],
    "edges": [
      {"u": 1, "v": 3, "color": "p"}, {"u": 2, "v": 3, "color": "p"},
      {"u": 3, "v": 4, "color": "q"}, {"u": 3, "v": 5, "color": "q"},
      {"u": 4, "v": 5, "color": "r"}, {"u": 4, "v": 6, "color": "s"},
      {"u": 5, "v": 7, "color": "s"}, {"u": 6, "v": 8, "color": "t"},
      {"u": 6, "v": 9, "color": "t"}, {"u": 7, "v": 10, "color": "t"},
      {"u": 7, "v": 11, "color": "t"}
    ]
  })");
}

void bm_automorphism_group(benchmark::State& state) {
  ColoredGraph g = lobed_graph();
  for (auto _ : state) {
    GroupDescription group = automorphism_group(g);
    benchmark::DoNotOptimize(group);
  }
}
BENCHMARK(bm_automorphism_group);

void bm_exponent_matrix(benchmark::State& state) {
  ColoredGraph g = lobed_graph();
  for (auto _ : state) {
    ExponentMatrix m = exponent_matrix_endpoint(g);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(bm_exponent_matrix);

void bm_basis(benchmark::State& state) {
  ColoredGraph g = lobed_graph();
  for (auto _ : state) {
    std::vector<MarkovMove> basis = rcop_basis(g);
    benchmark::DoNotOptimize(basis);
  }
}
BENCHMARK(bm_basis);

void bm_completion(benchmark::State& state) {
  ColoredGraph g = lobed_graph();
  for (auto _ : state) {
    CompletionGraph comp = completion(g);
    benchmark::DoNotOptimize(comp);
  }
}
BENCHMARK(bm_completion);

void bm_fiber_enumeration(benchmark::State& state) {
  ColoredGraph g = lobed_graph();
  ExponentMatrix a = exponent_matrix_endpoint(g);
  // Degree-3 target built from three spread-out columns.
  std::vector<long long> target(a.rows.size(), 0);
  for (const SigmaIndex& s : {SigmaIndex{1, 3}, SigmaIndex{4, 5}, SigmaIndex{8, 11}}) {
    std::vector<long long> col = a.column(a.col_of(s));
    for (std::size_t r = 0; r < target.size(); ++r) target[r] += col[r];
  }
  for (auto _ : state) {
    Fiber fiber = enumerate_fiber(a, target, 100000);
    benchmark::DoNotOptimize(fiber);
  }
}
BENCHMARK(bm_fiber_enumeration);

} // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}
