#include <doctest.h>

#include "corpus.hpp"
#include "rcoptoric/errors.hpp"
#include "rcoptoric/json_io.hpp"
#include "rcoptoric/markov.hpp"

using namespace rcoptoric;
using rcoptoric::testing::load_graph_file;

TEST_CASE("move lists round-trip through their JSON form") {
  std::vector<MarkovMove> basis = rcop_basis(load_graph_file("paw.json"));
  std::vector<MarkovMove> back = parse_moves(to_json(basis));
  CHECK(back == basis);
}

TEST_CASE("move parsing normalizes and validates") {
  // Unsorted sides and reversed orientation normalize on the way in.
  std::vector<MarkovMove> moves =
      parse_moves(R"([{"plus": [[2, 3], [4, 1]], "minus": [[2, 4], [3, 1]]}])");
  REQUIRE(moves.size() == 1);
  CHECK(moves[0].plus == std::vector<SigmaIndex>{{1, 3}, {2, 4}});
  CHECK(moves[0].minus == std::vector<SigmaIndex>{{1, 4}, {2, 3}});

  CHECK_THROWS_AS(parse_moves("{}"), ParseError);
  CHECK_THROWS_AS(parse_moves("[[1, 2]]"), ParseError);
  CHECK_THROWS_AS(parse_moves(R"([{"plus": [[1, 2]]}])"), ParseError);
  CHECK_THROWS_AS(parse_moves(R"([{"plus": [[0, 2]], "minus": [[1, 2]]}])"), ParseError);
  CHECK_THROWS_AS(parse_moves(R"([{"plus": [[1, 2]], "minus": [[1, 2]]}])"), ParseError);
  CHECK_THROWS_AS(parse_moves("nonsense"), ParseError);
}

TEST_CASE("reports serialize with stable shapes") {
  ColoredGraph g = load_graph_file("paw.json");

  std::string validation = to_json(validate(g));
  CHECK(validation.find("\"valid\": true") != std::string::npos);

  std::string verdict = to_json(is_rcop(g));
  CHECK(verdict == "{\n  \"rcop\": true\n}");

  ExponentMatrix m = exponent_matrix_endpoint(g);
  std::string matrix = to_json(m);
  CHECK(matrix.find("\"v:r\"") != std::string::npos);
  CHECK(matrix.find("\"e:y\"") != std::string::npos);

  std::string path = to_json(shortest_path(g, 1, 4));
  CHECK(path.find("\"vertices\"") != std::string::npos);
  CHECK(path.find("\"edge_colors\"") != std::string::npos);
}
