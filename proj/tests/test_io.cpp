#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "algconn/digraph.hpp"
#include "algconn/digraph_io.hpp"
#include "algconn/random.hpp"

using namespace algconn;

TEST_CASE("json round trip") {
  DiGraph g(3, {{1, 2}, {3, 1}});
  std::string text = to_json(g);
  CHECK(graph_from_json(text) == g);
  CHECK(text == "{\"arcs\":[[1,2],[3,1]],\"n\":3}");
}

TEST_CASE("json round trip on random graphs") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 30; ++trial) {
    DiGraph g = random_graph_uniform_arcs(8, 0, 56, rng);
    CHECK(graph_from_json(to_json(g)) == g);
  }
}

TEST_CASE("json parsing accepts arcless graphs and rejects malformed input") {
  CHECK(graph_from_json("{\"n\": 4, \"arcs\": []}") == DiGraph(4));
  CHECK_THROWS(graph_from_json("not json"));
  CHECK_THROWS(graph_from_json("{\"arcs\": []}"));
  CHECK_THROWS(graph_from_json("{\"n\": 3, \"arcs\": [[1]]}"));
  CHECK_THROWS_AS(graph_from_json("{\"n\": 3, \"arcs\": [[1, 4]]}"),
                  VertexOutOfRange);
  CHECK_THROWS_AS(graph_from_json("{\"n\": 3, \"arcs\": [[2, 2]]}"),
                  SelfArcError);
}

TEST_CASE("stream parsing") {
  std::istringstream in("{\"n\": 2, \"arcs\": [[2, 1]]}");
  CHECK(graph_from_stream(in) == DiGraph(2, {{2, 1}}));
}

TEST_CASE("file loading") {
  const char* path = "test_io_graph.json";
  {
    std::ofstream out(path);
    out << to_json(DiGraph(4, {{1, 2}, {2, 3}, {3, 4}}));
  }
  CHECK(load_graph(path) == DiGraph(4, {{1, 2}, {2, 3}, {3, 4}}));
  std::remove(path);
  CHECK_THROWS(load_graph("does_not_exist.json"));
}

TEST_CASE("dot export") {
  std::string dot = to_dot(DiGraph(3, {{1, 2}, {3, 1}}));
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("\"1\" -> \"2\"") != std::string::npos);
  CHECK(dot.find("\"3\" -> \"1\"") != std::string::npos);
  CHECK(dot.back() == '\n');
}
