#include <doctest.h>

#include <sstream>

#include "graphpack/graph_io.hpp"
#include "test_util.hpp"

using namespace graphpack;
using testutil::random_graph;

TEST_CASE("graph6 known encodings") {
  // K4 is 'C~' and the empty graph on 0 vertices is '?'.
  Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(emit_graph6(k4) == "C~");
  CHECK(emit_graph6(Graph(0, {})) == "?");
  CHECK(parse_graph6("C~") == k4);
}

TEST_CASE("graph6 round-trip property") {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.below_int(30);
    Graph g = random_graph(rng, n, 1, 3);
    CHECK(parse_graph6(emit_graph6(g)) == g);
  }
  // Large-n header path.
  Graph big = random_graph(rng, 100, 1, 50);
  CHECK(parse_graph6(emit_graph6(big)) == big);
}

TEST_CASE("edge-list emit format") {
  Graph g(3, {{0, 1}, {1, 2}});
  CHECK(emit_edgelist(g) == "3 2\n0 1\n1 2\n");
}

TEST_CASE("instance files round-trip in both formats with optional perm") {
  Rng rng(37);
  for (auto format : {GraphFormat::graph6, GraphFormat::edgelist}) {
    Graph blue = random_graph(rng, 9, 1, 3);
    Graph red = random_graph(rng, 9, 1, 3);
    const std::vector<int> perm = rng.permutation(9);

    std::stringstream buffer;
    write_instance(buffer, blue, red, format, perm);
    const InstanceFile parsed = parse_instance(buffer);
    CHECK(parsed.blue == blue);
    CHECK(parsed.red == red);
    REQUIRE(parsed.perm);
    CHECK(*parsed.perm == perm);
  }
}

TEST_CASE("instance file without perm") {
  std::stringstream buffer;
  write_instance(buffer, Graph(2, {{0, 1}}), Graph(2, {}), GraphFormat::edgelist);
  const InstanceFile parsed = parse_instance(buffer);
  CHECK_FALSE(parsed.perm);
  CHECK(parsed.blue.edge_count() == 1);
}

TEST_CASE("mixed formats in one instance file") {
  std::stringstream buffer;
  buffer << emit_graph6(Graph(3, {{0, 1}})) << "\n" << "3 1\n1 2\n";
  const InstanceFile parsed = parse_instance(buffer);
  CHECK(parsed.blue.has_edge(0, 1));
  CHECK(parsed.red.has_edge(1, 2));
}

TEST_CASE("instance digest distinguishes instances") {
  Graph a(3, {{0, 1}});
  Graph b(3, {{1, 2}});
  CHECK(instance_digest(a, b) != instance_digest(b, a));
  CHECK(instance_digest(a, b) == instance_digest(a, b));
}
