#include <doctest.h>

#include <narranet/errors.hpp>
#include <narranet/graph.hpp>

using namespace narranet;

TEST_CASE("normalized_pair orders lexicographically and rejects loops") {
  CHECK(normalized_pair("b", "a") == NodePair{"a", "b"});
  CHECK(normalized_pair("a", "b") == NodePair{"a", "b"});
  CHECK_THROWS_AS(normalized_pair("a", "a"), GraphError);
}

TEST_CASE("add_weight accumulates and normalizes orientation") {
  WeightedGraph g;
  g.add_weight("b", "a", 2);
  g.add_weight("a", "b", 3);
  CHECK(g.weight("a", "b") == 5);
  CHECK(g.weight("b", "a") == 5);
  CHECK(g.edge_count() == 1);
  CHECK(g.nodes() == std::set<NodeId>{"a", "b"});
}

TEST_CASE("zero-weight add registers nodes without creating an edge") {
  WeightedGraph g;
  g.add_weight("a", "b", 0);
  CHECK(g.has_node("a"));
  CHECK(g.has_node("b"));
  CHECK(g.edge_count() == 0);
  CHECK(g.weight("a", "b") == 0);
}

TEST_CASE("isolated nodes count toward size but not edges") {
  WeightedGraph g;
  g.add_node("c");
  g.add_weight("a", "b", 1);
  CHECK(size(g) == 3);
  CHECK(g.edge_count() == 1);
  CHECK(total_edge_weight(g) == 1);
}

TEST_CASE("density uses unordered node pairs") {
  WeightedGraph g;  // path a-b-c-d: 3 edges out of 6 possible
  g.add_weight("a", "b", 1);
  g.add_weight("b", "c", 9);
  g.add_weight("c", "d", 1);
  CHECK(density(g) == doctest::Approx(0.5).epsilon(1e-12));

  WeightedGraph tiny;
  tiny.add_node("a");
  CHECK_THROWS_AS(density(tiny), GraphError);
}

TEST_CASE("graph equality compares node sets and weighted edges") {
  WeightedGraph g;
  g.add_weight("a", "b", 2);
  WeightedGraph h;
  h.add_weight("b", "a", 2);
  CHECK(g == h);
  h.add_node("c");
  CHECK(g != h);

  WeightedGraph k;
  k.add_weight("a", "b", 3);
  CHECK(g != k);
}

TEST_CASE("total_edge_weight sums multiplicities") {
  WeightedGraph g;
  g.add_weight("a", "b", 4);
  g.add_weight("a", "c", 2);
  g.add_weight("b", "c", 1);
  CHECK(total_edge_weight(g) == 7);
}
