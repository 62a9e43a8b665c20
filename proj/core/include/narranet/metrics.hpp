#pragma once

#include <map>

#include "narranet/graph.hpp"

namespace narranet {

// Per-node metric values, keyed by every node of the source graph.
using MetricVector = std::map<NodeId, double>;

enum class AdjacencyWeighting { weighted, unweighted };

// Global transitivity: 3 * triangles / connected triples, weights ignored.
// Returns quiet NaN when the graph has no connected triple.
double global_clustering(const WeightedGraph& g);

// Sum of incident edge weights per node.
MetricVector weighted_degree(const WeightedGraph& g);

// Shortest-path betweenness. Geodesics ignore edge weights; every unordered
// node pair counts once; endpoints are excluded; no normalization is applied.
// Pairs in different components contribute nothing.
MetricVector betweenness(const WeightedGraph& g);

// Leading eigenvector of the adjacency matrix by power iteration, entries
// non-negative, Euclidean norm 1. Throws GraphError when the graph has no
// edges (the direction would be arbitrary) and ConvergenceError when the
// iteration cap is reached.
MetricVector eigenvector_centrality(
    const WeightedGraph& g,
    AdjacencyWeighting weighting = AdjacencyWeighting::weighted);

// close(i) = 1 / (mean geodesic distance from i), distances and the averaging
// denominator both restricted to i's connected component (self included in
// the component size). An isolated node gets 0.
MetricVector closeness(const WeightedGraph& g);

// Fraction of a node's neighbour pairs that are themselves connected.
// Nodes of degree < 2 get 0. Weights ignored.
MetricVector local_clustering(const WeightedGraph& g);

}  // namespace narranet
