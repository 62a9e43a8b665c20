#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>

namespace narranet {

using NodeId = std::string;

// Unordered node pair, stored order-normalized: first < second.
using NodePair = std::pair<NodeId, NodeId>;

// Throws GraphError when a == b; self-pairs never exist in these networks.
NodePair normalized_pair(const NodeId& a, const NodeId& b);

// Undirected, loop-free network with positive integer edge weights.
// A stored weight is always >= 1; weight 0 means the pair has no edge and is
// simply absent from the edge map. The node set may be larger than the set of
// edge endpoints (characters can be present without interacting).
class WeightedGraph {
public:
    void add_node(const NodeId& id);

    // Adds w to the pair's weight; both endpoints join the node set.
    // w == 0 still registers the nodes but stores no edge.
    void add_weight(const NodeId& a, const NodeId& b, std::uint64_t w = 1);

    // 0 when the pair has no edge. Throws GraphError when a == b.
    std::uint64_t weight(const NodeId& a, const NodeId& b) const;

    bool has_node(const NodeId& id) const { return nodes_.contains(id); }

    const std::set<NodeId>& nodes() const { return nodes_; }
    const std::map<NodePair, std::uint64_t>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    bool operator==(const WeightedGraph&) const = default;

private:
    std::set<NodeId> nodes_;
    std::map<NodePair, std::uint64_t> edges_;
};

// Number of nodes.
std::size_t size(const WeightedGraph& g);

// Sum of all edge weights.
std::uint64_t total_edge_weight(const WeightedGraph& g);

// Present edges / possible pairs. Throws GraphError when the graph has
// fewer than two nodes (no pair exists).
double density(const WeightedGraph& g);

}  // namespace narranet
