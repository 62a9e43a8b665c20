#include "narranet/graph.hpp"

#include "narranet/errors.hpp"

namespace narranet {

NodePair normalized_pair(const NodeId& a, const NodeId& b) {
    if (a == b) {
        throw GraphError("self-pair for node '" + a + "'");
    }
    return a < b ? NodePair{a, b} : NodePair{b, a};
}

void WeightedGraph::add_node(const NodeId& id) {
    nodes_.insert(id);
}

void WeightedGraph::add_weight(const NodeId& a, const NodeId& b, std::uint64_t w) {
    NodePair key = normalized_pair(a, b);
    nodes_.insert(key.first);
    nodes_.insert(key.second);
    if (w > 0) {
        edges_[key] += w;
    }
}

std::uint64_t WeightedGraph::weight(const NodeId& a, const NodeId& b) const {
    auto it = edges_.find(normalized_pair(a, b));
    return it == edges_.end() ? 0 : it->second;
}

std::size_t size(const WeightedGraph& g) {
    return g.nodes().size();
}

std::uint64_t total_edge_weight(const WeightedGraph& g) {
    std::uint64_t total = 0;
    for (const auto& [pair, w] : g.edges()) {
        total += w;
    }
    return total;
}

double density(const WeightedGraph& g) {
    const std::size_t n = size(g);
    if (n < 2) {
        throw GraphError("density needs at least two nodes, got " + std::to_string(n));
    }
    const double possible = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
    return static_cast<double>(g.edge_count()) / possible;
}

}  // namespace narranet
