#pragma once

#include <filesystem>
#include <iosfwd>

#include "narranet/graph.hpp"

namespace narranet {

// Shared edge-list text format: one `a<TAB>b<TAB>weight` line per edge,
// endpoints order-normalized (a < b) and lines sorted lexicographically.
// Nodes without any edge have no representation in this format, so a
// round-trip preserves edges exactly but drops isolated nodes.
void write_edge_list(std::ostream& out, const WeightedGraph& g);
WeightedGraph read_edge_list(std::istream& in);

void write_edge_list_file(const std::filesystem::path& path, const WeightedGraph& g);
WeightedGraph read_edge_list_file(const std::filesystem::path& path);

}  // namespace narranet
