#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <vector>

#include "narranet/graph.hpp"

namespace narranet {

// One annotated pair interaction, located by (season, episode, scene).
struct InteractionRecord {
    int season = 0;
    int episode = 0;
    int scene = 0;
    NodeId char_a;
    NodeId char_b;

    bool operator==(const InteractionRecord&) const = default;
};

// Ordered list of interactions, as an annotator produced them scene by scene.
struct InteractionLog {
    std::vector<InteractionRecord> records;

    bool operator==(const InteractionLog&) const = default;
};

inline constexpr const char* kInteractionCsvHeader = "season,episode,scene,char_a,char_b";

// CSV schema: exact header `season,episode,scene,char_a,char_b`, then one
// record per line. Names are trimmed and must be non-empty and comma-free;
// the two endpoints must differ; scene indices must be non-decreasing within
// an episode; a re-appearing header line is an error. Throws ParseError with
// the offending line number.
InteractionLog parse_interaction_log(std::istream& in);
void write_interaction_log(std::ostream& out, const InteractionLog& log);

InteractionLog read_interaction_log_file(const std::filesystem::path& path);

// The time slice a graph aggregates. episode == 0 means a whole season;
// season == 0 appears when the source carries no season attribution.
struct TimeSlice {
    int season = 0;
    int episode = 0;

    auto operator<=>(const TimeSlice&) const = default;
};

enum class Granularity { episode, season };

// One graph per slice; edge weight = number of interactions of that pair
// inside the slice. Every character mentioned in a slice is a node.
std::map<TimeSlice, WeightedGraph> log_to_graphs(const InteractionLog& log,
                                                 Granularity granularity);

}  // namespace narranet
