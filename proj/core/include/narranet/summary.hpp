#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

#include "narranet/interaction_log.hpp"

namespace narranet {

// Scenes per (season, episode).
using SceneCounts = std::map<std::pair<int, int>, int>;

// Number of distinct scene indices each episode of the log touches. A lower
// bound on the true scene count: scenes with no interaction leave no trace
// in an interaction log.
SceneCounts scene_counts_from_log(const InteractionLog& log);

struct SeasonSummary {
    int season = 0;
    int episodes = 0;
    int characters = 0;
    std::uint64_t interactions = 0;
    int scenes = 0;
    double interactions_per_episode = 0.0;  // NaN when episodes == 0
    double scenes_per_episode = 0.0;        // NaN when episodes == 0
    double interactions_per_scene = 0.0;    // NaN when scenes == 0

    bool operator==(const SeasonSummary&) const = default;
};

// Per-season totals and ratios. Rows cover the union of seasons appearing in
// the log and in scene_counts; zero-denominator ratios come back NaN.
std::vector<SeasonSummary> summarize(const InteractionLog& log,
                                     const SceneCounts& scene_counts);

// Fixed-width text table; undefined ratios print as '-'.
void write_summary_table(std::ostream& out, const std::vector<SeasonSummary>& rows);

}  // namespace narranet
