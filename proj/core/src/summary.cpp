#include "narranet/summary.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>

namespace narranet {

SceneCounts scene_counts_from_log(const InteractionLog& log) {
    std::map<std::pair<int, int>, std::set<int>> seen;
    for (const auto& r : log.records) {
        seen[{r.season, r.episode}].insert(r.scene);
    }
    SceneCounts counts;
    for (const auto& [key, scenes] : seen) {
        counts[key] = static_cast<int>(scenes.size());
    }
    return counts;
}

std::vector<SeasonSummary> summarize(const InteractionLog& log,
                                     const SceneCounts& scene_counts) {
    struct Acc {
        std::set<int> episodes;
        std::set<NodeId> characters;
        std::uint64_t interactions = 0;
        int scenes = 0;
    };
    std::map<int, Acc> by_season;
    for (const auto& r : log.records) {
        Acc& acc = by_season[r.season];
        acc.episodes.insert(r.episode);
        acc.characters.insert(r.char_a);
        acc.characters.insert(r.char_b);
        ++acc.interactions;
    }
    for (const auto& [key, count] : scene_counts) {
        Acc& acc = by_season[key.first];
        acc.episodes.insert(key.second);
        acc.scenes += count;
    }

    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<SeasonSummary> rows;
    rows.reserve(by_season.size());
    for (const auto& [season, acc] : by_season) {
        SeasonSummary row;
        row.season = season;
        row.episodes = static_cast<int>(acc.episodes.size());
        row.characters = static_cast<int>(acc.characters.size());
        row.interactions = acc.interactions;
        row.scenes = acc.scenes;
        row.interactions_per_episode =
            row.episodes == 0 ? nan
                              : static_cast<double>(row.interactions) / row.episodes;
        row.scenes_per_episode =
            row.episodes == 0 ? nan : static_cast<double>(row.scenes) / row.episodes;
        row.interactions_per_scene =
            row.scenes == 0 ? nan
                            : static_cast<double>(row.interactions) / row.scenes;
        rows.push_back(row);
    }
    return rows;
}

namespace {

std::string ratio_cell(double v) {
    if (std::isnan(v)) {
        return "-";
    }
    std::ostringstream os;
    os << std::fixed << std::setprecision(2) << v;
    return os.str();
}

}  // namespace

void write_summary_table(std::ostream& out, const std::vector<SeasonSummary>& rows) {
    out << std::left << std::setw(8) << "season" << std::right << std::setw(10)
        << "episodes" << std::setw(12) << "characters" << std::setw(14)
        << "interactions" << std::setw(8) << "scenes" << std::setw(10) << "ints/ep"
        << std::setw(11) << "scenes/ep" << std::setw(12) << "ints/scene" << '\n';
    for (const auto& r : rows) {
        out << std::left << std::setw(8) << r.season << std::right << std::setw(10)
            << r.episodes << std::setw(12) << r.characters << std::setw(14)
            << r.interactions << std::setw(8) << r.scenes << std::setw(10)
            << ratio_cell(r.interactions_per_episode) << std::setw(11)
            << ratio_cell(r.scenes_per_episode) << std::setw(12)
            << ratio_cell(r.interactions_per_scene) << '\n';
    }
}

}  // namespace narranet
