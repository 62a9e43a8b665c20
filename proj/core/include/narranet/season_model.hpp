#pragma once

#include <filesystem>
#include <iosfwd>
#include <set>

#include "narranet/graph.hpp"
#include "narranet/rng.hpp"

namespace narranet {

// Core / non-core split of a season's character set. The two sets are
// disjoint; their union is the full cast.
struct CharacterPartition {
    std::set<NodeId> core;
    std::set<NodeId> non_core;

    // Splits `characters` by membership in `core`. Throws DataError when
    // core is empty or not a subset of characters.
    static CharacterPartition split(const std::set<NodeId>& characters,
                                    const std::set<NodeId>& core);

    std::set<NodeId> all() const;

    bool operator==(const CharacterPartition&) const = default;
};

// Two-class Poisson season model: one interaction rate per class pairing
// (core-core, core-non-core, non-core-non-core).
struct SeasonModel {
    CharacterPartition partition;
    double lambda_cc = 0.0;
    double lambda_cn = 0.0;
    double lambda_nn = 0.0;
    int season = 0;

    bool operator==(const SeasonModel&) const = default;
};

// Synthetic season-level network drawn from a SeasonModel.
struct SeasonNetwork {
    WeightedGraph graph;
    int replicate = 0;
};

// Maximum-likelihood rates: each rate is the mean edge weight over every
// candidate pair of its class combination, pairs without an edge counting as
// zero-weight observations. The partition must cover exactly the graph's
// node set. Throws EmptyClassError when a class combination has no candidate
// pair (e.g. fewer than two core characters).
SeasonModel fit(const WeightedGraph& g, const CharacterPartition& partition,
                int season = 0);

// One Poisson draw per unordered character pair, with the rate of the pair's
// class combination; zero draws leave the pair edgeless. The node set always
// carries the model's full cast. Pairs are visited in sorted order, so a
// given stream state yields one exact network.
SeasonNetwork simulate_season(const SeasonModel& model, RandomStream& rng,
                              int replicate = 0);

// `key = value` text file: season, lambda_cc, lambda_cn, lambda_nn, core,
// characters (the name lists comma-separated). Unknown or missing keys and
// a core that is not a subset of characters are errors.
void write_season_model(std::ostream& out, const SeasonModel& model);
SeasonModel read_season_model(std::istream& in);

void write_season_model_file(const std::filesystem::path& path, const SeasonModel& model);
SeasonModel read_season_model_file(const std::filesystem::path& path);

}  // namespace narranet
