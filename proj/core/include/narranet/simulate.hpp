#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <set>
#include <vector>

#include "narranet/season_model.hpp"

namespace narranet {

struct SimConfig {
    int n_replicates = 10000;
    int n_scenes = 15;
    int n_interactions_per_scene = 4;
    double rewire_prob = 0.3;
    std::uint64_t seed = 0;

    void validate() const;  // throws DataError on out-of-range values
};

// One directed speaker -> listener utterance.
struct Interaction {
    NodeId speaker;
    NodeId listener;

    bool operator==(const Interaction&) const = default;
};

struct SceneRecord {
    std::vector<NodeId> characters;         // first-visit order, deduplicated
    std::vector<Interaction> interactions;  // exactly n_interactions_per_scene

    bool operator==(const SceneRecord&) const = default;
};

struct EpisodeSample {
    std::vector<SceneRecord> scenes;
    int season_replicate = 0;  // index of the generating season network

    std::set<NodeId> characters() const;  // union over scenes
    std::uint64_t interaction_count() const;

    bool operator==(const EpisodeSample&) const = default;
};

// Per-season-network sampling state for the scene random walk. The walk
// starts at a node drawn proportionally to eigenvector centrality (weighted
// adjacency) and each step moves to a neighbour drawn proportionally to edge
// weight; the current node speaks, the stepped-to node listens. A drawn
// start with no neighbours is redrawn. Construction throws GraphError when
// the season network has no edges.
class SceneSampler {
public:
    explicit SceneSampler(const SeasonNetwork& season);

    SceneRecord sample_scene(int n_interactions, RandomStream& rng) const;

private:
    std::size_t draw_start(RandomStream& rng) const;
    std::size_t draw_step(std::size_t from, RandomStream& rng) const;

    std::vector<NodeId> ids_;
    std::vector<double> start_cdf_;                 // cumulative centrality mass
    std::vector<std::vector<std::uint32_t>> nbr_;   // neighbour indices
    std::vector<std::vector<double>> nbr_cdf_;      // cumulative edge weight
};

// Convenience wrapper for a single scene; builds a throwaway sampler.
SceneRecord simulate_scene(const SeasonNetwork& season, int n_interactions,
                           RandomStream& rng);

// One synthetic season network and the episode sampled from it.
struct ReplicatePair {
    int index = 0;
    SeasonNetwork season;
    EpisodeSample episode;
};

struct RunStats {
    int completed = 0;
    std::vector<int> skipped;  // replicates whose season network had no edges
};

// Runs cfg.n_replicates independent (season network, episode) pairs from the
// model. Replicate k draws everything from the child stream (cfg.seed, k),
// so results are identical for every thread count; the sink is invoked in
// replicate order on the calling thread. Season networks without edges are
// counted as skipped instead of producing a pair. Any error thrown while
// producing a replicate is rethrown with the replicate index attached.
RunStats run_replicates(const SeasonModel& model, const SimConfig& cfg,
                        const std::function<void(ReplicatePair&&)>& sink,
                        unsigned threads = 1);

// Line-oriented episode text: `SCENE <l>` headers (1-based, consecutive)
// followed by one `speaker<TAB>listener` line per interaction.
void write_episode(std::ostream& out, const EpisodeSample& episode);
EpisodeSample read_episode(std::istream& in);

}  // namespace narranet
