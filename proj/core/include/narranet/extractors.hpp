#pragma once

#include <cstdint>

#include "narranet/graph.hpp"
#include "narranet/rng.hpp"
#include "narranet/simulate.hpp"

namespace narranet {

// The three observation channels applied to one episode.
struct ObservationTriple {
    WeightedGraph manual;
    WeightedGraph cooccurrence;
    WeightedGraph nlp;
    int replicate = 0;
};

// Annotator's view: one edge increment per interaction, speaker/listener
// order discarded. Every character the episode visits is a node, even if all
// of their scenes left them without an interaction partner.
WeightedGraph extract_manual(const EpisodeSample& episode);

// Subtitle-style view: within each scene, every unordered pair of that
// scene's characters gains +1, regardless of who actually spoke to whom.
WeightedGraph extract_cooccurrence(const EpisodeSample& episode);

struct NlpExtraction {
    WeightedGraph graph;
    std::uint64_t interactions = 0;
    std::uint64_t rewired = 0;  // listeners that actually changed
};

// Transcript-pipeline view: each interaction keeps its speaker; with
// probability q the listener is replaced by a uniform draw over the
// episode's other characters (neither the speaker nor the true listener).
// When that pool is empty the interaction stays as recorded. Only recorded
// endpoints become nodes, so characters can drop out relative to manual.
NlpExtraction extract_nlp_detailed(const EpisodeSample& episode, double q,
                                   RandomStream& rng);
WeightedGraph extract_nlp(const EpisodeSample& episode, double q, RandomStream& rng);

// All three channels; the stream is consumed by the nlp channel only.
ObservationTriple extract_all(const EpisodeSample& episode, double q,
                              RandomStream& rng);

}  // namespace narranet
