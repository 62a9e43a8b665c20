#include "narranet/extractors.hpp"

#include <algorithm>
#include <vector>

#include "narranet/errors.hpp"

namespace narranet {

WeightedGraph extract_manual(const EpisodeSample& episode) {
    WeightedGraph g;
    for (const SceneRecord& scene : episode.scenes) {
        for (const NodeId& c : scene.characters) {
            g.add_node(c);
        }
        for (const Interaction& i : scene.interactions) {
            g.add_weight(i.speaker, i.listener, 1);
        }
    }
    return g;
}

WeightedGraph extract_cooccurrence(const EpisodeSample& episode) {
    WeightedGraph g;
    for (const SceneRecord& scene : episode.scenes) {
        for (std::size_t i = 0; i < scene.characters.size(); ++i) {
            g.add_node(scene.characters[i]);
            for (std::size_t j = i + 1; j < scene.characters.size(); ++j) {
                g.add_weight(scene.characters[i], scene.characters[j], 1);
            }
        }
    }
    return g;
}

NlpExtraction extract_nlp_detailed(const EpisodeSample& episode, double q,
                                   RandomStream& rng) {
    if (!(q >= 0.0 && q <= 1.0)) {
        throw DataError("rewire probability must be in [0, 1]");
    }
    const std::set<NodeId> cast_set = episode.characters();
    const std::vector<NodeId> cast(cast_set.begin(), cast_set.end());  // sorted

    NlpExtraction out;
    for (const SceneRecord& scene : episode.scenes) {
        for (const Interaction& i : scene.interactions) {
            ++out.interactions;
            NodeId listener = i.listener;
            // cast.size() <= 2 leaves no third character to rewire towards.
            if (cast.size() > 2 && rng.bernoulli(q)) {
                // Uniform over the cast minus {speaker, listener}: draw an
                // index into the reduced list and shift it past the excluded
                // sorted positions.
                const auto spk = static_cast<std::size_t>(
                    std::lower_bound(cast.begin(), cast.end(), i.speaker) - cast.begin());
                const auto lis = static_cast<std::size_t>(
                    std::lower_bound(cast.begin(), cast.end(), i.listener) - cast.begin());
                std::size_t pick = rng.uniform_below(cast.size() - 2);
                const std::size_t lo = std::min(spk, lis);
                const std::size_t hi = std::max(spk, lis);
                if (pick >= lo) {
                    ++pick;
                }
                if (pick >= hi) {
                    ++pick;
                }
                listener = cast[pick];
                ++out.rewired;
            }
            out.graph.add_weight(i.speaker, listener, 1);
        }
    }
    return out;
}

WeightedGraph extract_nlp(const EpisodeSample& episode, double q, RandomStream& rng) {
    return extract_nlp_detailed(episode, q, rng).graph;
}

ObservationTriple extract_all(const EpisodeSample& episode, double q, RandomStream& rng) {
    ObservationTriple t;
    t.replicate = episode.season_replicate;
    t.manual = extract_manual(episode);
    t.cooccurrence = extract_cooccurrence(episode);
    t.nlp = extract_nlp(episode, q, rng);
    return t;
}

}  // namespace narranet
