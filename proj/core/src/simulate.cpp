#include "narranet/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <istream>
#include <optional>
#include <ostream>
#include <thread>

#include "narranet/errors.hpp"
#include "narranet/metrics.hpp"

namespace narranet {

void SimConfig::validate() const {
    if (n_replicates < 1) {
        throw DataError("n_replicates must be >= 1");
    }
    if (n_scenes < 1) {
        throw DataError("n_scenes must be >= 1");
    }
    if (n_interactions_per_scene < 1) {
        throw DataError("n_interactions_per_scene must be >= 1");
    }
    if (!(rewire_prob >= 0.0 && rewire_prob <= 1.0)) {
        throw DataError("rewire_prob must be in [0, 1]");
    }
}

std::set<NodeId> EpisodeSample::characters() const {
    std::set<NodeId> out;
    for (const SceneRecord& s : scenes) {
        out.insert(s.characters.begin(), s.characters.end());
    }
    return out;
}

std::uint64_t EpisodeSample::interaction_count() const {
    std::uint64_t total = 0;
    for (const SceneRecord& s : scenes) {
        total += s.interactions.size();
    }
    return total;
}

SceneSampler::SceneSampler(const SeasonNetwork& season) {
    const WeightedGraph& g = season.graph;
    if (g.edge_count() == 0) {
        throw GraphError("season network has no edges, cannot sample scenes");
    }
    ids_.assign(g.nodes().begin(), g.nodes().end());
    const std::size_t n = ids_.size();

    const MetricVector centrality = eigenvector_centrality(g, AdjacencyWeighting::weighted);
    start_cdf_.resize(n);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += centrality.at(ids_[i]);
        start_cdf_[i] = acc;
    }

    nbr_.resize(n);
    nbr_cdf_.resize(n);
    auto index_of = [&](const NodeId& id) {
        return static_cast<std::uint32_t>(
            std::lower_bound(ids_.begin(), ids_.end(), id) - ids_.begin());
    };
    for (const auto& [pair, w] : g.edges()) {
        const std::uint32_t a = index_of(pair.first);
        const std::uint32_t b = index_of(pair.second);
        nbr_[a].push_back(b);
        nbr_cdf_[a].push_back(static_cast<double>(w));
        nbr_[b].push_back(a);
        nbr_cdf_[b].push_back(static_cast<double>(w));
    }
    for (std::size_t i = 0; i < n; ++i) {
        double run = 0.0;
        for (double& v : nbr_cdf_[i]) {
            run += v;
            v = run;
        }
    }
}

std::size_t SceneSampler::draw_start(RandomStream& rng) const {
    const double total = start_cdf_.back();
    while (true) {
        const double u = rng.uniform01() * total;
        const std::size_t i = static_cast<std::size_t>(
            std::lower_bound(start_cdf_.begin(), start_cdf_.end(), u) -
            start_cdf_.begin());
        const std::size_t idx = std::min(i, ids_.size() - 1);
        // Isolated nodes carry (numerically) zero centrality mass; redraw on
        // the off chance the draw lands in their sliver of the CDF.
        if (!nbr_[idx].empty()) {
            return idx;
        }
    }
}

std::size_t SceneSampler::draw_step(std::size_t from, RandomStream& rng) const {
    const auto& cdf = nbr_cdf_[from];
    const double u = rng.uniform01() * cdf.back();
    const std::size_t i = static_cast<std::size_t>(
        std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    return nbr_[from][std::min(i, cdf.size() - 1)];
}

SceneRecord SceneSampler::sample_scene(int n_interactions, RandomStream& rng) const {
    SceneRecord rec;
    std::set<std::size_t> seen;
    auto visit = [&](std::size_t idx) {
        if (seen.insert(idx).second) {
            rec.characters.push_back(ids_[idx]);
        }
    };
    std::size_t current = draw_start(rng);
    visit(current);
    rec.interactions.reserve(static_cast<std::size_t>(n_interactions));
    for (int t = 0; t < n_interactions; ++t) {
        const std::size_t next = draw_step(current, rng);
        rec.interactions.push_back({ids_[current], ids_[next]});
        visit(next);
        current = next;
    }
    return rec;
}

SceneRecord simulate_scene(const SeasonNetwork& season, int n_interactions,
                           RandomStream& rng) {
    return SceneSampler(season).sample_scene(n_interactions, rng);
}

namespace {

std::optional<ReplicatePair> produce_replicate(const SeasonModel& model,
                                               const SimConfig& cfg, int index) {
    RandomStream rng = RandomStream::child(cfg.seed, static_cast<std::uint64_t>(index));
    SeasonNetwork season = simulate_season(model, rng, index);
    if (season.graph.edge_count() == 0) {
        return std::nullopt;  // counted as a skip by the caller
    }
    const SceneSampler sampler(season);
    EpisodeSample episode;
    episode.season_replicate = index;
    episode.scenes.reserve(static_cast<std::size_t>(cfg.n_scenes));
    for (int s = 0; s < cfg.n_scenes; ++s) {
        episode.scenes.push_back(
            sampler.sample_scene(cfg.n_interactions_per_scene, rng));
    }
    return ReplicatePair{index, std::move(season), std::move(episode)};
}

}  // namespace

RunStats run_replicates(const SeasonModel& model, const SimConfig& cfg,
                        const std::function<void(ReplicatePair&&)>& sink,
                        unsigned threads) {
    cfg.validate();
    if (threads < 1) {
        threads = 1;
    }
    RunStats stats;

    // Replicates are produced in bounded blocks and always delivered to the
    // sink in index order on this thread; replicate k's stream depends only
    // on (seed, k), so the thread count cannot change any result.
    const int block = static_cast<int>(threads) * 8;
    for (int lo = 0; lo < cfg.n_replicates; lo += block) {
        const int hi = std::min(cfg.n_replicates, lo + block);
        std::vector<std::optional<ReplicatePair>> slots(hi - lo);
        std::vector<std::string> error_slots(hi - lo);
        std::vector<char> failed(hi - lo, 0);
        std::atomic<int> next{lo};

        auto work = [&] {
            while (true) {
                const int k = next.fetch_add(1);
                if (k >= hi) {
                    return;
                }
                try {
                    slots[k - lo] = produce_replicate(model, cfg, k);
                } catch (const std::exception& e) {
                    error_slots[k - lo] = e.what();
                    failed[k - lo] = 1;
                }
            }
        };
        if (threads == 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(threads);
            for (unsigned t = 0; t < threads; ++t) {
                pool.emplace_back(work);
            }
            for (std::thread& t : pool) {
                t.join();
            }
        }

        for (int k = lo; k < hi; ++k) {
            if (failed[k - lo]) {
                throw Error("replicate " + std::to_string(k) + ": " + error_slots[k - lo]);
            }
            if (!slots[k - lo]) {
                stats.skipped.push_back(k);
                continue;
            }
            sink(std::move(*slots[k - lo]));
            ++stats.completed;
        }
    }
    return stats;
}

void write_episode(std::ostream& out, const EpisodeSample& episode) {
    for (std::size_t s = 0; s < episode.scenes.size(); ++s) {
        out << "SCENE " << (s + 1) << '\n';
        for (const Interaction& i : episode.scenes[s].interactions) {
            out << i.speaker << '\t' << i.listener << '\n';
        }
    }
}

EpisodeSample read_episode(std::istream& in) {
    EpisodeSample episode;
    SceneRecord* current = nullptr;
    std::set<NodeId> scene_seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (line.starts_with("SCENE ")) {
            const std::string num = line.substr(6);
            int idx = 0;
            auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), idx);
            if (ec != std::errc{} || ptr != num.data() + num.size()) {
                throw ParseError("bad scene header '" + line + "'", lineno);
            }
            if (idx != static_cast<int>(episode.scenes.size()) + 1) {
                throw ParseError("scene headers must be consecutive from 1", lineno);
            }
            episode.scenes.emplace_back();
            current = &episode.scenes.back();
            scene_seen.clear();
            continue;
        }
        if (current == nullptr) {
            throw ParseError("interaction line before any SCENE header", lineno);
        }
        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
            throw ParseError("expected 'speaker<TAB>listener'", lineno);
        }
        Interaction i{line.substr(0, tab), line.substr(tab + 1)};
        if (i.speaker.empty() || i.listener.empty() || i.speaker == i.listener) {
            throw ParseError("bad interaction endpoints", lineno);
        }
        for (const NodeId* who : {&i.speaker, &i.listener}) {
            if (scene_seen.insert(*who).second) {
                current->characters.push_back(*who);
            }
        }
        current->interactions.push_back(std::move(i));
    }
    return episode;
}

}  // namespace narranet
