// Microbenchmarks for the hot paths: season sampling, the scene random walk,
// the per-node metrics, and a full replicate (simulate + extract + compare).
// All inputs come from one fixed-seed season-6-shaped model so numbers are
// comparable across runs.

#include <benchmark/benchmark.h>

#include <iomanip>
#include <set>
#include <sstream>
#include <string>

#include "narranet/compare.hpp"
#include "narranet/extractors.hpp"
#include "narranet/metrics.hpp"
#include "narranet/report.hpp"
#include "narranet/rng.hpp"
#include "narranet/season_model.hpp"
#include "narranet/simulate.hpp"

namespace {

using namespace narranet;

constexpr std::uint64_t kSeed = 271828;
constexpr int kScenes = 15;
constexpr int kInteractions = 4;
constexpr double kRewireProb = 0.3;

const SeasonModel& model() {
    static const SeasonModel m = [] {
        std::set<NodeId> core;
        std::set<NodeId> cast;
        for (int i = 1; i <= 6; ++i) {
            const NodeId id = "CORE_" + std::to_string(i);
            core.insert(id);
            cast.insert(id);
        }
        for (int i = 1; i <= 93; ++i) {
            std::ostringstream name;
            name << "EXTRA_" << std::setw(2) << std::setfill('0') << i;
            cast.insert(name.str());
        }
        SeasonModel out;
        out.partition = CharacterPartition::split(cast, core);
        out.lambda_cc = 81.0;
        out.lambda_cn = 0.71;
        out.lambda_nn = 0.0093;
        out.season = 6;
        return out;
    }();
    return m;
}

const SeasonNetwork& season() {
    static const SeasonNetwork net = [] {
        RandomStream rng = RandomStream::child(kSeed, 0);
        return simulate_season(model(), rng);
    }();
    return net;
}

const EpisodeSample& episode() {
    static const EpisodeSample ep = [] {
        RandomStream rng = RandomStream::child(kSeed, 1);
        SceneSampler sampler(season());
        EpisodeSample out;
        for (int s = 0; s < kScenes; ++s) {
            out.scenes.push_back(sampler.sample_scene(kInteractions, rng));
        }
        return out;
    }();
    return ep;
}

const ObservationTriple& triple() {
    static const ObservationTriple t = [] {
        RandomStream rng = RandomStream::child(~kSeed, 0);
        return extract_all(episode(), kRewireProb, rng);
    }();
    return t;
}

void BM_SimulateSeason(benchmark::State& state) {
    for (auto _ : state) {
        RandomStream rng = RandomStream::child(kSeed, 0);
        const SeasonNetwork net = simulate_season(model(), rng);
        benchmark::DoNotOptimize(net.graph.edge_count());
    }
}
BENCHMARK(BM_SimulateSeason);

void BM_SceneSamplerBuild(benchmark::State& state) {
    for (auto _ : state) {
        const SceneSampler sampler(season());
        benchmark::DoNotOptimize(&sampler);
    }
}
BENCHMARK(BM_SceneSamplerBuild);

void BM_SampleScene(benchmark::State& state) {
    const SceneSampler sampler(season());
    RandomStream rng = RandomStream::child(kSeed, 2);
    for (auto _ : state) {
        const SceneRecord scene = sampler.sample_scene(kInteractions, rng);
        benchmark::DoNotOptimize(scene.characters.size());
    }
}
BENCHMARK(BM_SampleScene);

void BM_ExtractAll(benchmark::State& state) {
    for (auto _ : state) {
        RandomStream rng = RandomStream::child(~kSeed, 0);
        const ObservationTriple t = extract_all(episode(), kRewireProb, rng);
        benchmark::DoNotOptimize(t.nlp.edge_count());
    }
}
BENCHMARK(BM_ExtractAll);

void BM_Betweenness(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(betweenness(season().graph));
    }
}
BENCHMARK(BM_Betweenness);

void BM_EigenvectorCentrality(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(eigenvector_centrality(season().graph));
    }
}
BENCHMARK(BM_EigenvectorCentrality);

void BM_Closeness(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(closeness(season().graph));
    }
}
BENCHMARK(BM_Closeness);

void BM_CompareTriple(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(compare_triple(triple(), model().partition.core));
    }
}
BENCHMARK(BM_CompareTriple);

void BM_FullReplicate(benchmark::State& state) {
    for (auto _ : state) {
        RandomStream rng = RandomStream::child(kSeed, 3);
        const SeasonNetwork net = simulate_season(model(), rng);
        SceneSampler sampler(net);
        EpisodeSample ep;
        for (int s = 0; s < kScenes; ++s) {
            ep.scenes.push_back(sampler.sample_scene(kInteractions, rng));
        }
        RandomStream extract_rng = RandomStream::child(~kSeed, 3);
        const ObservationTriple t = extract_all(ep, kRewireProb, extract_rng);
        benchmark::DoNotOptimize(compare_triple(t, model().partition.core));
    }
}
BENCHMARK(BM_FullReplicate);

}  // namespace

BENCHMARK_MAIN();
