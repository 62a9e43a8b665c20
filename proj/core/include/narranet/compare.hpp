#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "narranet/correlation.hpp"
#include "narranet/extractors.hpp"
#include "narranet/metrics.hpp"

namespace narranet {

enum class NetworkKind { manual, cooccurrence, nlp };
inline constexpr std::array<NetworkKind, 3> kNetworkKinds = {
    NetworkKind::manual, NetworkKind::cooccurrence, NetworkKind::nlp};

// The two comparisons of interest: the annotator network against each of the
// two automatic channels.
enum class Comparison { manual_cooc, manual_nlp };
inline constexpr std::array<Comparison, 2> kComparisons = {
    Comparison::manual_cooc, Comparison::manual_nlp};

enum class CharacterMetric { degree, betweenness, eigenvector, closeness, local_clustering };
inline constexpr std::array<CharacterMetric, 5> kCharacterMetrics = {
    CharacterMetric::degree, CharacterMetric::betweenness, CharacterMetric::eigenvector,
    CharacterMetric::closeness, CharacterMetric::local_clustering};

// Which node pairs an edge-weight comparison ranges over: every pair of the
// node union, only pairs with an edge in at least one network, or every core
// character pair.
enum class EdgeMode { all, nonzero, core };
inline constexpr std::array<EdgeMode, 3> kEdgeModes = {
    EdgeMode::all, EdgeMode::nonzero, EdgeMode::core};

const char* to_string(NetworkKind k);
const char* to_string(Comparison c);
const char* to_string(CharacterMetric m);
const char* to_string(EdgeMode m);

std::optional<NetworkKind> network_kind_from_string(const std::string& s);
std::optional<Comparison> comparison_from_string(const std::string& s);
std::optional<CharacterMetric> character_metric_from_string(const std::string& s);
std::optional<EdgeMode> edge_mode_from_string(const std::string& s);

// Dispatch to the per-node metric implementation.
MetricVector character_metric(const WeightedGraph& g, CharacterMetric m);

// Whole-network description of one channel. clustering is NaN when the graph
// has no connected triple; density is NaN for graphs of fewer than two
// nodes; normalized_* divide by the maximum over the triple's channels.
struct GlobalMetrics {
    std::size_t size = 0;
    std::uint64_t total_weight = 0;
    double density = 0.0;
    double clustering = 0.0;
    double normalized_size = 0.0;
    double normalized_weight = 0.0;
};

std::map<NetworkKind, GlobalMetrics> compare_global(const ObservationTriple& t);

// Spearman of each character metric, each network's metric vector computed on
// the full network and then restricted to the node intersection. Undefined
// when the intersection has fewer than three characters or a side is
// rank-constant.
using CharacterCorrelations =
    std::map<std::pair<Comparison, CharacterMetric>, std::optional<double>>;
CharacterCorrelations compare_characters(const ObservationTriple& t);

// The paired weight vectors an edge comparison correlates. Absent pairs
// contribute weight 0.
struct EdgeWeightPairs {
    std::vector<double> first;
    std::vector<double> second;
};
EdgeWeightPairs edge_weight_pairs(const WeightedGraph& a, const WeightedGraph& b,
                                  EdgeMode mode, const std::set<NodeId>& core);

// Spearman over the paired weights per mode. Core mode needs a non-empty
// core; an empty pair set or constant side is undefined.
using EdgeCorrelations =
    std::map<std::pair<Comparison, EdgeMode>, std::optional<double>>;
EdgeCorrelations compare_edges(const ObservationTriple& t, const std::set<NodeId>& core);

// --- longitudinal analyses over real per-season networks ---

struct TrendPoint {
    int season = 0;
    double avg_core_interactions = 0.0;

    bool operator==(const TrendPoint&) const = default;
};

struct TrendResult {
    std::vector<TrendPoint> points;
    LinearFit fit;

    bool operator==(const TrendResult&) const = default;
};

// Mean edge weight over all core pairs per season, plus the least-squares
// line over (season, average). Needs >= 2 seasons and >= 2 core characters
// (throws DataError otherwise).
TrendResult trend_core_interactions(const std::map<int, WeightedGraph>& season_graphs,
                                    const std::set<NodeId>& core);

// Dense rank (1 = highest value, ties share that best rank) of one
// character's metric value within each season. Throws AbsentCharacterError
// naming the first season the character is missing from.
std::map<int, int> rank_character(const std::map<int, WeightedGraph>& season_graphs,
                                  CharacterMetric metric, const NodeId& character);

}  // namespace narranet
