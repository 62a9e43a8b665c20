#include "narranet/compare.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "narranet/errors.hpp"

namespace narranet {

const char* to_string(NetworkKind k) {
    switch (k) {
        case NetworkKind::manual: return "manual";
        case NetworkKind::cooccurrence: return "cooc";
        case NetworkKind::nlp: return "nlp";
    }
    return "?";
}

const char* to_string(Comparison c) {
    switch (c) {
        case Comparison::manual_cooc: return "manual_cooc";
        case Comparison::manual_nlp: return "manual_nlp";
    }
    return "?";
}

const char* to_string(CharacterMetric m) {
    switch (m) {
        case CharacterMetric::degree: return "degree";
        case CharacterMetric::betweenness: return "betweenness";
        case CharacterMetric::eigenvector: return "eigenvector";
        case CharacterMetric::closeness: return "closeness";
        case CharacterMetric::local_clustering: return "local_clustering";
    }
    return "?";
}

const char* to_string(EdgeMode m) {
    switch (m) {
        case EdgeMode::all: return "all";
        case EdgeMode::nonzero: return "nonzero";
        case EdgeMode::core: return "core";
    }
    return "?";
}

namespace {

template <typename Enum, std::size_t N>
std::optional<Enum> enum_from_string(const std::array<Enum, N>& all, const std::string& s) {
    for (const Enum e : all) {
        if (s == to_string(e)) {
            return e;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<NetworkKind> network_kind_from_string(const std::string& s) {
    return enum_from_string(kNetworkKinds, s);
}
std::optional<Comparison> comparison_from_string(const std::string& s) {
    return enum_from_string(kComparisons, s);
}
std::optional<CharacterMetric> character_metric_from_string(const std::string& s) {
    return enum_from_string(kCharacterMetrics, s);
}
std::optional<EdgeMode> edge_mode_from_string(const std::string& s) {
    return enum_from_string(kEdgeModes, s);
}

MetricVector character_metric(const WeightedGraph& g, CharacterMetric m) {
    switch (m) {
        case CharacterMetric::degree: return weighted_degree(g);
        case CharacterMetric::betweenness: return betweenness(g);
        case CharacterMetric::eigenvector: return eigenvector_centrality(g);
        case CharacterMetric::closeness: return closeness(g);
        case CharacterMetric::local_clustering: return local_clustering(g);
    }
    throw Error("unknown character metric");
}

namespace {

const WeightedGraph& channel(const ObservationTriple& t, NetworkKind k) {
    switch (k) {
        case NetworkKind::manual: return t.manual;
        case NetworkKind::cooccurrence: return t.cooccurrence;
        case NetworkKind::nlp: return t.nlp;
    }
    throw Error("unknown network kind");
}

NetworkKind second_channel(Comparison c) {
    return c == Comparison::manual_cooc ? NetworkKind::cooccurrence : NetworkKind::nlp;
}

}  // namespace

std::map<NetworkKind, GlobalMetrics> compare_global(const ObservationTriple& t) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::map<NetworkKind, GlobalMetrics> out;
    std::size_t max_size = 0;
    std::uint64_t max_weight = 0;
    for (const NetworkKind k : kNetworkKinds) {
        const WeightedGraph& g = channel(t, k);
        GlobalMetrics m;
        m.size = size(g);
        m.total_weight = total_edge_weight(g);
        m.density = m.size < 2 ? nan : density(g);
        m.clustering = global_clustering(g);
        out.emplace(k, m);
        max_size = std::max(max_size, m.size);
        max_weight = std::max(max_weight, m.total_weight);
    }
    for (auto& [k, m] : out) {
        m.normalized_size = max_size == 0
                                ? 0.0
                                : static_cast<double>(m.size) / static_cast<double>(max_size);
        m.normalized_weight = max_weight == 0 ? 0.0
                                              : static_cast<double>(m.total_weight) /
                                                    static_cast<double>(max_weight);
    }
    return out;
}

CharacterCorrelations compare_characters(const ObservationTriple& t) {
    // Metric vectors are computed once per channel on the full network, then
    // restricted to each comparison's node intersection.
    std::map<std::pair<NetworkKind, CharacterMetric>, std::optional<MetricVector>> cache;
    auto vector_of = [&](NetworkKind k, CharacterMetric m) -> const std::optional<MetricVector>& {
        auto it = cache.find({k, m});
        if (it == cache.end()) {
            std::optional<MetricVector> mv;
            try {
                mv = character_metric(channel(t, k), m);
            } catch (const Error&) {
                mv = std::nullopt;  // e.g. eigenvector of an edgeless channel
            }
            it = cache.emplace(std::pair{k, m}, std::move(mv)).first;
        }
        return it->second;
    };

    CharacterCorrelations out;
    for (const Comparison cmp : kComparisons) {
        const WeightedGraph& a = t.manual;
        const WeightedGraph& b = channel(t, second_channel(cmp));
        std::vector<NodeId> common;
        std::set_intersection(a.nodes().begin(), a.nodes().end(), b.nodes().begin(),
                              b.nodes().end(), std::back_inserter(common));
        for (const CharacterMetric m : kCharacterMetrics) {
            std::optional<double> rho;
            if (common.size() >= 3) {
                const auto& va = vector_of(NetworkKind::manual, m);
                const auto& vb = vector_of(second_channel(cmp), m);
                if (va && vb) {
                    std::vector<double> xs;
                    std::vector<double> ys;
                    xs.reserve(common.size());
                    ys.reserve(common.size());
                    for (const NodeId& node : common) {
                        xs.push_back(va->at(node));
                        ys.push_back(vb->at(node));
                    }
                    rho = spearman(xs, ys);
                }
            }
            out.emplace(std::pair{cmp, m}, rho);
        }
    }
    return out;
}

EdgeWeightPairs edge_weight_pairs(const WeightedGraph& a, const WeightedGraph& b,
                                  EdgeMode mode, const std::set<NodeId>& core) {
    EdgeWeightPairs out;
    auto push = [&](const NodeId& x, const NodeId& y) {
        out.first.push_back(static_cast<double>(a.weight(x, y)));
        out.second.push_back(static_cast<double>(b.weight(x, y)));
    };
    switch (mode) {
        case EdgeMode::all: {
            std::vector<NodeId> nodes;
            std::set_union(a.nodes().begin(), a.nodes().end(), b.nodes().begin(),
                           b.nodes().end(), std::back_inserter(nodes));
            for (std::size_t i = 0; i < nodes.size(); ++i) {
                for (std::size_t j = i + 1; j < nodes.size(); ++j) {
                    push(nodes[i], nodes[j]);
                }
            }
            break;
        }
        case EdgeMode::nonzero: {
            std::set<NodePair> pairs;
            for (const auto& [pair, w] : a.edges()) {
                pairs.insert(pair);
            }
            for (const auto& [pair, w] : b.edges()) {
                pairs.insert(pair);
            }
            for (const NodePair& p : pairs) {
                push(p.first, p.second);
            }
            break;
        }
        case EdgeMode::core: {
            if (core.size() < 2) {
                throw DataError("core edge comparison needs at least two core characters");
            }
            const std::vector<NodeId> nodes(core.begin(), core.end());
            for (std::size_t i = 0; i < nodes.size(); ++i) {
                for (std::size_t j = i + 1; j < nodes.size(); ++j) {
                    push(nodes[i], nodes[j]);
                }
            }
            break;
        }
    }
    return out;
}

EdgeCorrelations compare_edges(const ObservationTriple& t, const std::set<NodeId>& core) {
    EdgeCorrelations out;
    for (const Comparison cmp : kComparisons) {
        const WeightedGraph& b = channel(t, second_channel(cmp));
        for (const EdgeMode mode : kEdgeModes) {
            std::optional<double> rho;
            if (mode != EdgeMode::core || core.size() >= 2) {
                const EdgeWeightPairs pairs = edge_weight_pairs(t.manual, b, mode, core);
                rho = spearman(pairs.first, pairs.second);
            }
            out.emplace(std::pair{cmp, mode}, rho);
        }
    }
    return out;
}

TrendResult trend_core_interactions(const std::map<int, WeightedGraph>& season_graphs,
                                    const std::set<NodeId>& core) {
    if (season_graphs.size() < 2) {
        throw DataError("trend needs at least two seasons");
    }
    if (core.size() < 2) {
        throw DataError("trend needs at least two core characters");
    }
    const std::vector<NodeId> nodes(core.begin(), core.end());
    const double pair_count =
        0.5 * static_cast<double>(nodes.size()) * static_cast<double>(nodes.size() - 1);

    TrendResult result;
    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto& [season, g] : season_graphs) {
        std::uint64_t total = 0;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            for (std::size_t j = i + 1; j < nodes.size(); ++j) {
                // Absent characters simply contribute zero-weight pairs.
                if (g.has_node(nodes[i]) && g.has_node(nodes[j])) {
                    total += g.weight(nodes[i], nodes[j]);
                }
            }
        }
        const double avg = static_cast<double>(total) / pair_count;
        result.points.push_back({season, avg});
        xs.push_back(static_cast<double>(season));
        ys.push_back(avg);
    }
    result.fit = fit_line(xs, ys);
    return result;
}

std::map<int, int> rank_character(const std::map<int, WeightedGraph>& season_graphs,
                                  CharacterMetric metric, const NodeId& character) {
    std::map<int, int> ranks;
    for (const auto& [season, g] : season_graphs) {
        if (!g.has_node(character)) {
            throw AbsentCharacterError("character '" + character +
                                       "' does not appear in season " +
                                       std::to_string(season));
        }
        const MetricVector values = character_metric(g, metric);
        const double own = values.at(character);
        // Dense rank: 1 + number of distinct values strictly above own.
        std::set<double> higher;
        for (const auto& [node, v] : values) {
            if (v > own) {
                higher.insert(v);
            }
        }
        ranks[season] = static_cast<int>(higher.size()) + 1;
    }
    return ranks;
}

}  // namespace narranet
