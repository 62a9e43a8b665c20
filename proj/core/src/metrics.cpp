#include "narranet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "narranet/errors.hpp"

namespace narranet {

namespace {

// Index-based view of the graph for the traversal-heavy metrics.
struct Compact {
    std::vector<NodeId> ids;  // sorted
    std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>> adj;
};

Compact compact_view(const WeightedGraph& g) {
    Compact c;
    c.ids.assign(g.nodes().begin(), g.nodes().end());
    c.adj.resize(c.ids.size());
    auto index_of = [&](const NodeId& id) {
        return static_cast<std::uint32_t>(
            std::lower_bound(c.ids.begin(), c.ids.end(), id) - c.ids.begin());
    };
    for (const auto& [pair, w] : g.edges()) {
        const std::uint32_t a = index_of(pair.first);
        const std::uint32_t b = index_of(pair.second);
        c.adj[a].emplace_back(b, w);
        c.adj[b].emplace_back(a, w);
    }
    for (auto& nbrs : c.adj) {
        std::sort(nbrs.begin(), nbrs.end());
    }
    return c;
}

bool adjacent(const Compact& c, std::uint32_t a, std::uint32_t b) {
    const auto& nbrs = c.adj[a];
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(),
                               std::pair<std::uint32_t, std::uint64_t>{b, 0});
    return it != nbrs.end() && it->first == b;
}

MetricVector to_metric_vector(const Compact& c, const std::vector<double>& values) {
    MetricVector mv;
    for (std::size_t i = 0; i < c.ids.size(); ++i) {
        mv.emplace_hint(mv.end(), c.ids[i], values[i]);
    }
    return mv;
}

}  // namespace

double global_clustering(const WeightedGraph& g) {
    const Compact c = compact_view(g);
    std::uint64_t triples = 0;
    for (const auto& nbrs : c.adj) {
        const std::uint64_t d = nbrs.size();
        triples += d * (d - 1) / 2;
    }
    if (triples == 0) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    // Common-neighbour count summed over edges; each triangle is counted once
    // per edge, so `closed` equals 3 * triangles.
    std::uint64_t closed = 0;
    for (std::size_t a = 0; a < c.adj.size(); ++a) {
        for (const auto& [b, w] : c.adj[a]) {
            if (b <= a) {
                continue;
            }
            for (const auto& [k, wk] : c.adj[a]) {
                if (k != b && adjacent(c, b, k)) {
                    ++closed;
                }
            }
        }
    }
    return static_cast<double>(closed) / static_cast<double>(triples);
}

MetricVector weighted_degree(const WeightedGraph& g) {
    const Compact c = compact_view(g);
    std::vector<double> values(c.ids.size(), 0.0);
    for (std::size_t i = 0; i < c.adj.size(); ++i) {
        for (const auto& [j, w] : c.adj[i]) {
            values[i] += static_cast<double>(w);
        }
    }
    return to_metric_vector(c, values);
}

MetricVector betweenness(const WeightedGraph& g) {
    const Compact c = compact_view(g);
    const std::size_t n = c.ids.size();
    std::vector<double> score(n, 0.0);
    std::vector<int> dist(n);
    std::vector<double> sigma(n);
    std::vector<double> delta(n);
    std::vector<std::vector<std::uint32_t>> preds(n);
    std::vector<std::uint32_t> order;
    order.reserve(n);

    for (std::uint32_t s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto& p : preds) {
            p.clear();
        }
        order.clear();

        dist[s] = 0;
        sigma[s] = 1.0;
        order.push_back(s);
        // order doubles as the BFS queue; geodesics ignore weights.
        for (std::size_t head = 0; head < order.size(); ++head) {
            const std::uint32_t v = order[head];
            for (const auto& [w, wt] : c.adj[v]) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    order.push_back(w);
                }
                if (dist[w] == dist[v] + 1) {
                    sigma[w] += sigma[v];
                    preds[w].push_back(v);
                }
            }
        }
        // Dependency accumulation in reverse BFS order.
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const std::uint32_t w = *it;
            for (const std::uint32_t v : preds[w]) {
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            }
            if (w != s) {
                score[w] += delta[w];
            }
        }
    }
    // Every unordered pair was visited from both endpoints.
    for (auto& x : score) {
        x *= 0.5;
    }
    return to_metric_vector(c, score);
}

MetricVector eigenvector_centrality(const WeightedGraph& g, AdjacencyWeighting weighting) {
    if (g.edge_count() == 0) {
        throw GraphError("eigenvector centrality of an edgeless graph is undefined");
    }
    const Compact c = compact_view(g);
    const std::size_t n = c.ids.size();
    const bool use_weights = weighting == AdjacencyWeighting::weighted;

    constexpr double kIterTol = 1e-10;      // successive-iterate max-norm
    constexpr double kResidualTol = 5e-9;   // ||A v - lambda v||, final gate
    constexpr std::size_t kMaxIters = 100000;

    auto apply_adjacency = [&](const std::vector<double>& x, std::vector<double>& out) {
        for (std::size_t i = 0; i < n; ++i) {
            double acc = 0.0;
            for (const auto& [j, w] : c.adj[i]) {
                acc += (use_weights ? static_cast<double>(w) : 1.0) * x[j];
            }
            out[i] = acc;
        }
    };

    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(n);
    for (std::size_t iter = 0; iter < kMaxIters; ++iter) {
        // Iterate with A + I: same leading eigenvector, but no oscillation on
        // bipartite graphs (whose spectrum is symmetric around zero).
        apply_adjacency(x, y);
        double norm_sq = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            y[i] += x[i];
            norm_sq += y[i] * y[i];
        }
        const double norm = std::sqrt(norm_sq);
        double diff = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            y[i] /= norm;
            diff = std::max(diff, std::abs(y[i] - x[i]));
        }
        x.swap(y);
        if (diff < kIterTol) {
            // The iterate moves little; accept only once the eigenpair
            // residual is small in absolute terms as well.
            apply_adjacency(x, y);
            double lambda = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                lambda += x[i] * y[i];
            }
            double resid_sq = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double r = y[i] - lambda * x[i];
                resid_sq += r * r;
            }
            if (std::sqrt(resid_sq) <= kResidualTol) {
                return to_metric_vector(c, x);
            }
        }
    }
    throw ConvergenceError("eigenvector centrality hit the iteration cap");
}

MetricVector closeness(const WeightedGraph& g) {
    const Compact c = compact_view(g);
    const std::size_t n = c.ids.size();
    std::vector<double> values(n, 0.0);
    std::vector<int> dist(n);
    std::vector<std::uint32_t> queue;
    queue.reserve(n);

    for (std::uint32_t s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        dist[s] = 0;
        queue.push_back(s);
        std::uint64_t reached = 0;  // component size, self included
        std::uint64_t total = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::uint32_t v = queue[head];
            ++reached;
            total += static_cast<std::uint64_t>(dist[v]);
            for (const auto& [w, wt] : c.adj[v]) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        // 1 / mean distance within the component; an isolated node has no
        // distances to average and gets 0.
        values[s] = total == 0 ? 0.0
                               : static_cast<double>(reached) / static_cast<double>(total);
    }
    return to_metric_vector(c, values);
}

MetricVector local_clustering(const WeightedGraph& g) {
    const Compact c = compact_view(g);
    std::vector<double> values(c.ids.size(), 0.0);
    for (std::size_t i = 0; i < c.adj.size(); ++i) {
        const auto& nbrs = c.adj[i];
        const std::size_t d = nbrs.size();
        if (d < 2) {
            continue;  // stays 0
        }
        std::uint64_t closed = 0;
        for (std::size_t a = 0; a < d; ++a) {
            for (std::size_t b = a + 1; b < d; ++b) {
                if (adjacent(c, nbrs[a].first, nbrs[b].first)) {
                    ++closed;
                }
            }
        }
        values[i] = static_cast<double>(closed) /
                    (0.5 * static_cast<double>(d) * static_cast<double>(d - 1));
    }
    return to_metric_vector(c, values);
}

}  // namespace narranet
