#include "support/graph_enum.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <unordered_set>

namespace graphenum {

bool has_edge(Mask m, int i, int j) {
    if (i == j) {
        return false;
    }
    if (i > j) {
        std::swap(i, j);
    }
    return (m >> pair_bit(i, j)) & 1u;
}

namespace {

struct NodeKey {
    int degree = 0;
    std::array<int, 8> neighbour_degrees{};  // sorted descending, padded with -1

    bool operator==(const NodeKey&) const = default;
    bool operator<(const NodeKey& other) const {
        if (degree != other.degree) {
            return degree > other.degree;  // higher degree sorts first
        }
        return neighbour_degrees > other.neighbour_degrees;
    }
};

struct CanonicalSearch {
    Mask m = 0;
    int n = 0;
    int total_bits = 0;
    std::vector<int> candidates_by_position;  // flattened: nodes with required key
    std::vector<NodeKey> keys;
    std::vector<NodeKey> required;  // key each position must receive
    std::array<int, 8> perm{};
    std::array<bool, 8> used{};
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();

    void run(int position, std::uint32_t partial, int bits_so_far) {
        if (position == n) {
            best = std::min(best, partial);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v] || !(keys[v] == required[position])) {
                continue;
            }
            std::uint32_t row = 0;
            for (int q = 0; q < position; ++q) {
                row = (row << 1) | (has_edge(m, perm[q], v) ? 1u : 0u);
            }
            const std::uint32_t next_partial = (partial << position) | row;
            const int next_bits = bits_so_far + position;
            // A completed labeling extends the partial value with lower-order
            // bits only, so a partial already above the incumbent's prefix
            // cannot win.
            if (next_partial > (best >> (total_bits - next_bits))) {
                continue;
            }
            used[v] = true;
            perm[position] = v;
            run(position + 1, next_partial, next_bits);
            used[v] = false;
        }
    }
};

}  // namespace

std::uint32_t canonical_value(Mask m, int n) {
    CanonicalSearch search;
    search.m = m;
    search.n = n;
    search.total_bits = n * (n - 1) / 2;
    search.keys.resize(n);
    for (int v = 0; v < n; ++v) {
        NodeKey key;
        key.neighbour_degrees.fill(-1);
        for (int u = 0; u < n; ++u) {
            if (has_edge(m, u, v)) {
                ++key.degree;
            }
        }
        search.keys[v] = key;
    }
    // Refine with the neighbours' degrees; splits most regular-degree cases
    // and keeps the permutation search shallow.
    for (int v = 0; v < n; ++v) {
        int slot = 0;
        for (int u = 0; u < n; ++u) {
            if (has_edge(m, u, v)) {
                search.keys[v].neighbour_degrees[slot++] = search.keys[u].degree;
            }
        }
        std::sort(search.keys[v].neighbour_degrees.begin(),
                  search.keys[v].neighbour_degrees.begin() + slot, std::greater<>());
    }
    search.required = search.keys;
    std::sort(search.required.begin(), search.required.end());
    search.run(0, 0, 0);
    return search.best;
}

std::vector<Mask> canonical_graphs(int n) {
    std::vector<Mask> reps{0};  // the single 1-node graph
    for (int size = 2; size <= n; ++size) {
        std::unordered_set<std::uint32_t> seen;
        std::vector<Mask> next;
        const int base_bit = (size - 1) * (size - 2) / 2;
        for (const Mask rep : reps) {
            for (Mask s = 0; s < (1u << (size - 1)); ++s) {
                // Attach a fresh node whose neighbourhood in the old nodes is s.
                const Mask candidate = rep | (s << base_bit);
                if (seen.insert(canonical_value(candidate, size)).second) {
                    next.push_back(candidate);
                }
            }
        }
        reps = std::move(next);
    }
    return reps;
}

std::vector<Mask> all_labeled_graphs(int n) {
    const int bits = n * (n - 1) / 2;
    std::vector<Mask> all;
    all.reserve(std::size_t{1} << bits);
    for (Mask m = 0; m < (1u << bits); ++m) {
        all.push_back(m);
    }
    return all;
}

bool is_connected(Mask m, int n) {
    if (n == 0) {
        return true;
    }
    std::array<bool, 8> visited{};
    std::array<int, 8> stack{};
    int top = 0;
    stack[top++] = 0;
    visited[0] = true;
    int count = 1;
    while (top > 0) {
        const int v = stack[--top];
        for (int u = 0; u < n; ++u) {
            if (!visited[u] && has_edge(m, u, v)) {
                visited[u] = true;
                stack[top++] = u;
                ++count;
            }
        }
    }
    return count == n;
}

narranet::WeightedGraph to_graph(Mask m, int n) {
    narranet::WeightedGraph g;
    for (int i = 0; i < n; ++i) {
        g.add_node(std::string(1, static_cast<char>('a' + i)));
    }
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (has_edge(m, i, j)) {
                g.add_weight(std::string(1, static_cast<char>('a' + i)),
                             std::string(1, static_cast<char>('a' + j)), 1);
            }
        }
    }
    return g;
}

}  // namespace graphenum
