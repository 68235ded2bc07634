#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cdc/graph.hpp"

namespace cdc::testing {

// Exhaustive maximum-weight clique over all vertex subsets; only for graphs
// with at most ~22 vertices. Independent of the search implementation.
inline BigInt brute_force_max_weight(const SkeletonGraph& g, std::vector<int>* witness = nullptr) {
    const int n = g.vertex_count();
    std::vector<std::uint32_t> adj(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && g.adjacent(u, v)) adj[u] |= 1u << v;
    BigInt best = 0;
    std::uint32_t best_set = 0;
    for (std::uint32_t set = 0; set < (1u << n); ++set) {
        bool clique = true;
        for (int v = 0; v < n && clique; ++v)
            if (set & (1u << v))
                if ((set & ~(adj[v] | (1u << v))) != 0) clique = false;
        if (!clique) continue;
        BigInt w = 0;
        for (int v = 0; v < n; ++v)
            if (set & (1u << v)) w += g.weight(v);
        if (w > best) {
            best = w;
            best_set = set;
        }
    }
    if (witness) {
        witness->clear();
        for (int v = 0; v < n; ++v)
            if (best_set & (1u << v)) witness->push_back(v);
    }
    return best;
}

// Random filtered instance with a bounded vertex count, for soundness checks.
inline SkeletonGraph random_small_instance(std::mt19937_64& rng, int max_vertices = 20) {
    std::uniform_int_distribution<int> n_dist(6, 10);
    std::uniform_int_distribution<int> q_dist(1, 5);
    for (;;) {
        const int n = n_dist(rng);
        std::uniform_int_distribution<int> k_dist(2, std::min(4, n - 2));
        const int k = k_dist(rng);
        const long q = q_dist(rng);
        std::uniform_int_distribution<int> split_dist(2, n - 2);
        const int first = split_dist(rng);
        std::uniform_int_distribution<int> a_dist(0, std::min(k, first));
        const int a = a_dist(rng);
        BlockProfileConstraint filter({{first, BlockCondition::AtMost, a},
                                       {n - first, BlockCondition::AtLeast,
                                        std::min(n - first, k - a)}});
        SkeletonGraph g = build_graph(n, 4, k, q, &filter);
        if (g.vertex_count() >= 2 && g.vertex_count() <= max_vertices) return g;
    }
}

}  // namespace cdc::testing
