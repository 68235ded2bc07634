#pragma once

#include <atomic>
#include <functional>
#include <vector>

#include "cdc/bigint.hpp"
#include "cdc/graph.hpp"

namespace cdc {

// A clique given by ascending vertex indices with its cached total weight.
struct Clique {
    std::vector<int> members;
    BigInt weight = 0;

    bool empty() const { return members.empty(); }
    std::size_t size() const { return members.size(); }
};

Clique make_clique(const SkeletonGraph& g, std::vector<int> members);

// Greedy weight cap for every clique extension of s by vertices with indices
// above max(s): starting from w(s), admit each common neighbor in index order
// until the size cap ub is reached. Sound because weights are non-increasing
// in vertex index.
BigInt ub_extension(const SkeletonGraph& g, const Clique& s, int ub);

// Observer invoked on every entry into the dive recursion; used by the
// heuristic to harvest partial cliques.
using DiveHook = std::function<void(const std::vector<int>& members, const BigInt& weight)>;

struct SearchOptions {
    int ub = 0;               // size cap certified by the caller
    int threads = 1;          // > 1 splits first-level subtrees across threads
    DiveHook hook = nullptr;  // sequential mode only
    const std::atomic<bool>* stop = nullptr;
};

// Branch-and-bound maximum weight clique: depth-first over index-increasing
// extensions, descending only when the greedy cap strictly beats the
// incumbent. With a valid ub the result is a maximum weight clique; the
// incumbent update is strict, so ties keep the first clique found.
// With threads > 1 the optimal weight is unchanged but the witness may be
// any maximum-weight clique.
Clique exact_max_weight_clique(const SkeletonGraph& g, const SearchOptions& opts);
Clique exact_max_weight_clique(const SkeletonGraph& g, int ub, int threads = 1);

// Runs the dive from a seed clique, pruning against an initial incumbent
// weight (the round-global incumbent of the heuristic). Returns the best
// clique encountered in the subtree, which may weigh less than the floor.
Clique dive_from_seed(const SkeletonGraph& g, const Clique& seed, const SearchOptions& opts,
                      const BigInt& initial_floor);

// Classical recursive Johnson upper bound for binary constant-weight codes
// A(n, d, k); always at least the maximum clique size of the graph.
long johnson_ub(int n, int d, int k);

// Exact maximum number of pairwise-adjacent vertices (unit weights) via a
// dedicated bitset branch and bound with a greedy coloring cap.
int max_clique_size(const SkeletonGraph& g, int initial_lb = 0, long known_ub = -1);

}  // namespace cdc
