#pragma once

#include <atomic>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cdc/graph.hpp"
#include "cdc/search.hpp"

namespace cdc {

struct HeuristicParams {
    int delta1 = 0;
    int delta2 = 0;
    int ub_start = 10;
    int ub_increment = 10;
    int max_rounds = 0;         // 0 = run until a round brings no improvement
    std::size_t list_cap = 2000;

    void validate(int ub) const;  // requires delta1 + delta2 <= ub
};

struct HeuristicResult {
    Clique best;
    std::vector<Clique> next_list;
    int rounds = 0;
    int final_ub = 0;
};

// One Algorithm-4 invocation: dives from every seed with size cap ub; every
// dive entry with |S| >= ub - delta2 contributes the prefix of its smallest
// ub - delta2 - delta1 members to the next seed list (deduplicated; when the
// cap is hit the lowest-weight entry is evicted first).
HeuristicResult heuristic_round(const SkeletonGraph& g, const std::vector<Clique>& seeds,
                                const HeuristicParams& p, int ub);

// Driver: starts from the given seeds (empty list means the empty clique),
// feeds each round's harvested list into the next with ub += ub_increment,
// and stops after a round without weight improvement or after max_rounds.
HeuristicResult heuristic_search(const SkeletonGraph& g, std::vector<Clique> seeds,
                                 const HeuristicParams& p, std::ostream* progress = nullptr,
                                 const std::atomic<bool>* stop = nullptr);

// Resumable state: header `n d k q ub round`, then one clique per line as
// space-separated vertex integer encodings.
struct Checkpoint {
    int n = 0, d = 0, k = 0;
    long q = 1;
    int ub = 0;
    int round = 0;
    std::vector<std::vector<std::uint64_t>> cliques;

    void save(std::ostream& out) const;
    void save_file(const std::string& path) const;
    static Checkpoint load(std::istream& in);
    static Checkpoint load_file(const std::string& path);

    // Maps encodings back to vertex indices; rejects encodings that are not
    // vertices of g (e.g. resuming a filtered search without the filter).
    std::vector<Clique> to_cliques(const SkeletonGraph& g) const;
    static Checkpoint from_cliques(const SkeletonGraph& g, const std::vector<Clique>& cliques,
                                   int ub, int round);
};

}  // namespace cdc
