#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "cdc/bigint.hpp"
#include "cdc/skeleton.hpp"
#include "cdc/vectors.hpp"

namespace cdc {

// Compatibility graph of candidate identifying vectors: all weight-k vectors
// of length n (optionally filtered by a block profile), adjacent iff their
// Hamming distance is at least d. Vertices are sorted by non-increasing
// weight q^{exponent}, ties broken by descending integer encoding, so lower
// index never means lower weight. Adjacency is computed on demand from the
// packed encodings; no adjacency matrix is materialized.
class SkeletonGraph {
  public:
    SkeletonGraph(int n, int d, int k, long q, std::vector<std::uint64_t> encodings);

    int n() const { return n_; }
    int d() const { return d_; }
    int k() const { return k_; }
    long q() const { return q_; }
    int vertex_count() const { return static_cast<int>(enc_.size()); }

    std::uint64_t encoding(int v) const { return enc_[v]; }
    long exponent(int v) const { return exp_[v]; }
    const BigInt& weight(int v) const { return weight_[v]; }

    bool adjacent(int u, int v) const {
        return u != v && std::popcount(enc_[u] ^ enc_[v]) >= d_;
    }

    // Index of the vertex with this encoding, if present.
    std::optional<int> index_of(std::uint64_t encoding) const;

    // Members must be pairwise adjacent (validated), given as vertex indices.
    BigInt clique_weight(const std::vector<int>& members) const;

  private:
    int n_, d_, k_;
    long q_;
    std::vector<std::uint64_t> enc_;
    std::vector<long> exp_;
    std::vector<BigInt> weight_;
};

// q >= 1; q = 1 gives unit weights (pure cardinality, the A_1 setting).
SkeletonGraph build_graph(int n, int d, int k, long q,
                          const BlockProfileConstraint* filter = nullptr);

// Extracts the skeleton code selected by a set of vertex indices.
SkeletonCode skeleton_from_vertices(const SkeletonGraph& g, const std::vector<int>& members);

}  // namespace cdc
