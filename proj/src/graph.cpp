#include "cdc/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "cdc/errors.hpp"

namespace cdc {

SkeletonGraph::SkeletonGraph(int n, int d, int k, long q, std::vector<std::uint64_t> encodings)
    : n_(n), d_(d), k_(k), q_(q), enc_(std::move(encodings)) {
    if (q < 1) throw std::invalid_argument("SkeletonGraph: q must be >= 1");
    if (d % 2 != 0) throw std::invalid_argument("SkeletonGraph: d must be even");
    exp_.reserve(enc_.size());
    for (std::uint64_t e : enc_) exp_.push_back(weight_exponent(e, n_, d_));
    std::vector<int> order(enc_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (exp_[a] != exp_[b]) return exp_[a] > exp_[b];
        return enc_[a] > enc_[b];
    });
    std::vector<std::uint64_t> enc2(enc_.size());
    std::vector<long> exp2(enc_.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        enc2[i] = enc_[order[i]];
        exp2[i] = exp_[order[i]];
    }
    enc_ = std::move(enc2);
    exp_ = std::move(exp2);
    weight_.reserve(enc_.size());
    for (long e : exp_) weight_.push_back(ipow(q_, e));
}

std::optional<int> SkeletonGraph::index_of(std::uint64_t encoding) const {
    for (std::size_t i = 0; i < enc_.size(); ++i)
        if (enc_[i] == encoding) return static_cast<int>(i);
    return std::nullopt;
}

BigInt SkeletonGraph::clique_weight(const std::vector<int>& members) const {
    BigInt w = 0;
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (!adjacent(members[i], members[j]))
                throw std::invalid_argument("clique_weight: members are not pairwise adjacent");
        w += weight_[members[i]];
    }
    return w;
}

SkeletonGraph build_graph(int n, int d, int k, long q, const BlockProfileConstraint* filter) {
    if (k < 1 || k > n) throw std::invalid_argument("build_graph: requires 1 <= k <= n");
    std::vector<std::uint64_t> encs;
    // Gosper's hack over all weight-k words of length n.
    std::uint64_t v = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (v < limit) {
        if (!filter || filter->matches(IdentifyingVector(v, n))) encs.push_back(v);
        const std::uint64_t c = v & -v;
        const std::uint64_t r = v + c;
        v = (((r ^ v) >> 2) / c) | r;
    }
    return SkeletonGraph(n, d, k, q, std::move(encs));
}

SkeletonCode skeleton_from_vertices(const SkeletonGraph& g, const std::vector<int>& members) {
    SkeletonCode s;
    s.n = g.n();
    s.d = g.d();
    s.k = g.k();
    for (int v : members) s.vectors.push_back(g.encoding(v));
    return s;
}

}  // namespace cdc
