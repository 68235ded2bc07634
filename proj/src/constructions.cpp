#include "cdc/constructions.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <stdexcept>

#include "cdc/errors.hpp"
#include "cdc/graph.hpp"
#include "cdc/search.hpp"

namespace cdc {

BigInt multilevel_bound(const SkeletonCode& s, long q, bool assume_attained) {
    return skeleton_bound_poly(s, assume_attained).eval(q);
}

VectorFamily VectorFamily::explicit_set(SkeletonCode s) {
    VectorFamily f;
    f.n = s.n;
    f.d = s.d;
    f.k = s.k;
    f.set = std::move(s);
    return f;
}

VectorFamily VectorFamily::profile_set(int n, int d, int k, BlockProfileConstraint c) {
    if (c.total_length() != n)
        throw std::invalid_argument("profile_set: block lengths must sum to n");
    VectorFamily f;
    f.n = n;
    f.d = d;
    f.k = k;
    f.set = std::move(c);
    return f;
}

namespace {

// Cut positions shared by all parts' block boundaries; segments are the
// atomic intervals, so per-segment ones-counts describe both parts exactly.
std::vector<int> refined_segments(const std::vector<VectorFamily>& parts) {
    std::vector<int> cuts{0};
    for (const VectorFamily& f : parts) {
        if (const auto* profile = std::get_if<BlockProfileConstraint>(&f.set)) {
            int pos = 0;
            for (const Block& b : profile->blocks()) {
                pos += b.length;
                cuts.push_back(pos);
            }
        }
    }
    cuts.push_back(parts.front().n);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<int> lengths;
    for (std::size_t i = 1; i < cuts.size(); ++i) lengths.push_back(cuts[i] - cuts[i - 1]);
    return lengths;
}

// All per-segment count vectors realizable by a weight-k vector of the
// profile (segment counts within a block sum to something the condition
// allows).
std::vector<std::vector<int>> profile_tuples(const BlockProfileConstraint& profile, int k,
                                             const std::vector<int>& segments) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    // walk blocks; within each block distribute its count over its segments
    const auto& blocks = profile.blocks();
    std::function<void(std::size_t, std::size_t, int)> rec = [&](std::size_t block_idx,
                                                                 std::size_t seg_idx, int used) {
        if (block_idx == blocks.size()) {
            if (used == k) out.push_back(current);
            return;
        }
        const Block& b = blocks[block_idx];
        // segments covered by this block
        std::size_t seg_end = seg_idx;
        int len = 0;
        while (len < b.length) len += segments[seg_end++];
        const int max_count = std::min(b.length, k - used);
        for (int c = 0; c <= max_count; ++c) {
            const bool ok = (b.cond == BlockCondition::Exactly && c == b.count) ||
                            (b.cond == BlockCondition::AtMost && c <= b.count) ||
                            (b.cond == BlockCondition::AtLeast && c >= b.count);
            if (!ok) continue;
            // distribute c over the block's segments
            std::function<void(std::size_t, int)> split = [&](std::size_t s, int left) {
                if (s == seg_end) {
                    if (left == 0) rec(block_idx + 1, seg_end, used + c);
                    return;
                }
                const int cap = std::min(segments[s], left);
                for (int take = 0; take <= cap; ++take) {
                    current.push_back(take);
                    split(s + 1, left - take);
                    current.pop_back();
                }
            };
            split(seg_idx, c);
        }
    };
    rec(0, 0, 0);
    return out;
}

std::vector<int> vector_tuple(std::uint64_t enc, int n, const std::vector<int>& segments) {
    std::vector<int> t;
    int pos = 1;
    const IdentifyingVector v(enc, n);
    for (int len : segments) {
        int ones = 0;
        for (int i = pos; i < pos + len; ++i) ones += v.bit(i);
        t.push_back(ones);
        pos += len;
    }
    return t;
}

int tuple_distance(const std::vector<int>& a, const std::vector<int>& b) {
    int dist = 0;
    for (std::size_t i = 0; i < a.size(); ++i) dist += std::abs(a[i] - b[i]);
    return dist;
}

std::string tuple_str(const std::vector<int>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(t[i]);
    }
    return s + ")";
}

}  // namespace

UnionCertificate validate_generalized_union(const std::vector<VectorFamily>& parts) {
    if (parts.empty()) return {true, "no parts"};
    const int n = parts.front().n, d = parts.front().d, k = parts.front().k;
    for (const VectorFamily& f : parts)
        if (f.n != n || f.d != d || f.k != k)
            throw std::invalid_argument("validate_generalized_union: parts disagree on (n,d,k)");

    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (const auto* s = std::get_if<SkeletonCode>(&parts[i].set)) {
            try {
                s->validate();
            } catch (const ValidationError& e) {
                return {false, "part " + std::to_string(i + 1) + " invalid: " + e.what()};
            }
        } else {
            const auto& profile = std::get<BlockProfileConstraint>(parts[i].set);
            if (profile.total_length() != n)
                return {false, "part " + std::to_string(i + 1) + " block lengths do not sum to n"};
        }
    }

    const std::vector<int> segments = refined_segments(parts);
    // per-part tuple lists (for explicit parts, paired with the encodings)
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            const auto* si = std::get_if<SkeletonCode>(&parts[i].set);
            const auto* sj = std::get_if<SkeletonCode>(&parts[j].set);
            if (si && sj) {
                for (std::uint64_t a : si->vectors)
                    for (std::uint64_t b : sj->vectors) {
                        if (a == b || std::popcount(a ^ b) < d)
                            return {false, "parts " + std::to_string(i + 1) + "/" +
                                               std::to_string(j + 1) + ": encodings " +
                                               std::to_string(a) + " and " + std::to_string(b) +
                                               " are at Hamming distance " +
                                               std::to_string(std::popcount(a ^ b))};
                    }
                continue;
            }
            // at least one side is a profile: compare per-segment count tuples
            auto tuples_of = [&](const VectorFamily& f) {
                std::vector<std::pair<std::vector<int>, std::string>> ts;
                if (const auto* s = std::get_if<SkeletonCode>(&f.set)) {
                    for (std::uint64_t e : s->vectors)
                        ts.emplace_back(vector_tuple(e, n, segments), std::to_string(e));
                } else {
                    for (auto& t : profile_tuples(std::get<BlockProfileConstraint>(f.set), k,
                                                  segments))
                        ts.emplace_back(std::move(t), "");
                }
                return ts;
            };
            for (const auto& [ta, na] : tuples_of(parts[i]))
                for (const auto& [tb, nb] : tuples_of(parts[j])) {
                    const int dist = tuple_distance(ta, tb);
                    if (dist < d)
                        return {false,
                                "parts " + std::to_string(i + 1) + "/" + std::to_string(j + 1) +
                                    ": ones profiles " + tuple_str(ta) +
                                    (na.empty() ? "" : " (encoding " + na + ")") + " and " +
                                    tuple_str(tb) + (nb.empty() ? "" : " (encoding " + nb + ")") +
                                    " admit Hamming distance " + std::to_string(dist)};
                }
        }
    }
    return {true, "all cross-part distances >= " + std::to_string(d)};
}

BoundExpression linkage_bound(int n, int d, int k, int delta, const SkeletonCode& restricted) {
    if (delta < 0 || delta >= n)
        throw std::invalid_argument("linkage_bound: requires 0 <= delta < n");
    if (d % 2 != 0 || d < 2) throw std::invalid_argument("linkage_bound: d must be even");
    BoundExpression expr;
    expr.add_term(QPolynomial::monomial(static_cast<long>(delta) * (k - d / 2 + 1)),
                  BaseBoundRef(n - delta, d, k));
    if (delta == 0) {
        if (!restricted.vectors.empty())
            throw ValidationError("linkage_bound: delta=0 admits no restricted part");
        return expr;
    }
    if (!restricted.vectors.empty()) {
        if (restricted.n != n || restricted.d != d || restricted.k != k)
            throw ValidationError("linkage_bound: restricted skeleton disagrees on (n,d,k)");
        const auto profile = BlockProfileConstraint::restricted(n, n - delta, d, k);
        for (std::uint64_t e : restricted.vectors)
            if (!profile.matches(IdentifyingVector(e, n)))
                throw ValidationError("linkage_bound: encoding " + std::to_string(e) +
                                      " violates the restriction " + profile.to_string());
        SkeletonCode checked = restricted;
        checked.m = n - delta;
        expr.add_constant(skeleton_bound_poly(checked));
    }
    return expr;
}

IlpInstance::IlpInstance(int n_, int m_, int d_, int k_, BigInt cap) : n(n_), m(m_), d(d_), k(k_), c0_cap(std::move(cap)) {
    if (!(1 <= k && k <= m && m <= n))
        throw std::invalid_argument("ilp: requires 1 <= k <= m <= n");
    if (d % 2 != 0 || d < 4 || d / 2 > k)
        throw std::invalid_argument("ilp: requires even d with 2 <= d/2 <= k");
    if (c0_cap < 0) throw std::invalid_argument("ilp: c0 cap must be nonnegative");
}

std::vector<int> IlpInstance::variable_set() const {
    std::vector<int> J;
    for (int j = std::max(0, k - n + m); j <= k - d / 2; ++j) J.push_back(j);
    return J;
}

namespace {

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

}  // namespace

BigInt ilp_upper_bound(const IlpInstance& inst) {
    const std::vector<int> J = inst.variable_set();
    if (J.empty()) return 0;
    const int t = inst.k - inst.d / 2 + 1;  // support-subset size
    const int rows = t + 1;
    // coefficient matrix and right-hand sides
    std::vector<std::vector<BigInt>> coef(rows, std::vector<BigInt>(J.size()));
    std::vector<BigInt> rhs(rows);
    for (int i = 0; i <= t; ++i) {
        rhs[i] = binomial(inst.m, i) * binomial(inst.n - inst.m, t - i);
        for (std::size_t jj = 0; jj < J.size(); ++jj)
            coef[i][jj] = binomial(J[jj], i) * binomial(inst.k - J[jj], t - i);
    }

    const auto cap_for = [&](std::size_t jj, const std::vector<BigInt>& slack) {
        BigInt cap = -1;
        for (int i = 0; i < rows; ++i)
            if (coef[i][jj] > 0) {
                const BigInt c = slack[i] / coef[i][jj];
                if (cap < 0 || c < cap) cap = c;
            }
        if (J[jj] == 0 && cap > inst.c0_cap) cap = inst.c0_cap;
        return cap;
    };

    BigInt best = 0;
    std::vector<BigInt> slack = rhs;
    // descending j: high-j variables have the loosest coefficients
    std::function<void(int, BigInt)> dfs = [&](int idx, BigInt sum) {
        if (idx < 0) {
            if (sum > best) best = sum;
            return;
        }
        // optimistic completion with caps under current slack
        BigInt optimistic = sum;
        for (int r = idx; r >= 0; --r) optimistic += cap_for(static_cast<std::size_t>(r), slack);
        if (optimistic <= best) return;
        const BigInt cap = cap_for(static_cast<std::size_t>(idx), slack);
        if (cap > 2'000'000)
            throw ValidationError("ilp_upper_bound: variable range too large for enumeration");
        for (BigInt v = cap; v >= 0; --v) {
            for (int i = 0; i < rows; ++i) slack[i] -= coef[i][static_cast<std::size_t>(idx)] * v;
            dfs(idx - 1, sum + v);
            for (int i = 0; i < rows; ++i) slack[i] += coef[i][static_cast<std::size_t>(idx)] * v;
        }
    };
    dfs(static_cast<int>(J.size()) - 1, 0);
    return best;
}

long a1_bruteforce(int n, int d, int k, int max_n) {
    if (d % 2 != 0 || d < 2) throw std::invalid_argument("a1_bruteforce: d must be even");
    if (k < 0 || k > n) return 0;
    if (k == 0 || k == n) return 1;
    if (n > max_n)
        throw ValidationError("a1_bruteforce: n=" + std::to_string(n) + " exceeds the cap " +
                              std::to_string(max_n) + "; supply a table value instead");
    const SkeletonGraph g = build_graph(n, d, k, 1);
    const long cap = johnson_ub(n, d, k);
    return max_clique_size(g, 0, cap);
}

}  // namespace cdc
