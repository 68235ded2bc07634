#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cdc/bigint.hpp"
#include "cdc/bounds.hpp"
#include "cdc/skeleton.hpp"

namespace cdc {

// Size of the union of lifted diagram codes over the skeleton: the bound
// polynomial evaluated at q.
BigInt multilevel_bound(const SkeletonCode& s, long q, bool assume_attained = false);

// A set of identifying vectors given either explicitly or as everything
// matching a block profile (with the common n, d, k).
struct VectorFamily {
    int n = 0;
    int d = 4;
    int k = 0;
    std::variant<SkeletonCode, BlockProfileConstraint> set;

    static VectorFamily explicit_set(SkeletonCode s);
    static VectorFamily profile_set(int n, int d, int k, BlockProfileConstraint c);
};

struct UnionCertificate {
    bool ok = false;
    std::string detail;  // names the violating pair when !ok
};

// Checks that each part is internally valid and that every cross-part pair
// of identifying vectors is at Hamming distance >= d. Profile-shaped parts
// are handled analytically through their feasible per-block ones-counts.
UnionCertificate validate_generalized_union(const std::vector<VectorFamily>& parts);

// q^{delta (k-d/2+1)} * A_q(n-delta, d; k)  +  bound polynomial of the
// restricted skeleton (vectors with at most k-d/2 ones among the first
// n-delta coordinates and at least d/2 among the last delta).
BoundExpression linkage_bound(int n, int d, int k, int delta, const SkeletonCode& restricted);

// Counting relaxation for restricted skeleton codes: c_j counts vectors with
// exactly j ones among the first m coordinates; every (k-d/2+1)-subset of
// coordinates lies in the support of at most one codeword.
struct IlpInstance {
    int n = 0, m = 0, d = 4, k = 0;
    BigInt c0_cap;  // A_1(n-m, d; k)

    IlpInstance(int n, int m, int d, int k, BigInt c0_cap);
    std::vector<int> variable_set() const;  // J
};

// Exact maximum of sum c_j over the instance constraints (small-dimension
// branch and bound with slack-derived caps; no external solver).
BigInt ilp_upper_bound(const IlpInstance& inst);

// Exact A_1(n,d;k): maximum binary constant-weight-k code with minimum
// distance d, by exact clique search. Refuses n above the cap.
long a1_bruteforce(int n, int d, int k, int max_n = 14);

}  // namespace cdc
