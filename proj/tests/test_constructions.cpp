#include <random>

#include "cdc/constructions.hpp"
#include "cdc/errors.hpp"
#include "doctest.h"

using namespace cdc;

namespace {

SkeletonCode restricted_10_7() {
    SkeletonCode s;
    s.n = 10;
    s.d = 4;
    s.k = 3;
    s.m = 7;
    s.vectors = {38, 21, 11};
    return s;
}

SkeletonCode restricted_11_7() {
    SkeletonCode s;
    s.n = 11;
    s.d = 4;
    s.k = 3;
    s.m = 7;
    s.vectors = {44, 74, 25, 134, 69, 35};
    return s;
}

}  // namespace

TEST_CASE("multilevel bound evaluates the skeleton polynomial") {
    CHECK(multilevel_bound(restricted_10_7(), 2) == 7);   // q^2+q+1
    CHECK(multilevel_bound(restricted_11_7(), 2) == 35);  // q^4+q^3+2q^2+q+1
    SkeletonCode empty;
    empty.n = 10;
    empty.d = 4;
    empty.k = 3;
    CHECK(multilevel_bound(empty, 5) == 0);
}

TEST_CASE("generalized union: disjoint full blocks are separated") {
    // {(n1 choose k)(n2 choose 0)} vs {(n1 choose 0)(n2 choose k)} with 2k >= d
    const auto part1 = VectorFamily::profile_set(
        10, 4, 3,
        BlockProfileConstraint({{5, BlockCondition::Exactly, 3}, {5, BlockCondition::Exactly, 0}}));
    const auto part2 = VectorFamily::profile_set(
        10, 4, 3,
        BlockProfileConstraint({{5, BlockCondition::Exactly, 0}, {5, BlockCondition::Exactly, 3}}));
    const auto cert = validate_generalized_union({part1, part2});
    CHECK(cert.ok);
}

TEST_CASE("generalized union: restricted skeleton vs lifted block") {
    const auto lifted = VectorFamily::profile_set(
        11, 4, 3,
        BlockProfileConstraint({{7, BlockCondition::Exactly, 3}, {4, BlockCondition::Exactly, 0}}));
    const auto rest = VectorFamily::explicit_set(restricted_11_7());
    const auto cert = validate_generalized_union({lifted, rest});
    CHECK(cert.ok);
}

TEST_CASE("generalized union: identical singletons fail with a certificate") {
    SkeletonCode s;
    s.n = 8;
    s.d = 4;
    s.k = 3;
    s.vectors = {0b11100000};
    const auto part = VectorFamily::explicit_set(s);
    const auto cert = validate_generalized_union({part, part});
    CHECK(!cert.ok);
    CHECK(cert.detail.find("224") != std::string::npos);
}

TEST_CASE("generalized union: near-miss profiles are caught") {
    // blocks force only distance 2
    const auto part1 = VectorFamily::profile_set(
        8, 4, 2,
        BlockProfileConstraint({{4, BlockCondition::Exactly, 2}, {4, BlockCondition::Exactly, 0}}));
    const auto part2 = VectorFamily::profile_set(
        8, 4, 2,
        BlockProfileConstraint({{4, BlockCondition::Exactly, 1}, {4, BlockCondition::Exactly, 1}}));
    const auto cert = validate_generalized_union({part1, part2});
    CHECK(!cert.ok);
}

TEST_CASE("linkage bound: worked compositions print exactly") {
    const BoundExpression e11 = linkage_bound(11, 4, 3, 4, restricted_11_7());
    CHECK(e11.to_string() == "q^8·A_q(7,4;3) + q^4+q^3+2q^2+q+1");
    const BoundExpression e10 = linkage_bound(10, 4, 3, 3, restricted_10_7());
    CHECK(e10.to_string() == "q^6·A_q(7,4;3) + q^2+q+1");

    BoundsRegistry reg;
    reg.add(2, 7, 4, 3, 333, "external tables");
    CHECK(e11.eval(2, reg) == 85283);
    CHECK(e10.eval(2, reg) == 64 * 333 + 7);
}

TEST_CASE("linkage bound: degenerate delta and violations") {
    SkeletonCode empty;
    empty.n = 9;
    empty.d = 4;
    empty.k = 3;
    const BoundExpression e = linkage_bound(9, 4, 3, 0, empty);
    CHECK(e.to_string() == "1·A_q(9,4;3)");

    SkeletonCode bad = restricted_10_7();
    bad.vectors.push_back(0b1110000000);  // three ones in the first 7 positions
    CHECK_THROWS_WITH_AS(linkage_bound(10, 4, 3, 3, bad), doctest::Contains("896"),
                         ValidationError);
}

TEST_CASE("ilp instances: variable sets and worked bounds") {
    const IlpInstance i13(13, 8, 4, 4, 1);
    CHECK(i13.variable_set() == std::vector<int>{0, 1, 2});
    CHECK(ilp_upper_bound(i13) == 41);

    const IlpInstance i14(14, 8, 4, 4, 3);
    CHECK(ilp_upper_bound(i14) == 63);
}

TEST_CASE("ilp single-variable degenerate case") {
    // k = d/2: J = {0}; bound is min(c0Cap, row caps)
    const IlpInstance inst(10, 6, 4, 2, 5);
    CHECK(inst.variable_set() == std::vector<int>{0});
    const BigInt v = ilp_upper_bound(inst);
    CHECK(v <= 5);
    CHECK(v >= 0);
}

TEST_CASE("ilp closed form for d=4, k=4 in the 2m >= n regime") {
    std::mt19937_64 rng(113);
    for (int trial = 0; trial < 20; ++trial) {
        const int m = 8 + static_cast<int>(rng() % 5);
        const int gap = 4 + static_cast<int>(rng() % 4);
        const int n = m + gap;
        const long cap = a1_bruteforce(gap, 4, 4);
        const BigInt expect = BigInt(m) * gap * (gap - 1) / 4 + cap;
        CHECK(ilp_upper_bound(IlpInstance(n, m, 4, 4, cap)) == expect);
    }
}

TEST_CASE("a1 exact values") {
    CHECK(a1_bruteforce(5, 4, 4) == 1);
    CHECK(a1_bruteforce(6, 4, 4) == 3);
    CHECK(a1_bruteforce(7, 4, 3) == 7);   // Steiner triple system S(2,3,7)
    CHECK(a1_bruteforce(9, 4, 3) == 12);  // S(2,3,9)
    CHECK_THROWS_AS(a1_bruteforce(40, 4, 4), ValidationError);
}

TEST_CASE("a1 properties: distance 2, monotonicity, complement symmetry") {
    std::mt19937_64 rng(127);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 5 + static_cast<int>(rng() % 4);
        const int k = 2 + static_cast<int>(rng() % (n / 2 - 1));
        // distance 2 excludes nothing
        BigInt all = 1;
        for (int i = 0; i < k; ++i) all = all * (n - i) / (i + 1);
        CHECK(BigInt(a1_bruteforce(n, 2, k)) == all);
        // non-increasing in d
        CHECK(a1_bruteforce(n, 2, k) >= a1_bruteforce(n, 4, k));
        CHECK(a1_bruteforce(n, 4, k) >= a1_bruteforce(n, 6, k));
        // complement symmetry
        CHECK(a1_bruteforce(n, 4, k) == a1_bruteforce(n, 4, n - k));
    }
}
