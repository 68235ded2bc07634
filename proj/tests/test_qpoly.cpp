#include <random>

#include "cdc/errors.hpp"
#include "cdc/qpoly.hpp"
#include "doctest.h"

using namespace cdc;

TEST_CASE("polynomial arithmetic, evaluation and printing") {
    QPolynomial p;
    CHECK(p.is_zero());
    CHECK(p.eval(5) == 0);
    CHECK(p.to_string() == "0");

    p.add_term(4, 1);
    p.add_term(3, 1);
    p.add_term(2, 2);
    p.add_term(1, 1);
    p.add_term(0, 1);
    CHECK(p.to_string() == "q^4+q^3+2q^2+q+1");
    CHECK(p.eval(2) == 35);
    CHECK(p.eval(1) == 6);
    CHECK(p.coefficient_mass() == 6);
    CHECK(p.coefficient(2) == 2);
    CHECK(p.coefficient(7) == 0);
    CHECK(p.degree() == 4);

    CHECK_THROWS_AS(p.add_term(2, -1), std::invalid_argument);
    QPolynomial zero_coeff;
    zero_coeff.add_term(5, 0);
    CHECK(zero_coeff.is_zero());
}

TEST_CASE("evaluation is strictly monotone in q for nonzero polynomials") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 200; ++trial) {
        QPolynomial p;
        const int terms = 1 + static_cast<int>(rng() % 5);
        for (int t = 0; t < terms; ++t)
            p.add_term(static_cast<long>(rng() % 20), 1 + static_cast<long>(rng() % 9));
        const long q = 2 + static_cast<long>(rng() % 7);
        CHECK(p.eval(q) < p.eval(q + 1));
    }
}

TEST_CASE("mrd bound monomials") {
    CHECK(mrd_lower_bound(13, 4, 5).to_string() == "q^32");
    CHECK(mrd_lower_bound(17, 4, 6).to_string() == "q^55");
    CHECK(mrd_lower_bound(8, 8, 4).to_string() == "q^4");
    CHECK_THROWS_AS(mrd_lower_bound(7, 4, 4), std::invalid_argument);
    CHECK_THROWS_AS(mrd_lower_bound(10, 3, 4), std::invalid_argument);
    CHECK_THROWS_AS(mrd_lower_bound(10, 12, 4), std::invalid_argument);
}

TEST_CASE("singleton skeleton gives the rectangle monomial") {
    SkeletonCode s;
    s.n = 13;
    s.d = 4;
    s.k = 5;
    s.vectors = {0b1111100000000};
    CHECK(skeleton_bound_poly(s) == mrd_lower_bound(13, 4, 5));
}

TEST_CASE("coefficient mass equals skeleton cardinality") {
    SkeletonCode s;
    s.n = 10;
    s.d = 4;
    s.k = 3;
    s.vectors = {38, 21, 11};
    const QPolynomial p = skeleton_bound_poly(s);
    CHECK(p.coefficient_mass() == 3);
    CHECK(p.to_string() == "q^2+q+1");
}

TEST_CASE("disjoint union adds polynomials") {
    SkeletonCode a, b, join;
    a.n = b.n = join.n = 10;
    a.d = b.d = join.d = 4;
    a.k = b.k = join.k = 3;
    a.vectors = {38, 21};
    b.vectors = {11};
    join.vectors = {38, 21, 11};
    CHECK(skeleton_bound_poly(a) + skeleton_bound_poly(b) == skeleton_bound_poly(join));
}

TEST_CASE("distance-6 skeletons require the attainability opt-in") {
    SkeletonCode s;
    s.n = 10;
    s.d = 6;
    s.k = 4;
    s.vectors = {IdentifyingVector::from_string("1011001000").encode(),
                 IdentifyingVector::from_string("0100110100").encode()};
    CHECK_THROWS_AS(skeleton_bound_poly(s), ValidationError);
    const QPolynomial p = skeleton_bound_poly(s, true);
    CHECK(p.coefficient(8) == 1);  // the worked example's exponent
    CHECK(p.coefficient(5) == 1);
}

TEST_CASE("invalid skeletons are rejected with the offending encodings") {
    SkeletonCode s;
    s.n = 4;
    s.d = 4;
    s.k = 2;
    s.vectors = {3, 5};
    CHECK_THROWS_WITH_AS(skeleton_bound_poly(s), doctest::Contains("Hamming distance 2"),
                         ValidationError);
}
