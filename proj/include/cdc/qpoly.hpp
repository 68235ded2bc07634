#pragma once

#include <map>
#include <string>

#include "cdc/bigint.hpp"
#include "cdc/skeleton.hpp"

namespace cdc {

// Polynomial in the field size q with nonnegative integer coefficients;
// the symbolic form of a lower bound, evaluated exactly at any q >= 1.
class QPolynomial {
  public:
    QPolynomial() = default;
    static QPolynomial monomial(long exponent, BigInt coeff = 1);

    void add_term(long exponent, const BigInt& coeff);
    QPolynomial& operator+=(const QPolynomial& other);
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
    BigInt coefficient(long exponent) const;
    BigInt coefficient_mass() const;  // sum of coefficients = value at q=1
    const std::map<long, BigInt>& coefficients() const { return coeffs_; }

    BigInt eval(long q) const;

    // "q^32+q^28+8q^24+...+3q^2+1"; descending exponents, q^1 -> "q",
    // q^0 -> bare coefficient; the zero polynomial prints "0".
    std::string to_string() const;

  private:
    std::map<long, BigInt> coeffs_;  // exponent -> coefficient, no zeros stored
};

// Coefficient of q^e counts the skeleton vectors of weight exponent e, so
// the evaluation is the multilevel lower bound for A_q(n,d;k).
// For d >= 6 the maximal diagram code sizes are not known to attain the
// dot-count bound, so callers must opt in via assume_attained.
QPolynomial skeleton_bound_poly(const SkeletonCode& s, bool assume_attained = false);

// q^{(n-k)(k-d/2+1)}: the lifted rectangular (MRD) lower bound.
QPolynomial mrd_lower_bound(int n, int d, int k);

}  // namespace cdc
