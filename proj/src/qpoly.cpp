#include "cdc/qpoly.hpp"

#include <stdexcept>

#include "cdc/errors.hpp"

namespace cdc {

QPolynomial QPolynomial::monomial(long exponent, BigInt coeff) {
    QPolynomial p;
    p.add_term(exponent, coeff);
    return p;
}

void QPolynomial::add_term(long exponent, const BigInt& coeff) {
    if (coeff < 0) throw std::invalid_argument("QPolynomial: negative coefficient");
    if (coeff == 0) return;
    if (exponent < 0) throw std::invalid_argument("QPolynomial: negative exponent");
    coeffs_[exponent] += coeff;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
    for (const auto& [e, c] : other.coeffs_) add_term(e, c);
    return *this;
}

BigInt QPolynomial::coefficient(long exponent) const {
    const auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? BigInt(0) : it->second;
}

BigInt QPolynomial::coefficient_mass() const {
    BigInt m = 0;
    for (const auto& [e, c] : coeffs_) m += c;
    return m;
}

BigInt QPolynomial::eval(long q) const {
    if (q < 1) throw std::invalid_argument("QPolynomial::eval: q must be >= 1");
    // Horner over the sparse exponent gaps, highest exponent first.
    BigInt acc = 0;
    long prev_exp = -1;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (prev_exp >= 0) acc *= ipow(q, prev_exp - it->first);
        acc += it->second;
        prev_exp = it->first;
    }
    if (prev_exp > 0) acc *= ipow(q, prev_exp);
    return acc;
}

std::string QPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (!s.empty()) s += '+';
        const auto& [e, c] = *it;
        if (e == 0) {
            s += c.str();
        } else {
            if (c != 1) s += c.str();
            s += (e == 1) ? "q" : "q^" + std::to_string(e);
        }
    }
    return s;
}

QPolynomial skeleton_bound_poly(const SkeletonCode& s, bool assume_attained) {
    s.validate();
    if (s.d >= 6 && !assume_attained)
        throw ValidationError(
            "skeleton_bound_poly: for subspace distance >= 6 the maximal diagram code sizes "
            "are not known to reach the dot-count bound; pass assume_attained to proceed");
    QPolynomial p;
    for (std::uint64_t x : s.vectors) p.add_term(weight_exponent(x, s.n, s.d), 1);
    return p;
}

QPolynomial mrd_lower_bound(int n, int d, int k) {
    if (d < 2 || d % 2 != 0) throw std::invalid_argument("mrd_lower_bound: d must be even");
    if (2 * k > n) throw std::invalid_argument("mrd_lower_bound: requires 2k <= n");
    if (d > 2 * k) throw std::invalid_argument("mrd_lower_bound: requires d <= 2k");
    return QPolynomial::monomial(static_cast<long>(n - k) * (k - d / 2 + 1));
}

}  // namespace cdc
