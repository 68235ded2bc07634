#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "cdc/bigint.hpp"
#include "cdc/qpoly.hpp"

namespace cdc {

// Reference to the base quantity A_q(n,d;k), resolved against a registry.
struct BaseBoundRef {
    int n = 0;
    int d = 4;
    int k = 0;

    BaseBoundRef(int n_, int d_, int k_);
    std::string label() const;  // "A_q(7,4;3)"
    std::string label(long q) const;
    friend bool operator==(const BaseBoundRef&, const BaseBoundRef&) = default;
};

// Externally sourced lower-bound values keyed by (q, n, d, k). Lookups never
// default silently; every entry carries a provenance note.
class BoundsRegistry {
  public:
    struct Entry {
        BigInt value;
        std::string provenance;
    };

    void add(long q, int n, int d, int k, BigInt value, std::string provenance);
    bool contains(long q, int n, int d, int k) const;
    // Throws UnresolvedReference naming the missing quantity.
    const BigInt& lookup(long q, int n, int d, int k) const;
    const std::map<std::tuple<long, int, int, int>, Entry>& entries() const { return entries_; }

    // One entry per line: `q n d k value provenance...`; '#' starts a comment.
    static BoundsRegistry load(std::istream& in);
    static BoundsRegistry load_file(const std::string& path);

  private:
    std::map<std::tuple<long, int, int, int>, Entry> entries_;
};

// sum of (multiplier polynomial) * A_q(n',d;k') terms plus a constant
// polynomial; the symbolic form of composed lower bounds.
class BoundExpression {
  public:
    struct Term {
        QPolynomial multiplier;
        BaseBoundRef ref;
    };

    BoundExpression() = default;
    explicit BoundExpression(QPolynomial constant) : constant_(std::move(constant)) {}

    void add_term(QPolynomial multiplier, BaseBoundRef ref);
    void add_constant(const QPolynomial& p) { constant_ += p; }
    const std::vector<Term>& terms() const { return terms_; }
    const QPolynomial& constant() const { return constant_; }

    BigInt eval(long q, const BoundsRegistry& registry) const;
    std::string to_string() const;  // "q^8·A_q(7,4;3) + q^4+q^3+2q^2+q+1"

  private:
    std::vector<Term> terms_;
    QPolynomial constant_;
};

BigInt eval_expression(const BoundExpression& e, long q, const BoundsRegistry& registry);

}  // namespace cdc
