#include "cdc/bounds.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "cdc/errors.hpp"

namespace cdc {

BaseBoundRef::BaseBoundRef(int n_, int d_, int k_) : n(n_), d(d_), k(k_) {
    if (d < 2 || d % 2 != 0) throw std::invalid_argument("BaseBoundRef: d must be even");
    if (!(n >= k && k >= d / 2))
        throw std::invalid_argument("BaseBoundRef: requires n >= k >= d/2");
}

std::string BaseBoundRef::label() const {
    return "A_q(" + std::to_string(n) + "," + std::to_string(d) + ";" + std::to_string(k) + ")";
}

std::string BaseBoundRef::label(long q) const {
    return "A_" + std::to_string(q) + "(" + std::to_string(n) + "," + std::to_string(d) + ";" +
           std::to_string(k) + ")";
}

void BoundsRegistry::add(long q, int n, int d, int k, BigInt value, std::string provenance) {
    if (value <= 0) throw ValidationError("registry: values must be positive");
    const auto key = std::make_tuple(q, n, d, k);
    if (entries_.count(key))
        throw ValidationError("registry: duplicate entry for A_" + std::to_string(q) + "(" +
                              std::to_string(n) + "," + std::to_string(d) + ";" +
                              std::to_string(k) + ")");
    entries_[key] = Entry{std::move(value), std::move(provenance)};
}

bool BoundsRegistry::contains(long q, int n, int d, int k) const {
    return entries_.count(std::make_tuple(q, n, d, k)) > 0;
}

const BigInt& BoundsRegistry::lookup(long q, int n, int d, int k) const {
    const auto it = entries_.find(std::make_tuple(q, n, d, k));
    if (it == entries_.end())
        throw UnresolvedReference("registry has no value for " +
                                  BaseBoundRef(n, d, k).label(q));
    return it->second.value;
}

BoundsRegistry BoundsRegistry::load(std::istream& in) {
    BoundsRegistry reg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        long q;
        int n, d, k;
        std::string value;
        if (!(ss >> q)) continue;  // blank line
        if (!(ss >> n >> d >> k >> value))
            throw ValidationError("registry line " + std::to_string(lineno) + ": malformed entry");
        std::string provenance;
        std::getline(ss, provenance);
        const auto first = provenance.find_first_not_of(" \t");
        provenance = first == std::string::npos ? "" : provenance.substr(first);
        try {
            reg.add(q, n, d, k, BigInt(value), std::move(provenance));
        } catch (const std::exception& e) {
            throw ValidationError("registry line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return reg;
}

BoundsRegistry BoundsRegistry::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open registry file " + path);
    return load(in);
}

void BoundExpression::add_term(QPolynomial multiplier, BaseBoundRef ref) {
    if (multiplier.is_zero()) return;
    terms_.push_back(Term{std::move(multiplier), ref});
}

BigInt BoundExpression::eval(long q, const BoundsRegistry& registry) const {
    BigInt total = constant_.eval(q);
    for (const Term& t : terms_) total += t.multiplier.eval(q) * registry.lookup(q, t.ref.n, t.ref.d, t.ref.k);
    return total;
}

std::string BoundExpression::to_string() const {
    std::string s;
    for (const Term& t : terms_) {
        if (!s.empty()) s += " + ";
        s += t.multiplier.to_string() + "·" + t.ref.label();
    }
    if (!constant_.is_zero() || terms_.empty()) {
        if (!s.empty()) s += " + ";
        s += constant_.to_string();
    }
    return s;
}

BigInt eval_expression(const BoundExpression& e, long q, const BoundsRegistry& registry) {
    return e.eval(q, registry);
}

}  // namespace cdc
