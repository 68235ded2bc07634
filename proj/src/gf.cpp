#include "cdc/gf.hpp"

#include <algorithm>
#include <stdexcept>

#include "cdc/errors.hpp"

namespace cdc {

namespace {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int p = 2; static_cast<long long>(p) * p <= q; ++p)
        if (q % p == 0) return false;
    return true;
}

}  // namespace

PrimeField::PrimeField(int q) : q_(q) {
    if (!is_prime(q))
        throw std::invalid_argument("PrimeField: " + std::to_string(q) + " is not prime");
}

int PrimeField::inv(int a) const {
    a %= q_;
    if (a == 0) throw std::invalid_argument("PrimeField: zero has no inverse");
    // extended Euclid
    int t = 0, new_t = 1, r = q_, new_r = a;
    while (new_r != 0) {
        const int quot = r / new_r;
        t = std::exchange(new_t, t - quot * new_t);
        r = std::exchange(new_r, r - quot * new_r);
    }
    return (t % q_ + q_) % q_;
}

std::string GFMatrix::to_string() const {
    std::string s;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c) s += ' ';
            s += std::to_string(at(r, c));
        }
        s += '\n';
    }
    return s;
}

std::pair<GFMatrix, std::vector<int>> rref(const GFMatrix& m, const PrimeField& field) {
    GFMatrix a = m;
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < a.cols && row < a.rows; ++col) {
        int pivot_row = -1;
        for (int r = row; r < a.rows; ++r)
            if (a.at(r, col) != 0) {
                pivot_row = r;
                break;
            }
        if (pivot_row < 0) continue;
        if (pivot_row != row)
            for (int c = 0; c < a.cols; ++c) std::swap(a.at(row, c), a.at(pivot_row, c));
        const int scale = field.inv(a.at(row, col));
        for (int c = col; c < a.cols; ++c) a.at(row, c) = field.mul(a.at(row, c), scale);
        for (int r = 0; r < a.rows; ++r) {
            if (r == row || a.at(r, col) == 0) continue;
            const int factor = a.at(r, col);
            for (int c = col; c < a.cols; ++c)
                a.at(r, c) = field.sub(a.at(r, c), field.mul(factor, a.at(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(a), std::move(pivots)};
}

int rank(const GFMatrix& m, const PrimeField& field) {
    return static_cast<int>(rref(m, field).second.size());
}

Subspace Subspace::from_generators(const GFMatrix& gens, const PrimeField& field) {
    auto [r, pivots] = rref(gens, field);
    Subspace s;
    s.ambient = gens.cols;
    s.dim = static_cast<int>(pivots.size());
    s.pivots = std::move(pivots);
    s.canonical = GFMatrix(s.dim, s.ambient);
    for (int i = 0; i < s.dim; ++i)
        for (int c = 0; c < s.ambient; ++c) s.canonical.at(i, c) = r.at(i, c);
    return s;
}

IdentifyingVector identifying_vector(const Subspace& s) {
    std::uint64_t enc = 0;
    for (int col : s.pivots) enc |= std::uint64_t{1} << (s.ambient - 1 - col);
    return {enc, s.ambient};
}

int subspace_distance(const Subspace& u, const Subspace& w, const PrimeField& field) {
    if (u.ambient != w.ambient)
        throw std::invalid_argument("subspace_distance: ambient dimensions differ");
    GFMatrix stacked(u.dim + w.dim, u.ambient);
    for (int r = 0; r < u.dim; ++r)
        for (int c = 0; c < u.ambient; ++c) stacked.at(r, c) = u.canonical.at(r, c);
    for (int r = 0; r < w.dim; ++r)
        for (int c = 0; c < w.ambient; ++c) stacked.at(u.dim + r, c) = w.canonical.at(r, c);
    return 2 * rank(stacked, field) - u.dim - w.dim;
}

int rank_distance(const GFMatrix& a, const GFMatrix& b, const PrimeField& field) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw std::invalid_argument("rank_distance: shapes differ");
    GFMatrix diff(a.rows, a.cols);
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        diff.entries[i] = field.sub(a.entries[i], b.entries[i]);
    return rank(diff, field);
}

Subspace assemble_echelon(const IdentifyingVector& v, const std::vector<int>& filling,
                          const PrimeField& field) {
    const int n = v.length();
    const int k = v.weight();
    const auto ones = v.one_positions();  // 1-indexed
    const FerrersProfile profile = ferrers_profile(v);
    if (static_cast<long>(filling.size()) != profile.total())
        throw std::invalid_argument("assemble_echelon: filling has " +
                                    std::to_string(filling.size()) + " entries, diagram has " +
                                    std::to_string(profile.total()) + " dots");
    std::vector<bool> is_pivot(n + 1, false);
    for (int p : ones) is_pivot[p] = true;

    GFMatrix m(k, n);
    std::size_t next = 0;
    for (int i = 0; i < k; ++i) {
        m.at(i, ones[i] - 1) = 1;
        for (int col = ones[i] + 1; col <= n; ++col)
            if (!is_pivot[col]) m.at(i, col - 1) = field.reduce(filling[next++]);
    }
    Subspace s;
    s.ambient = n;
    s.dim = k;
    s.canonical = std::move(m);
    for (int p : ones) s.pivots.push_back(p - 1);
    return s;
}

GFMatrix random_matrix(int rows, int cols, const PrimeField& field, std::mt19937_64& rng) {
    GFMatrix m(rows, cols);
    std::uniform_int_distribution<int> dist(0, field.q() - 1);
    for (int& e : m.entries) e = dist(rng);
    return m;
}

Subspace random_subspace(int ambient, int dim, const PrimeField& field, std::mt19937_64& rng) {
    for (;;) {
        const GFMatrix gens = random_matrix(dim, ambient, field, rng);
        Subspace s = Subspace::from_generators(gens, field);
        if (s.dim == dim) return s;
    }
}

}  // namespace cdc
