#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cdc/vectors.hpp"

namespace cdc {

// Prime field F_q; primality checked at construction. The verification role
// needs no extension fields, so prime-power q are rejected here.
class PrimeField {
  public:
    explicit PrimeField(int q);
    int q() const { return q_; }
    int add(int a, int b) const { return (a + b) % q_; }
    int sub(int a, int b) const { return (a - b % q_ + q_) % q_; }
    int mul(int a, int b) const { return static_cast<int>(static_cast<long long>(a) * b % q_); }
    int neg(int a) const { return (q_ - a % q_) % q_; }
    int inv(int a) const;
    int reduce(long long a) const { return static_cast<int>((a % q_ + q_) % q_); }

  private:
    int q_;
};

// Dense row-major matrix with entries in [0, q).
struct GFMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<int> entries;

    GFMatrix() = default;
    GFMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c, 0) {}

    int& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
    int at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }
    friend bool operator==(const GFMatrix&, const GFMatrix&) = default;
    std::string to_string() const;
};

// Reduced row echelon form and the pivot column indices (0-based, increasing).
std::pair<GFMatrix, std::vector<int>> rref(const GFMatrix& m, const PrimeField& field);

int rank(const GFMatrix& m, const PrimeField& field);

// A k-dimensional subspace of F_q^n held by its canonical RREF generator.
struct Subspace {
    int ambient = 0;
    int dim = 0;
    GFMatrix canonical;  // dim x ambient, full rank, RREF
    std::vector<int> pivots;

    // Canonicalizes an arbitrary generator matrix (drops zero rows).
    static Subspace from_generators(const GFMatrix& gens, const PrimeField& field);
};

IdentifyingVector identifying_vector(const Subspace& s);

// dim U + dim W - 2 dim(U cap W), computed as 2 rank([U; W]) - dim U - dim W.
int subspace_distance(const Subspace& u, const Subspace& w, const PrimeField& field);

// rank(a - b) for equally shaped matrices.
int rank_distance(const GFMatrix& a, const GFMatrix& b, const PrimeField& field);

// Builds the canonical generator whose identifying vector is v and whose
// free entries, row-major over the dots of the right-justified diagram,
// are the given residues.
Subspace assemble_echelon(const IdentifyingVector& v, const std::vector<int>& filling,
                          const PrimeField& field);

// Test helpers: uniformly random matrix / k-dim subspace over F_q.
GFMatrix random_matrix(int rows, int cols, const PrimeField& field, std::mt19937_64& rng);
Subspace random_subspace(int ambient, int dim, const PrimeField& field, std::mt19937_64& rng);

}  // namespace cdc
