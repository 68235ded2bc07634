#include "cdc/skeleton.hpp"

#include <bit>
#include <unordered_set>

#include "cdc/errors.hpp"

namespace cdc {

std::optional<BlockProfileConstraint> SkeletonCode::block_profile() const {
    if (!m) return std::nullopt;
    return BlockProfileConstraint::restricted(n, *m, d, k);
}

void SkeletonCode::validate() const {
    if (n < 1 || n > 63) throw ValidationError("skeleton: n must be in 1..63");
    if (d < 2 || d % 2 != 0) throw ValidationError("skeleton: d must be even and >= 2");
    if (k < 0 || k > n) throw ValidationError("skeleton: k must be in 0..n");
    std::unordered_set<std::uint64_t> seen;
    const auto profile = block_profile();
    for (std::uint64_t x : vectors) {
        if (n < 64 && (x >> n))
            throw ValidationError("skeleton: encoding " + std::to_string(x) +
                                  " out of range for n=" + std::to_string(n));
        if (std::popcount(x) != k)
            throw ValidationError("skeleton: encoding " + std::to_string(x) + " has weight " +
                                  std::to_string(std::popcount(x)) + ", expected " +
                                  std::to_string(k));
        if (!seen.insert(x).second)
            throw ValidationError("skeleton: duplicate encoding " + std::to_string(x));
        if (profile && !profile->matches(IdentifyingVector(x, n)))
            throw ValidationError("skeleton: encoding " + std::to_string(x) +
                                  " violates block profile " + profile->to_string());
    }
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = i + 1; j < vectors.size(); ++j) {
            const int dist = std::popcount(vectors[i] ^ vectors[j]);
            if (dist < d)
                throw ValidationError("skeleton: encodings " + std::to_string(vectors[i]) +
                                      " and " + std::to_string(vectors[j]) +
                                      " are at Hamming distance " + std::to_string(dist) +
                                      " < " + std::to_string(d));
        }
}

}  // namespace cdc
