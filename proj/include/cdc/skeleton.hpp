#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cdc/vectors.hpp"

namespace cdc {

// A set of weight-k identifying vectors of length n with pairwise Hamming
// distance >= d. Restricted codes additionally carry m, meaning every vector
// has at most k-d/2 ones among the first m coordinates and at least d/2 ones
// among the last n-m.
struct SkeletonCode {
    int n = 0;
    int d = 4;
    int k = 0;
    std::optional<int> m;
    std::string label;
    std::vector<std::uint64_t> vectors;  // integer encodings

    std::size_t size() const { return vectors.size(); }
    std::optional<BlockProfileConstraint> block_profile() const;

    // Throws ValidationError naming the offending encoding(s).
    void validate() const;
};

}  // namespace cdc
