#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cdc {

// Binary vector of length n, position 1 = leftmost. Canonical integer
// encoding: sum over positions i of v_i * 2^(n-i).
class IdentifyingVector {
  public:
    IdentifyingVector(std::uint64_t encoding, int n);

    static IdentifyingVector decode(std::uint64_t x, int n) { return {x, n}; }
    static IdentifyingVector from_string(const std::string& bits);

    std::uint64_t encode() const { return bits_; }
    int length() const { return n_; }
    int weight() const { return k_; }
    bool bit(int i) const;  // 1-indexed from the left
    std::vector<int> one_positions() const;
    std::string to_string() const;

    friend bool operator==(const IdentifyingVector&, const IdentifyingVector&) = default;

  private:
    std::uint64_t bits_;
    int n_;
    int k_;
};

int hamming_distance(const IdentifyingVector& u, const IdentifyingVector& v);

// Row lengths of the right-justified Ferrers diagram of an identifying
// vector; non-increasing, trailing zero rows retained so the diagram always
// has weight(v) rows.
struct FerrersProfile {
    std::vector<int> rows;

    long total() const;
};

FerrersProfile ferrers_profile(const IdentifyingVector& v);

// Number of dots neither in the first i rows nor in the last d/2-1-i
// columns. Each nonempty row touches the last column.
long nu(const FerrersProfile& p, int d, int i);

// min over 0 <= i <= d/2-1 of nu(...): the exponent e such that q^e bounds
// the size of a rank-metric code on the diagram with rank distance d/2.
long weight_exponent(const IdentifyingVector& v, int d);
long weight_exponent(std::uint64_t encoding, int n, int d);

enum class BlockCondition { Exactly, AtMost, AtLeast };

struct Block {
    int length = 0;
    BlockCondition cond = BlockCondition::Exactly;
    int count = 0;
};

// Ones-count conditions on consecutive coordinate blocks covering 1..n.
class BlockProfileConstraint {
  public:
    explicit BlockProfileConstraint(std::vector<Block> blocks);

    // The profile [(m, <= k-d/2), (n-m, >= d/2)] of restricted skeleton codes.
    static BlockProfileConstraint restricted(int n, int m, int d, int k);
    // Text form "7:<=1,3:>=2" (ops <=, >=, =).
    static BlockProfileConstraint parse(const std::string& spec);

    const std::vector<Block>& blocks() const { return blocks_; }
    int total_length() const;
    bool matches(const IdentifyingVector& v) const;
    std::string to_string() const;

  private:
    std::vector<Block> blocks_;
};

}  // namespace cdc
