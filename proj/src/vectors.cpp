#include "cdc/vectors.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "cdc/errors.hpp"

namespace cdc {

IdentifyingVector::IdentifyingVector(std::uint64_t encoding, int n) : bits_(encoding), n_(n) {
    if (n < 1 || n > 63) throw std::invalid_argument("vector length must be in 1..63");
    if (n < 64 && encoding >> n)
        throw std::out_of_range("encoding " + std::to_string(encoding) +
                                " out of range for length " + std::to_string(n));
    k_ = std::popcount(bits_);
}

IdentifyingVector IdentifyingVector::from_string(const std::string& s) {
    std::uint64_t x = 0;
    for (char c : s) {
        if (c != '0' && c != '1') throw std::invalid_argument("bit string must be over {0,1}");
        x = (x << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return {x, static_cast<int>(s.size())};
}

bool IdentifyingVector::bit(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("position out of range");
    return (bits_ >> (n_ - i)) & 1u;
}

std::vector<int> IdentifyingVector::one_positions() const {
    std::vector<int> ps;
    ps.reserve(k_);
    for (int i = 1; i <= n_; ++i)
        if (bit(i)) ps.push_back(i);
    return ps;
}

std::string IdentifyingVector::to_string() const {
    std::string s(n_, '0');
    for (int i = 1; i <= n_; ++i)
        if (bit(i)) s[i - 1] = '1';
    return s;
}

int hamming_distance(const IdentifyingVector& u, const IdentifyingVector& v) {
    if (u.length() != v.length())
        throw std::invalid_argument("hamming_distance: mismatched lengths");
    return std::popcount(u.encode() ^ v.encode());
}

long FerrersProfile::total() const {
    long t = 0;
    for (int r : rows) t += r;
    return t;
}

FerrersProfile ferrers_profile(const IdentifyingVector& v) {
    if (v.weight() == 0) throw ValidationError("ferrers_profile: zero-weight vector has no diagram");
    const int n = v.length();
    FerrersProfile p;
    p.rows.reserve(v.weight());
    int zeros_right = 0;
    // row for the i-th one counts zeros strictly to its right
    std::vector<int> tmp;
    for (int i = n; i >= 1; --i) {
        if (v.bit(i))
            tmp.push_back(zeros_right);
        else
            ++zeros_right;
    }
    p.rows.assign(tmp.rbegin(), tmp.rend());
    return p;
}

long nu(const FerrersProfile& p, int d, int i) {
    if (d < 2 || d % 2 != 0) throw std::invalid_argument("nu: distance must be even and >= 2");
    const int half = d / 2;
    if (i < 0 || i > half - 1) throw std::invalid_argument("nu: index out of range");
    const int cols_removed = half - 1 - i;
    long count = 0;
    for (std::size_t r = static_cast<std::size_t>(i); r < p.rows.size(); ++r)
        count += std::max(p.rows[r] - cols_removed, 0);
    return count;
}

long weight_exponent(const IdentifyingVector& v, int d) {
    const FerrersProfile p = ferrers_profile(v);
    long best = -1;
    for (int i = 0; i <= d / 2 - 1; ++i) {
        const long val = nu(p, d, i);
        if (best < 0 || val < best) best = val;
    }
    return best;
}

long weight_exponent(std::uint64_t encoding, int n, int d) {
    return weight_exponent(IdentifyingVector(encoding, n), d);
}

BlockProfileConstraint::BlockProfileConstraint(std::vector<Block> blocks)
    : blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw std::invalid_argument("block profile needs at least one block");
    for (const Block& b : blocks_) {
        if (b.length <= 0) throw std::invalid_argument("block length must be positive");
        if (b.count < 0 || b.count > b.length)
            throw std::invalid_argument("block count must be within 0..length");
    }
}

BlockProfileConstraint BlockProfileConstraint::restricted(int n, int m, int d, int k) {
    if (m <= 0 || m >= n) throw std::invalid_argument("restricted profile needs 0 < m < n");
    return BlockProfileConstraint(
        {{m, BlockCondition::AtMost, k - d / 2}, {n - m, BlockCondition::AtLeast, d / 2}});
}

BlockProfileConstraint BlockProfileConstraint::parse(const std::string& spec) {
    std::vector<Block> blocks;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ',')) {
        const auto colon = part.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("block spec must look like LEN:<=C or LEN:>=C or LEN:=C");
        Block b;
        b.length = std::stoi(part.substr(0, colon));
        std::string rest = part.substr(colon + 1);
        if (rest.rfind("<=", 0) == 0) {
            b.cond = BlockCondition::AtMost;
            rest = rest.substr(2);
        } else if (rest.rfind(">=", 0) == 0) {
            b.cond = BlockCondition::AtLeast;
            rest = rest.substr(2);
        } else if (rest.rfind('=', 0) == 0) {
            b.cond = BlockCondition::Exactly;
            rest = rest.substr(1);
        } else {
            throw std::invalid_argument("block condition must start with <=, >= or =");
        }
        b.count = std::stoi(rest);
        blocks.push_back(b);
    }
    return BlockProfileConstraint(std::move(blocks));
}

int BlockProfileConstraint::total_length() const {
    int t = 0;
    for (const Block& b : blocks_) t += b.length;
    return t;
}

bool BlockProfileConstraint::matches(const IdentifyingVector& v) const {
    if (total_length() != v.length())
        throw std::invalid_argument("block profile length does not match vector length");
    int pos = 1;
    for (const Block& b : blocks_) {
        int ones = 0;
        for (int i = pos; i < pos + b.length; ++i) ones += v.bit(i);
        pos += b.length;
        switch (b.cond) {
            case BlockCondition::Exactly:
                if (ones != b.count) return false;
                break;
            case BlockCondition::AtMost:
                if (ones > b.count) return false;
                break;
            case BlockCondition::AtLeast:
                if (ones < b.count) return false;
                break;
        }
    }
    return true;
}

std::string BlockProfileConstraint::to_string() const {
    std::string s;
    for (const Block& b : blocks_) {
        if (!s.empty()) s += ',';
        s += std::to_string(b.length) + ':';
        if (b.cond == BlockCondition::AtMost)
            s += "<=";
        else if (b.cond == BlockCondition::AtLeast)
            s += ">=";
        else
            s += '=';
        s += std::to_string(b.count);
    }
    return s;
}

}  // namespace cdc
