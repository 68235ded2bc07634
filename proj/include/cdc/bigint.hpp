#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cdc {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt ipow(long base, long exp) {
    BigInt r = 1;
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

}  // namespace cdc
