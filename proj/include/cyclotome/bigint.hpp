#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace cyclotome {

// Counting results (2^(t*2^(s-1)+2^s) and friends) outgrow 64 bits fast,
// so every enumeration-count API trades in BigInt.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow2(unsigned e) {
    BigInt r = 1;
    r <<= e;
    return r;
}

inline BigInt big_binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline BigInt big_pow(std::uint64_t base, unsigned e) {
    BigInt r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace cyclotome
