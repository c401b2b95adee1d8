#pragma once

#include <cstdint>

#include "kapdeg/bigint.hpp"

namespace kapdeg::testutil {

// (2n-1)!! = (2n-1)(2n-3)...3*1, the empty product for n <= 0
inline BigUint odd_double_factorial(int n) {
    BigUint out(1);
    for (int m = 3; m <= 2 * n - 1; m += 2) out *= BigUint(static_cast<std::uint64_t>(m));
    return out;
}

inline std::uint64_t factorial(int n) {
    std::uint64_t out = 1;
    for (int m = 2; m <= n; ++m) out *= static_cast<std::uint64_t>(m);
    return out;
}

// deterministic xorshift for hand-rolled property tests
struct Rng {
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }
};

}  // namespace kapdeg::testutil
