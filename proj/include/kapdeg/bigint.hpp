#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kapdeg {

// Unsigned arbitrary-precision integer.  Limbs are little-endian in base
// 10^9, which keeps decimal conversion trivial.  Degrees and factorials
// overflow 64 bits quickly ((2n-1)!! already past n = 16), so every count
// that can grow with n is stored in one of these.
class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t value);

    static BigUint from_decimal(std::string_view text);

    bool is_zero() const { return limbs_.empty(); }

    static int compare(const BigUint& a, const BigUint& b);
    bool operator==(const BigUint& other) const { return limbs_ == other.limbs_; }
    std::strong_ordering operator<=>(const BigUint& other) const {
        int c = compare(*this, other);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    BigUint& operator+=(const BigUint& other);
    friend BigUint operator+(BigUint a, const BigUint& b) { a += b; return a; }

    // Requires *this >= other.
    BigUint& operator-=(const BigUint& other);
    friend BigUint operator-(BigUint a, const BigUint& b) { a -= b; return a; }

    friend BigUint operator*(const BigUint& a, const BigUint& b);
    BigUint& operator*=(const BigUint& other) { *this = *this * other; return *this; }

    struct DivMod;
    static DivMod divmod(const BigUint& a, const BigUint& b);
    static BigUint gcd(BigUint a, BigUint b);

    bool fits_uint64() const;
    std::uint64_t to_uint64() const;  // throws std::overflow_error when too large

    std::string to_decimal() const;

private:
    static constexpr std::uint32_t kBase = 1'000'000'000;
    std::vector<std::uint32_t> limbs_;  // no trailing zero limbs; empty means 0

    void trim();
};

struct BigUint::DivMod {
    BigUint quotient;
    BigUint remainder;
};

}  // namespace kapdeg
