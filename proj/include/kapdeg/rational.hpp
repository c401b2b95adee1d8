#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "kapdeg/bigint.hpp"

namespace kapdeg {

// Exact rational number, always stored reduced with a positive denominator.
// Zero is (+0)/1.  Used for projective coordinates, where float rounding
// would make equality tests meaningless.
class Rational {
public:
    Rational() : negative_(false), num_(0), den_(1) {}
    Rational(std::int64_t value);
    Rational(std::int64_t num, std::int64_t den);
    static Rational from_parts(bool negative, BigUint num, BigUint den);

    // Accepts "42", "-42", "3/7", "-3/7".
    static Rational parse(std::string_view text);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return !negative_ && num_ == den_; }
    bool is_negative() const { return negative_; }

    Rational operator-() const;
    Rational abs() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);  // throws on /0

    bool operator==(const Rational& other) const = default;
    bool operator<(const Rational& other) const;
    bool operator<=(const Rational& other) const { return *this == other || *this < other; }

    std::string to_string() const;

private:
    bool negative_;
    BigUint num_, den_;

    void reduce();
};

}  // namespace kapdeg
