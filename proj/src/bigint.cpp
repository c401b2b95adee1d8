#include "kapdeg/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace kapdeg {

BigUint::BigUint(std::uint64_t value) {
    while (value > 0) {
        limbs_.push_back(static_cast<std::uint32_t>(value % kBase));
        value /= kBase;
    }
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint BigUint::from_decimal(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    for (char ch : text)
        if (ch < '0' || ch > '9') throw std::invalid_argument("bad digit in integer literal");
    BigUint out;
    // consume 9 decimal digits at a time from the right
    std::size_t end = text.size();
    while (end > 0) {
        std::size_t begin = end >= 9 ? end - 9 : 0;
        std::uint32_t limb = 0;
        for (std::size_t i = begin; i < end; ++i) limb = limb * 10 + (text[i] - '0');
        out.limbs_.push_back(limb);
        end = begin;
    }
    out.trim();
    return out;
}

int BigUint::compare(const BigUint& a, const BigUint& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

BigUint& BigUint::operator+=(const BigUint& other) {
    std::uint32_t carry = 0;
    std::size_t n = std::max(limbs_.size(), other.limbs_.size());
    limbs_.resize(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) + carry;
        if (i < other.limbs_.size()) cur += other.limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur % kBase);
        carry = static_cast<std::uint32_t>(cur / kBase);
    }
    if (carry) limbs_.push_back(carry);
    return *this;
}

BigUint& BigUint::operator-=(const BigUint& other) {
    if (compare(*this, other) < 0)
        throw std::underflow_error("BigUint subtraction would go negative");
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::int64_t cur = static_cast<std::int64_t>(limbs_[i]) - borrow;
        if (i < other.limbs_.size()) cur -= other.limbs_[i];
        if (cur < 0) {
            cur += kBase;
            borrow = 1;
        } else {
            borrow = 0;
        }
        limbs_[i] = static_cast<std::uint32_t>(cur);
    }
    trim();
    return *this;
}

BigUint operator*(const BigUint& a, const BigUint& b) {
    if (a.is_zero() || b.is_zero()) return BigUint();
    BigUint out;
    out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            std::uint64_t cur = out.limbs_[i + j] +
                                static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
            out.limbs_[i + j] = static_cast<std::uint32_t>(cur % BigUint::kBase);
            carry = cur / BigUint::kBase;
        }
        std::size_t k = i + b.limbs_.size();
        while (carry) {
            std::uint64_t cur = out.limbs_[k] + carry;
            out.limbs_[k] = static_cast<std::uint32_t>(cur % BigUint::kBase);
            carry = cur / BigUint::kBase;
            ++k;
        }
    }
    out.trim();
    return out;
}

BigUint::DivMod BigUint::divmod(const BigUint& a, const BigUint& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (compare(a, b) < 0) return {BigUint(), a};
    // binary long division over precomputed doublings of the divisor
    std::vector<BigUint> doubles{b};
    while (true) {
        BigUint next = doubles.back() + doubles.back();
        if (compare(next, a) > 0) break;
        doubles.push_back(std::move(next));
    }
    BigUint quotient, remainder = a;
    for (std::size_t i = doubles.size(); i-- > 0;) {
        quotient += quotient;
        if (compare(doubles[i], remainder) <= 0) {
            remainder -= doubles[i];
            quotient += BigUint(1);
        }
    }
    return {std::move(quotient), std::move(remainder)};
}

BigUint BigUint::gcd(BigUint a, BigUint b) {
    while (!b.is_zero()) {
        BigUint r = divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool BigUint::fits_uint64() const {
    if (limbs_.size() > 3) return false;
    if (limbs_.size() < 3) return true;
    // 2^64-1 = 18'446744073'709551615 in base 10^9
    return limbs_[2] < 18 ||
           (limbs_[2] == 18 &&
            (limbs_[1] < 446744073 ||
             (limbs_[1] == 446744073 && limbs_[0] <= 709551615)));
}

std::uint64_t BigUint::to_uint64() const {
    if (!fits_uint64()) throw std::overflow_error("BigUint does not fit in 64 bits");
    std::uint64_t out = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) out = out * kBase + limbs_[i];
    return out;
}

std::string BigUint::to_decimal() const {
    if (limbs_.empty()) return "0";
    std::string out = std::to_string(limbs_.back());
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
        std::string part = std::to_string(limbs_[i]);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

}  // namespace kapdeg
