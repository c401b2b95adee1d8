#include "kapdeg/rational.hpp"

#include <stdexcept>
#include <utility>

namespace kapdeg {

namespace {

std::uint64_t magnitude(std::int64_t v) {
    return v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
}

}  // namespace

Rational::Rational(std::int64_t value)
    : negative_(value < 0), num_(magnitude(value)), den_(1) {}

Rational::Rational(std::int64_t num, std::int64_t den)
    : negative_((num < 0) != (den < 0) && num != 0),
      num_(magnitude(num)),
      den_(magnitude(den)) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    reduce();
}

Rational Rational::from_parts(bool negative, BigUint num, BigUint den) {
    if (den.is_zero()) throw std::domain_error("rational with zero denominator");
    Rational out;
    out.negative_ = negative && !num.is_zero();
    out.num_ = std::move(num);
    out.den_ = std::move(den);
    out.reduce();
    return out;
}

void Rational::reduce() {
    if (num_.is_zero()) {
        negative_ = false;
        den_ = BigUint(1);
        return;
    }
    BigUint g = BigUint::gcd(num_, den_);
    num_ = BigUint::divmod(num_, g).quotient;
    den_ = BigUint::divmod(den_, g).quotient;
}

Rational Rational::parse(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return from_parts(negative, BigUint::from_decimal(text), BigUint(1));
    return from_parts(negative, BigUint::from_decimal(text.substr(0, slash)),
                      BigUint::from_decimal(text.substr(slash + 1)));
}

Rational Rational::operator-() const {
    Rational out = *this;
    if (!out.num_.is_zero()) out.negative_ = !out.negative_;
    return out;
}

Rational Rational::abs() const {
    Rational out = *this;
    out.negative_ = false;
    return out;
}

Rational operator+(const Rational& a, const Rational& b) {
    BigUint left = a.num_ * b.den_;
    BigUint right = b.num_ * a.den_;
    BigUint den = a.den_ * b.den_;
    if (a.negative_ == b.negative_)
        return Rational::from_parts(a.negative_, left + right, std::move(den));
    if (left == right) return Rational();
    if (left > right) return Rational::from_parts(a.negative_, left - right, std::move(den));
    return Rational::from_parts(b.negative_, right - left, std::move(den));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    return Rational::from_parts(a.negative_ != b.negative_, a.num_ * b.num_,
                                a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("rational division by zero");
    return Rational::from_parts(a.negative_ != b.negative_, a.num_ * b.den_,
                                a.den_ * b.num_);
}

bool Rational::operator<(const Rational& other) const {
    if (negative_ != other.negative_) return negative_;
    int c = BigUint::compare(num_ * other.den_, other.num_ * den_);
    return negative_ ? c > 0 : c < 0;
}

std::string Rational::to_string() const {
    std::string out = negative_ ? "-" : "";
    out += num_.to_decimal();
    if (!(den_ == BigUint(1))) out += "/" + den_.to_decimal();
    return out;
}

}  // namespace kapdeg
