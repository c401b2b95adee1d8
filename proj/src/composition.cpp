#include "kapdeg/composition.hpp"

#include <numeric>
#include <stdexcept>

namespace kapdeg {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 0) throw std::invalid_argument("composition parts must be nonnegative");
}

Composition Composition::parse(std::string_view text) {
    std::vector<int> parts;
    if (text.empty()) return Composition();
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view token = text.substr(pos, comma == std::string_view::npos
                                                      ? std::string_view::npos
                                                      : comma - pos);
        if (token.empty()) throw std::invalid_argument("empty composition part");
        int value = 0;
        for (char ch : token) {
            if (ch < '0' || ch > '9')
                throw std::invalid_argument("bad composition part: " + std::string(token));
            value = value * 10 + (ch - '0');
            if (value > 1'000'000) throw std::invalid_argument("composition part too large");
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Composition(std::move(parts));
}

int Composition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Composition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out;
}

RightmostZero rightmost_zero(const Composition& k) {
    if (k.length() < 1) throw std::invalid_argument("rightmost zero of empty composition");
    for (int i = k.length(); i >= 1; --i)
        if (k.part(i) == 0) return RightmostZero{false, i};
    return RightmostZero{true, 0};
}

Composition ktilde(const Composition& k, int j) {
    RightmostZero rz = rightmost_zero(k);
    if (j < 1 || j > k.length()) throw std::invalid_argument("index out of range");
    if (!rz.less_than(j))
        throw std::invalid_argument("index must exceed the rightmost zero");
    if (k.part(j) == 0) throw std::invalid_argument("cannot decrement a zero part");

    std::vector<int> parts = k.parts();
    parts[j - 1] -= 1;
    for (std::size_t i = parts.size(); i-- > 0;) {
        if (parts[i] == 0) {
            parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(i));
            return Composition(std::move(parts));
        }
    }
    throw std::logic_error("decremented composition has no zero to remove");
}

namespace {

void compositions_from(std::vector<int>& parts, int position, int remaining, int n,
                       const std::function<void(const Composition&)>& visit) {
    if (position == n) {
        if (remaining == 0) visit(Composition(parts));
        return;
    }
    for (int value = 0; value <= remaining; ++value) {
        parts[static_cast<std::size_t>(position)] = value;
        compositions_from(parts, position + 1, remaining - value, n, visit);
    }
    parts[static_cast<std::size_t>(position)] = 0;
}

}  // namespace

void for_each_composition(int n, const std::function<void(const Composition&)>& visit) {
    if (n < 0) throw std::invalid_argument("composition size must be nonnegative");
    if (n == 0) {
        visit(Composition());
        return;
    }
    std::vector<int> parts(static_cast<std::size_t>(n), 0);
    compositions_from(parts, 0, n, n, visit);
}

}  // namespace kapdeg
