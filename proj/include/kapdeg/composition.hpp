#pragma once

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace kapdeg {

// A sequence of nonnegative integers (k_1, ..., k_n).  Multidegree queries
// require a weak composition of n into n parts (sum equals length); the empty
// composition is the n = 0 case.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    static Composition parse(std::string_view text);  // "1,0,1,2"; "" is empty

    int length() const { return static_cast<int>(parts_.size()); }
    int sum() const;
    bool is_weak_of_length() const { return sum() == length(); }

    // 1-based access matching the k_i notation.
    int part(int i) const { return parts_.at(static_cast<std::size_t>(i) - 1); }
    const std::vector<int>& parts() const { return parts_; }

    std::string to_string() const;  // comma-joined parts

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
};

// max{l : k_l = 0}, with the sentinel c when every part is positive.
struct RightmostZero {
    bool is_c = false;
    int index = 0;  // 1-based, meaningful when !is_c

    // true when the 1-based index j is larger in the order c < 1 < 2 < ...
    bool less_than(int j) const { return is_c || index < j; }
};

RightmostZero rightmost_zero(const Composition& k);

// Decrements k_j, then deletes the rightmost zero of the result; the output
// has length and sum n-1.  Requires j greater than the rightmost-zero index
// and k_j >= 1.
Composition ktilde(const Composition& k, int j);

// Visits every weak composition of n into n parts, in ascending lexicographic
// order.
void for_each_composition(int n, const std::function<void(const Composition&)>& visit);

}  // namespace kapdeg
