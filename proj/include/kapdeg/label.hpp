#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kapdeg {

// Leaf label of a marked tree: one of a, b, c or a positive integer.
// The total order is a < b < c < 1 < 2 < ... and is what every tournament
// comparison uses.
class Label {
public:
    constexpr Label() : code_(0) {}

    static constexpr Label a() { return Label(0); }
    static constexpr Label b() { return Label(1); }
    static constexpr Label c() { return Label(2); }
    static constexpr Label num(int i) {
        return i >= 1 ? Label(i + 2)
                      : throw std::invalid_argument("numeric label must be >= 1");
    }

    bool is_num() const { return code_ >= 3; }
    bool is_a() const { return code_ == 0; }
    bool is_b() const { return code_ == 1; }
    bool is_c() const { return code_ == 2; }

    // The integer i of a numeric label.
    int number() const {
        if (!is_num()) throw std::logic_error("label is not numeric");
        return code_ - 2;
    }

    friend auto operator<=>(const Label&, const Label&) = default;

    std::string to_string() const {
        switch (code_) {
            case 0: return "a";
            case 1: return "b";
            case 2: return "c";
            default: return std::to_string(code_ - 2);
        }
    }

    static std::optional<Label> parse(std::string_view text) {
        if (text == "a") return a();
        if (text == "b") return b();
        if (text == "c") return c();
        if (text.empty()) return std::nullopt;
        int value = 0;
        for (char ch : text) {
            if (ch < '0' || ch > '9') return std::nullopt;
            value = value * 10 + (ch - '0');
            if (value > 1'000'000) return std::nullopt;
        }
        if (value < 1) return std::nullopt;
        return num(value);
    }

private:
    explicit constexpr Label(int code) : code_(code) {}
    int code_;
};

}  // namespace kapdeg
