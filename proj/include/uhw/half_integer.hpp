#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uhw/errors.hpp"

namespace uhw {

// Exact scalar from (1/2)Z. The value is stored doubled, so both integers
// and half-odd-integers are plain machine integers and every comparison or
// difference is exact. Inputs are capped (|2v| <= kCoordinateCap) at the
// parsing boundary; with that cap the arithmetic below cannot overflow.
class HalfInteger {
public:
    static constexpr std::int64_t kCoordinateCap = 1'000'000;

    constexpr HalfInteger() : twice_(0) {}
    constexpr HalfInteger(long long whole) : twice_(2 * whole) {}  // NOLINT: implicit by design

    static constexpr HalfInteger from_twice(std::int64_t twice) {
        HalfInteger h;
        h.twice_ = twice;
        return h;
    }

    // n/2 with odd n, e.g. half_odd(7) == 7/2.
    static constexpr HalfInteger half_odd(std::int64_t odd_numerator) {
        return from_twice(odd_numerator);
    }

    constexpr std::int64_t twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    constexpr std::int64_t whole() const { return twice_ / 2; }  // valid when is_integer()

    constexpr HalfInteger operator-() const { return from_twice(-twice_); }
    constexpr HalfInteger operator+(HalfInteger o) const { return from_twice(twice_ + o.twice_); }
    constexpr HalfInteger operator-(HalfInteger o) const { return from_twice(twice_ - o.twice_); }
    HalfInteger& operator+=(HalfInteger o) { twice_ += o.twice_; return *this; }
    HalfInteger& operator-=(HalfInteger o) { twice_ -= o.twice_; return *this; }

    constexpr HalfInteger abs() const { return from_twice(twice_ < 0 ? -twice_ : twice_); }

    constexpr auto operator<=>(const HalfInteger&) const = default;

    // "3", "-3", "7/2", "-7/2". Only odd numerators are accepted over /2,
    // so every value has exactly one spelling.
    std::string str() const {
        if (is_integer()) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

    static std::optional<HalfInteger> try_parse(std::string_view text) {
        // trim surrounding spaces
        while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
        while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
        if (text.empty()) return std::nullopt;

        bool halved = false;
        if (text.size() > 2 && text.substr(text.size() - 2) == "/2") {
            halved = true;
            text.remove_suffix(2);
        }
        bool negative = false;
        if (text.front() == '+' || text.front() == '-') {
            negative = text.front() == '-';
            text.remove_prefix(1);
        }
        if (text.empty()) return std::nullopt;
        std::int64_t magnitude = 0;
        for (char c : text) {
            if (c < '0' || c > '9') return std::nullopt;
            magnitude = magnitude * 10 + (c - '0');
            if (magnitude > 2 * kCoordinateCap) return std::nullopt;
        }
        if (halved && magnitude % 2 == 0) return std::nullopt;  // "4/2" is not canonical
        std::int64_t twice = halved ? magnitude : 2 * magnitude;
        if (twice > kCoordinateCap) return std::nullopt;
        return from_twice(negative ? -twice : twice);
    }

    static HalfInteger parse(std::string_view text) {
        auto parsed = try_parse(text);
        if (!parsed) throw ParseError("bad coordinate '" + std::string(text) + "'");
        return *parsed;
    }

private:
    std::int64_t twice_;
};

inline HalfInteger half(std::int64_t odd_numerator) { return HalfInteger::half_odd(odd_numerator); }

// Comma-separated coordinate list, each item an integer or "k/2" with odd k.
inline std::vector<HalfInteger> parse_coordinates(std::string_view text) {
    std::vector<HalfInteger> coords;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string_view item =
            comma == std::string_view::npos ? text.substr(start) : text.substr(start, comma - start);
        coords.push_back(HalfInteger::parse(item));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return coords;
}

inline std::string format_coordinates(const std::vector<HalfInteger>& coords) {
    std::string out;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ',';
        out += coords[i].str();
    }
    return out;
}

}  // namespace uhw
