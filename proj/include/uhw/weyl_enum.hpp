#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "uhw/errors.hpp"
#include "uhw/half_integer.hpp"
#include "uhw/parameter.hpp"

namespace uhw {

// g-dominant representative of an orbit.
//   su:  L1 >= L2 >= ... >= Ln
//   so*: L1 >= ... >= L_{n-1} >= |Ln|
// Values repeated more than twice (more than twice in absolute value for
// so*, or a doubled zero) are allowed here; their conjugate sets are empty.
class DominantParameter {
public:
    explicit DominantParameter(Parameter parameter) : inner_(std::move(parameter)) {
        const auto& c = inner_.coords;
        std::size_t limit = inner_.algebra.is_su() ? c.size() : c.size() - 1;
        for (std::size_t i = 1; i < limit; ++i)
            if (c[i - 1] < c[i]) throw InvalidArgument("coordinates are not dominant");
        if (inner_.algebra.is_so_star() && c.size() >= 2 && c[c.size() - 2] < c.back().abs())
            throw InvalidArgument("coordinates are not dominant");
    }

    const Parameter& parameter() const { return inner_; }
    const Algebra& algebra() const { return inner_.algebra; }
    const std::vector<HalfInteger>& coords() const { return inner_.coords; }

    bool operator==(const DominantParameter&) const = default;

private:
    Parameter inner_;
};

inline DominantParameter dominant_representative(const Parameter& parameter) {
    std::vector<HalfInteger> sorted = parameter.coords;
    if (parameter.algebra.is_su()) {
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        return DominantParameter(Parameter(parameter.algebra, std::move(sorted)));
    }
    // so*: sort absolute values; the sign of the last coordinate is the
    // product of the signs of all nonzero inputs, positive if a zero exists
    // (a sign change on zero is invisible and absorbs the odd flip).
    bool negative_last = true;
    bool has_zero = false;
    for (HalfInteger c : sorted) {
        if (c.twice() == 0) has_zero = true;
        else if (c.twice() < 0) negative_last = !negative_last;
    }
    for (HalfInteger& c : sorted) c = c.abs();
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    if (!has_zero && !negative_last) sorted.back() = -sorted.back();
    return DominantParameter(Parameter(parameter.algebra, std::move(sorted)));
}

// A k-dominant regular su conjugate: p strictly decreasing coordinates left
// of the bar, q strictly decreasing coordinates right of it.
struct BarSplit {
    std::vector<HalfInteger> left;
    std::vector<HalfInteger> right;

    int p() const { return static_cast<int>(left.size()); }
    int q() const { return static_cast<int>(right.size()); }
    int rank() const { return p() + q(); }

    std::vector<HalfInteger> flat() const {
        std::vector<HalfInteger> all = left;
        all.insert(all.end(), right.begin(), right.end());
        return all;
    }

    // 1-based coordinate across the bar, matching the L_k indexing.
    HalfInteger at(int k) const {
        return k <= p() ? left[k - 1] : right[k - 1 - p()];
    }

    std::string str() const {
        return "(" + format_coordinates(left) + " | " + format_coordinates(right) + ")";
    }

    bool operator==(const BarSplit&) const = default;
};

// Deterministic output order for su enumerations: descending lexicographic
// by left block, which is the reading order of the displayed diagrams.
inline bool split_order(const BarSplit& a, const BarSplit& b) {
    return std::lexicographical_compare(b.left.begin(), b.left.end(), a.left.begin(),
                                        a.left.end());
}

// A k-dominant regular so* conjugate: strictly decreasing coordinates, plus
// the number of sign flips against the dominant representative.
struct SignedArrangement {
    std::vector<HalfInteger> coords;
    int flips = 0;

    std::string str() const { return "(" + format_coordinates(coords) + ")"; }

    bool operator==(const SignedArrangement&) const = default;
};

inline bool arrangement_order(const SignedArrangement& a, const SignedArrangement& b) {
    return std::lexicographical_compare(b.coords.begin(), b.coords.end(), a.coords.begin(),
                                        a.coords.end());
}

inline bool is_strictly_decreasing(const std::vector<HalfInteger>& coords) {
    for (std::size_t i = 1; i < coords.size(); ++i)
        if (!(coords[i - 1] > coords[i])) return false;
    return true;
}

inline bool is_k_dominant_regular(const BarSplit& split) {
    return is_strictly_decreasing(split.left) && is_strictly_decreasing(split.right);
}

namespace detail {

// value -> multiplicity, descending by value.
template <typename Key = HalfInteger>
using Multiset = std::map<Key, int, std::greater<Key>>;

inline Multiset<> value_multiset(const std::vector<HalfInteger>& coords) {
    Multiset<> m;
    for (HalfInteger c : coords) ++m[c];
    return m;
}

inline Multiset<> abs_multiset(const std::vector<HalfInteger>& coords) {
    Multiset<> m;
    for (HalfInteger c : coords) ++m[c.abs()];
    return m;
}

}  // namespace detail

// Minimal number of sign flips taking the dominant representative to the
// arrangement: per absolute value, |#positive(dom) - #positive(arr)|. A
// value doubled on both sides pairs + with + and - with -, so it
// contributes zero or two flips, never one; any other pairing differs by an
// even count, so the parity is well defined.
inline int sign_change_count(const DominantParameter& dominant,
                             const std::vector<HalfInteger>& arrangement) {
    if (detail::abs_multiset(dominant.coords()) != detail::abs_multiset(arrangement))
        throw InvalidArgument("arrangement is not built from the dominant absolute values");
    std::map<HalfInteger, int> positive_balance;
    for (HalfInteger c : dominant.coords())
        if (c.twice() > 0) ++positive_balance[c];
    for (HalfInteger c : arrangement)
        if (c.twice() > 0) --positive_balance[c.abs()];
    int flips = 0;
    for (const auto& [value, balance] : positive_balance) flips += std::abs(balance);
    return flips;
}

inline int sign_change_count(const DominantParameter& dominant, const SignedArrangement& arr) {
    return sign_change_count(dominant, arr.coords);
}

// All bar splits: doubled values sit on both sides, the remaining values are
// distributed freely. Result size is C(n-2d, p-d) with d doubled values;
// empty when some value repeats more than twice or d > p.
inline std::vector<BarSplit> enumerate_su(const DominantParameter& dominant,
                                          std::size_t limit = 1'000'000) {
    if (!dominant.algebra().is_su()) throw WrongCaseError("enumerate_su needs an su parameter");
    const int p = dominant.algebra().p();

    std::vector<HalfInteger> doubled, free_values;
    for (const auto& [value, count] : detail::value_multiset(dominant.coords())) {
        if (count > 2) return {};
        if (count == 2) doubled.push_back(value);
        else free_values.push_back(value);
    }
    const int d = static_cast<int>(doubled.size());
    const int choose = p - d;
    if (choose < 0 || choose > static_cast<int>(free_values.size())) return {};

    // C(|free|, choose) subsets via lexicographic index stepping.
    const int m = static_cast<int>(free_values.size());
    std::vector<int> picked(choose);
    for (int i = 0; i < choose; ++i) picked[i] = i;
    std::vector<BarSplit> splits;
    while (true) {
        if (splits.size() >= limit)
            throw LimitError("su enumeration exceeds the candidate limit");
        BarSplit split;
        split.left = doubled;
        split.right = doubled;
        std::size_t next = 0;
        for (int i = 0; i < m; ++i) {
            bool on_left = next < picked.size() && picked[next] == i;
            if (on_left) { split.left.push_back(free_values[i]); ++next; }
            else split.right.push_back(free_values[i]);
        }
        std::sort(split.left.begin(), split.left.end(), std::greater<>());
        std::sort(split.right.begin(), split.right.end(), std::greater<>());
        splits.push_back(std::move(split));

        int k = choose - 1;
        while (k >= 0 && picked[k] == m - choose + k) --k;
        if (k < 0) break;
        ++picked[k];
        for (int i = k + 1; i < choose; ++i) picked[i] = picked[i - 1] + 1;
    }
    std::sort(splits.begin(), splits.end(), split_order);
    return splits;
}

// All strictly decreasing sign assignments that are genuine Weyl conjugates:
// doubled nonzero values carry both signs, zero is unsigned, and an
// arrangement survives iff its flip count is even or a zero coordinate
// absorbs the odd flip.
inline std::vector<SignedArrangement> enumerate_so(const DominantParameter& dominant,
                                                   std::size_t limit = 1'000'000) {
    if (!dominant.algebra().is_so_star())
        throw WrongCaseError("enumerate_so needs an so* parameter");

    bool has_zero = false;
    std::vector<HalfInteger> doubled, free_values;
    for (const auto& [value, count] : detail::abs_multiset(dominant.coords())) {
        if (count > 2) return {};
        if (value.twice() == 0) {
            if (count > 1) return {};  // no strictly decreasing arrangement holds two zeros
            has_zero = true;
        } else if (count == 2) {
            doubled.push_back(value);
        } else {
            free_values.push_back(value);
        }
    }

    const std::size_t k = free_values.size();
    if (k >= 63 || (std::uint64_t{1} << k) > limit)
        throw LimitError("so* enumeration exceeds the candidate limit");

    std::vector<SignedArrangement> arrangements;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        std::vector<HalfInteger> coords;
        coords.reserve(dominant.coords().size());
        if (has_zero) coords.push_back(HalfInteger(0));
        for (HalfInteger v : doubled) { coords.push_back(v); coords.push_back(-v); }
        for (std::size_t i = 0; i < k; ++i)
            coords.push_back(mask & (std::uint64_t{1} << i) ? -free_values[i] : free_values[i]);
        std::sort(coords.begin(), coords.end(), std::greater<>());
        int flips = sign_change_count(dominant, coords);
        if (flips % 2 == 0 || has_zero)
            arrangements.push_back(SignedArrangement{std::move(coords), flips});
    }
    std::sort(arrangements.begin(), arrangements.end(), arrangement_order);
    return arrangements;
}

}  // namespace uhw
