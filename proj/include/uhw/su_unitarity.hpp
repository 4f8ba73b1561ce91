#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "uhw/errors.hpp"
#include "uhw/half_integer.hpp"
#include "uhw/parameter.hpp"
#include "uhw/weyl_enum.hpp"

namespace uhw {

// Lengths of the maximal initial descending-by-1 run of the left block (p')
// and the maximal trailing run of the right block (q').
struct StringProfile {
    int p_prime = 1;
    int q_prime = 1;

    bool operator==(const StringProfile&) const = default;
};

inline StringProfile string_profile(const BarSplit& split) {
    if (!is_k_dominant_regular(split))
        throw InvalidArgument("string_profile needs a k-dominant regular split");
    StringProfile profile;
    while (profile.p_prime < split.p() &&
           split.left[profile.p_prime] == split.left[0] - HalfInteger(profile.p_prime))
        ++profile.p_prime;
    const auto& right = split.right;
    const int q = split.q();
    while (profile.q_prime < q &&
           right[q - 1 - profile.q_prime] == right[q - 1] + HalfInteger(profile.q_prime))
        ++profile.q_prime;
    return profile;
}

struct SuVerdict {
    bool unitary = false;
    StringProfile profile;
};

// The unitarity oracle: with the maximal profile, L_{p'} - L_{n-q'+1} <= 1.
// Every su theorem classifier is checked against this.
inline SuVerdict is_unitary_su(const BarSplit& split) {
    integrality_class_of(split.flat());
    StringProfile profile = string_profile(split);
    HalfInteger lhs = split.left[profile.p_prime - 1];
    HalfInteger rhs = split.right[split.q() - profile.q_prime];
    return SuVerdict{lhs - rhs <= HalfInteger(1), profile};
}

struct TildeTag {
    bool operator==(const TildeTag&) const = default;
};

// Regular string form: the dominant coordinates s..s+r make a string, the
// conjugate keeps positions s+a..s+b on the left with cut point c.
struct RegularStringTag {
    int s = 0, r = 0;
    int a = 0, b = 0, c = 0;

    bool operator==(const RegularStringTag&) const = default;
};

struct SingularFormTag {
    int form = 0;  // 1..7, ordered as the singular candidate shapes below

    bool operator==(const SingularFormTag&) const = default;
};

// Item produced by the oracle path rather than a theorem clause.
struct OracleTag {
    bool operator==(const OracleTag&) const = default;
};

using SuFormTag = std::variant<TildeTag, RegularStringTag, SingularFormTag, OracleTag>;

struct SuUnitaryItem {
    BarSplit split;
    StringProfile profile;
    SuFormTag tag;

    bool operator==(const SuUnitaryItem&) const = default;
};

// The block-swapped conjugate (L_{q+1},...,L_n | L_1,...,L_q); unitary for
// every regular dominant parameter.
inline BarSplit tilde_split(const DominantParameter& dominant) {
    const auto& c = dominant.coords();
    const int q = dominant.algebra().q();
    BarSplit split;
    split.left.assign(c.begin() + q, c.end());
    split.right.assign(c.begin(), c.begin() + q);
    return split;
}

namespace detail {

inline bool is_regular(const DominantParameter& dominant) {
    return is_strictly_decreasing(dominant.coords());
}

}  // namespace detail

// Regular case. If L_q != L_{q+1} + 1 the block swap is the only unitary
// conjugate; otherwise the dominant parameter carries a string through
// positions q, q+1 and the unitary conjugates form an (a,b) grid on it.
inline std::vector<SuUnitaryItem> classify_regular_su(const DominantParameter& dominant) {
    if (!dominant.algebra().is_su()) throw WrongCaseError("su classifier on non-su parameter");
    if (!detail::is_regular(dominant))
        throw WrongCaseError("regular classifier called on a singular parameter");
    integrality_class(dominant.parameter());

    const auto& coords = dominant.coords();
    const int n = dominant.algebra().rank();
    const int q = dominant.algebra().q();

    std::vector<SuUnitaryItem> items;
    BarSplit tilde = tilde_split(dominant);
    items.push_back(SuUnitaryItem{tilde, string_profile(tilde), TildeTag{}});

    if (coords[q - 1] == coords[q] + HalfInteger(1)) {
        // Maximal string through positions q, q+1 (1-based): s..s+r.
        int s0 = q - 1;  // 0-based start
        while (s0 > 0 && coords[s0 - 1] == coords[s0] + HalfInteger(1)) --s0;
        int e0 = q;  // 0-based end
        while (e0 + 1 < n && coords[e0 + 1] == coords[e0] - HalfInteger(1)) ++e0;
        const int s = s0 + 1;
        const int r = e0 - s0;

        for (int a = 0; a <= q - s; ++a) {
            for (int d = 0; d <= s + r - 1 - q; ++d) {
                const int b = a + d;
                const int c = d + q - s + 1;
                BarSplit split;
                split.left.assign(coords.begin() + (s0 + a), coords.begin() + (s0 + b + 1));
                split.left.insert(split.left.end(), coords.begin() + (s0 + c + 1), coords.end());
                split.right.assign(coords.begin(), coords.begin() + (s0 + a));
                split.right.insert(split.right.end(), coords.begin() + (s0 + b + 1),
                                   coords.begin() + (s0 + c + 1));
                StringProfile profile = string_profile(split);
                items.push_back(
                    SuUnitaryItem{split, profile, RegularStringTag{s, r, a, b, c}});
            }
        }
    }

    std::sort(items.begin(), items.end(),
              [](const SuUnitaryItem& x, const SuUnitaryItem& y) {
                  return split_order(x.split, y.split);
              });
    return items;
}

// Singular structure (D1; C1 A1' B1 ... B_{r-1} Ar' C2; D2): the region
// between the highest and lowest repeated values is a string; A blocks hold
// the doubled values, B blocks the single values between them; C1/C2 extend
// the string outward through consecutive single values; D1/D2 are the
// leftovers, separated by a gap of at least two.
struct BlockDecomposition {
    std::vector<HalfInteger> d1, c1, c2, d2;
    std::vector<std::vector<HalfInteger>> a_blocks;  // distinct values, descending
    std::vector<std::vector<HalfInteger>> b_blocks;  // between consecutive A blocks

    int repeated_count() const {
        int total = 0;
        for (const auto& a : a_blocks) total += static_cast<int>(a.size());
        return total;
    }

    bool operator==(const BlockDecomposition&) const = default;
};

// nullopt means the orbit has no unitary member; the reason says why.
inline std::optional<BlockDecomposition> decompose_singular(const DominantParameter& dominant,
                                                            std::string* reason = nullptr) {
    if (!dominant.algebra().is_su()) throw WrongCaseError("su decomposition on non-su parameter");
    auto fail = [&](const std::string& why) -> std::optional<BlockDecomposition> {
        if (reason) *reason = why;
        return std::nullopt;
    };

    detail::Multiset<> counts = detail::value_multiset(dominant.coords());
    std::vector<HalfInteger> repeated;
    for (const auto& [value, count] : counts) {
        if (count > 2) return fail("value " + value.str() + " repeated more than twice");
        if (count == 2) repeated.push_back(value);
    }
    if (repeated.empty())
        throw WrongCaseError("singular decomposition called on a regular parameter");

    const HalfInteger hi = repeated.front();
    const HalfInteger lo = repeated.back();
    for (HalfInteger v = lo; v < hi; v += HalfInteger(1))
        if (!counts.count(v))
            return fail("coordinates between repeated values do not form a string");

    if (static_cast<int>(repeated.size()) > dominant.algebra().p())
        return fail("more repeated values than left-hand slots");

    BlockDecomposition blocks;
    HalfInteger top = hi;
    while (counts.count(top + HalfInteger(1))) top += HalfInteger(1);
    for (HalfInteger v = top; v > hi; v -= HalfInteger(1)) blocks.c1.push_back(v);
    HalfInteger bottom = lo;
    while (counts.count(bottom - HalfInteger(1))) bottom -= HalfInteger(1);
    for (HalfInteger v = lo - HalfInteger(1); v >= bottom; v -= HalfInteger(1))
        blocks.c2.push_back(v);
    for (const auto& [value, count] : counts) {
        if (value > top) blocks.d1.push_back(value);
        if (value < bottom) blocks.d2.push_back(value);
    }

    // Alternate maximal doubled / single runs down the middle string.
    HalfInteger v = hi;
    while (v >= lo) {
        std::vector<HalfInteger> run;
        const bool doubled = counts[v] == 2;
        while (v >= lo && (counts[v] == 2) == doubled) {
            run.push_back(v);
            v -= HalfInteger(1);
        }
        if (doubled) blocks.a_blocks.push_back(std::move(run));
        else blocks.b_blocks.push_back(std::move(run));
    }
    return blocks;
}

namespace detail {

using Seq = std::vector<HalfInteger>;

inline Seq concat(std::initializer_list<const Seq*> parts) {
    Seq out;
    for (const Seq* part : parts) out.insert(out.end(), part->begin(), part->end());
    return out;
}

// A[i] B[i] A[i+1] ... B[j-1] A[j], the contiguous middle segment.
inline Seq middle_segment(const BlockDecomposition& blocks, int i, int j) {
    Seq out;
    for (int k = i; k <= j; ++k) {
        out.insert(out.end(), blocks.a_blocks[k].begin(), blocks.a_blocks[k].end());
        if (k < j) out.insert(out.end(), blocks.b_blocks[k].begin(), blocks.b_blocks[k].end());
    }
    return out;
}

// A[i] ... A[j] values only.
inline Seq a_values(const BlockDecomposition& blocks, int i, int j) {
    Seq out;
    for (int k = i; k <= j; ++k)
        out.insert(out.end(), blocks.a_blocks[k].begin(), blocks.a_blocks[k].end());
    return out;
}

}  // namespace detail

namespace detail {

// The seven displayed candidate shapes, used to label the classifier's
// output. A pivot block is shared by both strings (shapes 1-4) or the
// strings are disjoint (shapes 5-7); prefix/suffix splits distribute C1, C2
// and the pivot-adjacent B block across the bar. Returns left block ->
// smallest matching shape among candidates with exactly p left coordinates.
inline std::map<Seq, int> singular_shape_index(const BlockDecomposition& blocks, int p) {
    const int r = static_cast<int>(blocks.a_blocks.size());
    const Seq& c1 = blocks.c1;
    const Seq& c2 = blocks.c2;
    const Seq& d2 = blocks.d2;

    std::map<Seq, int> shapes;
    auto emit = [&](Seq left, int form) {
        if (static_cast<int>(left.size()) != p) return;
        auto [it, inserted] = shapes.emplace(std::move(left), form);
        if (!inserted && form < it->second) it->second = form;
    };
    auto splits_of = [](const Seq& s) {
        std::vector<std::pair<Seq, Seq>> out;
        for (std::size_t t = 0; t <= s.size(); ++t)
            out.emplace_back(Seq(s.begin(), s.begin() + t), Seq(s.begin() + t, s.end()));
        return out;
    };

    const auto c1_splits = splits_of(c1);
    const auto c2_splits = splits_of(c2);

    for (const auto& [p1, s1] : c1_splits) {
        for (const auto& [p2, s2] : c2_splits) {
            // Shape 1: pivot block i shared by both strings.
            for (int i = 0; i < r; ++i) {
                Seq head = middle_segment(blocks, 0, i);
                Seq rest = a_values(blocks, i + 1, r - 1);
                emit(concat({&s1, &head, &rest, &s2, &d2}), 1);
            }
            // Shape 5: no doubled block in the p'-string.
            {
                Seq all_a = a_values(blocks, 0, r - 1);
                emit(concat({&p1, &all_a, &s2, &d2}), 5);
            }
            // Shape 6: the strings part ways inside B[i].
            for (int i = 0; i + 1 < r; ++i) {
                const Seq& b = blocks.b_blocks[i];
                for (std::size_t t = 1; t < b.size(); ++t) {
                    Seq b_left(b.begin(), b.begin() + t);
                    Seq head = middle_segment(blocks, 0, i);
                    Seq rest = a_values(blocks, i + 1, r - 1);
                    emit(concat({&s1, &head, &b_left, &rest, &s2, &d2}), 6);
                }
            }
            // Shape 7: the whole middle is the p'-string, C2's tail right.
            {
                Seq mid = middle_segment(blocks, 0, r - 1);
                emit(concat({&s1, &mid, &p2, &d2}), 7);
            }
        }
    }
    for (const auto& [p2, s2] : c2_splits) {
        // Shape 2: A[0] alone as p'-string, the full C1 right of the bar.
        Seq rest = a_values(blocks, 1, r - 1);
        emit(concat({&blocks.a_blocks[0], &rest, &s2, &d2}), 2);
    }
    for (const auto& [p1, s1] : c1_splits) {
        // Shape 3: the whole middle plus C2 as p'-string, A[r-1] right.
        Seq mid = middle_segment(blocks, 0, r - 1);
        emit(concat({&s1, &mid, &c2, &d2}), 3);
    }
    if (r == 1) {
        // Shape 4: A1 C2 left, C1 A1 right.
        emit(concat({&blocks.a_blocks[0], &c2, &d2}), 4);
    }
    return shapes;
}

}  // namespace detail

// Singular case. A unitary conjugate is fixed by where its p'-string and
// q'-string sit: both are value intervals inside the middle string, the
// bottom of the p'-string at most one above the top of the q'-string, and
// every remaining value is forced by the gap rules -- doubled values not
// covered by both strings drop below the p'-string on the left and above
// the q'-string on the right, single values take whichever side has room.
// Candidates with exactly p left coordinates pass through the unitarity
// oracle and are labeled with the matching displayed shape; a survivor
// outside the seven shapes, or a shaped candidate the oracle rejects, is
// reported through `diagnostics`.
inline std::vector<SuUnitaryItem> classify_singular_su(
    const DominantParameter& dominant, std::vector<std::string>* diagnostics = nullptr) {
    if (!dominant.algebra().is_su()) throw WrongCaseError("su classifier on non-su parameter");
    if (detail::is_regular(dominant))
        throw WrongCaseError("singular classifier called on a regular parameter");
    integrality_class(dominant.parameter());

    std::string reason;
    std::optional<BlockDecomposition> blocks = decompose_singular(dominant, &reason);
    if (!blocks) {
        if (diagnostics) diagnostics->push_back("no unitary conjugates: " + reason);
        return {};
    }

    const int p = dominant.algebra().p();
    using detail::Seq;

    // Middle string, descending; vals[k] = top - k.
    std::vector<HalfInteger> vals;
    std::vector<bool> doubled;
    {
        detail::Multiset<> counts = detail::value_multiset(dominant.coords());
        HalfInteger top = blocks->c1.empty() ? blocks->a_blocks.front().front()
                                             : blocks->c1.front();
        HalfInteger bot = blocks->c2.empty() ? blocks->a_blocks.back().back()
                                             : blocks->c2.back();
        for (HalfInteger v = top; v >= bot; v -= HalfInteger(1)) {
            vals.push_back(v);
            doubled.push_back(counts[v] == 2);
        }
    }
    const int m = static_cast<int>(vals.size());

    std::map<Seq, Seq> candidates;  // left -> right
    // index intervals: P = [a1, a2], Q = [b1, b2]
    for (int a1 = 0; a1 < m; ++a1) {
        for (int a2 = a1; a2 < m; ++a2) {
            for (int b1 = 0; b1 <= a2 + 1 && b1 < m; ++b1) {  // p'-bottom <= q'-top + 1
                for (int b2 = b1; b2 < m; ++b2) {
                    Seq left, right;
                    right.insert(right.end(), blocks->d1.begin(), blocks->d1.end());
                    bool valid = true;
                    for (int k = 0; k < m && valid; ++k) {
                        const bool in_p = a1 <= k && k <= a2;
                        const bool in_q = b1 <= k && k <= b2;
                        if (doubled[k]) {
                            if (in_p) left.push_back(vals[k]);
                            else if (k >= a2 + 2) left.push_back(vals[k]);  // below the p'-string
                            else valid = false;
                            if (in_q) right.push_back(vals[k]);
                            else if (k <= b1 - 2) right.push_back(vals[k]);  // above the q'-string
                            else valid = false;
                        } else {
                            if (in_p && in_q) valid = false;  // a single cannot sit in both
                            else if (in_p) left.push_back(vals[k]);
                            else if (in_q) right.push_back(vals[k]);
                            else if (k >= a2 + 2) left.push_back(vals[k]);
                            else if (k <= b1 - 2) right.push_back(vals[k]);
                            else valid = false;
                        }
                    }
                    if (!valid || static_cast<int>(left.size()) + static_cast<int>(blocks->d2.size()) != p)
                        continue;
                    left.insert(left.end(), blocks->d2.begin(), blocks->d2.end());
                    candidates.emplace(std::move(left), std::move(right));
                }
            }
        }
    }

    std::map<Seq, int> shapes = detail::singular_shape_index(*blocks, p);
    std::vector<SuUnitaryItem> items;
    for (const auto& [left, right] : candidates) {
        BarSplit split{left, right};
        if (!is_k_dominant_regular(split)) {
            if (diagnostics)
                diagnostics->push_back("candidate " + split.str() + " is not k-dominant regular");
            continue;
        }
        SuVerdict verdict = is_unitary_su(split);
        if (!verdict.unitary) {
            if (diagnostics)
                diagnostics->push_back("candidate " + split.str() +
                                       " has p left coordinates but fails the unitarity bound");
            continue;
        }
        auto shape = shapes.find(left);
        if (shape == shapes.end() && diagnostics)
            diagnostics->push_back("unitary conjugate " + split.str() +
                                   " lies outside the displayed candidate shapes");
        items.push_back(SuUnitaryItem{
            split, verdict.profile,
            SingularFormTag{shape == shapes.end() ? 0 : shape->second}});
    }
    std::sort(items.begin(), items.end(),
              [](const SuUnitaryItem& x, const SuUnitaryItem& y) {
                  return split_order(x.split, y.split);
              });
    return items;
}

// Every k-dominant regular integral conjugate of a dominant parameter.
inline std::vector<SuUnitaryItem> classify_su(const DominantParameter& dominant,
                                              std::vector<std::string>* diagnostics = nullptr) {
    return detail::is_regular(dominant) ? classify_regular_su(dominant)
                                        : classify_singular_su(dominant, diagnostics);
}

enum class ConeClass { TildeRho, EdgePoint, NotUnitaryPoint };

// Where the chamber of a regular parameter sits in the Hasse diagram of rho,
// and whether the dominant shift mu respects the edge-point equalities. The
// verdict reproduces the plain unitarity bound through chamber geometry.
struct ConeReport {
    BarSplit w_rho;
    ConeClass classification = ConeClass::NotUnitaryPoint;
    int i = 0, j = 0;  // edge-point coordinates: j rows of i boxes
    bool mu_equalities_hold = false;
    int cone_dimension = 0;

    bool verdict() const {
        if (classification == ConeClass::TildeRho) return true;
        return classification == ConeClass::EdgePoint && mu_equalities_hold;
    }
};

inline ConeReport translation_cone_check(const BarSplit& split) {
    const int p = split.p(), q = split.q(), n = split.rank();
    std::vector<HalfInteger> flat = split.flat();
    integrality_class_of(flat);
    std::vector<HalfInteger> dom = flat;
    std::sort(dom.begin(), dom.end(), std::greater<>());
    if (std::adjacent_find(dom.begin(), dom.end()) != dom.end())
        throw WrongCaseError("translation cones are defined for regular parameters");

    // Position matching recovers the chamber: flat[k] = dom[sigma[k]].
    std::vector<int> sigma(n);
    for (int k = 0; k < n; ++k)
        sigma[k] = static_cast<int>(
            std::lower_bound(dom.begin(), dom.end(), flat[k], std::greater<>()) - dom.begin());

    std::vector<HalfInteger> rho_dom(n);
    for (int k = 0; k < n; ++k) rho_dom[k] = HalfInteger::from_twice(n - 1 - 2 * k);
    std::vector<HalfInteger> w_rho(n), w_mu(n);
    for (int k = 0; k < n; ++k) {
        w_rho[k] = rho_dom[sigma[k]];
        w_mu[k] = flat[k] - w_rho[k];  // mu = dom - rho, permuted the same way
    }

    ConeReport report;
    report.w_rho.left.assign(w_rho.begin(), w_rho.begin() + p);
    report.w_rho.right.assign(w_rho.begin() + p, w_rho.end());

    // Young diagram of w_rho against the block swap of rho.
    std::vector<long> rows(p);
    for (int k = 0; k < p; ++k)
        rows[k] = (w_rho[k] - rho_dom[q + k]).twice() / 2;

    int nonzero = 0;
    while (nonzero < p && rows[nonzero] > 0) ++nonzero;
    bool rectangle = nonzero > 0;
    for (int k = 1; k < nonzero; ++k) rectangle = rectangle && rows[k] == rows[0];
    for (int k = nonzero; k < p; ++k) rectangle = rectangle && rows[k] == 0;

    if (nonzero == 0) {
        report.classification = ConeClass::TildeRho;
        report.mu_equalities_hold = true;
        report.cone_dimension = p + q;
        return report;
    }
    if (!rectangle || rows[0] > q) {
        report.classification = ConeClass::NotUnitaryPoint;
        return report;
    }
    report.classification = ConeClass::EdgePoint;
    report.i = static_cast<int>(rows[0]);
    report.j = nonzero;
    report.cone_dimension = p + q - report.i - report.j;
    bool equal = true;
    for (int k = 1; k < report.j; ++k) equal = equal && w_mu[k] == w_mu[0];
    for (int k = n - report.i; k < n; ++k) equal = equal && w_mu[k] == w_mu[0];
    report.mu_equalities_hold = equal;
    return report;
}

}  // namespace uhw
