#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uhw/errors.hpp"
#include "uhw/half_integer.hpp"
#include "uhw/parameter.hpp"
#include "uhw/weyl_enum.hpp"

namespace uhw {

// Every strictly decreasing arrangement is either a p-case (L1 leads the
// string: L1 = L2 + 1) or a q-case (L1 sits above the string starting at
// L2). The size is the run length, counting L1 for the q-case.
struct CaseProfile {
    enum class Kind { P, Q };
    Kind kind = Kind::Q;
    int size = 2;

    bool is_p() const { return kind == Kind::P; }
    std::string str() const {
        return (is_p() ? std::string("p=") : std::string("q=")) + std::to_string(size);
    }

    bool operator==(const CaseProfile&) const = default;
};

inline CaseProfile case_profile(const std::vector<HalfInteger>& coords) {
    if (coords.size() < 2) throw InvalidArgument("case profile needs rank at least 2");
    if (!is_strictly_decreasing(coords))
        throw InvalidArgument("case profile needs a strictly decreasing arrangement");
    const int n = static_cast<int>(coords.size());
    int run = 1;  // descending-by-1 run length starting at coords[1]
    while (1 + run < n && coords[run] == coords[1 + run] + HalfInteger(1)) ++run;
    if (coords[0] == coords[1] + HalfInteger(1)) return CaseProfile{CaseProfile::Kind::P, 1 + run};
    return CaseProfile{CaseProfile::Kind::Q, 1 + run};
}

inline CaseProfile case_profile(const SignedArrangement& arr) { return case_profile(arr.coords); }

struct SoVerdict {
    bool unitary = false;
    CaseProfile profile;
};

// The unitarity oracle: q-case L1 + L2 <= q - 1; p-case L1 <= p - 1 for
// integer coordinates and L1 <= p/2 for half-odd ones.
inline SoVerdict is_unitary_so(const std::vector<HalfInteger>& coords) {
    IntegralityClass cls = integrality_class_of(coords);
    CaseProfile profile = case_profile(coords);
    bool unitary;
    if (profile.is_p()) {
        unitary = cls == IntegralityClass::Integer
                      ? coords[0] <= HalfInteger(profile.size - 1)
                      : coords[0].twice() <= profile.size;
    } else {
        unitary = coords[0] + coords[1] <= HalfInteger(profile.size - 1);
    }
    return SoVerdict{unitary, profile};
}

inline SoVerdict is_unitary_so(const SignedArrangement& arr) { return is_unitary_so(arr.coords); }

// The forced core of a dominant parameter: x is the largest value whose
// whole descent to the bottom (0 for integers, 1/2 for half-odd values) is
// doubled, u the length of the single-valued ladder above it, and
// repeated_above lists the offsets v in [2,u] with x+v doubled.
struct ZeroStructure {
    HalfInteger x;
    int u = 0;
    std::vector<int> repeated_above;

    bool operator==(const ZeroStructure&) const = default;
};

inline std::optional<ZeroStructure> zero_structure(const DominantParameter& dominant) {
    if (!dominant.algebra().is_so_star())
        throw WrongCaseError("zero structure is an so* notion");
    IntegralityClass cls = integrality_class(dominant.parameter());
    detail::Multiset<> counts = detail::abs_multiset(dominant.coords());
    auto count = [&](HalfInteger v) {
        auto it = counts.find(v);
        return it == counts.end() ? 0 : it->second;
    };

    HalfInteger x;
    if (cls == IntegralityClass::Integer) {
        if (count(HalfInteger(0)) == 0) return std::nullopt;
        x = HalfInteger(0);
    } else {
        if (count(half(1)) < 2) return std::nullopt;
        x = half(1);
    }
    while (count(x + HalfInteger(1)) == 2) x += HalfInteger(1);

    ZeroStructure zs;
    zs.x = x;
    while (count(x + HalfInteger(zs.u + 1)) >= 1) ++zs.u;
    for (int v = 2; v <= zs.u; ++v)
        if (count(x + HalfInteger(v)) == 2) zs.repeated_above.push_back(v);
    return zs;
}

enum class ParityAdmission { EvenFlips, ZeroAbsorbed };

inline std::string str(ParityAdmission p) {
    return p == ParityAdmission::EvenFlips ? "even" : "zero";
}

struct SoUnitaryItem {
    SignedArrangement arrangement;
    CaseProfile profile;
    std::string tag;  // which candidate family produced it
    ParityAdmission parity = ParityAdmission::EvenFlips;

    bool operator==(const SoUnitaryItem&) const = default;
};

namespace detail {

// Builds theorem candidates as explicit coordinate heads; the remaining
// absolute values are appended negated. Admission re-checks everything:
// structural validity, the parity rule, and the unitarity inequality, so a
// transcription slip in a clause surfaces as a diagnostic instead of a
// wrong answer.
class SoCandidateSink {
public:
    SoCandidateSink(const DominantParameter& dominant, std::vector<std::string>* diagnostics)
        : dominant_(dominant),
          abs_counts_(abs_multiset(dominant.coords())),
          diagnostics_(diagnostics) {}

    void emit(std::vector<HalfInteger> head, const std::string& tag) {
        Multiset<> remaining = abs_counts_;
        for (HalfInteger c : head) {
            auto it = remaining.find(c.abs());
            if (it == remaining.end() || it->second == 0) {
                note("candidate head for " + tag + " does not match the coordinate multiset");
                return;
            }
            if (--it->second == 0) remaining.erase(it);
        }
        for (auto it = remaining.rbegin(); it != remaining.rend(); ++it)
            for (int k = 0; k < it->second; ++k) head.push_back(-it->first);

        if (!is_strictly_decreasing(head)) {
            note("candidate " + format_coordinates(head) + " (" + tag +
                 ") is not strictly decreasing");
            return;
        }
        int flips = sign_change_count(dominant_, head);
        bool has_zero =
            std::find(head.begin(), head.end(), HalfInteger(0)) != head.end();
        if (!has_zero && flips % 2 != 0) {
            note("candidate (" + format_coordinates(head) + ") rejected: sign-change parity odd (" +
                 std::to_string(flips) + ")");
            return;
        }
        SoVerdict verdict = is_unitary_so(head);
        if (!verdict.unitary) {
            note("candidate (" + format_coordinates(head) + ") from " + tag +
                 " fails the unitarity inequality");
            return;
        }
        ParityAdmission parity =
            has_zero ? ParityAdmission::ZeroAbsorbed : ParityAdmission::EvenFlips;
        for (const SoUnitaryItem& existing : items_)
            if (existing.arrangement.coords == head) return;
        items_.push_back(
            SoUnitaryItem{SignedArrangement{std::move(head), flips}, verdict.profile, tag, parity});
    }

    std::vector<SoUnitaryItem> take() {
        std::sort(items_.begin(), items_.end(), [](const SoUnitaryItem& a, const SoUnitaryItem& b) {
            return arrangement_order(a.arrangement, b.arrangement);
        });
        return std::move(items_);
    }

private:
    void note(const std::string& text) {
        if (diagnostics_) diagnostics_->push_back(text);
    }

    const DominantParameter& dominant_;
    Multiset<> abs_counts_;
    std::vector<std::string>* diagnostics_;
    std::vector<SoUnitaryItem> items_;
};

inline void append_descending(std::vector<HalfInteger>& seq, HalfInteger from, HalfInteger to) {
    for (HalfInteger v = from; v >= to; v -= HalfInteger(1)) seq.push_back(v);
}

// True when the orbit has no strictly decreasing member at all.
inline bool so_orbit_empty(const DominantParameter& dominant, std::vector<std::string>* diagnostics) {
    for (const auto& [value, count] : abs_multiset(dominant.coords())) {
        if (count > 2 || (value.twice() == 0 && count > 1)) {
            if (diagnostics)
                diagnostics->push_back("no k-dominant regular conjugates: absolute value " +
                                       value.str() + " occurs " + std::to_string(count) + " times");
            return true;
        }
    }
    return false;
}

// Shared classifier for dominant parameters with no forced core: no zero
// coordinate (integers) or no +-1/2 pair (half-odd). At most one repeated
// absolute value is admissible; every candidate puts one value up front and
// drags everything else negative.
inline void classify_no_core_so(const DominantParameter& dominant, SoCandidateSink& sink,
                                std::vector<std::string>* diagnostics) {
    Multiset<> counts = abs_multiset(dominant.coords());
    std::vector<HalfInteger> repeated;
    for (const auto& [value, count] : counts)
        if (count == 2) repeated.push_back(value);

    if (repeated.size() >= 2) {
        if (diagnostics)
            diagnostics->push_back("no unitary conjugates: two repeated absolute values without a core");
        return;
    }
    if (repeated.size() == 1) {
        sink.emit({repeated[0]}, "repeated-head");
        return;
    }
    sink.emit({}, "all-negative");
    // Longest descending-by-1 tail of the absolute values.
    HalfInteger bottom = counts.rbegin()->first;
    HalfInteger top = bottom;
    while (counts.count(top + HalfInteger(1))) top += HalfInteger(1);
    for (HalfInteger s = bottom; s <= top; s += HalfInteger(1))
        sink.emit({s}, "tail-string-head(" + s.str() + ")");
}

// Shared classifier for dominant parameters with a forced core
// x, x-1, ..., -x. Dispatches on the repeated values above the core.
// `parity_note` only matters for diagnostics wording.
inline void classify_with_core_so(const DominantParameter& dominant, const ZeroStructure& zs,
                                  SoCandidateSink& sink, std::vector<std::string>* diagnostics) {
    const HalfInteger x = zs.x;
    const int u = zs.u;
    Multiset<> counts = abs_multiset(dominant.coords());

    for (const auto& [value, count] : counts) {
        if (count == 2 && value > x + HalfInteger(u)) {
            if (diagnostics)
                diagnostics->push_back("no unitary conjugates: repeated value " + value.str() +
                                       " above the single-valued ladder");
            return;
        }
    }

    const auto& vs = zs.repeated_above;
    const bool integer_core = x.is_integer();

    if (vs.size() >= 2) {
        if (!integer_core) {
            if (diagnostics)
                diagnostics->push_back(
                    "no unitary conjugates: two repeated values inside the half-odd ladder");
            return;
        }
        const int v_last = vs.back();
        for (int a = v_last; a <= u; ++a) {
            std::vector<HalfInteger> head;
            append_descending(head, x + HalfInteger(a), -x);
            for (int v : vs) head.push_back(-(x + HalfInteger(v)));
            if (a < u) append_descending(head, -(x + HalfInteger(a + 1)), -(x + HalfInteger(u)));
            sink.emit(std::move(head), "p-core-paired(a=" + std::to_string(a) + ")");
        }
        return;
    }
    if (vs.size() == 1) {
        const int v = vs.front();
        {
            std::vector<HalfInteger> head{x + HalfInteger(v)};
            append_descending(head, x, -x - HalfInteger(u));
            sink.emit(std::move(head), "q-paired-head");
        }
        if (integer_core) {
            for (int a = v; a <= u; ++a) {
                std::vector<HalfInteger> head;
                append_descending(head, x + HalfInteger(a), -x);
                head.push_back(-(x + HalfInteger(v)));
                if (a < u) append_descending(head, -(x + HalfInteger(a + 1)), -(x + HalfInteger(u)));
                sink.emit(std::move(head), "p-core-single(a=" + std::to_string(a) + ")");
            }
        }
        return;
    }

    // No repeated value above the core.
    for (int a = 1; a + 1 <= u; ++a) {
        std::vector<HalfInteger> head{x + HalfInteger(a + 1)};
        append_descending(head, x, -x - HalfInteger(a));
        if (a + 1 < u) append_descending(head, -(x + HalfInteger(a + 2)), -(x + HalfInteger(u)));
        sink.emit(std::move(head), "q-above-core(a=" + std::to_string(a) + ")");
    }
    if (integer_core) {
        if (x.twice() == 0 && u == 0 && dominant.coords()[dominant.coords().size() - 2] > HalfInteger(1))
            sink.emit({HalfInteger(0)}, "q-zero-head");
        for (int a = 1; a <= u; ++a) {
            std::vector<HalfInteger> head;
            append_descending(head, x + HalfInteger(a), -x);
            if (a < u) append_descending(head, -(x + HalfInteger(a + 1)), -(x + HalfInteger(u)));
            sink.emit(std::move(head), "p-above-core(a=" + std::to_string(a) + ")");
        }
    } else if (u >= 1) {
        std::vector<HalfInteger> head;
        append_descending(head, x + HalfInteger(1), -x);
        if (u > 1) append_descending(head, -(x + HalfInteger(2)), -(x + HalfInteger(u)));
        sink.emit(std::move(head), "p-core-plus-one");
    }
    {
        std::vector<HalfInteger> head;
        append_descending(head, x, -x - HalfInteger(u));
        sink.emit(std::move(head), "p-core-left");
    }
}

}  // namespace detail

// Integer coordinates: dispatch on whether 0 is a coordinate.
inline std::vector<SoUnitaryItem> classify_integer_so(const DominantParameter& dominant,
                                                      std::vector<std::string>* diagnostics = nullptr) {
    if (!dominant.algebra().is_so_star())
        throw WrongCaseError("so* classifier on non-so* parameter");
    if (integrality_class(dominant.parameter()) != IntegralityClass::Integer)
        throw WrongCaseError("integer so* classifier called on half-odd coordinates");
    if (detail::so_orbit_empty(dominant, diagnostics)) return {};

    detail::SoCandidateSink sink(dominant, diagnostics);
    if (auto zs = zero_structure(dominant))
        detail::classify_with_core_so(dominant, *zs, sink, diagnostics);
    else
        detail::classify_no_core_so(dominant, sink, diagnostics);
    return sink.take();
}

// Half-odd coordinates: dispatch on whether a +-1/2 pair forces a core.
inline std::vector<SoUnitaryItem> classify_halfint_so(const DominantParameter& dominant,
                                                      std::vector<std::string>* diagnostics = nullptr) {
    if (!dominant.algebra().is_so_star())
        throw WrongCaseError("so* classifier on non-so* parameter");
    if (integrality_class(dominant.parameter()) != IntegralityClass::HalfOdd)
        throw WrongCaseError("half-odd so* classifier called on integer coordinates");
    if (detail::so_orbit_empty(dominant, diagnostics)) return {};

    detail::SoCandidateSink sink(dominant, diagnostics);
    if (auto zs = zero_structure(dominant))
        detail::classify_with_core_so(dominant, *zs, sink, diagnostics);
    else
        detail::classify_no_core_so(dominant, sink, diagnostics);
    return sink.take();
}

inline std::vector<SoUnitaryItem> classify_so(const DominantParameter& dominant,
                                              std::vector<std::string>* diagnostics = nullptr) {
    return integrality_class(dominant.parameter()) == IntegralityClass::Integer
               ? classify_integer_so(dominant, diagnostics)
               : classify_halfint_so(dominant, diagnostics);
}

// The unitary points of the Hasse diagram of rho, written out directly:
// the q-edge (q-1 | 0,...,-q+2 | -q,...,-n+1) for q in [3,n], the p-edge
// (p-1,...,1,0 | -p,...,-n+1) for p in [2,n], and the bottom point
// (0,-1,...,-n+1).
inline std::vector<SoUnitaryItem> unitary_hasse_points_so(int n) {
    Algebra algebra = Algebra::so_star(n);
    DominantParameter rho_dom(rho(algebra));
    std::vector<SoUnitaryItem> items;
    auto add = [&](std::vector<HalfInteger> coords, const std::string& tag) {
        for (const SoUnitaryItem& existing : items)
            if (existing.arrangement.coords == coords) return;
        int flips = sign_change_count(rho_dom, coords);
        CaseProfile profile = case_profile(coords);
        items.push_back(SoUnitaryItem{SignedArrangement{std::move(coords), flips}, profile, tag,
                                      ParityAdmission::ZeroAbsorbed});
    };

    for (int q = 3; q <= n; ++q) {
        std::vector<HalfInteger> coords{HalfInteger(q - 1)};
        detail::append_descending(coords, HalfInteger(0), HalfInteger(-q + 2));
        detail::append_descending(coords, HalfInteger(-q), HalfInteger(-n + 1));
        add(std::move(coords), "q-edge(" + std::to_string(q) + ")");
    }
    for (int p = 2; p <= n; ++p) {
        std::vector<HalfInteger> coords;
        detail::append_descending(coords, HalfInteger(p - 1), HalfInteger(0));
        detail::append_descending(coords, HalfInteger(-p), HalfInteger(-n + 1));
        add(std::move(coords), "p-edge(" + std::to_string(p) + ")");
    }
    {
        std::vector<HalfInteger> coords;
        detail::append_descending(coords, HalfInteger(0), HalfInteger(-n + 1));
        add(std::move(coords), "tilde");
    }
    std::sort(items.begin(), items.end(), [](const SoUnitaryItem& a, const SoUnitaryItem& b) {
        return arrangement_order(a.arrangement, b.arrangement);
    });
    return items;
}

}  // namespace uhw
