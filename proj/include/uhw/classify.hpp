#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "uhw/errors.hpp"
#include "uhw/half_integer.hpp"
#include "uhw/parameter.hpp"
#include "uhw/so_unitarity.hpp"
#include "uhw/su_unitarity.hpp"
#include "uhw/weyl_enum.hpp"

namespace uhw {

struct ClassifyOptions {
    bool run_theorem = true;
    std::size_t limit = 1'000'000;
};

// One dominant parameter, classified twice: through the structure theorems
// and through the enumerate-and-test oracle. oracle_agrees records whether
// the two routes produced the same set.
struct ClassificationResult {
    ClassificationResult(Algebra alg, Parameter in, DominantParameter dom)
        : algebra(alg), input(std::move(in)), dominant(std::move(dom)) {}

    Algebra algebra;
    Parameter input;
    DominantParameter dominant;
    bool normalized = false;
    IntegralityClass integrality = IntegralityClass::Integer;
    std::size_t conjugate_count = 0;
    std::vector<SuUnitaryItem> su_items;
    std::vector<SoUnitaryItem> so_items;
    bool theorem_path_used = true;
    bool oracle_agrees = true;
    std::vector<std::string> diagnostics;

    std::size_t unitary_count() const {
        return algebra.is_su() ? su_items.size() : so_items.size();
    }

    bool operator==(const ClassificationResult&) const = default;
};

inline ClassificationResult classify(const Parameter& input, const ClassifyOptions& opts = {}) {
    ClassificationResult result{input.algebra, input, dominant_representative(input)};
    result.integrality = integrality_class(input);
    result.normalized = result.dominant.coords() != input.coords;
    if (result.normalized)
        result.diagnostics.push_back("input normalized to dominant representative (" +
                                     format_coordinates(result.dominant.coords()) + ")");
    result.theorem_path_used = opts.run_theorem;

    if (input.algebra.is_su()) {
        std::vector<BarSplit> conjugates = enumerate_su(result.dominant, opts.limit);
        result.conjugate_count = conjugates.size();
        std::vector<SuUnitaryItem> oracle_items;
        for (const BarSplit& split : conjugates) {
            SuVerdict verdict = is_unitary_su(split);
            if (verdict.unitary)
                oracle_items.push_back(SuUnitaryItem{split, verdict.profile, OracleTag{}});
        }
        if (opts.run_theorem) {
            result.su_items = classify_su(result.dominant, &result.diagnostics);
            result.oracle_agrees = result.su_items.size() == oracle_items.size();
            for (std::size_t i = 0; result.oracle_agrees && i < oracle_items.size(); ++i)
                result.oracle_agrees = result.su_items[i].split == oracle_items[i].split;
            if (!result.oracle_agrees)
                result.diagnostics.push_back("theorem path disagrees with the oracle");
        } else {
            result.su_items = std::move(oracle_items);
            result.diagnostics.push_back("theorem path skipped");
        }
    } else {
        std::vector<SignedArrangement> conjugates = enumerate_so(result.dominant, opts.limit);
        result.conjugate_count = conjugates.size();
        std::vector<SoUnitaryItem> oracle_items;
        for (const SignedArrangement& arr : conjugates) {
            SoVerdict verdict = is_unitary_so(arr);
            bool has_zero = std::find(arr.coords.begin(), arr.coords.end(), HalfInteger(0)) !=
                            arr.coords.end();
            if (verdict.unitary)
                oracle_items.push_back(SoUnitaryItem{
                    arr, verdict.profile, "oracle",
                    has_zero ? ParityAdmission::ZeroAbsorbed : ParityAdmission::EvenFlips});
        }
        if (opts.run_theorem) {
            result.so_items = classify_so(result.dominant, &result.diagnostics);
            result.oracle_agrees = result.so_items.size() == oracle_items.size();
            for (std::size_t i = 0; result.oracle_agrees && i < oracle_items.size(); ++i)
                result.oracle_agrees =
                    result.so_items[i].arrangement.coords == oracle_items[i].arrangement.coords;
            if (!result.oracle_agrees)
                result.diagnostics.push_back("theorem path disagrees with the oracle");
        } else {
            result.so_items = std::move(oracle_items);
            result.diagnostics.push_back("theorem path skipped");
        }
    }
    if (result.conjugate_count == 0)
        result.diagnostics.push_back("the orbit has no k-dominant regular members");
    return result;
}

// Flat oracle view: every conjugate with its verdict and profile.
struct OracleRow {
    std::vector<HalfInteger> coords;  // su rows keep the bar via left_size
    int left_size = 0;
    bool unitary = false;
    std::string profile;
};

inline std::vector<OracleRow> oracle_table(const Parameter& input, std::size_t limit = 1'000'000) {
    integrality_class(input);
    DominantParameter dominant = dominant_representative(input);
    std::vector<OracleRow> rows;
    if (input.algebra.is_su()) {
        for (const BarSplit& split : enumerate_su(dominant, limit)) {
            SuVerdict verdict = is_unitary_su(split);
            rows.push_back(OracleRow{split.flat(), split.p(), verdict.unitary,
                                     "p'=" + std::to_string(verdict.profile.p_prime) +
                                         " q'=" + std::to_string(verdict.profile.q_prime)});
        }
    } else {
        for (const SignedArrangement& arr : enumerate_so(dominant, limit)) {
            SoVerdict verdict = is_unitary_so(arr);
            rows.push_back(OracleRow{arr.coords, 0, verdict.unitary, verdict.profile.str()});
        }
    }
    return rows;
}

// ---- exhaustive theorem-vs-oracle scans ------------------------------------

struct ScanMismatch {
    std::vector<HalfInteger> dominant;
    std::vector<std::string> theorem_set;
    std::vector<std::string> oracle_set;

    bool operator==(const ScanMismatch&) const = default;
};

struct ScanReport {
    ScanReport() = default;
    ScanReport(std::string fam, int rank, HalfInteger b)
        : family(std::move(fam)), max_rank(rank), bound(b) {}

    std::string family;  // "su" or "so*"
    int max_rank = 0;
    HalfInteger bound;  // su: coordinate span; so*: |coordinate| bound
    std::size_t instances_checked = 0;
    std::vector<ScanMismatch> mismatches;
    std::int64_t elapsed_ms = 0;

    bool operator==(const ScanReport&) const = default;
};

// All dominant integral su instances up to translation: weakly decreasing
// integer coordinates with last = 0 and first <= span, for every p <= q
// with p + q <= max_rank.
inline void for_each_su_dominant(int max_rank, long span,
                                 const std::function<void(const DominantParameter&)>& visit) {
    for (int p = 1; 2 * p <= max_rank; ++p) {
        for (int q = p; p + q <= max_rank; ++q) {
            const int n = p + q;
            std::vector<HalfInteger> coords(n);
            coords[n - 1] = HalfInteger(0);
            std::function<void(int, long)> walk = [&](int pos, long upper) {
                if (pos == n - 1) {
                    visit(DominantParameter(Parameter(Algebra::su(p, q), coords)));
                    return;
                }
                for (long v = upper; v >= 0; --v) {
                    coords[pos] = HalfInteger(v);
                    walk(pos + 1, v);
                }
            };
            walk(0, span);
        }
    }
}

// All dominant so* instances in both integrality classes with every
// |coordinate| <= bound, for 2 <= n <= max_rank.
inline void for_each_so_dominant(int max_rank, HalfInteger bound,
                                 const std::function<void(const DominantParameter&)>& visit) {
    for (int n = 2; n <= max_rank; ++n) {
        for (int parity = 0; parity <= 1; ++parity) {
            // twice-values: even (integers, from 0) or odd (half-odd, from 1)
            const std::int64_t lowest = parity == 0 ? 0 : 1;
            if (bound.twice() < lowest) continue;
            std::vector<HalfInteger> coords(n);
            std::function<void(int, std::int64_t)> walk = [&](int pos, std::int64_t upper) {
                if (pos == n - 1) {
                    // last coordinate: |L_n| <= L_{n-1}, either sign (zero once)
                    std::int64_t cap = std::min(upper, coords[n - 2].twice());
                    for (std::int64_t t = lowest; t <= cap; t += 2) {
                        coords[n - 1] = HalfInteger::from_twice(t);
                        visit(DominantParameter(Parameter(Algebra::so_star(n), coords)));
                        if (t > 0) {
                            coords[n - 1] = HalfInteger::from_twice(-t);
                            visit(DominantParameter(Parameter(Algebra::so_star(n), coords)));
                        }
                    }
                    return;
                }
                for (std::int64_t t = upper; t >= lowest; t -= 2) {
                    coords[pos] = HalfInteger::from_twice(t);
                    walk(pos + 1, t);
                }
            };
            walk(0, bound.twice() - (bound.twice() - lowest) % 2);
        }
    }
}

namespace detail {

template <typename Items>
inline std::vector<std::string> rendered_set(const Items& items);

template <>
inline std::vector<std::string> rendered_set(const std::vector<SuUnitaryItem>& items) {
    std::vector<std::string> out;
    for (const auto& item : items) out.push_back(item.split.str());
    return out;
}

template <>
inline std::vector<std::string> rendered_set(const std::vector<SoUnitaryItem>& items) {
    std::vector<std::string> out;
    for (const auto& item : items) out.push_back(item.arrangement.str());
    return out;
}

}  // namespace detail

inline ScanReport scan_su(int max_rank, long span, std::size_t limit = 1'000'000) {
    auto started = std::chrono::steady_clock::now();
    ScanReport report{"su", max_rank, HalfInteger(span)};
    for_each_su_dominant(max_rank, span, [&](const DominantParameter& dominant) {
        if (++report.instances_checked > limit)
            throw LimitError("scan exceeds the instance limit");
        std::vector<std::string> diagnostics;
        std::vector<SuUnitaryItem> theorem = classify_su(dominant, &diagnostics);
        std::vector<std::string> oracle;
        for (const BarSplit& split : enumerate_su(dominant, limit))
            if (is_unitary_su(split).unitary) oracle.push_back(split.str());
        std::vector<std::string> produced = detail::rendered_set(theorem);
        if (produced != oracle)
            report.mismatches.push_back(ScanMismatch{dominant.coords(), produced, oracle});
    });
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - started)
                            .count();
    return report;
}

inline ScanReport scan_so(int max_rank, HalfInteger bound, std::size_t limit = 1'000'000) {
    auto started = std::chrono::steady_clock::now();
    ScanReport report{"so*", max_rank, bound};
    for_each_so_dominant(max_rank, bound, [&](const DominantParameter& dominant) {
        if (++report.instances_checked > limit)
            throw LimitError("scan exceeds the instance limit");
        std::vector<std::string> diagnostics;
        std::vector<SoUnitaryItem> theorem = classify_so(dominant, &diagnostics);
        std::vector<std::string> oracle;
        for (const SignedArrangement& arr : enumerate_so(dominant, limit))
            if (is_unitary_so(arr).unitary) oracle.push_back(arr.str());
        std::vector<std::string> produced = detail::rendered_set(theorem);
        if (produced != oracle)
            report.mismatches.push_back(ScanMismatch{dominant.coords(), produced, oracle});
    });
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - started)
                            .count();
    return report;
}

}  // namespace uhw
