#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "uhw/errors.hpp"
#include "uhw/half_integer.hpp"
#include "uhw/parameter.hpp"
#include "uhw/so_unitarity.hpp"
#include "uhw/su_unitarity.hpp"
#include "uhw/weyl_enum.hpp"

namespace uhw {

struct YoungDiagram {
    std::vector<long> rows;  // weakly decreasing, nonnegative, trailing zeros kept

    long box_count() const {
        long total = 0;
        for (long r : rows) total += r;
        return total;
    }

    bool contains(const YoungDiagram& other) const {
        if (rows.size() != other.rows.size()) return false;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (rows[i] < other.rows[i]) return false;
        return true;
    }

    // A hook of size k is the diagram (k, 1, ..., 1) with k unit rows; a
    // diagram is built from hooks when peeling the first row and column
    // repeatedly only ever removes exact hooks.
    bool built_from_hooks() const {
        std::vector<long> work = rows;
        while (true) {
            while (!work.empty() && work.back() == 0) work.pop_back();
            if (work.empty()) return true;
            long k = work[0];
            if (k + 1 != static_cast<long>(work.size())) return false;
            std::vector<long> peeled;
            for (std::size_t i = 1; i < work.size(); ++i)
                if (work[i] - 1 > 0) peeled.push_back(work[i] - 1);
            work = std::move(peeled);
        }
    }

    bool operator==(const YoungDiagram&) const = default;
};

// su flavor: row k of the diagram of w*rho holds (w rho)_k - rho~_k boxes,
// measured against the block swap of rho.
inline YoungDiagram young_of(const BarSplit& w_rho) {
    const int p = w_rho.p(), q = w_rho.q(), n = w_rho.rank();
    if (!is_k_dominant_regular(w_rho))
        throw InvalidArgument("young diagram needs a k-dominant regular arrangement");
    YoungDiagram young;
    young.rows.resize(p);
    for (int k = 0; k < p; ++k) {
        HalfInteger diff = w_rho.left[k] - HalfInteger::from_twice(n - 1 - 2 * (q + k));
        if (!diff.is_integer()) throw InvalidArgument("arrangement is not conjugate to rho");
        young.rows[k] = static_cast<long>(diff.whole());
    }
    for (int k = 0; k < p; ++k) {
        if (young.rows[k] < 0 || young.rows[k] > q ||
            (k > 0 && young.rows[k] > young.rows[k - 1]))
            throw InvalidArgument("arrangement is not conjugate to rho");
    }
    // The multiset must really be rho's.
    std::vector<HalfInteger> sorted = w_rho.flat();
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    for (int k = 0; k < n; ++k)
        if (sorted[k] != HalfInteger::from_twice(n - 1 - 2 * k))
            throw InvalidArgument("arrangement is not conjugate to rho");
    return young;
}

// so* flavor: Lambda = rho - (y_n, ..., y_1).
inline YoungDiagram young_of(const std::vector<HalfInteger>& w_rho) {
    const int n = static_cast<int>(w_rho.size());
    if (!is_strictly_decreasing(w_rho))
        throw InvalidArgument("young diagram needs a k-dominant regular arrangement");
    std::vector<HalfInteger> abs_sorted;
    for (HalfInteger c : w_rho) abs_sorted.push_back(c.abs());
    std::sort(abs_sorted.begin(), abs_sorted.end(), std::greater<>());
    for (int k = 0; k < n; ++k)
        if (abs_sorted[k] != HalfInteger(n - 1 - k))
            throw InvalidArgument("arrangement is not conjugate to rho");
    YoungDiagram young;
    young.rows.resize(n);
    for (int j = 0; j < n; ++j) {
        HalfInteger y = HalfInteger(j) - w_rho[n - 1 - j];
        young.rows[j] = static_cast<long>(y.whole());
    }
    for (int j = 0; j < n; ++j)
        if (young.rows[j] < 0 || young.rows[j] > n - 1 ||
            (j > 0 && young.rows[j] > young.rows[j - 1]))
            throw InvalidArgument("arrangement is not conjugate to rho");
    return young;
}

struct NodeMark {
    enum class Kind { None, TildeRho, Edge, QEdge, PEdge };
    Kind kind = Kind::None;
    int i = 0;  // edge point: i boxes per row; q-edge/p-edge: the q or p
    int j = 0;  // edge point: j rows

    std::string str() const {
        switch (kind) {
            case Kind::None: return "-";
            case Kind::TildeRho: return "tilde";
            case Kind::Edge:
                return "edge(i=" + std::to_string(i) + ",j=" + std::to_string(j) + ")";
            case Kind::QEdge: return "q-edge(" + std::to_string(i) + ")";
            case Kind::PEdge: return "p-edge(" + std::to_string(i) + ")";
        }
        return "-";
    }

    bool operator==(const NodeMark&) const = default;
};

struct HasseNode {
    std::vector<HalfInteger> coords;
    YoungDiagram young;
    bool unitary = false;
    NodeMark mark;

    bool operator==(const HasseNode&) const = default;
};

// Nodes are the k-dominant conjugates of rho in enumeration order; covers
// are the covering relations of Young-diagram containment inside the node
// set, stored as (from, to) pointing toward the Bruhat-larger element, i.e.
// toward rho itself.
struct HasseDiagram {
    Algebra algebra;
    std::vector<HasseNode> nodes;
    std::vector<std::pair<int, int>> covers;

    bool operator==(const HasseDiagram&) const = default;
};

inline void edge_marks(HasseDiagram& diagram) {
    const int n = diagram.algebra.rank();
    for (HasseNode& node : diagram.nodes) {
        node.mark = NodeMark{};
        if (diagram.algebra.is_su()) {
            const auto& rows = node.young.rows;
            int nonzero = 0;
            while (nonzero < static_cast<int>(rows.size()) && rows[nonzero] > 0) ++nonzero;
            bool rectangle = true;
            for (int k = 1; k < nonzero; ++k) rectangle = rectangle && rows[k] == rows[0];
            for (int k = nonzero; k < static_cast<int>(rows.size()); ++k)
                rectangle = rectangle && rows[k] == 0;
            if (nonzero == 0)
                node.mark = NodeMark{NodeMark::Kind::TildeRho, 0, 0};
            else if (rectangle)
                node.mark = NodeMark{NodeMark::Kind::Edge, static_cast<int>(rows[0]), nonzero};
        } else {
            const auto& c = node.coords;
            auto is_descending_from = [&](int start, long top) {
                for (int k = start; k < n; ++k)
                    if (c[k] != HalfInteger(top - (k - start))) return false;
                return true;
            };
            if (is_descending_from(0, 0)) {
                node.mark = NodeMark{NodeMark::Kind::TildeRho, 0, 0};
                continue;
            }
            for (int p = 2; p <= n; ++p) {
                if (c[0] != HalfInteger(p - 1)) continue;
                bool match = true;
                for (int k = 0; k < p; ++k) match = match && c[k] == HalfInteger(p - 1 - k);
                if (match && (p == n || is_descending_from(p, -p)))
                    node.mark = NodeMark{NodeMark::Kind::PEdge, p, 0};
            }
            if (node.mark.kind != NodeMark::Kind::None) continue;
            for (int q = 3; q <= n; ++q) {
                if (c[0] != HalfInteger(q - 1) || n < q) continue;
                bool match = true;
                for (int k = 1; k < q; ++k) match = match && c[k] == HalfInteger(-(k - 1));
                if (match && (q == n || is_descending_from(q, -q)))
                    node.mark = NodeMark{NodeMark::Kind::QEdge, q, 0};
            }
        }
    }
}

inline HasseDiagram build_hasse(const Algebra& algebra) {
    if (algebra.is_su() && algebra.rank() > 12)
        throw LimitError("hasse diagrams are built for p+q <= 12");
    if (algebra.is_so_star() && algebra.rank() > 8)
        throw LimitError("hasse diagrams are built for n <= 8");

    HasseDiagram diagram{algebra, {}, {}};
    DominantParameter rho_dom(rho(algebra));
    if (algebra.is_su()) {
        for (const BarSplit& split : enumerate_su(rho_dom)) {
            HasseNode node;
            node.coords = split.flat();
            node.young = young_of(split);
            node.unitary = is_unitary_su(split).unitary;
            diagram.nodes.push_back(std::move(node));
        }
    } else {
        for (const SignedArrangement& arr : enumerate_so(rho_dom)) {
            HasseNode node;
            node.coords = arr.coords;
            node.young = young_of(arr.coords);
            node.unitary = is_unitary_so(arr.coords).unitary;
            diagram.nodes.push_back(std::move(node));
        }
    }

    const int count = static_cast<int>(diagram.nodes.size());
    for (int a = 0; a < count; ++a) {
        for (int b = 0; b < count; ++b) {
            if (a == b) continue;
            const YoungDiagram& ya = diagram.nodes[a].young;
            const YoungDiagram& yb = diagram.nodes[b].young;
            if (!yb.contains(ya) || ya == yb) continue;
            bool cover = true;
            for (int c = 0; c < count && cover; ++c) {
                if (c == a || c == b) continue;
                const YoungDiagram& yc = diagram.nodes[c].young;
                if (yc.contains(ya) && yb.contains(yc) && yc != ya && yc != yb) cover = false;
            }
            if (!cover) continue;
            // Arrows point toward rho: the full box for su, the empty
            // diagram for so*.
            if (algebra.is_su()) diagram.covers.emplace_back(a, b);
            else diagram.covers.emplace_back(b, a);
        }
    }
    std::sort(diagram.covers.begin(), diagram.covers.end());
    edge_marks(diagram);
    return diagram;
}

inline std::string node_label(const HasseDiagram& diagram, const HasseNode& node) {
    if (diagram.algebra.is_su()) {
        BarSplit split;
        split.left.assign(node.coords.begin(), node.coords.begin() + diagram.algebra.p());
        split.right.assign(node.coords.begin() + diagram.algebra.p(), node.coords.end());
        return split.str();
    }
    return "(" + format_coordinates(node.coords) + ")";
}

// Deterministic DOT text: nodes in enumeration order, covers sorted, each
// edge pointing toward the Bruhat-larger element.
inline std::string to_dot(const HasseDiagram& diagram) {
    std::string out;
    out += "digraph hasse {\n";
    out += "  rankdir=BT;\n";
    out += "  node [shape=box, fontname=\"Courier\"];\n";
    for (std::size_t idx = 0; idx < diagram.nodes.size(); ++idx) {
        const HasseNode& node = diagram.nodes[idx];
        std::string rows;
        for (std::size_t k = 0; k < node.young.rows.size(); ++k) {
            if (k) rows += ',';
            rows += std::to_string(node.young.rows[k]);
        }
        out += "  n" + std::to_string(idx) + " [label=\"" + node_label(diagram, node) +
               "\\nrows: " + rows + "\"";
        if (node.unitary) out += ", style=filled, fillcolor=palegreen";
        out += "];\n";
    }
    for (const auto& [from, to] : diagram.covers)
        out += "  n" + std::to_string(from) + " -> n" + std::to_string(to) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace uhw
