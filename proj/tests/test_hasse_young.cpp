#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "uhw/hasse_young.hpp"

using namespace uhw;

namespace {

std::vector<HalfInteger> ints(std::initializer_list<long long> values) {
    std::vector<HalfInteger> out;
    for (long long v : values) out.push_back(HalfInteger(v));
    return out;
}

int node_index(const HasseDiagram& diagram, const std::vector<HalfInteger>& coords) {
    for (std::size_t i = 0; i < diagram.nodes.size(); ++i)
        if (diagram.nodes[i].coords == coords) return static_cast<int>(i);
    REQUIRE(false);
    return -1;
}

std::set<std::pair<std::string, std::string>> cover_labels(const HasseDiagram& diagram) {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& [from, to] : diagram.covers)
        out.emplace(format_coordinates(diagram.nodes[from].coords),
                    format_coordinates(diagram.nodes[to].coords));
    return out;
}

}  // namespace

TEST_CASE("young diagrams of su conjugates") {
    BarSplit rho_split{ints({2, 1}), ints({0, -1, -2})};
    CHECK(young_of(rho_split).rows == std::vector<long>{3, 3});

    BarSplit tilde{ints({-1, -2}), ints({2, 1, 0})};
    CHECK(young_of(tilde).rows == std::vector<long>{0, 0});
    CHECK(young_of(tilde).box_count() == 0);

    BarSplit mid{ints({2, 0}), ints({1, -1, -2})};
    CHECK(young_of(mid).rows == std::vector<long>{3, 2});

    CHECK_THROWS_AS(young_of(BarSplit{ints({2, 1}), ints({0, -1, -3})}), InvalidArgument);
}

TEST_CASE("young diagrams of so* conjugates") {
    CHECK(young_of(ints({2, 0, -1, -3})).rows == std::vector<long>{3, 2, 2, 1});
    CHECK(young_of(ints({3, 2, 1, 0})).rows == std::vector<long>{0, 0, 0, 0});
    CHECK(young_of(ints({0, -1, -2, -3})).rows == std::vector<long>{3, 3, 3, 3});
    CHECK_THROWS_AS(young_of(ints({4, 1, 0, -2})), InvalidArgument);
}

TEST_CASE("hook structure") {
    CHECK(YoungDiagram{{3, 1, 1, 1}}.built_from_hooks());
    CHECK(YoungDiagram{{3, 2, 2, 1}}.built_from_hooks());
    CHECK(YoungDiagram{{}}.built_from_hooks());
    CHECK_FALSE(YoungDiagram{{2, 2}}.built_from_hooks());
    CHECK_FALSE(YoungDiagram{{3, 1}}.built_from_hooks());
}

TEST_CASE("su(2,3) hasse diagram matches the displayed grid") {
    HasseDiagram diagram = build_hasse(Algebra::su(2, 3));
    REQUIRE(diagram.nodes.size() == 10);
    REQUIRE(diagram.covers.size() == 12);

    std::set<std::pair<std::string, std::string>> expected{
        {"2,0,1,-1,-2", "2,1,0,-1,-2"},  {"2,-1,1,0,-2", "2,0,1,-1,-2"},
        {"2,-2,1,0,-1", "2,-1,1,0,-2"},  {"1,0,2,-1,-2", "2,0,1,-1,-2"},
        {"1,-1,2,0,-2", "2,-1,1,0,-2"},  {"1,-2,2,0,-1", "2,-2,1,0,-1"},
        {"1,-1,2,0,-2", "1,0,2,-1,-2"},  {"1,-2,2,0,-1", "1,-1,2,0,-2"},
        {"0,-1,2,1,-2", "1,-1,2,0,-2"},  {"0,-2,2,1,-1", "1,-2,2,0,-1"},
        {"0,-2,2,1,-1", "0,-1,2,1,-2"},  {"-1,-2,2,1,0", "0,-2,2,1,-1"},
    };
    CHECK(cover_labels(diagram) == expected);

    // each cover adds exactly one box
    for (const auto& [from, to] : diagram.covers)
        CHECK(diagram.nodes[to].young.box_count() ==
              diagram.nodes[from].young.box_count() + 1);

    // the young map is injective on nodes
    std::set<std::vector<long>> shapes;
    for (const auto& node : diagram.nodes) shapes.insert(node.young.rows);
    CHECK(shapes.size() == diagram.nodes.size());

    // unitary nodes are exactly the marked ones
    for (const auto& node : diagram.nodes)
        CHECK(node.unitary == (node.mark.kind != NodeMark::Kind::None));
    CHECK(std::count_if(diagram.nodes.begin(), diagram.nodes.end(),
                        [](const HasseNode& n) { return n.unitary; }) == 7);

    // last column and diagonal markings
    std::map<std::string, NodeMark> marks;
    for (const auto& node : diagram.nodes) marks[format_coordinates(node.coords)] = node.mark;
    CHECK(marks["2,-2,1,0,-1"] == NodeMark{NodeMark::Kind::Edge, 3, 1});
    CHECK(marks["1,-2,2,0,-1"] == NodeMark{NodeMark::Kind::Edge, 2, 1});
    CHECK(marks["0,-2,2,1,-1"] == NodeMark{NodeMark::Kind::Edge, 1, 1});
    CHECK(marks["2,1,0,-1,-2"] == NodeMark{NodeMark::Kind::Edge, 3, 2});
    CHECK(marks["1,0,2,-1,-2"] == NodeMark{NodeMark::Kind::Edge, 2, 2});
    CHECK(marks["0,-1,2,1,-2"] == NodeMark{NodeMark::Kind::Edge, 1, 2});
    CHECK(marks["-1,-2,2,1,0"].kind == NodeMark::Kind::TildeRho);
}

TEST_CASE("so* n=4 hasse diagram matches the displayed grid") {
    HasseDiagram diagram = build_hasse(Algebra::so_star(4));
    REQUIRE(diagram.nodes.size() == 8);
    REQUIRE(diagram.covers.size() == 8);

    std::set<std::pair<std::string, std::string>> expected{
        {"3,2,0,-1", "3,2,1,0"},   {"3,1,0,-2", "3,2,0,-1"},  {"3,0,-1,-2", "3,1,0,-2"},
        {"2,1,0,-3", "3,1,0,-2"},  {"2,0,-1,-3", "3,0,-1,-2"}, {"2,0,-1,-3", "2,1,0,-3"},
        {"1,0,-2,-3", "2,0,-1,-3"}, {"0,-1,-2,-3", "1,0,-2,-3"},
    };
    CHECK(cover_labels(diagram) == expected);

    // every diagram in the node set is built from hooks
    for (const auto& node : diagram.nodes) CHECK(node.young.built_from_hooks());

    // marks: the q-edge, the p-edge, and the bottom point
    std::map<std::string, NodeMark> marks;
    for (const auto& node : diagram.nodes) marks[format_coordinates(node.coords)] = node.mark;
    CHECK(marks["3,0,-1,-2"] == NodeMark{NodeMark::Kind::QEdge, 4, 0});
    CHECK(marks["2,0,-1,-3"] == NodeMark{NodeMark::Kind::QEdge, 3, 0});
    CHECK(marks["3,2,1,0"] == NodeMark{NodeMark::Kind::PEdge, 4, 0});
    CHECK(marks["2,1,0,-3"] == NodeMark{NodeMark::Kind::PEdge, 3, 0});
    CHECK(marks["1,0,-2,-3"] == NodeMark{NodeMark::Kind::PEdge, 2, 0});
    CHECK(marks["0,-1,-2,-3"].kind == NodeMark::Kind::TildeRho);
    CHECK(marks["3,2,0,-1"].kind == NodeMark::Kind::None);
    CHECK(marks["3,1,0,-2"].kind == NodeMark::Kind::None);

    for (const auto& node : diagram.nodes)
        CHECK(node.unitary == (node.mark.kind != NodeMark::Kind::None));
}

TEST_CASE("su(1,1) hasse diagram") {
    HasseDiagram diagram = build_hasse(Algebra::su(1, 1));
    REQUIRE(diagram.nodes.size() == 2);
    REQUIRE(diagram.covers.size() == 1);
    int tilde = node_index(diagram, {half(-1), half(1)});
    int top = node_index(diagram, {half(1), half(-1)});
    CHECK(diagram.covers[0] == std::pair<int, int>{tilde, top});
    CHECK(diagram.nodes[tilde].mark.kind == NodeMark::Kind::TildeRho);
    CHECK(diagram.nodes[top].mark == NodeMark{NodeMark::Kind::Edge, 1, 1});
}

TEST_CASE("marked unitary nodes equal the oracle across small ranks") {
    for (int p = 1; p <= 2; ++p) {
        for (int q = p; p + q <= 6; ++q) {
            HasseDiagram diagram = build_hasse(Algebra::su(p, q));
            long unitary = 0;
            for (const auto& node : diagram.nodes) {
                CHECK(node.unitary == (node.mark.kind != NodeMark::Kind::None));
                unitary += node.unitary;
            }
            // one edge point per rectangle shape, plus the bottom node
            CHECK(unitary == p * q + 1);
        }
    }
    for (int n = 2; n <= 6; ++n) {
        HasseDiagram diagram = build_hasse(Algebra::so_star(n));
        for (const auto& node : diagram.nodes) {
            CHECK(node.unitary == (node.mark.kind != NodeMark::Kind::None));
            CHECK(node.young.built_from_hooks());
        }
    }
}

TEST_CASE("dot output") {
    HasseDiagram tiny = build_hasse(Algebra::su(1, 1));
    std::string dot = to_dot(tiny);
    const char* golden =
        "digraph hasse {\n"
        "  rankdir=BT;\n"
        "  node [shape=box, fontname=\"Courier\"];\n"
        "  n0 [label=\"(1/2 | -1/2)\\nrows: 1\", style=filled, fillcolor=palegreen];\n"
        "  n1 [label=\"(-1/2 | 1/2)\\nrows: 0\", style=filled, fillcolor=palegreen];\n"
        "  n1 -> n0;\n"
        "}\n";
    CHECK(dot == golden);
    CHECK(dot == to_dot(build_hasse(Algebra::su(1, 1))));  // byte-identical

    std::string big = to_dot(build_hasse(Algebra::su(2, 3)));
    std::size_t arrows = 0, pos = 0;
    while ((pos = big.find("->", pos)) != std::string::npos) { ++arrows; pos += 2; }
    CHECK(arrows == 12);

    std::string so4 = to_dot(build_hasse(Algebra::so_star(4)));
    std::size_t nodes = 0;
    pos = 0;
    while ((pos = so4.find("label=", pos)) != std::string::npos) { ++nodes; pos += 6; }
    CHECK(nodes == 8);
}

TEST_CASE("rank caps") {
    CHECK_THROWS_AS(build_hasse(Algebra::so_star(9)), LimitError);
    CHECK_THROWS_AS(build_hasse(Algebra::su(6, 7)), LimitError);
    CHECK_NOTHROW(build_hasse(Algebra::so_star(8)));
}
