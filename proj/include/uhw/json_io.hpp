#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "uhw/classify.hpp"
#include "uhw/errors.hpp"
#include "uhw/half_integer.hpp"
#include "uhw/hasse_young.hpp"
#include "uhw/parameter.hpp"

// JSON mirrors of the public value types. Coordinates are serialized as
// "k" / "k/2" strings so no float representation ever appears; identical
// values render to byte-identical payloads.

namespace uhw {

using json = nlohmann::json;

inline json to_json(const std::vector<HalfInteger>& coords) {
    json arr = json::array();
    for (HalfInteger c : coords) arr.push_back(c.str());
    return arr;
}

inline std::vector<HalfInteger> coords_from_json(const json& arr) {
    if (!arr.is_array()) throw ParseError("expected a coordinate array");
    std::vector<HalfInteger> coords;
    for (const auto& item : arr) coords.push_back(HalfInteger::parse(item.get<std::string>()));
    return coords;
}

inline json to_json(const Algebra& algebra) {
    if (algebra.is_su()) return json{{"type", "su"}, {"p", algebra.p()}, {"q", algebra.q()}};
    return json{{"type", "so*"}, {"n", algebra.rank()}};
}

inline Algebra algebra_from_json(const json& j) {
    std::string type = j.at("type").get<std::string>();
    if (type == "su") return Algebra::su(j.at("p").get<int>(), j.at("q").get<int>());
    if (type == "so*") return Algebra::so_star(j.at("n").get<int>());
    throw ParseError("unknown algebra type '" + type + "'");
}

inline json to_json(const SuFormTag& tag) {
    if (std::holds_alternative<TildeTag>(tag)) return json{{"kind", "tilde"}};
    if (const auto* s = std::get_if<RegularStringTag>(&tag))
        return json{{"kind", "string"}, {"s", s->s}, {"r", s->r},
                    {"a", s->a}, {"b", s->b}, {"c", s->c}};
    if (const auto* f = std::get_if<SingularFormTag>(&tag))
        return json{{"kind", "singular"}, {"form", f->form}};
    return json{{"kind", "oracle"}};
}

inline SuFormTag su_tag_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "tilde") return TildeTag{};
    if (kind == "string")
        return RegularStringTag{j.at("s").get<int>(), j.at("r").get<int>(), j.at("a").get<int>(),
                                j.at("b").get<int>(), j.at("c").get<int>()};
    if (kind == "singular") return SingularFormTag{j.at("form").get<int>()};
    if (kind == "oracle") return OracleTag{};
    throw ParseError("unknown su tag kind '" + kind + "'");
}

inline json to_json(const SuUnitaryItem& item) {
    return json{{"left", to_json(item.split.left)},
                {"right", to_json(item.split.right)},
                {"p_prime", item.profile.p_prime},
                {"q_prime", item.profile.q_prime},
                {"tag", to_json(item.tag)}};
}

inline SuUnitaryItem su_item_from_json(const json& j) {
    SuUnitaryItem item;
    item.split.left = coords_from_json(j.at("left"));
    item.split.right = coords_from_json(j.at("right"));
    item.profile = StringProfile{j.at("p_prime").get<int>(), j.at("q_prime").get<int>()};
    item.tag = su_tag_from_json(j.at("tag"));
    return item;
}

inline json to_json(const SoUnitaryItem& item) {
    return json{{"coordinates", to_json(item.arrangement.coords)},
                {"flips", item.arrangement.flips},
                {"case", item.profile.is_p() ? "p" : "q"},
                {"case_size", item.profile.size},
                {"tag", item.tag},
                {"parity", str(item.parity)}};
}

inline SoUnitaryItem so_item_from_json(const json& j) {
    SoUnitaryItem item;
    item.arrangement.coords = coords_from_json(j.at("coordinates"));
    item.arrangement.flips = j.at("flips").get<int>();
    item.profile.kind =
        j.at("case").get<std::string>() == "p" ? CaseProfile::Kind::P : CaseProfile::Kind::Q;
    item.profile.size = j.at("case_size").get<int>();
    item.tag = j.at("tag").get<std::string>();
    item.parity = j.at("parity").get<std::string>() == "zero" ? ParityAdmission::ZeroAbsorbed
                                                              : ParityAdmission::EvenFlips;
    return item;
}

inline json to_json(const ClassificationResult& result) {
    json items = json::array();
    if (result.algebra.is_su())
        for (const auto& item : result.su_items) items.push_back(to_json(item));
    else
        for (const auto& item : result.so_items) items.push_back(to_json(item));
    return json{{"algebra", to_json(result.algebra)},
                {"input", to_json(result.input.coords)},
                {"dominant", to_json(result.dominant.coords())},
                {"normalized", result.normalized},
                {"integrality", str(result.integrality)},
                {"conjugate_count", result.conjugate_count},
                {"unitary_count", result.unitary_count()},
                {"items", items},
                {"theorem_path_used", result.theorem_path_used},
                {"oracle_agrees", result.oracle_agrees},
                {"diagnostics", result.diagnostics}};
}

inline ClassificationResult classification_from_json(const json& j) {
    Algebra algebra = algebra_from_json(j.at("algebra"));
    Parameter input(algebra, coords_from_json(j.at("input")));
    ClassificationResult result{algebra, input,
                                DominantParameter(Parameter(algebra, coords_from_json(j.at("dominant"))))};
    result.normalized = j.at("normalized").get<bool>();
    result.integrality = j.at("integrality").get<std::string>() == "half-odd"
                             ? IntegralityClass::HalfOdd
                             : IntegralityClass::Integer;
    result.conjugate_count = j.at("conjugate_count").get<std::size_t>();
    for (const auto& item : j.at("items")) {
        if (algebra.is_su()) result.su_items.push_back(su_item_from_json(item));
        else result.so_items.push_back(so_item_from_json(item));
    }
    result.theorem_path_used = j.at("theorem_path_used").get<bool>();
    result.oracle_agrees = j.at("oracle_agrees").get<bool>();
    result.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
    return result;
}

inline json to_json(const NodeMark& mark) {
    switch (mark.kind) {
        case NodeMark::Kind::None: return json{{"kind", "none"}};
        case NodeMark::Kind::TildeRho: return json{{"kind", "tilde"}};
        case NodeMark::Kind::Edge: return json{{"kind", "edge"}, {"i", mark.i}, {"j", mark.j}};
        case NodeMark::Kind::QEdge: return json{{"kind", "q-edge"}, {"q", mark.i}};
        case NodeMark::Kind::PEdge: return json{{"kind", "p-edge"}, {"p", mark.i}};
    }
    return json{{"kind", "none"}};
}

inline NodeMark mark_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "none") return NodeMark{};
    if (kind == "tilde") return NodeMark{NodeMark::Kind::TildeRho, 0, 0};
    if (kind == "edge")
        return NodeMark{NodeMark::Kind::Edge, j.at("i").get<int>(), j.at("j").get<int>()};
    if (kind == "q-edge") return NodeMark{NodeMark::Kind::QEdge, j.at("q").get<int>(), 0};
    if (kind == "p-edge") return NodeMark{NodeMark::Kind::PEdge, j.at("p").get<int>(), 0};
    throw ParseError("unknown mark kind '" + kind + "'");
}

inline json to_json(const HasseDiagram& diagram) {
    json nodes = json::array();
    for (const HasseNode& node : diagram.nodes)
        nodes.push_back(json{{"coordinates", to_json(node.coords)},
                             {"young", node.young.rows},
                             {"unitary", node.unitary},
                             {"mark", to_json(node.mark)}});
    json covers = json::array();
    for (const auto& [from, to] : diagram.covers) covers.push_back(json::array({from, to}));
    return json{{"algebra", to_json(diagram.algebra)}, {"nodes", nodes}, {"covers", covers}};
}

inline HasseDiagram hasse_from_json(const json& j) {
    HasseDiagram diagram{algebra_from_json(j.at("algebra")), {}, {}};
    for (const auto& node_json : j.at("nodes")) {
        HasseNode node;
        node.coords = coords_from_json(node_json.at("coordinates"));
        node.young.rows = node_json.at("young").get<std::vector<long>>();
        node.unitary = node_json.at("unitary").get<bool>();
        node.mark = mark_from_json(node_json.at("mark"));
        diagram.nodes.push_back(std::move(node));
    }
    for (const auto& cover : j.at("covers"))
        diagram.covers.emplace_back(cover.at(0).get<int>(), cover.at(1).get<int>());
    return diagram;
}

inline json to_json(const ScanReport& report) {
    json mismatches = json::array();
    for (const ScanMismatch& m : report.mismatches)
        mismatches.push_back(json{{"dominant", to_json(m.dominant)},
                                  {"theorem", m.theorem_set},
                                  {"oracle", m.oracle_set}});
    return json{{"family", report.family},
                {"max_rank", report.max_rank},
                {"bound", report.bound.str()},
                {"instances_checked", report.instances_checked},
                {"mismatches", mismatches},
                {"elapsed_ms", report.elapsed_ms}};
}

inline ScanReport scan_report_from_json(const json& j) {
    ScanReport report;
    report.family = j.at("family").get<std::string>();
    report.max_rank = j.at("max_rank").get<int>();
    report.bound = HalfInteger::parse(j.at("bound").get<std::string>());
    report.instances_checked = j.at("instances_checked").get<std::size_t>();
    for (const auto& m : j.at("mismatches"))
        report.mismatches.push_back(ScanMismatch{coords_from_json(m.at("dominant")),
                                                 m.at("theorem").get<std::vector<std::string>>(),
                                                 m.at("oracle").get<std::vector<std::string>>()});
    report.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    return report;
}

}  // namespace uhw
