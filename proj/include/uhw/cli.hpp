#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uhw/classify.hpp"
#include "uhw/errors.hpp"
#include "uhw/hasse_young.hpp"
#include "uhw/json_io.hpp"

namespace uhw::cli {

inline std::string tag_str(const SuFormTag& tag) {
    if (std::holds_alternative<TildeTag>(tag)) return "tilde";
    if (const auto* s = std::get_if<RegularStringTag>(&tag))
        return "string(s=" + std::to_string(s->s) + ",r=" + std::to_string(s->r) +
               ",a=" + std::to_string(s->a) + ",b=" + std::to_string(s->b) +
               ",c=" + std::to_string(s->c) + ")";
    if (const auto* f = std::get_if<SingularFormTag>(&tag))
        return "singular-form-" + std::to_string(f->form);
    return "oracle";
}

inline std::string render_classification(const ClassificationResult& result, bool explain) {
    std::ostringstream out;
    out << "algebra: " << result.algebra.str() << "\n";
    out << "input: " << format_coordinates(result.input.coords) << "\n";
    out << "dominant: " << format_coordinates(result.dominant.coords()) << "\n";
    out << "integrality: " << str(result.integrality) << "\n";
    out << "conjugates: " << result.conjugate_count << "\n";
    out << "unitary: " << result.unitary_count() << "\n";
    if (result.algebra.is_su()) {
        for (const SuUnitaryItem& item : result.su_items) {
            out << "  " << item.split.str();
            if (explain)
                out << "  p'=" << item.profile.p_prime << " q'=" << item.profile.q_prime << "  "
                    << tag_str(item.tag);
            out << "\n";
        }
    } else {
        for (const SoUnitaryItem& item : result.so_items) {
            out << "  " << item.arrangement.str();
            if (explain)
                out << "  " << item.profile.str() << "  " << item.tag << "  parity="
                    << str(item.parity);
            out << "\n";
        }
    }
    out << "oracle: "
        << (result.theorem_path_used ? (result.oracle_agrees ? "agree" : "MISMATCH") : "only path")
        << "\n";
    if (!result.diagnostics.empty()) {
        out << "diagnostics:\n";
        for (const std::string& note : result.diagnostics) out << "  - " << note << "\n";
    }
    return out.str();
}

inline std::string render_oracle_table(const std::vector<OracleRow>& rows) {
    std::ostringstream out;
    for (const OracleRow& row : rows) {
        if (row.left_size > 0) {
            BarSplit split;
            split.left.assign(row.coords.begin(), row.coords.begin() + row.left_size);
            split.right.assign(row.coords.begin() + row.left_size, row.coords.end());
            out << split.str();
        } else {
            out << "(" << format_coordinates(row.coords) << ")";
        }
        out << "  " << (row.unitary ? "unitary" : "-") << "  " << row.profile << "\n";
    }
    return out.str();
}

inline json oracle_rows_json(const std::vector<OracleRow>& rows) {
    json arr = json::array();
    for (const OracleRow& row : rows)
        arr.push_back(json{{"coordinates", to_json(row.coords)},
                           {"left_size", row.left_size},
                           {"unitary", row.unitary},
                           {"profile", row.profile}});
    return arr;
}

namespace detail {

inline Algebra parse_algebra(const std::vector<std::string>& words, std::size_t& used) {
    if (words.empty()) throw ParseError("missing algebra spec: expected 'su P Q' or 'so* N'");
    auto to_int = [](const std::string& s) {
        try {
            std::size_t pos = 0;
            int value = std::stoi(s, &pos);
            if (pos != s.size()) throw ParseError("bad integer '" + s + "'");
            return value;
        } catch (const std::exception&) {
            throw ParseError("bad integer '" + s + "'");
        }
    };
    if (words[0] == "su") {
        if (words.size() < 3) throw ParseError("usage: su P Q");
        used = 3;
        return Algebra::su(to_int(words[1]), to_int(words[2]));
    }
    if (words[0] == "so*" || words[0] == "so") {
        if (words.size() < 2) throw ParseError("usage: so* N");
        used = 2;
        return Algebra::so_star(to_int(words[1]));
    }
    throw ParseError("unknown algebra '" + words[0] + "': expected 'su' or 'so*'");
}

inline void write_payload(const std::string& payload, const std::string& output_path,
                          std::ostream& out) {
    if (output_path.empty()) {
        out << payload;
        return;
    }
    std::ofstream file(output_path, std::ios::binary);
    if (!file) throw Error("cannot open '" + output_path + "' for writing");
    file << payload;
}

}  // namespace detail

// The whole command surface, testable without a process boundary.
// Exit codes: 0 success, 2 parse/validation error, 3 oracle mismatch.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact classification of unitary highest weight parameters for su(p,q) and so*(2n)"};
    app.require_subcommand(1);

    std::vector<std::string> classify_words, oracle_words, hasse_words;
    std::string format_classify = "text", format_oracle = "text", format_hasse = "dot";
    std::string out_classify, out_oracle, out_hasse, out_scan;
    std::size_t limit = 1'000'000;
    bool no_theorem = false, explain = false;
    std::string scan_family;
    int scan_max_rank = 0;
    std::string scan_span = "6", scan_bound = "6";

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "classify the unitary conjugates of a dominant parameter");
    classify_cmd->add_option("spec", classify_words, "su P Q COORDS | so* N COORDS")->expected(-1);
    classify_cmd->add_option("--format", format_classify)->check(CLI::IsMember({"text", "json"}));
    classify_cmd->add_option("--output", out_classify);
    classify_cmd->add_option("--limit", limit);
    classify_cmd->add_flag("--no-theorem", no_theorem, "oracle path only");
    classify_cmd->add_flag("--explain", explain, "include per-item tags and profiles");

    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "list every conjugate with its unitarity verdict");
    oracle_cmd->add_option("spec", oracle_words, "su P Q COORDS | so* N COORDS")->expected(-1);
    oracle_cmd->add_option("--format", format_oracle)->check(CLI::IsMember({"text", "json"}));
    oracle_cmd->add_option("--output", out_oracle);
    oracle_cmd->add_option("--limit", limit);

    CLI::App* scan_cmd =
        app.add_subcommand("scan", "theorem-vs-oracle agreement over a family of instances");
    scan_cmd->add_option("family", scan_family, "su | so*")->required();
    scan_cmd->add_option("--max-rank", scan_max_rank, "largest p+q (su) or n (so*)")->required();
    scan_cmd->add_option("--span", scan_span, "su: largest coordinate span");
    scan_cmd->add_option("--bound", scan_bound, "so*: largest |coordinate|, e.g. 13/2");
    scan_cmd->add_option("--output", out_scan, "write the JSON report here");
    scan_cmd->add_option("--limit", limit);

    CLI::App* hasse_cmd = app.add_subcommand("hasse", "Hasse diagram of the conjugates of rho");
    hasse_cmd->add_option("spec", hasse_words, "su P Q | so* N")->expected(-1);
    hasse_cmd->add_option("--format", format_hasse)->check(CLI::IsMember({"dot", "json"}));
    hasse_cmd->add_option("--output", out_hasse);

    std::vector<const char*> argv;
    argv.push_back("uhw");
    for (const std::string& arg : args) argv.push_back(arg.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& help) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& parse_error) {
        err << parse_error.what() << "\n";
        return 2;
    }

    try {
        if (classify_cmd->parsed()) {
            std::size_t used = 0;
            Algebra algebra = detail::parse_algebra(classify_words, used);
            if (classify_words.size() != used + 1)
                throw ParseError("classify needs exactly one coordinate list");
            Parameter input(algebra, parse_coordinates(classify_words[used]));
            ClassificationResult result = classify(input, ClassifyOptions{!no_theorem, limit});
            std::string payload = format_classify == "json"
                                      ? to_json(result).dump(2) + "\n"
                                      : render_classification(result, explain);
            detail::write_payload(payload, out_classify, out);
            return result.oracle_agrees ? 0 : 3;
        }
        if (oracle_cmd->parsed()) {
            std::size_t used = 0;
            Algebra algebra = detail::parse_algebra(oracle_words, used);
            if (oracle_words.size() != used + 1)
                throw ParseError("oracle needs exactly one coordinate list");
            Parameter input(algebra, parse_coordinates(oracle_words[used]));
            std::vector<OracleRow> rows = oracle_table(input, limit);
            std::string payload = format_oracle == "json" ? oracle_rows_json(rows).dump(2) + "\n"
                                                          : render_oracle_table(rows);
            detail::write_payload(payload, out_oracle, out);
            return 0;
        }
        if (scan_cmd->parsed()) {
            ScanReport report;
            if (scan_family == "su") {
                HalfInteger span = HalfInteger::parse(scan_span);
                if (!span.is_integer()) throw ParseError("--span must be an integer");
                report = scan_su(scan_max_rank, span.whole(), limit);
            } else if (scan_family == "so*" || scan_family == "so") {
                report = scan_so(scan_max_rank, HalfInteger::parse(scan_bound), limit);
            } else {
                throw ParseError("unknown scan family '" + scan_family + "'");
            }
            std::string payload = to_json(report).dump(2) + "\n";
            if (!out_scan.empty()) {
                detail::write_payload(payload, out_scan, out);
                out << "checked " << report.instances_checked << " instances, "
                    << report.mismatches.size() << " mismatches (" << report.elapsed_ms
                    << " ms); report written to " << out_scan << "\n";
            } else {
                out << payload;
            }
            return report.mismatches.empty() ? 0 : 3;
        }
        if (hasse_cmd->parsed()) {
            std::size_t used = 0;
            Algebra algebra = detail::parse_algebra(hasse_words, used);
            if (hasse_words.size() != used) throw ParseError("hasse takes only the algebra spec");
            HasseDiagram diagram = build_hasse(algebra);
            std::string payload =
                format_hasse == "json" ? to_json(diagram).dump(2) + "\n" : to_dot(diagram);
            detail::write_payload(payload, out_hasse, out);
            return 0;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotIntegralError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const LimitError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace uhw::cli
