// tropitac/cli.hpp - command-line front end
#pragma once

#include "corpus.hpp"
#include "io.hpp"
#include "svg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

namespace tropitac::cli {

using io::json;
using lattice::Int;

enum class Exit { Ok = 0, VerificationFailed = 1, InputError = 2 };

struct RunConfig {
    std::string command;
    std::string input_path, output_path, case_id, format;
    std::optional<std::uint64_t> seed;
};

namespace detail {

inline std::string read_file(const std::string& path) {
    if (path.empty()) throw io::InputError("--input is required");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io::InputError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline void require_format(const std::string& f, std::initializer_list<const char*> allowed, const std::string& cmd) {
    for (const char* a : allowed)
        if (f == a) return;
    throw io::InputError("format " + f + " is not available for " + cmd);
}

// "D3(3;1,1,1)", "D4par(2;1,1)", "D4np(2;1,1,1,1)"
struct ClassLabel {
    int m = 3, interior = 0;
    std::vector<Int> lengths;
    lattice::ParallelFilter filter = lattice::ParallelFilter::Any;
};

inline ClassLabel parse_label(const std::string& s) {
    static const std::regex re(R"(D([3-6])(par|np)?\((\d+);(\d+(?:,\d+)*)\))");
    std::smatch m;
    if (!std::regex_match(s, m, re))
        throw io::InputError("class label '" + s + "' is not of the form D3(3;1,1,1), D4par(2;1,1) or D4np(2;1,1,1,1)");
    ClassLabel c;
    c.m = std::stoi(m[1]);
    c.interior = std::stoi(m[3]);
    std::stringstream ls(m[4]);
    for (std::string t; std::getline(ls, t, ',');) c.lengths.push_back(std::stoll(t));
    if (m[2] == "par") {
        if (c.m % 2) throw io::InputError("a parallel polygon has an even number of edges");
        if (static_cast<int>(c.lengths.size()) != c.m / 2) throw io::InputError("parallel labels list m/2 lengths");
        auto half = c.lengths;
        c.lengths.insert(c.lengths.end(), half.begin(), half.end());
        c.filter = lattice::ParallelFilter::Parallel;
    } else if (m[2] == "np") {
        c.filter = lattice::ParallelFilter::NonParallel;
    }
    if (static_cast<int>(c.lengths.size()) != c.m) throw io::InputError("label lists the wrong number of edge lengths");
    return c;
}

inline std::string analysis_text(const json& r) {
    std::ostringstream o;
    std::string why = r["reason"].get<std::string>();
    o << "verdict: " << r["verdict"].get<std::string>() << (why.empty() ? "" : " (" + why + ")") << "\n";
    o << "case: " << (r["case"].is_null() ? std::string("none") : r["case"].get<std::string>()) << "\n";
    o << "regime: " << r["gate"]["regime"].get<std::string>() << "\n";
    o << "lattice points: " << r["gate"]["lattice_points"] << ", rank: " << r["rank"] << ", rkexp: " << r["rkexp"]
      << ", d: " << r["d"] << "\n";
    o << "cells: " << r["subdivision"]["cells"].size() << ", curve vertices: " << r["curve"]["vertices"].size()
      << ", bounded edges: " << r["curve"]["edges"].size() << ", rays: " << r["curve"]["rays"].size() << "\n";
    o << "duality: " << (r["duality"]["pass"].get<bool>() ? "pass" : "fail " + r["duality"]["message"].get<std::string>())
      << "\n";
    return o.str();
}

inline bool is_algebra_case(const std::string& id) {
    const auto& ids = algebra::verify_case_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

inline bool is_edge_case(const std::string& id) {
    const auto& ids = refine::edge_catalog_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

inline json verify_one(const std::string& id, bool with_transcript) {
    if (is_algebra_case(id)) {
        json j = io::to_json(algebra::verify_case(id));
        const auto& r = algebra::replay_case_ids();
        if (with_transcript && std::find(r.begin(), r.end(), id) != r.end())
            j["transcript"] = io::to_json(algebra::replay_elimination(id));
        return j;
    }
    if (is_edge_case(id)) return io::to_json(refine::edge_1tacnodal_check(id));
    throw io::InputError("unknown case id '" + id + "'");
}

}  // namespace detail

inline Exit cmd_analyze(const RunConfig& c, std::string& out) {
    auto r = io::analysis_report(io::polynomial_from_json(io::parse_text(detail::read_file(c.input_path))));
    std::string f = c.format.empty() ? "json" : c.format;
    detail::require_format(f, {"json", "text"}, "analyze");
    out = f == "json" ? detail::dump(r) : detail::analysis_text(r);
    return Exit::Ok;
}

inline Exit cmd_verify(const RunConfig& c, std::string& out) {
    std::string f = c.format.empty() ? "json" : c.format;
    detail::require_format(f, {"json", "text"}, "verify");
    if (c.case_id.empty()) throw io::InputError("verify needs a case id or \"all\"");
    if (c.case_id == "PATTERN") {
        auto [phi, spec] = io::pattern_from_json(io::parse_text(detail::read_file(c.input_path)));
        refine::PatternVerdict v;
        try {
            v = refine::deformation_pattern_check(phi, spec);
        } catch (const std::invalid_argument& e) {
            throw io::InputError(e.what());
        }
        json j = io::to_json(v);
        out = f == "json" ? detail::dump(j) : std::string(v.pass ? "PASS" : "FAIL") + " PATTERN " + v.failed + "\n";
        return v.pass ? Exit::Ok : Exit::VerificationFailed;
    }
    if (c.case_id != "all") {
        json j = detail::verify_one(c.case_id, true);
        bool ok = j["passed"].get<bool>();
        out = f == "json" ? detail::dump(j)
                          : std::string(ok ? "PASS " : "FAIL ") + c.case_id + " " + j["verdict"].get<std::string>() + "\n";
        return ok ? Exit::Ok : Exit::VerificationFailed;
    }
    std::vector<std::string> ids = algebra::verify_case_ids();
    for (const auto& id : refine::edge_catalog_ids()) ids.push_back(id);
    json cases = json::array();
    int failed = 0;
    std::ostringstream t;
    for (const auto& id : ids) {
        json j = detail::verify_one(id, false);
        bool ok = j["passed"].get<bool>();
        failed += !ok;
        char line[96];
        std::snprintf(line, sizeof line, "%-4s %-11s %s\n", ok ? "PASS" : "FAIL", id.c_str(),
                      j["verdict"].get<std::string>().c_str());
        t << line;
        cases.push_back(std::move(j));
    }
    t << ids.size() - failed << "/" << ids.size() << " passed\n";
    json all = {{"cases", cases}, {"passed", static_cast<int>(ids.size()) - failed}, {"failed", failed}};
    out = f == "json" ? detail::dump(all) : t.str();
    return failed ? Exit::VerificationFailed : Exit::Ok;
}

inline Exit cmd_enumerate(const RunConfig& c, std::string& out) {
    std::string f = c.format.empty() ? "json" : c.format;
    detail::require_format(f, {"json", "text"}, "enumerate");
    if (c.case_id.empty()) {
        if (!c.seed) throw io::InputError("enumerate needs --case LABEL or --seed N");
        json a = json::array();
        for (const auto& F : corpus::random_corpus(*c.seed, 500)) a.push_back(io::to_json(F));
        out = detail::dump(a);
        return Exit::Ok;
    }
    auto L = detail::parse_label(c.case_id);
    std::vector<lattice::LatticePolytope> found;
    try {
        found = lattice::enumerate_class(L.m, L.interior, L.lengths, L.filter);
    } catch (const std::invalid_argument& e) {
        throw io::InputError(e.what());
    }
    json a = json::array();
    std::ostringstream t;
    t << c.case_id << ": " << found.size() << " class(es)\n";
    for (const auto& P : found) {
        a.push_back(io::to_json(P));
        std::string name;
        if (auto tag = lattice::catalog_match(P)) name = " " + tag->name;
        t << "  " << io::to_json(P)["vertices"].dump() << name << "\n";
    }
    out = f == "json" ? detail::dump(a) : t.str();
    return Exit::Ok;
}

inline Exit cmd_render(const RunConfig& c, std::string& out) {
    auto F = io::polynomial_from_json(io::parse_text(detail::read_file(c.input_path)));
    std::string f = c.format.empty() ? "svg" : c.format;
    auto S = tropical::dual_subdivision(F);
    auto C = tropical::tropical_curve(S);
    if (f == "svg")
        out = svg::render(C, S);
    else if (f == "json")
        out = detail::dump({{"subdivision", io::to_json(S)}, {"curve", io::to_json(C)}});
    else
        out = detail::analysis_text(io::analysis_report(F));
    return Exit::Ok;
}

// args excludes the program name. Output goes to --output when given, else to out.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"tropical 1-tacnodal curve analysis"};
    app.require_subcommand(1, 1);
    RunConfig c;
    std::uint64_t seed = 0;
    auto common = [&](CLI::App* s) {
        s->add_option("--input", c.input_path, "input JSON file");
        s->add_option("--output", c.output_path, "write the result here instead of stdout");
        s->add_option("--format", c.format, "json, svg or text")->check(CLI::IsMember({"json", "svg", "text"}));
    };
    auto* analyze = app.add_subcommand("analyze", "subdivision, curve, rank, census and verdict of a tropical polynomial");
    auto* verify = app.add_subcommand("verify", "run a verification case, or all of them");
    auto* enumerate = app.add_subcommand("enumerate", "enumerate polygon classes, or emit a random input corpus");
    auto* render = app.add_subcommand("render", "draw the curve and its dual subdivision");
    for (auto* s : {analyze, verify, enumerate, render}) common(s);
    verify->add_option("--case,case", c.case_id, "case id or \"all\"");
    enumerate->add_option("--case", c.case_id, "class label such as D3(3;1,1,1)");
    auto* seed_opt = enumerate->add_option("--seed", seed, "seed for the random corpus");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(Exit::InputError);
    }
    if (*seed_opt) c.seed = seed;
    c.command = app.get_subcommands().front()->get_name();

    std::string result;
    Exit code;
    try {
        if (c.command == "analyze")
            code = cmd_analyze(c, result);
        else if (c.command == "verify")
            code = cmd_verify(c, result);
        else if (c.command == "enumerate")
            code = cmd_enumerate(c, result);
        else
            code = cmd_render(c, result);
    } catch (const std::invalid_argument& e) {  // InputError, ParseError, DegenerateError
        err << "error: " << e.what() << "\n";
        return static_cast<int>(Exit::InputError);
    }
    if (c.output_path.empty()) {
        out << result;
    } else {
        std::ofstream f(c.output_path, std::ios::binary);
        if (!f) {
            err << "error: cannot write " << c.output_path << "\n";
            return static_cast<int>(Exit::InputError);
        }
        f << result;
    }
    return static_cast<int>(code);
}

}  // namespace tropitac::cli
