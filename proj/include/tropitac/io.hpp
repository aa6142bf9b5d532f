// tropitac/io.hpp - JSON input and report serialization
#pragma once

#include "cases.hpp"
#include "classify.hpp"
#include "refine.hpp"
#include "tropical.hpp"

#include <json.hpp>

#include <string>

namespace tropitac::io {

using json = nlohmann::json;
using lattice::Int;
using lattice::LatticePoint;
using lattice::LatticePolytope;
using tropical::DualSubdivision;
using tropical::TropicalPolynomial;

// Raised for malformed input; the message names the offending field.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

namespace detail {

inline Int get_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw InputError(where + ": expected an integer");
    return j.get<Int>();
}

inline Rational get_rational(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<Int>());
    if (!j.is_string()) throw InputError(where + ": expected an exact rational string such as \"-3/2\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
        throw InputError(where + ": " + e.what());
    }
}

inline LatticePoint get_point(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) throw InputError(where + ": expected [i, j]");
    return {get_int(j[0], where + "[0]"), get_int(j[1], where + "[1]")};
}

inline const json& field(const json& j, const char* name, const std::string& where) {
    if (!j.is_object()) throw InputError(where + ": expected an object");
    auto it = j.find(name);
    if (it == j.end()) throw InputError(where + ": missing field \"" + name + "\"");
    return *it;
}

}  // namespace detail

// ---- values ------------------------------------------------------------------------

inline json to_json(LatticePoint p) { return json::array({p.i, p.j}); }
inline json to_json(const Rational& q) { return to_string(q); }
inline json to_json(const tropical::RPoint& p) { return json::array({to_string(p.x), to_string(p.y)}); }

inline json points_json(const std::vector<LatticePoint>& pts) {
    json a = json::array();
    for (const auto& p : pts) a.push_back(to_json(p));
    return a;
}

inline json to_json(const LatticePolytope& P) { return {{"vertices", points_json(P.vertices())}}; }

inline LatticePolytope polytope_from_json(const json& j, const std::string& where = "polytope") {
    const json& vs = detail::field(j, "vertices", where);
    if (!vs.is_array()) throw InputError(where + ".vertices: expected an array");
    std::vector<LatticePoint> pts;
    for (std::size_t k = 0; k < vs.size(); ++k)
        pts.push_back(detail::get_point(vs[k], where + ".vertices[" + std::to_string(k) + "]"));
    try {
        return LatticePolytope::from_vertices(pts);
    } catch (const std::invalid_argument& e) {
        throw InputError(where + ".vertices: " + e.what());
    }
}

inline json to_json(const TropicalPolynomial& F) {
    json a = json::array();
    for (const auto& [p, v] : F.val) a.push_back({{"i", p.i}, {"j", p.j}, {"val", to_string(v)}});
    return {{"support", a}};
}

inline TropicalPolynomial polynomial_from_json(const json& j) {
    const json& s = detail::field(j, "support", "input");
    if (!s.is_array()) throw InputError("support: expected an array");
    std::map<LatticePoint, Rational> v;
    for (std::size_t k = 0; k < s.size(); ++k) {
        std::string w = "support[" + std::to_string(k) + "]";
        LatticePoint p{detail::get_int(detail::field(s[k], "i", w), w + ".i"),
                       detail::get_int(detail::field(s[k], "j", w), w + ".j")};
        Rational q = detail::get_rational(detail::field(s[k], "val", w), w + ".val");
        if (!v.emplace(p, q).second)
            throw InputError(w + ": duplicate exponent (" + std::to_string(p.i) + ", " + std::to_string(p.j) + ")");
    }
    if (v.size() < 3) throw InputError("support: need at least three exponents");
    try {
        return TropicalPolynomial::make(std::move(v));
    } catch (const DegenerateError&) {
        throw InputError("support: exponents are collinear, the Newton polygon is degenerate");
    }
}

// ---- subdivision and curve ---------------------------------------------------------

inline json to_json(const tropical::Affine& a) {
    return {{"gi", to_string(a.gi)}, {"gj", to_string(a.gj)}, {"c", to_string(a.c)}};
}

inline json to_json(const DualSubdivision& S) {
    json cells = json::array();
    for (const auto& c : S.cells)
        cells.push_back({{"vertices", points_json(c.polytope.vertices())},
                         {"lifted", points_json(c.lifted)},
                         {"lift", to_json(c.lift)}});
    json edges = json::array();
    for (const auto& e : S.edges)
        edges.push_back({{"a", to_json(e.a)}, {"b", to_json(e.b)}, {"left", e.left}, {"right", e.right},
                         {"length", e.length()}});
    json nu = json::array();
    for (const auto& [p, v] : S.nu) nu.push_back({{"i", p.i}, {"j", p.j}, {"val", to_string(v)}});
    return {{"newton", to_json(S.newton)},
            {"cells", cells},
            {"edges", edges},
            {"vertices", points_json({S.vertices.begin(), S.vertices.end()})},
            {"nu", nu}};
}

inline DualSubdivision subdivision_from_json(const json& j) {
    DualSubdivision S;
    S.newton = polytope_from_json(detail::field(j, "newton", "subdivision"), "newton");
    const json& cells = detail::field(j, "cells", "subdivision");
    for (std::size_t k = 0; k < cells.size(); ++k) {
        std::string w = "cells[" + std::to_string(k) + "]";
        tropical::Cell c;
        c.polytope = polytope_from_json(cells[k], w);
        for (const auto& p : detail::field(cells[k], "lifted", w)) c.lifted.push_back(detail::get_point(p, w + ".lifted"));
        const json& l = detail::field(cells[k], "lift", w);
        c.lift = {detail::get_rational(detail::field(l, "gi", w), w + ".lift.gi"),
                  detail::get_rational(detail::field(l, "gj", w), w + ".lift.gj"),
                  detail::get_rational(detail::field(l, "c", w), w + ".lift.c")};
        S.cells.push_back(std::move(c));
    }
    const json& edges = detail::field(j, "edges", "subdivision");
    for (std::size_t k = 0; k < edges.size(); ++k) {
        std::string w = "edges[" + std::to_string(k) + "]";
        tropical::SubEdge e;
        e.a = detail::get_point(detail::field(edges[k], "a", w), w + ".a");
        e.b = detail::get_point(detail::field(edges[k], "b", w), w + ".b");
        e.left = static_cast<int>(detail::get_int(detail::field(edges[k], "left", w), w + ".left"));
        e.right = static_cast<int>(detail::get_int(detail::field(edges[k], "right", w), w + ".right"));
        int n = static_cast<int>(S.cells.size());
        if (e.left < 0 || e.left >= n || e.right < -1 || e.right >= n) throw InputError(w + ": cell index out of range");
        S.edges.push_back(e);
    }
    for (const auto& p : detail::field(j, "vertices", "subdivision")) S.vertices.insert(detail::get_point(p, "vertices"));
    const json& nu = detail::field(j, "nu", "subdivision");
    for (std::size_t k = 0; k < nu.size(); ++k) {
        std::string w = "nu[" + std::to_string(k) + "]";
        S.nu[{detail::get_int(detail::field(nu[k], "i", w), w + ".i"), detail::get_int(detail::field(nu[k], "j", w), w + ".j")}] =
            detail::get_rational(detail::field(nu[k], "val", w), w + ".val");
    }
    return S;
}

inline json to_json(const tropical::TropicalCurve& C) {
    json vs = json::array(), es = json::array(), rs = json::array();
    for (const auto& v : C.vertices) vs.push_back(to_json(v));
    for (const auto& e : C.bounded_edges)
        es.push_back({{"from", e.from}, {"to", e.to}, {"weight", e.weight}, {"dual", e.dual}});
    for (const auto& r : C.rays)
        rs.push_back({{"from", r.from}, {"direction", to_json(r.direction)}, {"weight", r.weight}, {"dual", r.dual}});
    return {{"vertices", vs}, {"edges", es}, {"rays", rs}};
}

inline json to_json(const tropical::SubdivisionCensus& c) {
    json N = json::object(), P = json::object();
    for (const auto& [l, n] : c.N) N[std::to_string(l)] = n;
    for (const auto& [m, n] : c.Npar) P[std::to_string(m)] = n;
    return {{"polygons", N},     {"parallel", P},           {"script_N", c.script_N},
            {"rk", c.rk},        {"rkexp", c.rkexp},        {"d", c.d},
            {"lattice_points", c.lattice_points},           {"boundary_defect", c.boundary_defect},
            {"is_TP", c.is_TP}};
}

// ---- classification ----------------------------------------------------------------

inline json to_json(const classify::TacnodalFeature& f) {
    return {{"kind", f.kind}, {"cells", f.cells}, {"shared_edges", f.shared_edges}};
}

inline std::string verdict_string(const classify::Classification& c) {
    if (c.verdict == classify::Verdict::TropicalOneTacnodal) return "TropicalOneTacnodal(" + c.feature->kind + ")";
    return "NotTacnodal";
}

inline json case_json(const std::optional<char>& t) { return t ? json(std::string(1, *t)) : json(nullptr); }

inline json to_json(const classify::Classification& c) {
    json alt = json::array();
    for (const auto& a : c.alternates) alt.push_back(to_json(a));
    return {{"verdict", verdict_string(c)},
            {"feature", c.feature ? to_json(*c.feature) : json(nullptr)},
            {"alternates", alt},
            {"reason", c.reason},
            {"census", to_json(c.census)},
            {"case", case_json(c.case_tag)}};
}

inline json to_json(const classify::CensusReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"holds", c.holds}});
    return {{"case", case_json(r.case_tag)},
            {"rank_condition", r.rank_condition},
            {"checks", checks},
            {"consistent", r.consistent()}};
}

// Everything analyze reports about one tropical polynomial.
inline json analysis_report(const TropicalPolynomial& F) {
    auto S = tropical::dual_subdivision(F);
    auto C = tropical::tropical_curve(S);
    auto gate = classify::theorem_gate(S);
    auto cls = gate.classification ? *gate.classification : classify::classify(S);
    auto duality = tropical::verify_duality(C, S);
    json r = to_json(cls);
    r["input"] = to_json(F)["support"];
    r["subdivision"] = to_json(S);
    r["curve"] = to_json(C);
    r["rank"] = cls.census.rk;
    r["rkexp"] = cls.census.rkexp;
    r["d"] = cls.census.d;
    r["gate"] = {{"lattice_points", gate.lattice_points},
                 {"rank", gate.rank},
                 {"in_range", gate.in_range},
                 {"regime", classify::to_string(gate.regime)},
                 {"assumption", gate.assumption}};
    r["census_consistency"] = to_json(classify::census_consistency(S));
    r["duality"] = {{"pass", duality.pass}, {"failed_check", duality.failed_check}, {"message", duality.message}};
    return r;
}

// ---- verification ------------------------------------------------------------------

inline json witness_json(const std::vector<std::pair<std::string, std::string>>& w) {
    json a = json::array();
    for (const auto& [k, v] : w) a.push_back({{"name", k}, {"value", v}});
    return a;
}

inline json to_json(const algebra::CaseVerdict& v) {
    return {{"case", v.case_id}, {"verdict", v.verdict}, {"passed", v.passed},  {"ring", v.ring},
            {"witness", witness_json(v.witness)},        {"notes", v.notes}};
}

inline json to_json(const refine::EdgeVerdict& v) {
    return {{"case", v.id},       {"verdict", v.verdict},
            {"passed", v.passed}, {"external_lemma_replication", v.external},
            {"witness", witness_json(v.witness)}, {"notes", v.notes}};
}

inline json to_json(const algebra::EliminationTranscript& t) {
    auto system = [](const std::vector<algebra::NamedPoly>& s) {
        json a = json::array();
        for (const auto& e : s) a.push_back({{"name", e.name}, {"poly", e.poly.str()}});
        return a;
    };
    json steps = json::array();
    for (const auto& s : t.steps) steps.push_back({{"action", s.action}, {"system", system(s.system)}});
    json solved = json::array();
    for (const auto& s : t.solved)
        solved.push_back({{"var", s.var}, {"power", s.power}, {"from", s.from}, {"numerator", s.numerator.str()},
                          {"denominator", s.denominator.str()}});
    json checks = json::array();
    for (const auto& c : t.checks)
        checks.push_back({{"label", c.label}, {"printed", c.printed}, {"computed", c.computed}, {"matched", c.matched},
                          {"corrected", c.corrected}, {"note", c.note}});
    return {{"case", t.case_id},
            {"steps", steps},
            {"solved", solved},
            {"assumptions", t.assumptions},
            {"display_checks", checks},
            {"final_relations", system(t.final_relations)},
            {"solution", system(t.solution)},
            {"contradictions", t.contradictions}};
}

inline json to_json(const refine::PatternVerdict& v) {
    auto opt = [](const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); };
    return {{"pass", v.pass},
            {"condition_a", v.condition_a},
            {"condition_b1", opt(v.condition_b1)},
            {"condition_b2", opt(v.condition_b2)},
            {"failed", v.failed},
            {"slot", to_json(v.slot)},
            {"notes", v.notes}};
}

// {"phi": "...", "m": 2, "m1": 2, "m2": 1, "phi1": "...", "phi2": "..."}
inline std::pair<algebra::Poly, refine::DeformationPatternSpec> pattern_from_json(const json& j) {
    auto poly = [](const json& v, const std::string& w) {
        if (!v.is_string()) throw InputError(w + ": expected a polynomial string");
        try {
            return algebra::parse_poly(v.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw InputError(w + ": " + e.what());
        }
    };
    refine::DeformationPatternSpec s;
    s.m = detail::get_int(detail::field(j, "m", "pattern"), "m");
    s.m1 = detail::get_int(detail::field(j, "m1", "pattern"), "m1");
    s.m2 = detail::get_int(detail::field(j, "m2", "pattern"), "m2");
    if (j.contains("phi1")) s.phi1 = poly(j["phi1"], "phi1");
    if (j.contains("phi2")) s.phi2 = poly(j["phi2"], "phi2");
    return {poly(detail::field(j, "phi", "pattern"), "phi"), s};
}

}  // namespace tropitac::io
