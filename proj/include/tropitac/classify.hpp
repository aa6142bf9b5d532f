// tropitac/classify.hpp - tacnodal features, case tags, theorem gate
#pragma once

#include "catalog.hpp"
#include "tropical.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <optional>
#include <string>
#include <vector>

namespace tropitac::classify {

using lattice::Int;
using lattice::LatticePolytope;
using tropical::DualSubdivision;
using tropical::SubdivisionCensus;

inline const std::vector<std::string>& kind_order() {
    static const std::vector<std::string> k = {"I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "E"};
    return k;
}

inline bool is_pair_kind(const std::string& k) { return k == "III" || k == "IV" || k == "V" || k == "E"; }

struct TacnodalFeature {
    std::string kind;
    std::vector<int> cells;
    std::vector<int> shared_edges;  // into DualSubdivision::edges
    friend bool operator==(const TacnodalFeature&, const TacnodalFeature&) = default;
};

struct FeatureSearch {
    std::optional<TacnodalFeature> feature;  // first with an all-unit remainder
    std::vector<TacnodalFeature> candidates;  // every occurrence, in search order
    std::vector<int> bad_remainder;  // for the first candidate when nothing qualified
};

namespace detail {

inline bool has_tag(const LatticePolytope& P, const std::string& name) {
    for (const auto& t : lattice::catalog_matches(P))
        if (t.name == name) return true;
    return false;
}

// Triangle with edge lengths 2,1,1 and no interior point.
inline bool is_partner_triangle(const LatticePolytope& P) {
    auto s = lattice::polygon_stats(P);
    return s.num_edges == 3 && s.interior_count == 0 && s.edge_lengths == std::vector<Int>{2, 1, 1};
}

inline std::vector<TacnodalFeature> occurrences(const DualSubdivision& S, const std::string& kind) {
    std::vector<TacnodalFeature> out;
    if (!is_pair_kind(kind)) {
        for (std::size_t k = 0; k < S.cells.size(); ++k)
            if (has_tag(S.cells[k].polytope, kind)) out.push_back({kind, {static_cast<int>(k)}, {}});
        return out;
    }
    for (std::size_t e = 0; e < S.edges.size(); ++e) {
        const auto& ed = S.edges[e];
        if (!ed.interior()) continue;
        const auto& L = S.cells[ed.left].polytope;
        const auto& R = S.cells[ed.right].polytope;
        bool hit = false;
        if (kind == "III" || kind == "E")
            hit = ed.length() == 2 && ((has_tag(L, kind) && is_partner_triangle(R)) ||
                                       (has_tag(R, kind) && is_partner_triangle(L)));
        else if (kind == "IV")
            hit = ed.length() == 2 && has_tag(L, "IV") && has_tag(R, "IV");
        else if (kind == "V")
            hit = ed.length() == 4 && has_tag(L, "V") && has_tag(R, "V");
        if (hit) out.push_back({kind, {std::min(ed.left, ed.right), std::max(ed.left, ed.right)}, {static_cast<int>(e)}});
    }
    return out;
}

inline std::vector<int> non_unit_remainder(const DualSubdivision& S, const TacnodalFeature& f) {
    std::vector<int> bad;
    for (std::size_t k = 0; k < S.cells.size(); ++k) {
        if (std::find(f.cells.begin(), f.cells.end(), static_cast<int>(k)) != f.cells.end()) continue;
        if (S.cells[k].polytope.area2() != 1) bad.push_back(static_cast<int>(k));
    }
    return bad;
}

}  // namespace detail

inline FeatureSearch search_features(const DualSubdivision& S) {
    FeatureSearch r;
    for (const auto& kind : kind_order())
        for (auto& f : detail::occurrences(S, kind)) r.candidates.push_back(std::move(f));
    for (const auto& f : r.candidates)
        if (detail::non_unit_remainder(S, f).empty()) {
            r.feature = f;
            break;
        }
    if (!r.feature && !r.candidates.empty()) r.bad_remainder = detail::non_unit_remainder(S, r.candidates.front());
    return r;
}

inline std::optional<TacnodalFeature> detect_tacnodal_feature(const DualSubdivision& S) {
    return search_features(S).feature;
}

enum class Verdict { TropicalOneTacnodal, NotTacnodal };

inline std::string to_string(Verdict v) {
    return v == Verdict::TropicalOneTacnodal ? "TropicalOneTacnodal" : "NotTacnodal";
}

// 'A'..'D' from TP-ness and the boundary defect; empty when the defect exceeds 1.
inline std::optional<char> case_tag(const SubdivisionCensus& c) {
    if (c.boundary_defect > 1) return std::nullopt;
    if (c.is_TP) return c.boundary_defect == 0 ? 'A' : 'B';
    return c.boundary_defect == 0 ? 'C' : 'D';
}

struct Classification {
    Verdict verdict = Verdict::NotTacnodal;
    std::optional<TacnodalFeature> feature;
    std::vector<TacnodalFeature> alternates;
    std::string reason;
    SubdivisionCensus census;
    std::optional<char> case_tag;
};

inline Classification classify(const DualSubdivision& S) {
    Classification c;
    c.census = tropical::subdivision_census(S);
    c.case_tag = case_tag(c.census);
    auto search = search_features(S);
    if (search.feature) {
        c.verdict = Verdict::TropicalOneTacnodal;
        c.feature = search.feature;
        for (const auto& f : search.candidates)
            if (!(f == *search.feature)) c.alternates.push_back(f);
        return c;
    }
    c.alternates = search.candidates;
    if (search.candidates.empty()) {
        c.reason = "no feature";
    } else {
        c.reason = "feature " + search.candidates.front().kind + " found but " +
                   std::to_string(search.bad_remainder.size()) + " other cell(s) are not unit triangles";
    }
    return c;
}

struct CensusCheck {
    std::string name;
    bool holds = false;
};

struct CensusReport {
    std::optional<char> case_tag;
    bool rank_condition = false;  // rk == #lattice points - 4
    std::vector<CensusCheck> checks;
    bool consistent() const {
        for (const auto& c : checks)
            if (!c.holds) return false;
        return true;
    }
};

namespace detail {

// Cells touching the Newton boundary along a segment of lattice length 2, and whether
// every other boundary contact is a unit segment.
inline std::pair<int, bool> boundary_segments(const DualSubdivision& S) {
    int twos = 0;
    bool others_unit = true;
    for (const auto& e : S.edges) {
        if (e.interior()) continue;
        if (e.length() == 2)
            ++twos;
        else if (e.length() != 1)
            others_unit = false;
    }
    return {twos, others_unit};
}

}  // namespace detail

// The counting identities that a subdivision of each case must satisfy when rk = #Delta_Z - 4.
inline CensusReport census_consistency(const DualSubdivision& S) {
    CensusReport r;
    auto c = tropical::subdivision_census(S);
    r.case_tag = case_tag(c);
    const Int nZ = c.lattice_points, nV = static_cast<Int>(S.vertices.size());
    r.rank_condition = c.rk == nZ - 4;
    if (!r.case_tag) return r;
    const Int par = c.parallel_count();
    auto add = [&](std::string n, bool h) { r.checks.push_back({std::move(n), h}); };
    switch (*r.case_tag) {
        case 'A':
            add("#V(S) = #Delta_Z - 3 + N'_4", nV == nZ - 3 + par);
            add("0 <= N'_4 <= 3", par <= 3);
            break;
        case 'B': {
            add("#V(S) = #Delta_Z - 3 + N'_4", nV == nZ - 3 + par);
            add("0 <= N'_4 <= 2", par <= 2);
            auto [twos, rest] = detail::boundary_segments(S);
            add("exactly one cell meets the boundary in a length-2 segment", twos == 1 && rest);
            break;
        }
        default: {
            Int excess = 0;
            for (const auto& [m, n] : c.N) excess += (m - 3) * n;
            add("sum (m-3) N_m <= 5 - sum N'_2m", excess <= 5 - par);
            add("sum N'_2m <= 2", par <= 2);
        }
    }
    return r;
}

enum class Regime { SmoothNodalCuspidal, Candidate, OutsideHypothesis };

inline std::string to_string(Regime r) {
    switch (r) {
        case Regime::SmoothNodalCuspidal: return "smooth/nodal/1-cuspidal regime, out of 1-tacnodal scope";
        case Regime::Candidate: return "rank equals #Delta_Z - 4";
        default: return "outside theorem hypothesis";
    }
}

struct GateReport {
    Int lattice_points = 0;
    Int rank = 0;
    bool in_range = false;  // #Delta_Z - 4 <= rk <= #Delta_Z - 1
    Regime regime = Regime::OutsideHypothesis;
    std::optional<Classification> classification;
    std::string assumption =
        "that F defines an irreducible 1-tacnodal curve over the Puiseux field is an input-side assumption and is not checked";
};

inline GateReport theorem_gate(const DualSubdivision& S) {
    GateReport g;
    g.rank = tropical::rank(S);
    g.lattice_points = static_cast<Int>(S.newton.lattice_points().size());
    g.in_range = g.rank >= g.lattice_points - 4 && g.rank <= g.lattice_points - 1;
    if (g.rank >= g.lattice_points - 3)
        g.regime = Regime::SmoothNodalCuspidal;
    else if (g.rank == g.lattice_points - 4) {
        g.regime = Regime::Candidate;
        g.classification = classify(S);
    } else
        g.regime = Regime::OutsideHypothesis;
    return g;
}

inline GateReport theorem_gate(const tropical::TropicalPolynomial& F) { return theorem_gate(tropical::dual_subdivision(F)); }

// Cells realizing each kind. Glued kinds share the segment on j = 0.
inline std::vector<std::vector<lattice::LatticePoint>> feature_cells(const std::string& kind) {
    if (!is_pair_kind(kind)) return {lattice::catalog_entry(kind).printed};
    if (kind == "III") return {{{0, 0}, {2, 0}, {1, 3}}, {{0, 0}, {2, 0}, {0, -1}}};
    if (kind == "IV") return {{{0, 0}, {2, 0}, {1, 2}}, {{0, 0}, {2, 0}, {1, -2}}};
    if (kind == "V") return {{{0, 0}, {4, 0}, {0, 1}}, {{0, 0}, {4, 0}, {0, -1}}};
    return {{{0, 0}, {2, 0}, {1, 2}, {0, 1}}, {{0, 0}, {2, 0}, {0, -1}}};
}

// Valuations whose subdivision is the feature plus `fringe` unit triangles hung on
// unit boundary edges. Only feature vertices and fringe points are in the support.
inline tropical::TropicalPolynomial realize_feature(const std::string& kind, int fringe = 2) {
    using lattice::LatticePoint;
    std::map<LatticePoint, Rational> v;
    for (const auto& cell : feature_cells(kind))
        for (const auto& p : cell) v[p] = is_pair_kind(kind) ? Rational(-std::abs(p.j)) : Rational(0);
    auto F = tropical::TropicalPolynomial::make(v);
    for (int t = 0; t < fringe; ++t) {
        auto S = tropical::dual_subdivision(F);
        const auto& N = S.newton;
        std::optional<LatticePoint> pick;
        for (std::size_t e = 0; e < N.size() && !pick; ++e) {
            auto [a, b] = N.edge(e);
            if (lattice::lattice_length(a, b) != 1) continue;
            // w with cross(b - a, w) = -1, then slide along the edge
            LatticePoint d = b - a;
            auto [s, t] = lattice::bezout(d.j, -d.i);  // d.j * s - d.i * t = 1
            LatticePoint w{s, t};
            for (Int k = 0; k <= 8 && !pick; ++k)
                for (Int shift : {k, -k}) {
                    LatticePoint q = a + w + shift * d;
                    bool sees_only_ab = true;
                    for (std::size_t f = 0; f < N.size(); ++f) {
                        auto [c, g] = N.edge(f);
                        if (f != e && lattice::orient(c, g, q) < 0) sees_only_ab = false;
                    }
                    if (sees_only_ab) {
                        pick = q;
                        break;
                    }
                }
        }
        if (!pick) throw std::logic_error("no place for a fringe triangle");
        Rational low = S.cells.front().lift(*pick);
        for (const auto& c : S.cells) low = std::min(low, c.lift(*pick));
        F.val[*pick] = low - 1;
    }
    return F;
}

}  // namespace tropitac::classify
