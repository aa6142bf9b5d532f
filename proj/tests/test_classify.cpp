#include <catch_amalgamated.hpp>

#include <tropitac/classify.hpp>

using namespace tropitac;
using namespace tropitac::classify;
using lattice::LatticePoint;
using tropical::TropicalPolynomial;

namespace {

TropicalPolynomial flat(const std::vector<LatticePoint>& pts) {
    std::map<LatticePoint, Rational> v;
    for (const auto& p : pts) v[p] = 0;
    return TropicalPolynomial::make(v);
}

// Lattice points counted by brute force over the bounding box.
Int count_points(const lattice::LatticePolytope& P) {
    auto [lo, hi] = P.bbox();
    Int n = 0;
    for (Int i = lo.i; i <= hi.i; ++i)
        for (Int j = lo.j; j <= hi.j; ++j) {
            bool in = true;
            for (std::size_t k = 0; k < P.size(); ++k) {
                auto [a, b] = P.edge(k);
                if (lattice::orient(a, b, {i, j}) < 0) in = false;
            }
            n += in;
        }
    return n;
}

}  // namespace

TEST_CASE("single cells and glued pairs") {
    SECTION("Delta_I alone") {
        auto S = tropical::dual_subdivision(flat(lattice::catalog_entry("I").printed));
        auto f = detect_tacnodal_feature(S);
        REQUIRE(f);
        CHECK(f->kind == "I");
        CHECK(f->cells == std::vector<int>{0});
    }
    SECTION("two copies of D3(1;2,1,1) glued on the length-2 edge") {
        auto F = TropicalPolynomial::make({{{0, 0}, 0}, {{2, 0}, 0}, {{1, 2}, -2}, {{1, -2}, -2}});
        auto S = tropical::dual_subdivision(F);
        REQUIRE(S.cells.size() == 2);
        auto f = detect_tacnodal_feature(S);
        REQUIRE(f);
        CHECK(f->kind == "IV");
        REQUIRE(f->shared_edges.size() == 1);
        CHECK(S.edges[f->shared_edges[0]].length() == 2);
    }
    SECTION("unit square in two triangles") {
        auto F = TropicalPolynomial::make({{{0, 0}, 0}, {{1, 0}, 0}, {{0, 1}, 0}, {{1, 1}, 1}});
        auto S = tropical::dual_subdivision(F);
        CHECK_FALSE(detect_tacnodal_feature(S));
        auto c = classify::classify(S);
        CHECK(c.verdict == Verdict::NotTacnodal);
        CHECK(c.reason == "no feature");
    }
}

TEST_CASE("classification and case tags") {
    SECTION("Delta_VI alone is case A") {
        auto c = classify::classify(tropical::dual_subdivision(flat(lattice::catalog_entry("VI").printed)));
        CHECK(c.verdict == Verdict::TropicalOneTacnodal);
        CHECK(c.feature->kind == "VI");
        CHECK(c.case_tag == 'A');
        CHECK(c.census.Npar.at(2) == 1);
    }
    SECTION("Delta_E glued to its partner triangle is case C") {
        auto S = tropical::dual_subdivision(realize_feature("E", 0));
        auto c = classify::classify(S);
        CHECK(c.verdict == Verdict::TropicalOneTacnodal);
        CHECK(c.feature->kind == "E");
        CHECK(c.case_tag == 'C');
        CHECK(c.census.count(4) == 1);
    }
    SECTION("all unit triangles") {
        std::map<LatticePoint, Rational> v;
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; i + j <= 3; ++j) v[{i, j}] = -(i * i + j * j + i * j);
        auto c = classify::classify(tropical::dual_subdivision(TropicalPolynomial::make(v)));
        CHECK(c.verdict == Verdict::NotTacnodal);
        CHECK(c.reason == "no feature");
        CHECK(c.case_tag == 'A');
    }
    SECTION("feature with a non-unit remainder") {
        // Delta_I next to a fat triangle
        std::map<LatticePoint, Rational> v;
        for (const auto& p : lattice::catalog_entry("I").printed) v[p] = 0;
        v[{4, 0}] = -1;
        auto S = tropical::dual_subdivision(TropicalPolynomial::make(v));
        auto c = classify::classify(S);
        CHECK(c.verdict == Verdict::NotTacnodal);
        CHECK(c.reason.find("feature I found") == 0);
        CHECK(c.alternates.size() == 1);
    }
}

TEST_CASE("theorem gate") {
    SECTION("Delta_I") {
        auto g = theorem_gate(flat(lattice::catalog_entry("I").printed));
        CHECK(g.lattice_points == 6);
        CHECK(g.rank == 2);
        CHECK(g.regime == Regime::Candidate);
        REQUIRE(g.classification);
        CHECK(g.classification->feature->kind == "I");
    }
    SECTION("tropical line") {
        auto g = theorem_gate(flat({{0, 0}, {1, 0}, {0, 1}}));
        CHECK(g.rank == 2);
        CHECK(g.rank == g.lattice_points - 1);
        CHECK(g.regime == Regime::SmoothNodalCuspidal);
        CHECK_FALSE(g.classification);
    }
    SECTION("rank too small") {
        auto g = theorem_gate(flat({{0, 0}, {3, 0}, {0, 3}}));
        CHECK(g.rank == 2);
        CHECK(g.lattice_points == 10);
        CHECK(g.regime == Regime::OutsideHypothesis);
        CHECK_FALSE(g.in_range);
    }
    CHECK(theorem_gate(flat({{0, 0}, {1, 0}, {0, 1}})).assumption.find("not checked") != std::string::npos);
}

TEST_CASE("census consistency") {
    SECTION("case A with one parallelogram") {
        auto S = tropical::dual_subdivision(flat(lattice::catalog_entry("VI").printed));
        auto r = census_consistency(S);
        CHECK(r.case_tag == 'A');
        CHECK(r.rank_condition);
        CHECK(S.vertices.size() == 6 - 2);
        CHECK(r.consistent());
    }
    SECTION("case B: one length-2 boundary segment") {
        auto S = tropical::dual_subdivision(flat({{0, 0}, {2, 0}, {1, 3}}));
        auto r = census_consistency(S);
        CHECK(r.case_tag == 'B');
        CHECK(r.rank_condition);
        CHECK(r.consistent());
        REQUIRE(r.checks.size() == 3);
        CHECK(r.checks[2].holds);
    }
    SECTION("case C") {
        auto r = census_consistency(tropical::dual_subdivision(realize_feature("E")));
        CHECK(r.case_tag == 'C');
        CHECK(r.rank_condition);
        CHECK(r.consistent());
    }
    SECTION("a case A identity can fail when the rank condition does") {
        auto r = census_consistency(tropical::dual_subdivision(flat({{0, 0}, {1, 0}, {0, 1}})));
        CHECK(r.case_tag == 'A');
        CHECK_FALSE(r.rank_condition);
        CHECK_FALSE(r.consistent());
    }
}

TEST_CASE("every kind embedded in a fringe") {
    // rank oracle: #V(S) - 1 minus one per extra corner; the feature has 1 or 2 cells
    for (const auto& kind : kind_order()) {
        INFO(kind);
        for (int fringe : {0, 1, 2, 3}) {
            auto F = realize_feature(kind, fringe);
            auto S = tropical::dual_subdivision(F);
            auto c = classify::classify(S);
            REQUIRE(c.verdict == Verdict::TropicalOneTacnodal);
            CHECK(c.feature->kind == kind);
            CHECK(c.alternates.empty());
            CHECK(S.cells.size() == feature_cells(kind).size() + fringe);
            Int expect = (is_pair_kind(kind) ? 3 : 2) + fringe;
            CHECK(c.census.rk == expect);
            CHECK(count_points(S.newton) - 4 == expect);
            auto g = theorem_gate(S);
            CHECK(g.regime == Regime::Candidate);
        }
    }
}

TEST_CASE("classification is invariant under unimodular maps") {
    std::vector<lattice::UnimodularMap> maps = {lattice::UnimodularMap::linear(0, -1, 1, 0),
                                                lattice::UnimodularMap::linear(1, 3, 0, 1),
                                                lattice::UnimodularMap::linear(-1, 0, 2, 1)};
    for (const auto& kind : kind_order())
        for (auto A : maps) {
            INFO(kind);
            A.tx = 5;
            auto S = tropical::dual_subdivision(tropical::transform(realize_feature(kind), A));
            auto c = classify::classify(S);
            REQUIRE(c.verdict == Verdict::TropicalOneTacnodal);
            CHECK(c.feature->kind == kind);
            CHECK(c.case_tag == classify::classify(tropical::dual_subdivision(realize_feature(kind))).case_tag);
        }
}

TEST_CASE("reference features are pairwise distinct kinds") {
    for (const auto& a : kind_order())
        for (const auto& cell : feature_cells(a)) {
            auto P = lattice::LatticePolytope::from_vertices(cell);
            for (const auto& b : kind_order()) {
                if (a == b || is_pair_kind(b)) continue;
                CHECK_FALSE(classify::detail::has_tag(P, b));
            }
        }
}
