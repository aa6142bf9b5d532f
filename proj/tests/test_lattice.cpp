#include <catch_amalgamated.hpp>

#include <tropitac/catalog.hpp>
#include <tropitac/lattice.hpp>

#include <random>

using namespace tropitac::lattice;

namespace {

// Independent lattice-point count by orientation tests over the bounding box.
struct Counts {
    Int interior = 0;
    Int boundary = 0;
};

Counts brute_counts(const std::vector<LatticePoint>& ccw) {
    Counts c;
    Int lo_i = 1 << 20, hi_i = -(1 << 20), lo_j = 1 << 20, hi_j = -(1 << 20);
    for (auto p : ccw) {
        lo_i = std::min(lo_i, p.i);
        hi_i = std::max(hi_i, p.i);
        lo_j = std::min(lo_j, p.j);
        hi_j = std::max(hi_j, p.j);
    }
    for (Int i = lo_i; i <= hi_i; ++i)
        for (Int j = lo_j; j <= hi_j; ++j) {
            bool inside = true, edge = false;
            for (std::size_t k = 0; k < ccw.size(); ++k) {
                auto a = ccw[k], b = ccw[(k + 1) % ccw.size()];
                Int o = (b.i - a.i) * (j - a.j) - (b.j - a.j) * (i - a.i);
                if (o < 0) inside = false;
                if (o == 0) edge = true;
            }
            if (!inside) continue;
            if (edge)
                ++c.boundary;
            else
                ++c.interior;
        }
    return c;
}

UnimodularMap random_unimodular(std::mt19937_64& rng) {
    std::uniform_int_distribution<Int> e(-5, 5);
    for (;;) {
        UnimodularMap m{e(rng), e(rng), e(rng), e(rng), e(rng), e(rng)};
        if (std::abs(m.det()) == 1) return m;
    }
}

LatticePolytope random_polygon(std::mt19937_64& rng) {
    std::uniform_int_distribution<Int> c(-3, 3);
    std::uniform_int_distribution<int> n(3, 7);
    for (;;) {
        std::vector<LatticePoint> pts;
        int k = n(rng);
        for (int t = 0; t < k; ++t) pts.push_back({c(rng), c(rng)});
        try {
            return LatticePolytope::hull(pts);
        } catch (const tropitac::DegenerateError&) {
        }
    }
}

}  // namespace

TEST_CASE("polygon statistics") {
    SECTION("unit triangle") {
        auto s = polygon_stats(LatticePolytope::from_vertices({{0, 0}, {1, 0}, {0, 1}}));
        CHECK(s.area2 == 1);
        CHECK(s.boundary_count == 3);
        CHECK(s.interior_count == 0);
        CHECK(s.edge_lengths == std::vector<Int>{1, 1, 1});
    }
    SECTION("type I triangle") {
        auto P = LatticePolytope::from_vertices({{0, 7}, {1, 0}, {2, 0}});
        auto s = polygon_stats(P);
        auto c = brute_counts(P.vertices());
        CHECK(c.interior == 3);
        CHECK(c.boundary == 3);
        CHECK(s.area2 == 7);
        CHECK(s.boundary_count == c.boundary);
        CHECK(s.interior_count == c.interior);
    }
    SECTION("type VII pentagon") {
        auto P = LatticePolytope::from_vertices({{0, 0}, {1, 0}, {2, 1}, {0, 1}, {1, 2}});
        auto s = polygon_stats(P);
        auto c = brute_counts(P.vertices());
        CHECK(s.num_edges == 5);
        CHECK(c.boundary == 5);
        CHECK(c.interior == 1);
        CHECK(s.boundary_count == 5);
        CHECK(s.interior_count == 1);
        CHECK(s.edge_lengths == std::vector<Int>{1, 1, 1, 1, 1});
    }
    SECTION("parallelograms") {
        CHECK(polygon_stats(LatticePolytope::from_vertices({{1, 0}, {2, 0}, {0, 3}, {1, 3}})).is_parallel);
        CHECK_FALSE(polygon_stats(LatticePolytope::from_vertices({{0, 0}, {2, 0}, {0, 1}, {1, 1}})).is_parallel);
    }
    SECTION("degenerate input") {
        CHECK_THROWS_AS(LatticePolytope::hull({{0, 0}, {1, 1}, {2, 2}}), tropitac::DegenerateError);
        CHECK_THROWS_AS(LatticePolytope::from_vertices({{0, 0}, {1, 0}, {2, 0}, {0, 1}}),
                        tropitac::DegenerateError);
    }
    SECTION("vertex order starts at the least vertex and runs counterclockwise") {
        auto P = LatticePolytope::hull({{2, 2}, {0, 1}, {1, 0}, {2, 0}, {1, 1}});
        CHECK(P.vertices() == std::vector<LatticePoint>{{0, 1}, {1, 0}, {2, 0}, {2, 2}});
    }
}

TEST_CASE("Pick identity and invariance under random unimodular maps") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 300; ++t) {
        auto P = random_polygon(rng);
        auto s = polygon_stats(P);
        auto c = brute_counts(P.vertices());
        REQUIRE(s.interior_count == c.interior);
        REQUIRE(s.boundary_count == c.boundary);
        REQUIRE(s.area2 == 2 * s.interior_count + s.boundary_count - 2);
        auto A = random_unimodular(rng);
        auto Q = P.image(A);
        REQUIRE(polygon_stats(Q) == s);
        REQUIRE(normal_form(Q) == normal_form(P));
    }
}

TEST_CASE("unimodular equivalence") {
    auto DI = LatticePolytope::from_vertices({{0, 7}, {1, 0}, {2, 0}});
    SECTION("reflexive") {
        auto A = unimodular_equivalent(DI, DI);
        REQUIRE(A);
        CHECK(*A == UnimodularMap::identity());
    }
    SECTION("member of the (0,7),(n,0),(n+1,0) family") {
        auto Q = LatticePolytope::from_vertices({{0, 7}, {3, 0}, {4, 0}});
        auto A = unimodular_equivalent(DI, Q);
        REQUIRE(A);
        CHECK(DI.image(*A) == Q);
        // DI has a reflection symmetry, so there are two maps; the (3 1; -7 -2) one must be among them
        auto all = unimodular_equivalences(DI, Q);
        CHECK(all.size() == 2);
        bool found = false;
        for (const auto& B : all) {
            CHECK(DI.image(B) == Q);
            found = found || (B.a == 3 && B.b == 1 && B.c == -7 && B.d == -2);
        }
        CHECK(found);
    }
    SECTION("VIII and IX are inequivalent") {
        auto P8 = LatticePolytope::from_vertices({{0, 0}, {1, 0}, {0, 1}, {3, 3}});
        auto P9 = LatticePolytope::from_vertices({{0, 0}, {1, 0}, {0, 1}, {4, 2}});
        CHECK_FALSE(unimodular_equivalent(P8, P9));
    }
    SECTION("equivalence relation on a random corpus") {
        std::mt19937_64 rng(11);
        for (int t = 0; t < 150; ++t) {
            auto P = random_polygon(rng);
            auto A = random_unimodular(rng);
            auto B = random_unimodular(rng);
            auto Q = P.image(A);
            auto R = Q.image(B);
            auto pq = unimodular_equivalent(P, Q);
            auto qr = unimodular_equivalent(Q, R);
            REQUIRE(pq);
            REQUIRE(qr);
            REQUIRE(P.image(*pq) == Q);
            REQUIRE(Q.image(pq->inverse()) == P);
            REQUIRE(P.image(qr->after(*pq)) == R);
            auto other = random_polygon(rng);
            auto po = unimodular_equivalent(P, other);
            REQUIRE(po.has_value() == (normal_form(P) == normal_form(other)));
            if (po) REQUIRE(P.image(*po) == other);
        }
    }
}

TEST_CASE("normal form") {
    auto unit = LatticePolytope::from_vertices({{0, 0}, {1, 0}, {0, 1}});
    CHECK(normal_form(LatticePolytope::from_vertices({{5, 5}, {4, 6}, {5, 6}})) == unit);
    CHECK(normal_form(LatticePolytope::from_vertices({{0, 0}, {2, 0}, {1, 2}})) ==
          normal_form(LatticePolytope::from_vertices({{0, 0}, {-2, 0}, {-1, -2}})));
    CHECK(normal_form(LatticePolytope::from_vertices({{0, 7}, {1, 0}, {2, 0}})) ==
          normal_form(LatticePolytope::from_vertices({{0, 7}, {3, 0}, {4, 0}})));
}

TEST_CASE("enumeration of classes") {
    auto nf = [](std::initializer_list<LatticePoint> v) { return normal_form(LatticePolytope::from_vertices(v)); };
    SECTION("three interior points, unit edges") {
        auto r = enumerate_class(3, 3, {1, 1, 1});
        REQUIRE(r.size() == 2);
        std::set<LatticePolytope> got(r.begin(), r.end());
        CHECK(got.count(nf({{0, 7}, {1, 0}, {2, 0}})));
        CHECK(got.count(nf({{0, 7}, {2, 0}, {3, 0}})));
    }
    SECTION("non-parallel unit quadrangles with two interior points") {
        auto r = enumerate_class(4, 2, {1, 1, 1, 1}, ParallelFilter::NonParallel);
        REQUIRE(r.size() == 3);
        std::set<LatticePolytope> got(r.begin(), r.end());
        CHECK(got.count(nf({{0, 0}, {1, 0}, {0, 1}, {3, 3}})));
        CHECK(got.count(nf({{0, 0}, {1, 0}, {0, 1}, {4, 2}})));
        CHECK(got.count(nf({{1, 0}, {0, 1}, {2, 1}, {1, 3}})));
    }
    SECTION("empty classes") {
        CHECK(enumerate_class(3, 0, {2, 2, 1}).empty());
        CHECK(enumerate_class(4, 0, {1, 1, 1, 1}, ParallelFilter::NonParallel).empty());
    }
    SECTION("small triangles are unique") {
        for (int I = 0; I <= 2; ++I) CHECK(enumerate_class(3, I, {1, 1, 1}).size() == 1);
        CHECK(enumerate_class(3, 0, {1, 1, 1}).front() == nf({{0, 0}, {1, 0}, {0, 1}}));
        CHECK(enumerate_class(3, 1, {1, 1, 1}).front() == nf({{0, 0}, {1, 2}, {2, 1}}));
        CHECK(enumerate_class(3, 2, {1, 1, 1}).front() == nf({{0, 0}, {3, 2}, {2, 3}}));
    }
    SECTION("pentagons and hexagons have an interior point") {
        for (int I = 0; I <= 3; ++I) {
            for (auto lengths : std::vector<std::vector<Int>>{{1, 1, 1, 1, 1}, {2, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}}) {
                int m = static_cast<int>(lengths.size());
                auto r = enumerate_class(m, I, lengths);
                if (I == 0) CHECK(r.empty());
                for (const auto& P : r) {
                    auto s = polygon_stats(P);
                    CHECK(s.area2 == 2 * s.interior_count + s.boundary_count - 2);
                    CHECK(s.interior_count == I);
                }
            }
        }
    }
    SECTION("parameter range") {
        CHECK_THROWS(enumerate_class(7, 0, {1, 1, 1, 1, 1, 1, 1}));
        CHECK_THROWS(enumerate_class(3, 4, {1, 1, 1}));
        CHECK_THROWS(enumerate_class(3, 0, {4, 4, 1}));
        CHECK_THROWS(enumerate_class(3, 0, {1, 1}));
    }
}

TEST_CASE("catalog") {
    CHECK(catalog_match(LatticePolytope::from_vertices({{0, 7}, {2, 0}, {3, 0}}))->name == "II");
    CHECK(catalog_match(LatticePolytope::from_vertices({{3, 3}, {4, 3}, {3, 4}}))->name == "unit-triangle");
    CHECK_FALSE(catalog_match(LatticePolytope::from_vertices({{0, 0}, {5, 0}, {0, 5}})));

    auto hat1 = LatticePolytope::from_vertices({{2, 0}, {0, 1}, {0, -1}});
    auto tags = catalog_matches(hat1);
    REQUIRE(tags.size() == 2);
    CHECK(tags[0].name == "IV");
    CHECK(tags[1].name == "HAT1");
    CHECK(catalog_match(hat1)->name == "IV");

    SECTION("the only coincidences among references") {
        std::set<std::pair<std::string, std::string>> aliases;
        const auto& c = catalog();
        for (std::size_t a = 0; a < c.size(); ++a)
            for (std::size_t b = a + 1; b < c.size(); ++b)
                if (unimodular_equivalent(c[a].polytope, c[b].polytope)) aliases.insert({c[a].tag.name, c[b].tag.name});
        CHECK(aliases == std::set<std::pair<std::string, std::string>>{{"III", "HAT3"}, {"IV", "HAT1"}});
    }
    SECTION("printed vertex lists are the polygon vertices") {
        for (const auto& e : catalog()) {
            std::set<LatticePoint> a(e.printed.begin(), e.printed.end());
            std::set<LatticePoint> b(e.polytope.vertices().begin(), e.polytope.vertices().end());
            CHECK(a == b);
        }
    }
}
