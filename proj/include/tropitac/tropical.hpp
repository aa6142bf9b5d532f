// tropitac/tropical.hpp - dual subdivisions, tropical curves, rank and census
#pragma once

#include "lattice.hpp"
#include "rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace tropitac::tropical {

using lattice::Int;
using lattice::LatticePoint;
using lattice::LatticePolytope;

struct TropicalPolynomial {
    std::map<LatticePoint, Rational> val;

    // Throws DegenerateError when the Newton polygon is not 2-dimensional.
    static TropicalPolynomial make(std::map<LatticePoint, Rational> v) {
        TropicalPolynomial F{std::move(v)};
        (void)F.newton();
        return F;
    }
    std::vector<LatticePoint> support() const {
        std::vector<LatticePoint> s;
        for (const auto& [p, _] : val) s.push_back(p);
        return s;
    }
    LatticePolytope newton() const {
        auto s = support();
        return LatticePolytope::hull(s);
    }
};

// Affine function g.i * i + g.j * j + c.
struct Affine {
    Rational gi, gj, c;
    Rational operator()(LatticePoint p) const { return gi * p.i + gj * p.j + c; }
    friend bool operator==(const Affine&, const Affine&) = default;
};

struct Cell {
    LatticePolytope polytope;
    std::vector<LatticePoint> lifted;  // support points on this facet of the hull
    Affine lift;
};

// Segment of S. right == -1 on the boundary of the Newton polygon.
// The polygon of cell `left` runs a -> b counterclockwise.
struct SubEdge {
    LatticePoint a, b;
    int left = -1, right = -1;
    Int length() const { return lattice::lattice_length(a, b); }
    bool interior() const { return right >= 0; }
};

struct DualSubdivision {
    LatticePolytope newton;
    std::vector<Cell> cells;
    std::vector<SubEdge> edges;
    std::set<LatticePoint> vertices;
    std::map<LatticePoint, Rational> nu;  // on every lattice point of the Newton polygon
};

namespace detail {

inline std::optional<Affine> plane(LatticePoint p, const Rational& zp, LatticePoint q, const Rational& zq,
                                   LatticePoint r, const Rational& zr) {
    Int det = lattice::orient(p, q, r);
    if (det == 0) return std::nullopt;
    LatticePoint u = q - p, v = r - p;
    Rational du = zq - zp, dv = zr - zp;
    // gi u.i + gj u.j = du, gi v.i + gj v.j = dv
    Rational gi = (du * v.j - dv * u.j) / det;
    Rational gj = (dv * u.i - du * v.i) / det;
    return Affine{gi, gj, zp - gi * p.i - gj * p.j};
}

}  // namespace detail

// Facets of the upper hull of the lifted support, by brute force over triples.
inline DualSubdivision dual_subdivision(const TropicalPolynomial& F) {
    DualSubdivision S;
    S.newton = F.newton();
    std::vector<std::pair<LatticePoint, Rational>> pts(F.val.begin(), F.val.end());
    const std::size_t n = pts.size();
    std::set<std::vector<LatticePoint>> seen;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c) {
                auto h = detail::plane(pts[a].first, pts[a].second, pts[b].first, pts[b].second, pts[c].first,
                                       pts[c].second);
                if (!h) continue;
                std::vector<LatticePoint> on;
                bool supporting = true;
                for (const auto& [p, z] : pts) {
                    Rational e = (*h)(p);
                    if (z > e) {
                        supporting = false;
                        break;
                    }
                    if (z == e) on.push_back(p);
                }
                if (!supporting || !seen.insert(on).second) continue;
                S.cells.push_back({LatticePolytope::hull(on), on, *h});
            }
    std::sort(S.cells.begin(), S.cells.end(),
              [](const Cell& x, const Cell& y) { return x.polytope < y.polytope; });

    std::map<std::pair<LatticePoint, LatticePoint>, std::size_t> by_key;
    for (std::size_t k = 0; k < S.cells.size(); ++k) {
        const auto& P = S.cells[k].polytope;
        for (std::size_t e = 0; e < P.size(); ++e) {
            auto [a, b] = P.edge(e);
            S.vertices.insert(a);
            auto key = std::minmax(a, b);
            auto it = by_key.find(key);
            if (it == by_key.end()) {
                by_key[key] = S.edges.size();
                S.edges.push_back({a, b, static_cast<int>(k), -1});
            } else {
                S.edges[it->second].right = static_cast<int>(k);
            }
        }
    }
    for (const auto& p : S.newton.lattice_points()) {
        Rational m = S.cells.front().lift(p);
        for (const auto& c : S.cells) m = std::min(m, c.lift(p));
        S.nu[p] = m;
    }
    return S;
}

struct RPoint {
    Rational x, y;
    friend bool operator==(const RPoint&, const RPoint&) = default;
};

struct CurveEdge {
    int from = 0, to = 0;
    Int weight = 0;
    int dual = -1;  // index into DualSubdivision::edges
};

struct Ray {
    int from = 0;
    LatticePoint direction;  // primitive
    Int weight = 0;
    int dual = -1;
};

struct TropicalCurve {
    std::vector<RPoint> vertices;  // vertex k is dual to cell k
    std::vector<CurveEdge> bounded_edges;
    std::vector<Ray> rays;
};

// Outward normal of a counterclockwise edge a -> b.
inline LatticePoint outward_normal(LatticePoint a, LatticePoint b) {
    LatticePoint d = lattice::primitive(b - a);
    return {d.j, -d.i};
}

inline TropicalCurve tropical_curve(const DualSubdivision& S) {
    TropicalCurve C;
    for (const auto& c : S.cells) C.vertices.push_back({-c.lift.gi, -c.lift.gj});
    for (std::size_t k = 0; k < S.edges.size(); ++k) {
        const auto& e = S.edges[k];
        if (e.interior())
            C.bounded_edges.push_back({e.left, e.right, e.length(), static_cast<int>(k)});
        else
            C.rays.push_back({e.left, outward_normal(e.a, e.b), e.length(), static_cast<int>(k)});
    }
    return C;
}

inline TropicalCurve tropical_curve(const TropicalPolynomial& F) { return tropical_curve(dual_subdivision(F)); }

// Sum of weight * primitive outgoing direction at every vertex.
inline std::vector<RPoint> balancing_residuals(const TropicalCurve& C) {
    std::vector<RPoint> r(C.vertices.size(), RPoint{0, 0});
    auto add = [&](int v, const Rational& dx, const Rational& dy, Int w) {
        // primitive integer direction of (dx, dy)
        using boost::multiprecision::denominator;
        using boost::multiprecision::numerator;
        Integer l = lcm(denominator(dx), denominator(dy));
        Rational sx = dx * l, sy = dy * l;
        Integer ix = numerator(sx), iy = numerator(sy);
        Integer g = boost::multiprecision::gcd(ix, iy);
        r[v].x += Rational(ix / g) * w;
        r[v].y += Rational(iy / g) * w;
    };
    for (const auto& e : C.bounded_edges) {
        const auto& p = C.vertices[e.from];
        const auto& q = C.vertices[e.to];
        if (p == q) continue;  // reported by verify_duality
        add(e.from, q.x - p.x, q.y - p.y, e.weight);
        add(e.to, p.x - q.x, p.y - q.y, e.weight);
    }
    for (const auto& ray : C.rays) add(ray.from, ray.direction.i, ray.direction.j, ray.weight);
    return r;
}

struct DualityReport {
    bool pass = true;
    int failed_check = 0;  // 1 regions, 2 orthogonality/weights, 3 valency
    std::string message;
};

inline DualityReport verify_duality(const TropicalCurve& C, const DualSubdivision& S) {
    auto fail = [](int check, std::string msg) { return DualityReport{false, check, std::move(msg)}; };
    const auto V = static_cast<Int>(C.vertices.size());
    const auto E = static_cast<Int>(C.bounded_edges.size());
    const auto R = static_cast<Int>(C.rays.size());
    if (V != static_cast<Int>(S.cells.size())) return fail(1, "vertex count differs from cell count");
    // Faces of the curve graph closed up by a point at infinity.
    Int regions = E + R - V + 1;
    if (regions != static_cast<Int>(S.vertices.size()))
        return fail(1, "curve has " + std::to_string(regions) + " complementary regions but S has " +
                           std::to_string(S.vertices.size()) + " vertices");

    std::vector<int> valency(C.vertices.size(), 0);
    for (const auto& e : C.bounded_edges) {
        if (e.dual < 0 || e.dual >= static_cast<int>(S.edges.size())) return fail(2, "edge without dual");
        const auto& d = S.edges[e.dual];
        const auto& p = C.vertices[e.from];
        const auto& q = C.vertices[e.to];
        if (p == q) return fail(2, "bounded edge of length zero");
        LatticePoint s = d.b - d.a;
        if ((q.x - p.x) * s.i + (q.y - p.y) * s.j != 0) return fail(2, "edge not orthogonal to its dual");
        if (e.weight != d.length())
            return fail(2, "weight " + std::to_string(e.weight) + " but dual length " + std::to_string(d.length()));
        ++valency[e.from];
        ++valency[e.to];
    }
    for (const auto& r : C.rays) {
        if (r.dual < 0 || r.dual >= static_cast<int>(S.edges.size())) return fail(2, "ray without dual");
        const auto& d = S.edges[r.dual];
        LatticePoint s = d.b - d.a;
        if (lattice::dot(r.direction, s) != 0) return fail(2, "ray not orthogonal to its dual");
        if (lattice::cross(s, r.direction) >= 0) return fail(2, "ray does not point outward");
        if (r.weight != d.length())
            return fail(2, "ray weight " + std::to_string(r.weight) + " but dual length " + std::to_string(d.length()));
        ++valency[r.from];
    }
    for (std::size_t k = 0; k < C.vertices.size(); ++k)
        if (valency[k] != static_cast<int>(S.cells[k].polytope.size()))
            return fail(3, "vertex " + std::to_string(k) + " has valency " + std::to_string(valency[k]) +
                               " but its cell has " + std::to_string(S.cells[k].polytope.size()) + " sides");
    return {};
}

namespace detail {

// Row rank over Q.
inline std::size_t matrix_rank(std::vector<std::vector<Rational>> m) {
    std::size_t rank = 0;
    if (m.empty()) return 0;
    const std::size_t cols = m.front().size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Rational f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace detail

// Unknowns are the lifted values at V(S); every corner of a cell past the first three
// must stay coplanar with them. One dimension is the additive constant.
inline Int rank(const DualSubdivision& S) {
    std::map<LatticePoint, std::size_t> idx;
    for (const auto& v : S.vertices) idx.emplace(v, idx.size());
    std::vector<std::vector<Rational>> rows;
    for (const auto& c : S.cells) {
        const auto& vs = c.polytope.vertices();
        LatticePoint p0 = vs[0], p1 = vs[1], p2 = vs[2];
        Int det = lattice::orient(p0, p1, p2);
        for (std::size_t k = 3; k < vs.size(); ++k) {
            LatticePoint q = vs[k];
            // barycentric coordinates of q in (p0, p1, p2)
            Rational b1 = Rational(lattice::orient(p0, q, p2), det);
            Rational b2 = Rational(lattice::orient(p0, p1, q), det);
            Rational b0 = 1 - b1 - b2;
            std::vector<Rational> row(idx.size(), Rational(0));
            row[idx.at(q)] += 1;
            row[idx.at(p0)] -= b0;
            row[idx.at(p1)] -= b1;
            row[idx.at(p2)] -= b2;
            rows.push_back(std::move(row));
        }
    }
    return static_cast<Int>(idx.size()) - static_cast<Int>(detail::matrix_rank(std::move(rows))) - 1;
}

inline Int expected_rank(const DualSubdivision& S) {
    Int r = static_cast<Int>(S.vertices.size()) - 1;
    for (const auto& c : S.cells) r -= static_cast<Int>(c.polytope.size()) - 3;
    return r;
}

struct SubdivisionCensus {
    std::map<int, Int> N;     // l -> number of l-gons
    std::map<int, Int> Npar;  // m -> number of parallel 2m-gons
    Int script_N = 0;
    Int rk = 0, rkexp = 0, d = 0;
    Int lattice_points = 0;  // of the Newton polygon
    Int boundary_defect = 0;
    bool is_TP = true;

    Int count(int l) const {
        auto it = N.find(l);
        return it == N.end() ? 0 : it->second;
    }
    Int parallel_count() const {
        Int s = 0;
        for (const auto& [_, c] : Npar) s += c;
        return s;
    }
};

inline bool on_boundary(const LatticePolytope& P, LatticePoint p) {
    for (std::size_t k = 0; k < P.size(); ++k) {
        auto [a, b] = P.edge(k);
        if (lattice::orient(a, b, p) == 0 && std::min(a, b) <= p && p <= std::max(a, b)) return true;
    }
    return false;
}

inline SubdivisionCensus subdivision_census(const DualSubdivision& S) {
    SubdivisionCensus c;
    for (const auto& cell : S.cells) {
        int l = static_cast<int>(cell.polytope.size());
        ++c.N[l];
        bool par = lattice::is_parallel_polygon(cell.polytope);
        if (par) ++c.Npar[l / 2];
        if (l > 3 && !(l == 4 && par)) c.is_TP = false;
    }
    c.script_N = -1;
    for (const auto& [l, n] : c.N) c.script_N += (l - 3) * n;
    c.script_N -= c.parallel_count();
    c.rk = rank(S);
    c.rkexp = expected_rank(S);
    c.d = c.rk - c.rkexp;
    auto pts = S.newton.lattice_points();
    c.lattice_points = static_cast<Int>(pts.size());
    for (const auto& p : pts)
        if (on_boundary(S.newton, p) && !S.vertices.count(p)) ++c.boundary_defect;
    return c;
}

// Pushes the support through a unimodular map, keeping valuations.
inline TropicalPolynomial transform(const TropicalPolynomial& F, const lattice::UnimodularMap& A) {
    std::map<LatticePoint, Rational> v;
    for (const auto& [p, z] : F.val) v[A.apply(p)] = z;
    return TropicalPolynomial::make(std::move(v));
}

}  // namespace tropitac::tropical
