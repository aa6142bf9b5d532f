// tropitac/lattice.hpp - lattice polygons, unimodular maps, normal forms, enumeration
#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace tropitac {

struct DegenerateError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace lattice {

using Int = std::int64_t;

struct LatticePoint {
    Int i = 0;
    Int j = 0;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
    friend LatticePoint operator+(LatticePoint a, LatticePoint b) { return {a.i + b.i, a.j + b.j}; }
    friend LatticePoint operator-(LatticePoint a, LatticePoint b) { return {a.i - b.i, a.j - b.j}; }
    friend LatticePoint operator-(LatticePoint a) { return {-a.i, -a.j}; }
    friend LatticePoint operator*(Int k, LatticePoint a) { return {k * a.i, k * a.j}; }
};

inline Int cross(LatticePoint a, LatticePoint b) { return a.i * b.j - a.j * b.i; }
inline Int dot(LatticePoint a, LatticePoint b) { return a.i * b.i + a.j * b.j; }
inline Int orient(LatticePoint a, LatticePoint b, LatticePoint c) { return cross(b - a, c - a); }

inline Int gcd_of(LatticePoint v) { return std::gcd(std::abs(v.i), std::abs(v.j)); }
inline Int lattice_length(LatticePoint a, LatticePoint b) { return gcd_of(b - a); }

inline LatticePoint primitive(LatticePoint v) {
    Int g = gcd_of(v);
    if (g == 0) throw DegenerateError("zero vector has no primitive direction");
    return {v.i / g, v.j / g};
}

// Returns (s, t) with a*s + b*t = gcd(a, b) >= 0.
inline std::array<Int, 2> bezout(Int a, Int b) {
    Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
        old_t -= q * t;
        std::swap(old_t, t);
    }
    if (old_r < 0) return {-old_s, -old_t};
    return {old_s, old_t};
}

// Floor division for signed integers.
inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// x -> [[a b] [c d]] x + (tx, ty)
struct UnimodularMap {
    Int a = 1, b = 0, c = 0, d = 1, tx = 0, ty = 0;

    static UnimodularMap identity() { return {}; }
    static UnimodularMap translation(LatticePoint t) { return {1, 0, 0, 1, t.i, t.j}; }
    static UnimodularMap linear(Int a, Int b, Int c, Int d) { return checked({a, b, c, d, 0, 0}); }
    static UnimodularMap checked(UnimodularMap m) {
        if (std::abs(m.det()) != 1) throw std::invalid_argument("linear part is not unimodular");
        return m;
    }

    Int det() const { return a * d - b * c; }
    LatticePoint apply(LatticePoint p) const { return {a * p.i + b * p.j + tx, c * p.i + d * p.j + ty}; }
    LatticePoint apply_linear(LatticePoint p) const { return {a * p.i + b * p.j, c * p.i + d * p.j}; }

    // (this ∘ inner)(p) = this(inner(p))
    UnimodularMap after(const UnimodularMap& in) const {
        UnimodularMap r;
        r.a = a * in.a + b * in.c;
        r.b = a * in.b + b * in.d;
        r.c = c * in.a + d * in.c;
        r.d = c * in.b + d * in.d;
        LatticePoint t = apply(LatticePoint{in.tx, in.ty});
        r.tx = t.i;
        r.ty = t.j;
        return r;
    }

    UnimodularMap inverse() const {
        Int e = det();  // ±1, so 1/e == e
        UnimodularMap r{e * d, -e * b, -e * c, e * a, 0, 0};
        LatticePoint t = r.apply_linear({tx, ty});
        r.tx = -t.i;
        r.ty = -t.j;
        return r;
    }

    friend bool operator==(const UnimodularMap&, const UnimodularMap&) = default;
};

class LatticePolytope {
public:
    LatticePolytope() = default;

    // Convex hull of arbitrary points; throws DegenerateError unless 2-dimensional.
    static LatticePolytope hull(std::span<const LatticePoint> pts) {
        std::vector<LatticePoint> p(pts.begin(), pts.end());
        std::sort(p.begin(), p.end());
        p.erase(std::unique(p.begin(), p.end()), p.end());
        if (p.size() < 3) throw DegenerateError("polygon needs three non-collinear points");
        std::vector<LatticePoint> h(2 * p.size());
        std::size_t k = 0;
        for (const auto& q : p) {
            while (k >= 2 && orient(h[k - 2], h[k - 1], q) <= 0) --k;
            h[k++] = q;
        }
        for (std::size_t n = p.size() - 1, t = k + 1; n-- > 0;) {
            while (k >= t && orient(h[k - 2], h[k - 1], p[n]) <= 0) --k;
            h[k++] = p[n];
        }
        h.resize(k - 1);
        if (h.size() < 3) throw DegenerateError("points are collinear");
        LatticePolytope P;
        P.v_ = std::move(h);
        return P;
    }
    static LatticePolytope hull(std::initializer_list<LatticePoint> pts) {
        return hull(std::span<const LatticePoint>(pts.begin(), pts.size()));
    }

    // Vertex list that must already be the corners of a convex polygon (any order).
    static LatticePolytope from_vertices(std::span<const LatticePoint> vs) {
        LatticePolytope P = hull(vs);
        std::set<LatticePoint> given(vs.begin(), vs.end());
        if (given.size() != vs.size() || given.size() != P.v_.size())
            throw DegenerateError("vertex list is not strictly convex");
        return P;
    }
    static LatticePolytope from_vertices(std::initializer_list<LatticePoint> vs) {
        return from_vertices(std::span<const LatticePoint>(vs.begin(), vs.size()));
    }

    // Counterclockwise, starting at the lexicographically least vertex.
    const std::vector<LatticePoint>& vertices() const { return v_; }
    std::size_t size() const { return v_.size(); }
    const LatticePoint& vertex(std::size_t k) const { return v_[k % v_.size()]; }
    std::pair<LatticePoint, LatticePoint> edge(std::size_t k) const { return {vertex(k), vertex(k + 1)}; }

    Int area2() const {
        Int s = 0;
        for (std::size_t k = 0; k < v_.size(); ++k) s += cross(vertex(k), vertex(k + 1));
        return s;
    }

    // -1 outside, 0 on boundary, 1 interior
    int locate(LatticePoint p) const {
        bool on_edge = false;
        for (std::size_t k = 0; k < v_.size(); ++k) {
            Int o = orient(vertex(k), vertex(k + 1), p);
            if (o < 0) return -1;
            if (o == 0) on_edge = true;
        }
        return on_edge ? 0 : 1;
    }
    bool contains(LatticePoint p) const { return locate(p) >= 0; }
    bool is_vertex(LatticePoint p) const { return std::find(v_.begin(), v_.end(), p) != v_.end(); }

    std::vector<LatticePoint> lattice_points() const {
        auto [lo, hi] = bbox();
        std::vector<LatticePoint> out;
        for (Int i = lo.i; i <= hi.i; ++i)
            for (Int j = lo.j; j <= hi.j; ++j)
                if (contains({i, j})) out.push_back({i, j});
        return out;
    }

    std::pair<LatticePoint, LatticePoint> bbox() const {
        LatticePoint lo = v_.front(), hi = v_.front();
        for (const auto& p : v_) {
            lo = {std::min(lo.i, p.i), std::min(lo.j, p.j)};
            hi = {std::max(hi.i, p.i), std::max(hi.j, p.j)};
        }
        return {lo, hi};
    }

    LatticePolytope image(const UnimodularMap& A) const {
        std::vector<LatticePoint> w;
        w.reserve(v_.size());
        for (const auto& p : v_) w.push_back(A.apply(p));
        return hull(w);
    }

    friend bool operator==(const LatticePolytope&, const LatticePolytope&) = default;
    friend auto operator<=>(const LatticePolytope& a, const LatticePolytope& b) { return a.v_ <=> b.v_; }

private:
    std::vector<LatticePoint> v_;
};

struct PolygonStats {
    Int area2 = 0;
    Int boundary_count = 0;
    Int interior_count = 0;
    std::vector<Int> edge_lengths;  // sorted descending
    bool is_parallel = false;
    int num_edges = 0;
    friend bool operator==(const PolygonStats&, const PolygonStats&) = default;
};

// Opposite edges of an even polygon are antiparallel translates.
inline bool is_parallel_polygon(const LatticePolytope& P) {
    std::size_t m = P.size();
    if (m % 2 != 0) return false;
    for (std::size_t k = 0; k < m / 2; ++k) {
        auto [a, b] = P.edge(k);
        auto [c, d] = P.edge(k + m / 2);
        if (b - a != c - d) return false;
    }
    return true;
}

inline PolygonStats polygon_stats(const LatticePolytope& P) {
    if (P.size() < 3) throw DegenerateError("empty or degenerate polygon");
    PolygonStats s;
    s.num_edges = static_cast<int>(P.size());
    s.area2 = P.area2();
    for (std::size_t k = 0; k < P.size(); ++k) {
        auto [a, b] = P.edge(k);
        s.edge_lengths.push_back(lattice_length(a, b));
        s.boundary_count += s.edge_lengths.back();
    }
    std::sort(s.edge_lengths.rbegin(), s.edge_lengths.rend());
    // Pick: area2 = 2I + B - 2
    s.interior_count = (s.area2 - s.boundary_count + 2) / 2;
    s.is_parallel = is_parallel_polygon(P);
    return s;
}

namespace detail {

// Maps vertex k to the origin, the chosen adjacent edge onto the positive x-axis,
// the polygon into y >= 0, and the other adjacent edge to direction (a,b), 0 <= a < b.
inline UnimodularMap frame_map(const LatticePolytope& P, std::size_t k, bool ccw) {
    std::size_t m = P.size();
    LatticePoint v = P.vertex(k);
    LatticePoint next = P.vertex(ccw ? k + 1 : k + m - 1);
    LatticePoint other = P.vertex(ccw ? k + m - 1 : k + 1);
    LatticePoint e = primitive(next - v);
    auto [s, t] = bezout(e.i, e.j);  // s*p + t*q = 1
    // L = [[s, t], [-q, p]] sends (p,q) to (1,0), det = s p + t q = 1
    UnimodularMap L{s, t, -e.j, e.i, 0, 0};
    UnimodularMap M = L.after(UnimodularMap::translation(-v));
    LatticePoint w = M.apply_linear(other - v);
    if (w.j < 0) {
        M = UnimodularMap{1, 0, 0, -1, 0, 0}.after(M);
        w.j = -w.j;
    }
    Int sh = -floor_div(w.i, w.j);
    return UnimodularMap{1, sh, 0, 1, 0, 0}.after(M);
}

inline std::vector<UnimodularMap> frame_maps(const LatticePolytope& P) {
    std::vector<UnimodularMap> out;
    for (std::size_t k = 0; k < P.size(); ++k) {
        out.push_back(frame_map(P, k, true));
        out.push_back(frame_map(P, k, false));
    }
    return out;
}

}  // namespace detail

inline LatticePolytope normal_form(const LatticePolytope& P) {
    std::optional<LatticePolytope> best;
    for (const auto& F : detail::frame_maps(P)) {
        LatticePolytope Q = P.image(F);
        if (!best || Q < *best) best = std::move(Q);
    }
    return *best;
}

inline std::optional<UnimodularMap> unimodular_equivalent(const LatticePolytope& P, const LatticePolytope& Q) {
    if (polygon_stats(P) != polygon_stats(Q)) return std::nullopt;
    UnimodularMap F = detail::frame_map(P, 0, true);
    LatticePolytope target = P.image(F);
    for (const auto& G : detail::frame_maps(Q)) {
        if (Q.image(G) == target) {
            UnimodularMap A = G.inverse().after(F);
            if (P.image(A) != Q) throw std::logic_error("frame map does not reproduce target");
            return A;
        }
    }
    return std::nullopt;
}

// Every map with A(P) = Q; more than one when P has symmetries.
inline std::vector<UnimodularMap> unimodular_equivalences(const LatticePolytope& P, const LatticePolytope& Q) {
    std::vector<UnimodularMap> out;
    if (polygon_stats(P) != polygon_stats(Q)) return out;
    UnimodularMap F = detail::frame_map(P, 0, true);
    LatticePolytope target = P.image(F);
    for (const auto& G : detail::frame_maps(Q))
        if (Q.image(G) == target) out.push_back(G.inverse().after(F));
    std::sort(out.begin(), out.end(), [](const UnimodularMap& x, const UnimodularMap& y) {
        return std::tie(x.a, x.b, x.c, x.d, x.tx, x.ty) < std::tie(y.a, y.b, y.c, y.d, y.tx, y.ty);
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

enum class ParallelFilter { Any, Parallel, NonParallel };

// All classes of m-gons with `interior` interior points and the given edge-length multiset.
// Search box: a longest edge is placed on (0,0)-(l,0) with the polygon above it; after the
// shear that puts the highest vertex v in 0 <= v.i < v.j, every vertex satisfies
// |i| <= area2 and 0 <= j <= area2 / l.
inline std::vector<LatticePolytope> enumerate_class(int m, int interior, std::vector<Int> lengths,
                                                    ParallelFilter filter = ParallelFilter::Any) {
    if (m < 3 || m > 6) throw std::invalid_argument("m must be in 3..6");
    if (interior < 0 || interior > 3) throw std::invalid_argument("interior count must be in 0..3");
    if (static_cast<int>(lengths.size()) != m) throw std::invalid_argument("need exactly m edge lengths");
    Int B = 0;
    for (Int l : lengths) {
        if (l < 1) throw std::invalid_argument("edge lengths must be positive");
        B += l;
    }
    if (B > 8) throw std::invalid_argument("sum of edge lengths must be at most 8");

    const Int area2 = 2 * interior + B - 2;
    std::sort(lengths.rbegin(), lengths.rend());
    const Int base = lengths.front();
    const Int jmax = area2 / base;
    std::multiset<Int> rest(lengths.begin() + 1, lengths.end());
    const LatticePoint base_dir{base, 0};

    std::set<LatticePolytope> found;
    std::vector<LatticePoint> path{{0, 0}, {base, 0}};

    auto record = [&]() {
        LatticePolytope P = LatticePolytope::from_vertices(path);
        PolygonStats st = polygon_stats(P);
        if (st.interior_count != interior || st.area2 != area2) throw std::logic_error("enumeration invariant broken");
        if (filter == ParallelFilter::Parallel && !st.is_parallel) return;
        if (filter == ParallelFilter::NonParallel && st.is_parallel) return;
        found.insert(normal_form(P));
    };

    auto dfs = [&](auto&& self, LatticePoint cur, LatticePoint prev_edge, Int fan) -> void {
        if (rest.size() == 1) {
            LatticePoint close = -cur;
            if (gcd_of(close) == *rest.begin() && cross(prev_edge, close) > 0 && cross(close, base_dir) > 0 &&
                fan == area2)
                record();
            return;
        }
        const Int later = static_cast<Int>(rest.size()) - 2;  // vertices still to place after this one
        for (Int i = -area2; i <= area2; ++i) {
            for (Int j = 1; j <= jmax; ++j) {
                LatticePoint p{i, j};
                LatticePoint d = p - cur;
                if (cross(prev_edge, d) <= 0) continue;
                Int f = cross(cur, p);
                if (f <= 0 || fan + f + later > area2) continue;
                auto it = rest.find(gcd_of(d));
                if (it == rest.end()) continue;
                Int len = *it;
                rest.erase(it);
                path.push_back(p);
                self(self, p, d, fan + f);
                path.pop_back();
                rest.insert(len);
            }
        }
    };
    dfs(dfs, {base, 0}, base_dir, 0);
    return {found.begin(), found.end()};
}

}  // namespace lattice
}  // namespace tropitac
