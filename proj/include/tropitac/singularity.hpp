// tropitac/singularity.hpp - node / cusp / tacnode criterion at a point
#pragma once

#include "poly.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace tropitac::algebra {

// Closed forms in the partial derivatives of f (variables x, y).
struct Derivatives {
    Poly f, fx, fy, fxx, fxy, fyy, fxxx, fxxy, fxyy, fyyy, fxxxx, fxxxy, fxxyy, fxyyy, fyyyy;

    static Derivatives of(const Poly& f, const std::string& x = "x", const std::string& y = "y") {
        Derivatives d;
        d.f = f;
        d.fx = f.derivative(x);
        d.fy = f.derivative(y);
        d.fxx = d.fx.derivative(x);
        d.fxy = d.fx.derivative(y);
        d.fyy = d.fy.derivative(y);
        d.fxxx = d.fxx.derivative(x);
        d.fxxy = d.fxx.derivative(y);
        d.fxyy = d.fxy.derivative(y);
        d.fyyy = d.fyy.derivative(y);
        d.fxxxx = d.fxxx.derivative(x);
        d.fxxxy = d.fxxx.derivative(y);
        d.fxxyy = d.fxxy.derivative(y);
        d.fxyyy = d.fxyy.derivative(y);
        d.fyyyy = d.fyyy.derivative(y);
        return d;
    }

    template <class Fn>
    Derivatives map(Fn&& fn) const {
        return {fn(f),    fn(fx),    fn(fy),    fn(fxx),   fn(fxy),   fn(fyy),   fn(fxxx), fn(fxxy),
                fn(fxyy), fn(fyyy), fn(fxxxx), fn(fxxxy), fn(fxxyy), fn(fxyyy), fn(fyyyy)};
    }

    Poly hess() const { return fxx * fyy - fxy * fxy; }
    Poly k() const {
        Poly s = fxy, t = fxx;
        return -(s.pow(3) * fxxx) + Poly(3) * t * s.pow(2) * fxxy - Poly(3) * t.pow(2) * s * fxyy + t.pow(3) * fyyy;
    }
    Poly a12() const { return fxy.pow(2) * fxxx - Poly(2) * fxx * fxy * fxxy + fxx.pow(2) * fxyy; }
    Poly a04() const {
        Poly s = fxy, t = fxx;
        return s.pow(4) * fxxxx - Poly(4) * t * s.pow(3) * fxxxy + Poly(6) * t.pow(2) * s.pow(2) * fxxyy -
               Poly(4) * t.pow(3) * s * fxyyy + t.pow(4) * fyyyy;
    }
};

inline Poly hess_poly(const Poly& f) { return Derivatives::of(f).hess(); }
inline Poly k_poly(const Poly& f) { return Derivatives::of(f).k(); }

struct TacnodeInvariants {
    Poly f, fx, fy, fxx, hess, k, a12, a04, discriminant;  // discriminant = a12^2 - 4 fxx a04
};

struct PlanePoint {
    Poly x, y;
};

// Values at p, reduced modulo R when given.
inline TacnodeInvariants tacnode_invariants(const Poly& f, const PlanePoint& p, const TriangularRelations* R = nullptr,
                                            const std::string& xv = "x", const std::string& yv = "y") {
    auto red = [&](const Poly& q) { return R ? R->reduce(q) : q; };
    Derivatives d = Derivatives::of(f, xv, yv).map([&](const Poly& q) { return red(q.evaluate({{xv, p.x}, {yv, p.y}})); });
    TacnodeInvariants t;
    t.f = d.f;
    t.fx = d.fx;
    t.fy = d.fy;
    t.fxx = d.fxx;
    t.hess = red(d.hess());
    t.k = red(d.k());
    t.a12 = red(d.a12());
    t.a04 = red(d.a04());
    t.discriminant = red(t.a12 * t.a12 - Poly(4) * t.fxx * t.a04);
    return t;
}

enum class Singularity { NotSingular, PreconditionViolated, Node, Cusp, Tacnode, DegenerateOrHigher };

inline std::string to_string(Singularity s) {
    switch (s) {
        case Singularity::NotSingular: return "NotSingular";
        case Singularity::PreconditionViolated: return "PreconditionViolated";
        case Singularity::Node: return "Node";
        case Singularity::Cusp: return "Cusp";
        case Singularity::Tacnode: return "Tacnode";
        case Singularity::DegenerateOrHigher: return "DegenerateOrHigher";
    }
    return "?";
}

// Values are compared with zero as elements of the (quotient) ring.
inline Singularity classify_invariants(const TacnodeInvariants& t) {
    if (!t.f.is_zero() || !t.fx.is_zero() || !t.fy.is_zero()) return Singularity::NotSingular;
    if (t.fxx.is_zero()) return Singularity::PreconditionViolated;
    if (!t.hess.is_zero()) return Singularity::Node;
    if (!t.k.is_zero()) return Singularity::Cusp;
    if (!t.discriminant.is_zero()) return Singularity::Tacnode;
    return Singularity::DegenerateOrHigher;
}

inline Singularity tacnode_check(const Poly& f, const PlanePoint& p, const TriangularRelations* R = nullptr,
                                 const std::string& xv = "x", const std::string& yv = "y") {
    return classify_invariants(tacnode_invariants(f, p, R, xv, yv));
}

// In the coordinates x = (u - f_xy(p) v) / f_xx(p) + p.x, y = v + p.y the derivatives of
// f at the origin are f_uu = 1/f_xx, f_uv = 0, f_vv = Hess/f_xx, f_uvv = a12/f_xx^3,
// f_vvv = K/f_xx^3, f_vvvv = a04/f_xx^4. Returns the six differences, all 0 when the closed
// forms are right. Requires f_xx(p) != 0.
inline std::vector<Poly> normal_coordinate_residuals(const Poly& f, const PlanePoint& p) {
    Derivatives d = Derivatives::of(f).map([&](const Poly& q) { return q.evaluate({{"x", p.x}, {"y", p.y}}); });
    if (d.fxx.is_zero()) throw std::domain_error("f_xx vanishes at the point");
    Scalar t = d.fxx.value();
    Poly u = var("u"), v = var("v");
    Poly g = f.evaluate({{"x", (u - d.fxy * v) / t + p.x}, {"y", v + p.y}});
    auto at0 = [](const Poly& q) { return q.evaluate({{"u", Poly(0)}, {"v", Poly(0)}}); };
    Poly gu = g.derivative("u"), gv = g.derivative("v");
    Poly one(1);
    return {at0(gu.derivative("u")) - one / t,
            at0(gu.derivative("v")),
            at0(gv.derivative("v")) - d.hess() / t,
            at0(gu.derivative("v", 2)) - d.a12() / (t * t * t),
            at0(gv.derivative("v", 2)) - d.k() / (t * t * t),
            at0(gv.derivative("v", 3)) - d.a04() / (t * t * t * t)};
}

// True when p has no common root with the univariate modulus m, i.e. p is a unit in Q(i)[v]/(m).
inline bool nonzero_at_every_root(const Poly& p, const Poly& m, const std::string& v) {
    if (p.is_zero()) return false;
    if (p.is_constant()) return true;
    Poly g = poly_gcd(p, m, v);
    return g.is_constant();
}

}  // namespace tropitac::algebra
