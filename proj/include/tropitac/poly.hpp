// tropitac/poly.hpp - sparse multivariate polynomials over Q(i)
#pragma once

#include "rational.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tropitac::algebra {

using Scalar = Gaussian;

// Raised when inverting a non-unit of a quotient ring.
struct ZeroDivisorError : std::domain_error {
    ZeroDivisorError(const std::string& element, const std::string& modulus)
        : std::domain_error("zero divisor " + element + " modulo " + modulus), element(element) {}
    std::string element;
};

class Poly {
public:
    using Exps = std::vector<std::uint32_t>;
    using Terms = std::map<Exps, Scalar>;

    Poly() = default;
    Poly(long long c) : Poly(Scalar(c)) {}  // NOLINT
    Poly(const Rational& c) : Poly(Scalar(c)) {}  // NOLINT
    Poly(const Scalar& c) {  // NOLINT
        if (!c.is_zero()) terms_.emplace(Exps{}, c);
    }

    static Poly var(const std::string& name, std::uint32_t power = 1) {
        if (power == 0) return Poly(1);
        Poly p;
        p.vars_ = {name};
        p.terms_.emplace(Exps{power}, Scalar(1));
        return p;
    }

    // c * prod vars[k]^e[k]; vars need not be sorted
    static Poly term(const Scalar& c, const std::vector<std::string>& vars, const Exps& e) {
        Poly p(c);
        for (std::size_t k = 0; k < vars.size(); ++k)
            if (e[k] != 0) p *= var(vars[k], e[k]);
        return p;
    }

    const std::vector<std::string>& variables() const { return vars_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return vars_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool uses(std::string_view v) const { return index_of(v).has_value(); }

    Scalar constant_term() const {
        auto it = terms_.find(Exps(vars_.size(), 0));
        return it == terms_.end() ? Scalar(0) : it->second;
    }
    // Value of a constant polynomial.
    Scalar value() const {
        if (!is_constant()) throw std::logic_error("polynomial " + str() + " is not constant");
        return constant_term();
    }

    std::uint32_t degree(std::string_view v) const {
        auto k = index_of(v);
        if (!k) return 0;
        std::uint32_t d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[*k]);
        return d;
    }
    std::uint32_t total_degree() const {
        std::uint32_t d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, sum(e));
        return d;
    }

    // Coefficient of v^k as a polynomial in the remaining variables.
    Poly coeff(std::string_view v, std::uint32_t k) const {
        auto idx = index_of(v);
        if (!idx) return k == 0 ? *this : Poly();
        Poly out;
        out.vars_ = vars_;
        for (const auto& [e, c] : terms_) {
            if (e[*idx] != k) continue;
            Exps f = e;
            f[*idx] = 0;
            out.terms_.emplace(std::move(f), c);
        }
        out.trim();
        return out;
    }
    std::vector<Poly> coefficients(std::string_view v) const {
        std::vector<Poly> out(degree(v) + 1);
        for (std::uint32_t k = 0; k < out.size(); ++k) out[k] = coeff(v, k);
        return out;
    }

    Poly derivative(std::string_view v, std::uint32_t times = 1) const {
        auto idx = index_of(v);
        if (!idx) return times == 0 ? *this : Poly();
        Poly out;
        out.vars_ = vars_;
        for (const auto& [e, c] : terms_) {
            if (e[*idx] < times) continue;
            long long f = 1;
            for (std::uint32_t t = 0; t < times; ++t) f *= e[*idx] - t;
            Exps g = e;
            g[*idx] -= times;
            out.terms_.emplace(std::move(g), c * Scalar(f));
        }
        out.trim();
        return out;
    }

    // Simultaneous substitution of variables by polynomials.
    Poly evaluate(const std::map<std::string, Poly>& values) const {
        std::vector<const Poly*> sub(vars_.size(), nullptr);
        bool any = false;
        for (std::size_t k = 0; k < vars_.size(); ++k) {
            auto it = values.find(vars_[k]);
            if (it != values.end()) {
                sub[k] = &it->second;
                any = true;
            }
        }
        if (!any) return *this;
        std::vector<std::vector<Poly>> powers(vars_.size());
        auto power = [&](std::size_t k, std::uint32_t e) -> const Poly& {
            auto& cache = powers[k];
            if (cache.empty()) cache.push_back(Poly(1));
            while (cache.size() <= e) cache.push_back(cache.back() * *sub[k]);
            return cache[e];
        };
        Poly out;
        for (const auto& [e, c] : terms_) {
            Exps rest(vars_.size(), 0);
            Poly t;
            std::vector<std::pair<std::size_t, std::uint32_t>> subs;
            for (std::size_t k = 0; k < vars_.size(); ++k) {
                if (sub[k])
                    subs.push_back({k, e[k]});
                else
                    rest[k] = e[k];
            }
            t.vars_ = vars_;
            t.terms_.emplace(std::move(rest), c);
            t.trim();
            for (auto [k, d] : subs)
                if (d) t *= power(k, d);
            out += t;
        }
        return out;
    }
    Poly substitute(const std::string& v, const Poly& value) const { return evaluate({{v, value}}); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    Poly& operator+=(const Poly& o) { return accumulate(o, false); }
    Poly& operator-=(const Poly& o) { return accumulate(o, true); }
    Poly& operator*=(const Poly& o) {
        *this = multiply(*this, o);
        return *this;
    }
    Poly& operator*=(const Scalar& s) {
        if (s.is_zero()) return *this = Poly();
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }
    Poly& operator/=(const Scalar& s) { return *this *= s.inverse(); }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) { return multiply(a, b); }
    friend Poly operator/(Poly a, const Scalar& s) { return a /= s; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.vars_ == b.vars_ && a.terms_ == b.terms_; }

    Poly pow(std::uint32_t e) const {
        Poly r(1), b = *this;
        while (e) {
            if (e & 1u) r *= b;
            e >>= 1u;
            if (e) b *= b;
        }
        return r;
    }

    // Leading term in lex order with variables compared alphabetically.
    std::pair<Exps, Scalar> leading() const {
        if (is_zero()) throw std::logic_error("zero polynomial has no leading term");
        return *terms_.rbegin();
    }
    Scalar leading_coefficient() const { return leading().second; }

    // Exponent of the largest monomial in the given variables dividing every term.
    std::map<std::string, std::uint32_t> monomial_content(const std::set<std::string>& among) const {
        std::map<std::string, std::uint32_t> out;
        if (is_zero()) return out;
        for (std::size_t k = 0; k < vars_.size(); ++k) {
            if (!among.count(vars_[k])) continue;
            std::uint32_t m = UINT32_MAX;
            for (const auto& [e, c] : terms_) m = std::min(m, e[k]);
            if (m) out[vars_[k]] = m;
        }
        return out;
    }
    Poly divide_monomial(const std::map<std::string, std::uint32_t>& mono) const {
        Poly out;
        out.vars_ = vars_;
        for (const auto& [e, c] : terms_) {
            Exps f = e;
            for (std::size_t k = 0; k < vars_.size(); ++k) {
                auto it = mono.find(vars_[k]);
                if (it == mono.end()) continue;
                if (f[k] < it->second) throw std::domain_error("monomial does not divide " + str());
                f[k] -= it->second;
            }
            out.terms_.emplace(std::move(f), c);
        }
        out.trim();
        return out;
    }

    // Leading coefficient 1.
    Poly monic() const { return is_zero() ? *this : *this / leading_coefficient(); }

    // Integer coefficients with gcd 1 and positive leading coefficient when all coefficients are
    // rational; otherwise monic.
    Poly primitive() const {
        if (is_zero()) return *this;
        Integer den = 1, num = 0;
        for (const auto& [e, c] : terms_) {
            if (!c.is_real()) return monic();
            den = lcm(den, boost::multiprecision::denominator(c.re()));
        }
        for (const auto& [e, c] : terms_)
            num = boost::multiprecision::gcd(num, boost::multiprecision::numerator(c.re()) * (den / boost::multiprecision::denominator(c.re())));
        Rational f(den, num);
        if (leading_coefficient().re() < 0) f = -f;
        return *this * Poly(f);
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::vector<std::pair<Exps, Scalar>> ts(terms_.begin(), terms_.end());
        std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
            if (sum(a.first) != sum(b.first)) return sum(a.first) < sum(b.first);
            return a.first > b.first;
        });
        std::string out;
        for (std::size_t t = 0; t < ts.size(); ++t) {
            const auto& [e, c] = ts[t];
            bool neg = c.is_real() && c.re() < 0;
            Scalar a = neg ? -c : c;
            if (t == 0)
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            std::string mono;
            for (std::size_t k = 0; k < vars_.size(); ++k) {
                if (!e[k]) continue;
                if (!mono.empty()) mono += " * ";
                mono += vars_[k];
                if (e[k] > 1) mono += "^" + std::to_string(e[k]);
            }
            if (mono.empty())
                out += a.str();
            else if (a == Scalar(1))
                out += mono;
            else
                out += a.str() + " * " + mono;
        }
        return out;
    }

private:
    static std::uint32_t sum(const Exps& e) {
        std::uint32_t s = 0;
        for (auto x : e) s += x;
        return s;
    }

    std::optional<std::size_t> index_of(std::string_view v) const {
        auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
        if (it == vars_.end() || *it != v) return std::nullopt;
        return static_cast<std::size_t>(it - vars_.begin());
    }

    // Drop variables that no longer occur.
    void trim() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->second.is_zero())
                it = terms_.erase(it);
            else
                ++it;
        }
        std::vector<bool> used(vars_.size(), false);
        for (const auto& [e, c] : terms_)
            for (std::size_t k = 0; k < e.size(); ++k)
                if (e[k]) used[k] = true;
        if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
        std::vector<std::string> nv;
        for (std::size_t k = 0; k < vars_.size(); ++k)
            if (used[k]) nv.push_back(vars_[k]);
        Terms nt;
        for (auto& [e, c] : terms_) {
            Exps f;
            f.reserve(nv.size());
            for (std::size_t k = 0; k < e.size(); ++k)
                if (used[k]) f.push_back(e[k]);
            nt.emplace(std::move(f), std::move(c));
        }
        vars_ = std::move(nv);
        terms_ = std::move(nt);
    }

    static std::vector<std::string> merged(const std::vector<std::string>& a, const std::vector<std::string>& b) {
        std::vector<std::string> out;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return out;
    }

    static std::vector<std::size_t> positions(const std::vector<std::string>& sub, const std::vector<std::string>& all) {
        std::vector<std::size_t> pos;
        pos.reserve(sub.size());
        for (const auto& v : sub) pos.push_back(static_cast<std::size_t>(std::lower_bound(all.begin(), all.end(), v) - all.begin()));
        return pos;
    }

    static Exps lift(const Exps& e, const std::vector<std::size_t>& pos, std::size_t n) {
        Exps f(n, 0);
        for (std::size_t k = 0; k < e.size(); ++k) f[pos[k]] = e[k];
        return f;
    }

    Poly& accumulate(const Poly& o, bool negate) {
        if (o.is_zero()) return *this;
        if (vars_ != o.vars_) {
            auto nv = merged(vars_, o.vars_);
            if (nv != vars_) {
                auto pos = positions(vars_, nv);
                Terms nt;
                for (auto& [e, c] : terms_) nt.emplace(lift(e, pos, nv.size()), std::move(c));
                terms_ = std::move(nt);
                vars_ = nv;
            }
        }
        auto pos = positions(o.vars_, vars_);
        bool same = o.vars_ == vars_;
        for (const auto& [e, c] : o.terms_) {
            auto [it, fresh] = terms_.try_emplace(same ? e : lift(e, pos, vars_.size()));
            if (negate)
                it->second -= c;
            else
                it->second += c;
        }
        trim();
        return *this;
    }

    static Poly multiply(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        Poly out;
        out.vars_ = merged(a.vars_, b.vars_);
        auto pa = positions(a.vars_, out.vars_);
        auto pb = positions(b.vars_, out.vars_);
        std::vector<Exps> eb;
        eb.reserve(b.terms_.size());
        for (const auto& [e, c] : b.terms_) eb.push_back(lift(e, pb, out.vars_.size()));
        for (const auto& [ea, ca] : a.terms_) {
            Exps la = lift(ea, pa, out.vars_.size());
            std::size_t k = 0;
            for (const auto& [e, cb] : b.terms_) {
                Exps f = la;
                for (std::size_t t = 0; t < f.size(); ++t) f[t] += eb[k][t];
                ++k;
                auto [it, fresh] = out.terms_.try_emplace(std::move(f));
                it->second += ca * cb;
            }
        }
        out.trim();
        return out;
    }

    std::vector<std::string> vars_;  // sorted
    Terms terms_;                    // exponent vectors aligned with vars_
};

inline Poly var(const std::string& name, std::uint32_t power = 1) { return Poly::var(name, power); }

// Exact division; throws std::domain_error when b does not divide a.
inline Poly divide_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    Poly q, r = a;
    auto [eb, cb] = b.leading();
    const auto& vb = b.variables();
    while (!r.is_zero()) {
        auto [er, cr] = r.leading();
        const auto& vr = r.variables();
        std::map<std::string, std::uint32_t> need;
        for (std::size_t k = 0; k < vb.size(); ++k) need[vb[k]] = eb[k];
        std::vector<std::string> mv;
        Poly::Exps me;
        for (std::size_t k = 0; k < vr.size(); ++k) {
            std::uint32_t have = er[k];
            auto it = need.find(vr[k]);
            std::uint32_t sub = it == need.end() ? 0 : it->second;
            if (have < sub) throw std::domain_error(b.str() + " does not divide " + a.str());
            if (it != need.end()) need.erase(it);
            mv.push_back(vr[k]);
            me.push_back(have - sub);
        }
        for (const auto& [v, e] : need)
            if (e) throw std::domain_error(b.str() + " does not divide " + a.str());
        Poly t = Poly::term(cr / cb, mv, me);
        q += t;
        r -= t * b;
    }
    return q;
}

// Rewriting rules lead -> replacement, terminating because every replacement term is
// lex-smaller than its lead in the stated variable order.
class TriangularRelations {
public:
    struct Rule {
        std::map<std::string, std::uint32_t> lead;
        Poly replacement;
    };

    TriangularRelations() = default;
    TriangularRelations(std::vector<std::string> order, std::vector<Rule> rules)
        : order_(std::move(order)), rules_(std::move(rules)) {
        for (const auto& r : rules_) {
            if (r.lead.empty()) throw std::invalid_argument("relation with constant leading monomial");
            for (const auto& [v, e] : r.lead)
                if (std::find(order_.begin(), order_.end(), v) == order_.end() || e == 0)
                    throw std::invalid_argument("leading monomial uses variable outside the order: " + v);
            auto lead = project(r.lead);
            const auto& vars = r.replacement.variables();
            for (const auto& [e, c] : r.replacement.terms()) {
                std::map<std::string, std::uint32_t> m;
                for (std::size_t k = 0; k < vars.size(); ++k)
                    if (e[k]) m[vars[k]] = e[k];
                if (!(project(m) < lead))
                    throw std::invalid_argument("relation " + describe(r) + " does not decrease in lex order; reduction may not terminate");
            }
        }
    }

    // Relation m(v) = 0 with m univariate in v; rewrites the top power of v.
    static TriangularRelations univariate(const std::string& v, const Poly& m) {
        for (const auto& u : m.variables())
            if (u != v) throw std::invalid_argument("relation " + m.str() + " is not univariate in " + v);
        std::uint32_t d = m.degree(v);
        if (d == 0) throw std::invalid_argument("constant relation");
        Poly monic = m / m.coeff(v, d).value();
        Rule r{{{v, d}}, Poly(var(v, d)) - monic};
        return TriangularRelations({v}, {r});
    }

    bool empty() const { return rules_.empty(); }
    const std::vector<Rule>& rules() const { return rules_; }
    const std::vector<std::string>& order() const { return order_; }

    // When the set is one univariate rule v^d -> r(v), the modulus v^d - r(v).
    std::optional<std::pair<std::string, Poly>> univariate_modulus() const {
        if (rules_.size() != 1 || rules_[0].lead.size() != 1) return std::nullopt;
        const auto& [v, d] = *rules_[0].lead.begin();
        for (const auto& u : rules_[0].replacement.variables())
            if (u != v) return std::nullopt;
        return std::pair{v, var(v, d) - rules_[0].replacement};
    }

    Poly reduce(const Poly& f) const {
        Poly cur = f;
        for (;;) {
            bool changed = false;
            Poly next;
            const auto& vars = cur.variables();
            for (const auto& [e, c] : cur.terms()) {
                const Rule* hit = nullptr;
                for (const auto& r : rules_) {
                    bool divides = true;
                    for (const auto& [v, d] : r.lead) {
                        auto it = std::lower_bound(vars.begin(), vars.end(), v);
                        if (it == vars.end() || *it != v || e[it - vars.begin()] < d) {
                            divides = false;
                            break;
                        }
                    }
                    if (divides) {
                        hit = &r;
                        break;
                    }
                }
                Poly t = Poly::term(c, vars, e);
                if (!hit) {
                    next += t;
                    continue;
                }
                changed = true;
                next += t.divide_monomial(hit->lead) * hit->replacement;
            }
            cur = std::move(next);
            if (!changed) return cur;
        }
    }

    std::string str() const {
        std::string out = "{";
        for (std::size_t k = 0; k < rules_.size(); ++k) {
            if (k) out += ", ";
            out += describe(rules_[k]);
        }
        return out + "}";
    }

private:
    std::vector<std::uint32_t> project(const std::map<std::string, std::uint32_t>& m) const {
        std::vector<std::uint32_t> out;
        for (const auto& v : order_) {
            auto it = m.find(v);
            out.push_back(it == m.end() ? 0 : it->second);
        }
        return out;
    }
    static std::string describe(const Rule& r) {
        std::string lead;
        for (const auto& [v, e] : r.lead) {
            if (!lead.empty()) lead += " * ";
            lead += v + (e > 1 ? "^" + std::to_string(e) : "");
        }
        return lead + " -> " + r.replacement.str();
    }

    std::vector<std::string> order_;
    std::vector<Rule> rules_;
};

inline Poly reduce_mod(const Poly& f, const TriangularRelations& R) { return R.reduce(f); }

// Quotient and remainder of u by v as polynomials in x, over a field of constants.
inline std::pair<Poly, Poly> divmod(const Poly& u, const Poly& v, const std::string& x) {
    if (v.is_zero()) throw std::domain_error("division by the zero polynomial");
    std::uint32_t dv = v.degree(x);
    Poly lc = v.coeff(x, dv);
    if (!lc.is_constant()) throw std::invalid_argument("leading coefficient " + lc.str() + " is not a constant");
    Scalar inv = lc.value().inverse();
    Poly q, r = u;
    while (!r.is_zero() && r.degree(x) >= dv) {
        std::uint32_t dr = r.degree(x);
        Poly t = r.coeff(x, dr) * Poly(inv) * var(x, dr - dv);
        q += t;
        r -= t * v;
    }
    return {q, r};
}

// Inverse of a modulo the univariate modulus m, both in the variable x.
inline Poly inverse_mod(const Poly& a, const Poly& m, const std::string& x) {
    for (const auto& u : a.variables())
        if (u != x) throw std::invalid_argument(a.str() + " is not univariate in " + x);
    // extended Euclid on (m, a)
    Poly r0 = m, r1 = divmod(a, m, x).second, s0 = Poly(0), s1 = Poly(1);
    if (r1.is_zero()) throw ZeroDivisorError(a.str(), m.str());
    while (!r1.is_constant()) {
        auto [q, r] = divmod(r0, r1, x);
        if (r.is_zero()) throw ZeroDivisorError(a.str(), m.str());
        Poly s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    return divmod(s1 / r1.value(), m, x).second;
}

namespace detail {

inline Poly invert_coefficient(const Poly& c, const TriangularRelations* R) {
    if (c.is_constant()) return Poly(c.value().inverse());
    if (R) {
        if (auto mod = R->univariate_modulus()) return inverse_mod(c, mod->second, mod->first);
    }
    throw std::invalid_argument("cannot invert coefficient " + c.str());
}

inline Poly reduced(const Poly& p, const TriangularRelations* R) { return R ? R->reduce(p) : p; }

inline std::uint32_t effective_degree(const Poly& p, const std::string& x) { return p.is_zero() ? 0 : p.degree(x); }

}  // namespace detail

// Monic gcd of u and v in x; coefficients live in Q(i)[other vars] modulo R.
inline Poly poly_gcd(Poly u, Poly v, const std::string& x, const TriangularRelations* R = nullptr) {
    u = detail::reduced(u, R);
    v = detail::reduced(v, R);
    if (u.is_zero() && v.is_zero()) return Poly();
    while (!v.is_zero()) {
        std::uint32_t dv = v.degree(x);
        Poly inv = detail::invert_coefficient(v.coeff(x, dv), R);
        Poly r = u;
        while (!r.is_zero() && r.degree(x) >= dv) {
            std::uint32_t dr = r.degree(x);
            Poly t = detail::reduced(r.coeff(x, dr) * inv, R) * var(x, dr - dv);
            r = detail::reduced(r - t * v, R);
        }
        u = std::move(v);
        v = std::move(r);
    }
    std::uint32_t du = u.degree(x);
    return detail::reduced(u * detail::invert_coefficient(u.coeff(x, du), R), R);
}

// Determinant by fraction-free elimination; entries are polynomials.
inline Poly determinant(std::vector<std::vector<Poly>> a) {
    std::size_t n = a.size();
    if (n == 0) return Poly(1);
    Poly prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a[p][k].is_zero()) ++p;
            if (p == n) return Poly();
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = divide_exact(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
            a[i][k] = Poly();
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

// Norm of g from Q(i)[rest][v]/(m(v)) down to Q(i)[rest]: determinant of multiplication by g.
inline Poly field_norm(const Poly& g, const std::string& v, const Poly& m) {
    auto R = TriangularRelations::univariate(v, m);
    std::uint32_t d = m.degree(v);
    std::vector<std::vector<Poly>> mat(d, std::vector<Poly>(d));
    for (std::uint32_t col = 0; col < d; ++col) {
        Poly img = R.reduce(g * var(v, col));
        for (std::uint32_t row = 0; row < d; ++row) mat[row][col] = img.coeff(v, row);
    }
    return determinant(std::move(mat));
}

// Largest squarefree divisor of a univariate polynomial over a field of characteristic 0, monic.
inline Poly squarefree_part(const Poly& p, const std::string& x) {
    Poly g = poly_gcd(p, p.derivative(x), x);
    return divmod(p, g, x).first.monic();
}

namespace detail {

class PolyParser {
public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    Poly parse() {
        Poly p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("polynomial parse error at column " + std::to_string(pos_ + 1) + ": " + msg);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    Poly expr() {
        Poly p = product();
        for (;;) {
            if (eat('+'))
                p += product();
            else if (eat('-'))
                p -= product();
            else
                return p;
        }
    }
    Poly product() {
        Poly p = unary();
        for (;;) {
            if (eat('*')) {
                p *= unary();
            } else if (eat('/')) {
                Poly d = unary();
                if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
                p /= d.value();
            } else {
                return p;
            }
        }
    }
    Poly unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    Poly power() {
        Poly p = primary();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            p = p.pow(static_cast<std::uint32_t>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
        }
        return p;
    }
    static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
    Poly primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
                ++pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            }
            Rational q;
            try {
                q = parse_rational(s_.substr(start, pos_ - start));
            } catch (const ParseError& e) {
                fail(e.what());
            }
            if (pos_ < s_.size() && s_[pos_] == 'i' && (pos_ + 1 == s_.size() || !ident_char(s_[pos_ + 1]))) {
                ++pos_;
                return Poly(Scalar(0, q));
            }
            return Poly(q);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            if (name == "i") return Poly(Scalar::i());
            return var(name);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

// Text format: sums of terms like "3/2 * x^2 * y", Gaussian literals "(-41/256+19/128i)",
// parentheses and integer powers; "i" denotes the imaginary unit.
inline Poly parse_poly(std::string_view text) { return detail::PolyParser(text).parse(); }

}  // namespace tropitac::algebra
