// tropitac/elimination.hpp - scripted elimination with a recorded transcript
#pragma once

#include "poly.hpp"
#include "singularity.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropitac::algebra {

struct NamedPoly {
    std::string name;
    Poly poly;
};

// A displayed equation compared against the recomputed one (up to a unit).
struct DisplayCheck {
    std::string label, printed, computed;
    bool matched = false;
    bool corrected = false;  // printed form is wrong, the stated correction matches
    std::string note;
};

struct EliminationStep {
    std::string action;
    std::vector<NamedPoly> system;
};

// var^power = numerator / denominator
struct SolvedVariable {
    std::string var;
    std::uint32_t power = 1;
    std::string from;
    Poly numerator, denominator;
};

struct EliminationTranscript {
    std::string case_id;
    std::vector<EliminationStep> steps;
    std::vector<SolvedVariable> solved;
    std::vector<std::string> assumptions;
    std::vector<DisplayCheck> checks;
    std::vector<NamedPoly> final_relations;
    std::vector<NamedPoly> solution;
    std::vector<std::string> contradictions;

    bool ok() const {
        return std::all_of(checks.begin(), checks.end(), [](const DisplayCheck& c) { return c.matched || c.corrected; });
    }
    const Poly* value(const std::string& v) const {
        for (const auto& s : solution)
            if (s.name == v) return &s.poly;
        return nullptr;
    }
    const Poly* relation(const std::string& name) const {
        for (const auto& r : final_relations)
            if (r.name == name) return &r.poly;
        return nullptr;
    }
};

struct SolveOptions {
    std::uint32_t power = 1;
    bool keep = false;          // leave the source equation in the system
    std::string suffix = "'";   // appended to the names of the remaining equations
};

class Eliminator {
public:
    Eliminator(std::string case_id, std::set<std::string> nonzero) : nonzero_(std::move(nonzero)) {
        t_.case_id = std::move(case_id);
        std::string vs;
        for (const auto& v : nonzero_) vs += (vs.empty() ? "" : ", ") + v;
        if (!vs.empty()) t_.assumptions.push_back(vs + " nonzero");
    }

    const std::set<std::string>& nonzero() const { return nonzero_; }

    // Strip monomial factors in variables known to be nonzero, then fix the constant.
    Poly normalize(const Poly& p) const {
        if (p.is_zero()) return p;
        return p.divide_monomial(p.monomial_content(nonzero_)).primitive();
    }
    bool same_up_to_unit(const Poly& a, const Poly& b) const { return normalize(a) == normalize(b); }

    void add(const std::string& name, const Poly& p) { system_.push_back({name, p}); }

    const Poly& equation(const std::string& name) const {
        for (const auto& e : system_)
            if (e.name == name) return e.poly;
        for (const auto& e : relations_)
            if (e.name == name) return e.poly;
        throw std::out_of_range("no equation named " + name);
    }
    bool has(const std::string& name) const {
        return std::any_of(system_.begin(), system_.end(), [&](const NamedPoly& e) { return e.name == name; });
    }
    const std::vector<NamedPoly>& system() const { return system_; }

    void snapshot(const std::string& action) { t_.steps.push_back({action, system_}); }

    // Solve var^power from eq, which must read a * var^power + b with a, b free of var,
    // and substitute into everything else, clearing denominators.
    const SolvedVariable& solve(const std::string& v, const std::string& eq, SolveOptions opt = {}) {
        auto it = find(eq);
        Poly e = it->poly;
        e = e.divide_monomial(e.monomial_content(nonzero_));
        for (std::uint32_t k = 1; k <= e.degree(v); ++k)
            if (k != opt.power && !e.coeff(v, k).is_zero())
                throw std::invalid_argument(eq + " is not linear in " + power_name(v, opt.power));
        Poly a = e.coeff(v, opt.power), b = e.coeff(v, 0);
        if (a.is_zero()) throw std::domain_error("cannot solve " + power_name(v, opt.power) + " from " + eq + ": coefficient is identically zero");
        Poly num = -b, den = a;
        note_nonzero(den, "denominator of " + power_name(v, opt.power));

        std::vector<NamedPoly> rest;
        std::set<std::string> was_constant;
        for (auto& x : system_) {
            if (x.name != eq) {
                rest.push_back({primed(x.name, opt.suffix), substitute(x.poly, v, opt.power, num, den)});
                if (normalize(x.poly).is_constant()) was_constant.insert(rest.back().name);
            } else if (opt.keep) {
                rest.push_back({eq, e});
            }
        }
        for (auto& r : relations_) r.poly = normalize(substitute(r.poly, v, opt.power, num, den));
        if (!opt.keep && opt.power > 1) relations_.push_back({eq, normalize(e)});
        system_.clear();
        for (auto& r : rest) settle(r, !was_constant.count(r.name));
        t_.solved.push_back({v, opt.power, eq, num, den});
        snapshot("solve " + power_name(v, opt.power) + " = (" + num.str() + ") / (" + den.str() + ") from " + eq);
        return t_.solved.back();
    }

    // Replace v^p by w everywhere, recording w - v^p as a relation.
    void rename_power(const std::string& v, std::uint32_t p, const std::string& w) {
        for (auto& e : system_) e.poly = rename(e.poly, v, p, w);
        relations_.push_back({w + " = " + power_name(v, p), var(w) - var(v, p)});
        snapshot("substitute " + w + " = " + power_name(v, p));
    }

    // Drop the factor (linear in some variable) from eq; on its zero set the witness
    // equation becomes a nonzero constant times a nonzero monomial.
    void discard_factor(const std::string& eq, const Poly& factor, const std::string& witness) {
        auto it = find(eq);
        Poly q = it->poly;
        int k = 0;
        for (;;) {
            auto [quot, rem] = exact_divide(q, factor);
            if (!rem) break;
            q = quot;
            ++k;
        }
        if (k == 0) throw std::invalid_argument(factor.str() + " does not divide " + eq);
        std::string v;
        for (const auto& u : factor.variables())
            if (factor.degree(u) == 1) {
                v = u;
                break;
            }
        if (v.empty()) throw std::invalid_argument("factor " + factor.str() + " is not linear in any variable");
        Poly r = normalize(substitute(equation(witness), v, 1, -factor.coeff(v, 0), factor.coeff(v, 1)));
        if (r.is_zero() || !r.is_constant())
            throw std::domain_error("branch " + factor.str() + " = 0 is not excluded by " + witness + " (residual " + r.str() + ")");
        it->poly = normalize(q);
        std::string a = factor.str() + " != 0 (on " + factor.str() + " = 0, " + witness + " is a nonzero constant)";
        if (std::find(t_.assumptions.begin(), t_.assumptions.end(), a) == t_.assumptions.end()) t_.assumptions.push_back(a);
        snapshot("discard factor " + factor.str() + " of " + eq);
    }

    // Replace eq = c * root^k by root.
    void take_root(const std::string& eq, const Poly& root) {
        auto it = find(eq);
        Poly target = normalize(it->poly);
        Poly pw = root;
        for (int k = 1; k <= 16; ++k, pw = pw * root)
            if (normalize(pw) == target) {
                it->poly = normalize(root);
                snapshot("take root of " + eq);
                return;
            }
        throw std::invalid_argument(eq + " is not a power of " + root.str());
    }

    // Add sum c_i * eq_i under a new name.
    const Poly& combine(const std::string& name, const std::vector<std::pair<std::string, Poly>>& terms) {
        Poly s;
        std::string how;
        for (const auto& [eq, c] : terms) {
            s += c * equation(eq);
            how += (how.empty() ? "" : " + ") + ("(" + c.str() + ") * " + eq);
        }
        system_.push_back({name, normalize(s)});
        snapshot(name + " := " + how);
        return system_.back().poly;
    }

    DisplayCheck& check(const std::string& label, const std::string& eq, const std::string& printed) {
        DisplayCheck c;
        c.label = label;
        c.printed = printed;
        c.computed = normalize(equation(eq)).str();
        c.matched = same_up_to_unit(equation(eq), parse_poly(printed));
        t_.checks.push_back(c);
        return t_.checks.back();
    }

    // The printed display is known to be wrong; the correction must match instead.
    DisplayCheck& check_corrected(const std::string& label, const std::string& eq, const std::string& printed,
                                  const std::string& correction, const std::string& note) {
        DisplayCheck& c = check(label, eq, printed);
        if (!c.matched) c.corrected = same_up_to_unit(equation(eq), parse_poly(correction));
        c.note = note + "; corrected form " + correction;
        return c;
    }

    // Compare a solved expression num/den with a printed fraction.
    DisplayCheck& check_solved(const std::string& label, const std::string& v, const std::string& printed_num,
                               const std::string& printed_den = "1") {
        const SolvedVariable& s = solved(v);
        DisplayCheck c;
        c.label = label;
        c.printed = printed_den == "1" ? printed_num : "(" + printed_num + ") / (" + printed_den + ")";
        c.computed = "(" + s.numerator.str() + ") / (" + s.denominator.str() + ")";
        c.matched = s.numerator * parse_poly(printed_den) == s.denominator * parse_poly(printed_num);
        t_.checks.push_back(c);
        return t_.checks.back();
    }
    DisplayCheck& check_solved_corrected(const std::string& label, const std::string& v, const std::string& printed,
                                         const std::string& correction, const std::string& note) {
        DisplayCheck& c = check_solved(label, v, printed);
        const SolvedVariable& s = solved(v);
        if (!c.matched) c.corrected = s.numerator == s.denominator * parse_poly(correction);
        c.note = note + "; corrected form " + correction;
        return c;
    }

    const SolvedVariable& solved(const std::string& v) const {
        for (auto it = t_.solved.rbegin(); it != t_.solved.rend(); ++it)
            if (it->var == v && it->power == 1) return *it;
        throw std::out_of_range("variable " + v + " was not solved");
    }

    // Values of the solved variables, last solved first, given values for the free ones.
    // Denominators are inverted modulo a univariate rule of R when they are not constant.
    std::vector<NamedPoly> back_substitute(const std::map<std::string, Poly>& point, const TriangularRelations* R = nullptr) {
        std::map<std::string, Poly> values = point;
        std::vector<NamedPoly> out;
        for (auto it = t_.solved.rbegin(); it != t_.solved.rend(); ++it) {
            if (it->power != 1) continue;
            Poly num = detail::reduced(it->numerator.evaluate(values), R);
            Poly den = detail::reduced(it->denominator.evaluate(values), R);
            Poly val = detail::reduced(num * invert(den, R), R);
            values[it->var] = val;
            out.push_back({it->var, val});
        }
        std::reverse(out.begin(), out.end());
        t_.solution = out;
        return out;
    }

    void assume(const std::string& what) { t_.assumptions.push_back(what); }
    void contradiction(const std::string& what) { t_.contradictions.push_back(what); }

    EliminationTranscript transcript() const {
        EliminationTranscript t = t_;
        t.final_relations.clear();
        for (const auto& r : relations_) t.final_relations.push_back({r.name, normalize(r.poly)});
        for (const auto& e : system_) t.final_relations.push_back({e.name, normalize(e.poly)});
        return t;
    }

private:
    std::set<std::string> nonzero_;
    std::vector<NamedPoly> system_, relations_;
    EliminationTranscript t_;

    // "(2)" -> "(2')"
    static std::string primed(const std::string& name, const std::string& suffix) {
        if (!name.empty() && name.back() == ')') return name.substr(0, name.size() - 1) + suffix + ")";
        return name + suffix;
    }

    static std::string power_name(const std::string& v, std::uint32_t p) {
        return p == 1 ? v : v + "^" + std::to_string(p);
    }

    std::vector<NamedPoly>::iterator find(const std::string& name) {
        auto it = std::find_if(system_.begin(), system_.end(), [&](const NamedPoly& e) { return e.name == name; });
        if (it == system_.end()) throw std::out_of_range("no equation named " + name);
        return it;
    }

    // den^Q * g with v^p -> num/den, Q the largest power of v^p occurring
    static Poly substitute(const Poly& g, const std::string& v, std::uint32_t p, const Poly& num, const Poly& den) {
        std::uint32_t d = g.degree(v);
        if (d == 0) return g;
        std::uint32_t Q = d / p;
        Poly out;
        for (std::uint32_t e = 0; e <= d; ++e) {
            Poly c = g.coeff(v, e);
            if (c.is_zero()) continue;
            std::uint32_t q = e / p, r = e % p;
            out += c * var(v, r) * num.pow(q) * den.pow(Q - q);
        }
        return out;
    }

    static Poly rename(const Poly& g, const std::string& v, std::uint32_t p, const std::string& w) {
        Poly out;
        for (std::uint32_t e = 0; e <= g.degree(v); ++e) {
            Poly c = g.coeff(v, e);
            if (c.is_zero()) continue;
            if (e % p) throw std::invalid_argument("power of " + v + " not divisible by " + std::to_string(p) + " in " + g.str());
            out += c * var(w, e / p);
        }
        return out;
    }

    static std::pair<Poly, bool> exact_divide(const Poly& a, const Poly& b) {
        try {
            return {divide_exact(a, b), true};
        } catch (const std::exception&) {
            return {Poly(), false};
        }
    }

    // Record den != 0 unless it is obviously nonzero.
    void note_nonzero(const Poly& den, const std::string& what) {
        Poly s = den.divide_monomial(den.monomial_content(nonzero_));
        if (s.is_constant()) return;
        std::string a = normalize(s).str() + " != 0 (" + what + ")";
        if (std::find(t_.assumptions.begin(), t_.assumptions.end(), a) == t_.assumptions.end()) t_.assumptions.push_back(a);
    }

    // Normalize; an equation newly reduced to a nonzero constant is a contradiction.
    void settle(NamedPoly r, bool fresh) {
        Poly n = normalize(r.poly);
        if (n.is_zero()) return;
        if (!n.is_constant())
            r.poly = n;
        else if (fresh)
            t_.contradictions.push_back(r.name + " reduces to " + r.poly.str() + ", which is nonzero");
        system_.push_back(std::move(r));
    }

    static Poly invert(const Poly& den, const TriangularRelations* R) {
        if (den.is_zero()) throw std::domain_error("back substitution divides by zero");
        if (den.is_constant()) return Poly(Gaussian(1) / den.value());
        if (R) {
            for (const auto& rule : R->rules()) {
                if (rule.lead.size() != 1) continue;
                const auto& [v, d] = *rule.lead.begin();
                const auto& rv = rule.replacement.variables();
                if (std::any_of(rv.begin(), rv.end(), [&](const std::string& u) { return u != v; })) continue;
                const auto& dv = den.variables();
                if (std::any_of(dv.begin(), dv.end(), [&](const std::string& u) { return u != v; })) continue;
                return inverse_mod(den, var(v, d) - rule.replacement, v);
            }
        }
        throw std::domain_error("cannot invert " + den.str() + " in the quotient ring");
    }
};

}  // namespace tropitac::algebra
