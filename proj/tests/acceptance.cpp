// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.
#include <tropitac/tropitac.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace tropitac;
using algebra::parse_poly;
using algebra::Poly;
using lattice::Int;
using lattice::ParallelFilter;

namespace {

struct Check {
    std::ostringstream why;
    bool ok = true;
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            if (ok) why << what;
            ok = false;
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string witness(const algebra::CaseVerdict& v, const std::string& key) { return v.get(key); }

// f, its gradient, Hess and K all vanish at the point, f_xx does not.
bool tacnode_by_evaluation(const std::string& f_text, const std::string& x, const std::string& y) {
    Poly f = parse_poly(f_text);
    auto d = algebra::Derivatives::of(f);
    std::map<std::string, Poly> at = {{"x", parse_poly(x)}, {"y", parse_poly(y)}};
    for (const Poly& q : {d.f, d.fx, d.fy, d.hess(), d.k()})
        if (!q.evaluate(at).is_zero()) return false;
    return !d.fxx.evaluate(at).is_zero();
}

Check criterion1() {
    Check c;
    struct Row {
        int m, I;
        std::vector<Int> lengths;
        ParallelFilter filter;
        std::size_t classes;
    };
    const std::vector<Row> rows = {
        {3, 3, {1, 1, 1}, ParallelFilter::Any, 2},          {3, 2, {2, 1, 1}, ParallelFilter::Any, 1},
        {3, 1, {2, 1, 1}, ParallelFilter::Any, 1},          {3, 0, {4, 1, 1}, ParallelFilter::Any, 1},
        {4, 2, {1, 1, 1, 1}, ParallelFilter::Parallel, 1},  {5, 1, {1, 1, 1, 1, 1}, ParallelFilter::Any, 1},
        {4, 2, {1, 1, 1, 1}, ParallelFilter::NonParallel, 3}, {4, 1, {2, 1, 1, 1}, ParallelFilter::Any, 1},
        {3, 1, {2, 2, 1}, ParallelFilter::Any, 0},          {3, 1, {3, 1, 1}, ParallelFilter::Any, 0},
        {3, 0, {2, 2, 1}, ParallelFilter::Any, 0},          {3, 0, {3, 2, 1}, ParallelFilter::Any, 0},
        {5, 0, {2, 1, 1, 1, 1}, ParallelFilter::Any, 0},    {4, 0, {2, 2, 1, 1}, ParallelFilter::NonParallel, 0},
        {4, 0, {1, 1, 1, 1}, ParallelFilter::NonParallel, 0},
    };
    for (const auto& r : rows) {
        auto t0 = Clock::now();
        auto found = lattice::enumerate_class(r.m, r.I, r.lengths, r.filter);
        std::ostringstream label;
        label << "m=" << r.m << " I=" << r.I << ": " << found.size() << " classes, expected " << r.classes;
        c.expect(found.size() == r.classes, label.str());
        c.expect(seconds_since(t0) < 10, label.str() + " too slow");
        for (const auto& P : found) {
            auto s = lattice::polygon_stats(P);
            c.expect(s.area2 == 2 * r.I + s.boundary_count - 2, "Pick identity fails on an enumerated polygon");
            c.expect(s.interior_count == r.I && s.num_edges == r.m, "enumerated polygon has the wrong shape");
        }
    }
    auto tri = lattice::enumerate_class(3, 3, {1, 1, 1});
    std::set<std::string> names;
    for (const auto& P : tri)
        if (auto t = lattice::catalog_match(P)) names.insert(t->name);
    c.expect(names == std::set<std::string>{"I", "II"}, "the two classes are not Delta_I and Delta_II");
    return c;
}

Check criterion2() {
    Check c;
    for (const auto& id : algebra::replay_case_ids()) {
        auto t0 = Clock::now();
        auto v = algebra::verify_case(id);
        c.expect(v.passed && v.verdict == "Tacnode", id + " is not a verified tacnode");
        c.expect(seconds_since(t0) < 1.0, id + " took over a second");
    }
    auto I = algebra::verify_case("I");
    c.expect(witness(I, "point") == "(8/5, y0)" && I.ring == "Q[y0]/(y0^7 - 64/25)", "I: x = 8/5, y^7 = 64/25");
    c.expect(algebra::verify_case("II").ring == "Q[y0]/(y0^14 + y0^7 + 1)", "II: y^14 + y^7 + 1");
    auto VI = algebra::verify_case("VI");
    Poly f6 = parse_poly(witness(VI, "f"));
    c.expect(witness(VI, "point") == "(1/8, y0)" && f6.coeff("x", 2).coeff("y", 3) == Poly(64) &&
                 f6.coeff("x", 1).coeff("y", 2) == parse_poly("-9*y0") && f6.coeff("x", 1).coeff("y", 1) == parse_poly("-9*y0^2"),
             "VI: x = 1/8, C = 64, A = -9/y0, B = -9/y0^2");
    auto VII = algebra::verify_case("VII");
    c.expect(witness(VII, "f") == parse_poly("1 + x + y - 4*x*y - 4*x^2*y - 4*x*y^2").str() &&
                 tacnode_by_evaluation(witness(VII, "f"), "-1/2", "-1/2"),
             "VII: (-1/2, -1/2) with A = B = C = -4");
    auto VIII = algebra::verify_case("VIII");
    c.expect(witness(VIII, "f") == parse_poly("1 + x + y + 75/64*x*y - 625/4096*x^2*y^2 + 3125/262144*x^3*y^3").str() &&
                 tacnode_by_evaluation(witness(VIII, "f"), "-8/5", "-8/5"),
             "VIII: (-8/5, -8/5), A = 75/64, B = -5^4/2^12, C = 5^5/8^6");
    auto IX = algebra::verify_case("IX");
    c.expect(tacnode_by_evaluation(witness(IX, "x0.f"), "(-6/5+2/5i)", "(2/5-4/5i)") &&
                 tacnode_by_evaluation(witness(IX, "x1.f"), "(-6/5-2/5i)", "(2/5+4/5i)"),
             "IX: the two conjugate points");
    c.expect(!algebra::verify_case("R_III").notes.empty(), "R_III: identity in D");
    return c;
}

Check criterion3() {
    Check c;
    for (const char* id : {"E_NEG", "NONREG_1", "NONREG_2", "NONREG_3", "NONREG_4", "NONREG_5", "NONISOL"}) {
        auto v = algebra::verify_case(id);
        c.expect(v.passed && v.verdict != "Tacnode", std::string(id) + " did not reproduce its obstruction");
    }
    c.expect(algebra::verify_case("E_NEG").get("contradiction").find("c01") != std::string::npos, "E_NEG: c01 = 0");
    c.expect(algebra::verify_case("NONREG_3").get("K") == parse_poly("48*x").str(), "NONREG_3: K(f) = 48x");
    c.expect(algebra::verify_case("NONREG_4").get("hess") == parse_poly("-c11^2").str(), "NONREG_4: Hess = -c11^2");
    auto nonisol = algebra::verify_case("NONISOL");
    c.expect(nonisol.get("c21*c00 - c20*c01") == "0", "NONISOL: c21 c00 = c20 c01");
    // (y + 1)(x +- 1)^2 is singular along a whole line
    for (const auto& [text, root] : std::vector<std::pair<std::string, std::string>>{{"(y + 1)*(x + 1)^2", "-1"},
                                                                                    {"(y + 1)*(x - 1)^2", "1"}}) {
        Poly f = parse_poly(text);
        auto d = algebra::Derivatives::of(f);
        for (const Poly& q : {d.f, d.fx, d.fy})
            c.expect(q.evaluate({{"x", parse_poly(root)}}).is_zero(), "NONISOL factorization");
        auto co = [&](int i, int j) { return f.coeff("x", i).coeff("y", j); };
        c.expect(co(2, 1) * co(0, 0) == co(2, 0) * co(0, 1), "NONISOL criterion on the factored form");
    }
    for (const auto& id : refine::edge_catalog_ids()) {
        auto e = refine::edge_entry(id);
        auto v = refine::edge_1tacnodal_check(id);
        c.expect(v.passed && v.verdict == (e.expect_tacnodal ? "IsTacnodalEdge" : "NotTacnodalEdge"), id + " verdict");
        if (!e.expect_tacnodal) {
            bool any = false;
            for (const auto& [k, w] : v.witness) any = any || k.find("contradiction") != std::string::npos;
            c.expect(any, id + " has no contradiction");
        }
    }
    auto l2 = refine::edge_1tacnodal_check("EDGE_2");
    c.expect(l2.get("eps=+1.contradiction") == "K' reduces to 48 * y^3, which is nonzero", "EDGE_2: 48y^3 = 0");
    return c;
}

const std::vector<tropical::TropicalPolynomial>& rank_corpus() {
    static const auto corpus = corpus::random_corpus(20240611, 500);
    return corpus;
}

Check criterion4() {
    Check c;
    auto t0 = Clock::now();
    int tp = 0;
    for (const auto& F : rank_corpus()) {
        c.expect(F.val.size() <= 12, "support larger than 12 points");
        auto cen = tropical::subdivision_census(tropical::dual_subdivision(F));
        c.expect(cen.rk >= cen.rkexp, "rank below rkexp");
        if (cen.is_TP) {
            ++tp;
            c.expect(cen.rk == cen.rkexp, "rank differs from rkexp on a TP subdivision");
        } else {
            c.expect(2 * (cen.rk - cen.rkexp) <= cen.script_N, "2(rank - rkexp) exceeds script N");
        }
    }
    c.expect(tp > 0 && tp < 500, "corpus does not mix TP and non-TP subdivisions");
    c.expect(seconds_since(t0) < 30, "over 30 seconds");
    return c;
}

Check criterion5() {
    Check c;
    for (const auto& F : rank_corpus()) {
        auto S = tropical::dual_subdivision(F);
        auto C = tropical::tropical_curve(S);
        auto d = tropical::verify_duality(C, S);
        c.expect(d.pass, "duality: " + d.message);
        for (const auto& r : tropical::balancing_residuals(C)) c.expect(r.x == 0 && r.y == 0, "unbalanced vertex");
    }
    return c;
}

Check criterion6() {
    Check c;
    for (const auto& kind : classify::kind_order()) {
        auto t0 = Clock::now();
        auto S = tropical::dual_subdivision(classify::realize_feature(kind));
        auto cls = classify::classify(S);
        c.expect(cls.verdict == classify::Verdict::TropicalOneTacnodal && cls.feature && cls.feature->kind == kind,
                 kind + ": wrong verdict");
        c.expect(cls.census.rk == static_cast<Int>(S.newton.lattice_points().size()) - 4, kind + ": rank is not #Delta_Z - 4");
        c.expect(seconds_since(t0) < 1.0, kind + " took over a second");
    }
    return c;
}

Check criterion7() {
    Check c;
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
    int done = 0;
    while (done < 100) {
        Poly f;
        for (int i = 0; i <= 4; ++i)
            for (int j = 0; i + j <= 4; ++j)
                f += Poly(Rational(num(rng), den(rng))) * algebra::var("x", i) * algebra::var("y", j);
        algebra::PlanePoint p{Poly(Rational(num(rng), den(rng))), Poly(Rational(num(rng), den(rng)))};
        if (f.derivative("x", 2).evaluate({{"x", p.x}, {"y", p.y}}).is_zero()) continue;
        auto res = algebra::normal_coordinate_residuals(f, p);
        c.expect(res.size() == 6, "expected six identities");
        for (const auto& r : res) c.expect(r.is_zero(), "identity fails on " + f.str());
        ++done;
    }
    return c;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
        {"1 polygon classes by exhaustive enumeration", criterion1},
        {"2 tacnode witnesses", criterion2},
        {"3 negative results and edge catalog", criterion3},
        {"4 rank properties on 500 random supports", criterion4},
        {"5 duality and balancing on the same corpus", criterion5},
        {"6 realized features for all ten kinds", criterion6},
        {"7 change-of-coordinates identities on 100 quartics", criterion7},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        auto t0 = Clock::now();
        Check c;
        try {
            c = run();
        } catch (const std::exception& e) {
            c.ok = false;
            c.why << "exception: " << e.what();
        }
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.2fs", seconds_since(t0));
        std::cout << (c.ok ? "PASS " : "FAIL ") << name << " (" << secs << ")";
        if (!c.ok) std::cout << ": " << c.why.str();
        std::cout << "\n";
        failed += !c.ok;
    }
    return failed;
}
