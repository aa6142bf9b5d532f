#include <catch_amalgamated.hpp>

#include <tropitac/cli.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace tropitac;
using io::json;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(TROPITAC_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::size_t count(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
    return n;
}

std::string witness(const json& j, const std::string& name) {
    for (const auto& w : j["witness"])
        if (w["name"] == name) return w["value"];
    return {};
}

const std::vector<std::string> kInputs = {"line.json", "square.json", "delta_I.json", "feature_I.json",
                                          "feature_III.json", "feature_V.json", "feature_E.json", "feature_IX.json"};

}  // namespace

TEST_CASE("analyze") {
    SECTION("tropical line") {
        auto r = run({"analyze", "--input", data("line.json")});
        REQUIRE(r.code == 0);
        auto j = json::parse(r.out);
        CHECK(j["verdict"] == "NotTacnodal");
        CHECK(j["reason"] == "no feature");
        CHECK(j["rank"] == 2);
        CHECK(j["rkexp"] == 2);
        CHECK(j["curve"]["rays"].size() == 3);
        CHECK(j["duality"]["pass"] == true);
    }
    SECTION("Delta_I") {
        auto j = json::parse(run({"analyze", "--input", data("delta_I.json")}).out);
        CHECK(j["verdict"] == "TropicalOneTacnodal(I)");
        CHECK(j["feature"]["kind"] == "I");
        CHECK(j["case"] == "A");
        CHECK(j["census"]["lattice_points"] == 6);
    }
    SECTION("every realized kind") {
        for (const auto& kind : classify::kind_order()) {
            auto j = json::parse(run({"analyze", "--input", data("feature_" + kind + ".json")}).out);
            CHECK(j["verdict"] == "TropicalOneTacnodal(" + kind + ")");
            CHECK(j["rank"] == j["gate"]["lattice_points"].get<int>() - 4);
        }
    }
    SECTION("text format") {
        auto r = run({"analyze", "--input", data("line.json"), "--format", "text"});
        CHECK(r.code == 0);
        CHECK(r.out.find("verdict: NotTacnodal (no feature)") == 0);
        CHECK(r.out.find("rank: 2") != std::string::npos);
    }
}

TEST_CASE("input errors exit with 2") {
    SECTION("zero denominator") {
        auto r = run({"analyze", "--input", data("malformed.json")});
        CHECK(r.code == 2);
        CHECK(r.out.empty());
        CHECK(r.err.find("support[1].val") != std::string::npos);
        CHECK(r.err.find("zero denominator") != std::string::npos);
    }
    auto tmp = std::filesystem::temp_directory_path() / "tropitac_cli_test";
    std::filesystem::create_directories(tmp);
    auto write = [&](const std::string& name, const std::string& text) {
        std::ofstream((tmp / name).string()) << text;
        return (tmp / name).string();
    };
    SECTION("broken JSON names the line") {
        auto r = run({"analyze", "--input", write("broken.json", "{\n  \"support\": [\n    {\"i\": 0,,}\n  ]\n}\n")});
        CHECK(r.code == 2);
        CHECK(r.err.find("line 3") != std::string::npos);
    }
    SECTION("missing and mistyped fields") {
        auto r = run({"analyze", "--input", write("nofield.json", R"({"support":[{"i":0,"j":0}]})")});
        CHECK(r.code == 2);
        CHECK(r.err.find("support[0]: missing field \"val\"") != std::string::npos);
        r = run({"analyze", "--input", write("float.json", R"({"support":[{"i":0.5,"j":0,"val":"0"}]})")});
        CHECK(r.err.find("support[0].i: expected an integer") != std::string::npos);
        r = run({"analyze", "--input", write("float2.json", R"({"support":[{"i":0,"j":0,"val":0.5}]})")});
        CHECK(r.err.find("support[0].val") != std::string::npos);
    }
    SECTION("degenerate support") {
        auto r = run({"analyze", "--input",
                      write("flat.json", R"({"support":[{"i":0,"j":0,"val":"0"},{"i":1,"j":1,"val":"0"},{"i":2,"j":2,"val":"0"}]})")});
        CHECK(r.code == 2);
        CHECK(r.err.find("collinear") != std::string::npos);
        r = run({"analyze", "--input",
                 write("dup.json", R"({"support":[{"i":0,"j":0,"val":"0"},{"i":0,"j":0,"val":"1"},{"i":0,"j":1,"val":"0"}]})")});
        CHECK(r.err.find("duplicate") != std::string::npos);
    }
    SECTION("usage errors") {
        CHECK(run({}).code == 2);
        CHECK(run({"frobnicate"}).code == 2);
        CHECK(run({"analyze"}).code == 2);
        CHECK(run({"analyze", "--input", data("nope.json")}).code == 2);
        CHECK(run({"analyze", "--input", data("line.json"), "--format", "svg"}).code == 2);
        CHECK(run({"render", "--input", data("line.json"), "--format", "png"}).code == 2);
        CHECK(run({"verify", "nope"}).code == 2);
        CHECK(run({"enumerate", "--case", "D7(0;1)"}).code == 2);
        CHECK(run({"enumerate"}).code == 2);
    }
    std::filesystem::remove_all(tmp);
}

TEST_CASE("verify") {
    SECTION("VII") {
        auto r = run({"verify", "VII"});
        REQUIRE(r.code == 0);
        auto j = json::parse(r.out);
        CHECK(j["passed"] == true);
        CHECK(j["verdict"] == "Tacnode");
        CHECK(witness(j, "point") == "(-1/2, -1/2)");
        CHECK(j.contains("transcript"));
        CHECK_FALSE(j["transcript"]["steps"].empty());
    }
    SECTION("E_NEG") {
        auto j = json::parse(run({"verify", "--case", "E_NEG"}).out);
        CHECK(j["passed"] == true);
        CHECK(witness(j, "contradiction").find("c01") != std::string::npos);
    }
    SECTION("edge catalog entry") {
        auto j = json::parse(run({"verify", "EDGE_2"}).out);
        CHECK(j["verdict"] == "NotTacnodalEdge");
        CHECK(j["external_lemma_replication"] == false);
        CHECK(witness(j, "eps=+1.contradiction") == "K' reduces to 48 * y^3, which is nonzero");
        CHECK(json::parse(run({"verify", "EDGE_1"}).out)["external_lemma_replication"] == true);
    }
    SECTION("all") {
        auto r = run({"verify", "all"});
        CHECK(r.code == 0);
        auto j = json::parse(r.out);
        CHECK(j["failed"] == 0);
        CHECK(j["cases"].size() == algebra::verify_case_ids().size() + refine::edge_catalog_ids().size());
        auto t = run({"verify", "all", "--format", "text"});
        CHECK(t.out.find("28/28 passed") != std::string::npos);
    }
    SECTION("deformation pattern spec") {
        auto r = run({"verify", "--case", "PATTERN", "--input", data("pattern_hat2.json")});
        CHECK(r.code == 0);
        CHECK(json::parse(r.out)["pass"] == true);
    }
}

TEST_CASE("enumerate") {
    SECTION("classes") {
        auto r = run({"enumerate", "--case", "D3(3;1,1,1)"});
        REQUIRE(r.code == 0);
        auto j = json::parse(r.out);
        REQUIRE(j.size() == 2);
        for (const auto& p : j) {
            auto P = io::polytope_from_json(p);
            CHECK(lattice::polygon_stats(P).interior_count == 3);
            CHECK(lattice::catalog_match(P).has_value());
        }
        CHECK(json::parse(run({"enumerate", "--case", "D4np(2;1,1,1,1)"}).out).size() == 3);
        CHECK(json::parse(run({"enumerate", "--case", "D4par(2;1,1)"}).out).size() == 1);
        CHECK(json::parse(run({"enumerate", "--case", "D3(1;2,2,1)"}).out).empty());
    }
    SECTION("seeded corpus") {
        auto a = run({"enumerate", "--seed", "11"});
        auto b = run({"enumerate", "--seed", "11"});
        REQUIRE(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(a.out != run({"enumerate", "--seed", "12"}).out);
        auto j = json::parse(a.out);
        CHECK(j.size() == 500);
        for (const auto& f : j) {
            auto F = io::polynomial_from_json(f);
            CHECK(F.val.size() <= 12);
        }
    }
}

TEST_CASE("render") {
    SECTION("tropical line is a three-ray star") {
        auto r = run({"render", "--input", data("line.json")});
        REQUIRE(r.code == 0);
        CHECK(r.out.rfind("<svg", 0) == 0);
        CHECK(count(r.out, "class=\"ray\"") == 3);
        CHECK(count(r.out, "class=\"edge\"") == 0);
        CHECK(count(r.out, "class=\"star\"") == 0);
    }
    SECTION("square split along a diagonal") {
        auto r = run({"render", "--input", data("square.json")});
        CHECK(count(r.out, "<g class=\"curve\"") == 1);
        CHECK(count(r.out, "class=\"edge\"") == 1);
        CHECK(count(r.out, "class=\"cell\"") == 2);
        auto curve = r.out.substr(0, r.out.find("<g class=\"subdivision\""));
        CHECK(count(curve, "class=\"vertex\"") == 2);
    }
    SECTION("Delta_I shows its interior points as stars") {
        auto r = run({"render", "--input", data("delta_I.json")});
        CHECK(count(r.out, "class=\"star\"") == 3);
        CHECK(count(r.out, "class=\"triangle\"") == 0);
    }
    SECTION("boundary points off the vertices are triangles") {
        auto F = io::polynomial_from_json(json::parse(slurp(data("feature_V.json"))));
        auto S = tropical::dual_subdivision(F);
        std::size_t interior = 0, side = 0;
        for (const auto& p : S.newton.lattice_points()) {
            int w = S.newton.locate(p);
            interior += w > 0;
            side += w == 0 && !S.newton.is_vertex(p);
        }
        auto r = run({"render", "--input", data("feature_V.json")});
        CHECK(count(r.out, "class=\"star\"") == interior);
        CHECK(count(r.out, "class=\"triangle\"") == side);
        CHECK(side > 0);
    }
    SECTION("weights above one are labeled") {
        auto r = run({"render", "--input", data("feature_V.json")});
        CHECK(r.out.find(">4</text>") != std::string::npos);
    }
    SECTION("json format") {
        auto j = json::parse(run({"render", "--input", data("square.json"), "--format", "json"}).out);
        CHECK(j["curve"]["vertices"].size() == 2);
    }
}

TEST_CASE("deterministic output") {
    for (const auto& name : kInputs) {
        INFO(name);
        for (const char* cmd : {"analyze", "render"}) {
            auto a = run({cmd, "--input", data(name)});
            auto b = run({cmd, "--input", data(name)});
            CHECK(a.code == 0);
            CHECK(a.out == b.out);
        }
    }
}

TEST_CASE("installed binary matches the library") {
    auto tmp = std::filesystem::temp_directory_path() / "tropitac_cli_bin";
    std::filesystem::create_directories(tmp);
    for (const auto& name : {"square.json", "feature_IV.json"}) {
        auto out = (tmp / "out.json").string();
        std::string cmd = std::string("\"") + TROPITAC_CLI_PATH + "\" analyze --input \"" + data(name) + "\" --output \"" + out + "\"";
        REQUIRE(std::system(cmd.c_str()) == 0);
        CHECK(slurp(out) == run({"analyze", "--input", data(name)}).out);
        auto svg = (tmp / "out.svg").string();
        cmd = std::string("\"") + TROPITAC_CLI_PATH + "\" render --input \"" + data(name) + "\" --output \"" + svg + "\"";
        REQUIRE(std::system(cmd.c_str()) == 0);
        CHECK(slurp(svg) == run({"render", "--input", data(name)}).out);
    }
    std::string bad = std::string("\"") + TROPITAC_CLI_PATH + "\" analyze --input \"" + data("malformed.json") + "\" 2>/dev/null";
    int status = std::system(bad.c_str());
    CHECK(WEXITSTATUS(status) == 2);
    std::string fail = std::string("\"") + TROPITAC_CLI_PATH + "\" verify nope 2>/dev/null";
    CHECK(WEXITSTATUS(std::system(fail.c_str())) == 2);
    std::filesystem::remove_all(tmp);
}

TEST_CASE("round trip") {
    for (const auto& name : kInputs) {
        INFO(name);
        auto report = json::parse(run({"analyze", "--input", data(name)}).out);
        auto F = io::polynomial_from_json({{"support", report["input"]}});
        CHECK(io::to_json(F) == json::parse(slurp(data(name))));
        auto S = io::subdivision_from_json(report["subdivision"]);
        CHECK(io::to_json(S) == report["subdivision"]);
        auto C = tropical::tropical_curve(S);
        CHECK(io::to_json(C) == report["curve"]);
        CHECK(tropical::verify_duality(C, S).pass);
        for (const auto& r : tropical::balancing_residuals(C)) {
            CHECK(r.x == 0);
            CHECK(r.y == 0);
        }
        CHECK(tropical::rank(S) == report["rank"].get<lattice::Int>());
        CHECK(io::to_json(classify::classify(S)) ==
              io::to_json(classify::classify(tropical::dual_subdivision(F))));
    }
}
