#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "illum/cli.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace illum;
using Catch::Matchers::ContainsSubstring;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("illum_cli_" + std::to_string(std::random_device{}()) + "_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }

    std::string write(const std::string& name, const std::string& text) const {
        const auto file = path / name;
        std::ofstream(file) << text;
        return file.string();
    }
};

struct Run {
    int code;
    std::string out, err;
    Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<QVector> vectors(const Json& j) {
    std::vector<QVector> out;
    for (const auto& v : j) {
        QVector q(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) q[i] = parse_rational(v[i].get<std::string>());
        out.push_back(q);
    }
    return out;
}

const char* kTriangle =
    R"({"dim":2,"facets":[{"normal":["1","0"],"offset":"1"},{"normal":["0","1"],"offset":"1"},)"
    R"({"normal":["-1","-1"],"offset":"1"}]})";

}  // namespace

TEST_CASE("parse_polytope", "[io]") {
    const HPolytope tri = parse_polytope(kTriangle);
    CHECK(tri == simplex(2));
    CHECK(tri.vertices().size() == 3);

    try {
        parse_polytope(R"({"dim":2,"facets":[{"normal":["1","0"],"offset":"1"},{"normal":["2","0"],"offset":"1"},)"
                       R"({"normal":["0","1"],"offset":"1"}]})");
        FAIL("expected duplicate error");
    } catch (const InputError& e) {
        CHECK_THAT(e.what(), ContainsSubstring("duplicate"));
        CHECK(e.facet() == 1u);
    }
    CHECK_THROWS_WITH(parse_polytope(R"({"dim":2,"facets":[{"normal":["1","0"],"offset":"1"}]})"),
                      ContainsSubstring("unbounded"));

    try {
        parse_polytope(R"({"dim":2,"facets":[{"normal":["1","0"],"offset":"1"},{"normal":["0","1","0"],"offset":"1"}]})");
        FAIL("expected dimension error");
    } catch (const InputError& e) {
        CHECK_THAT(e.what(), ContainsSubstring("facet 1"));
        CHECK(e.facet() == 1u);
    }
    CHECK_THROWS_WITH(parse_polytope(R"({"dim":2,"facets":[{"normal":["1","0"],"offset":0.5}]})"),
                      ContainsSubstring("facet 0"));
    CHECK_THROWS_WITH(parse_polytope(R"({"dim":1,"facets":[{"normal":["1/0"],"offset":"1"}]})"),
                      ContainsSubstring("zero denominator"));
    CHECK_THROWS_AS(parse_polytope("{not json"), InputError);
    CHECK_THROWS_AS(parse_polytope(R"({"dim":0,"facets":[]})"), InputError);
}

TEST_CASE("serialization round-trips", "[io][property]") {
    for (const HPolytope& base : {box(2), box(3), simplex(3), simplex_product({2, 1}), hexagon(), square_pyramid()}) {
        for (std::uint64_t seed = 0; seed <= 5; ++seed) {
            const HPolytope p = seed ? randomize_offsets(base, seed) : base;
            const std::string text = serialize_polytope(p);
            const HPolytope back = parse_polytope(text);
            CHECK(back == p);
            CHECK(serialize_polytope(back) == text);
        }
    }
}

TEST_CASE("directions documents", "[io]") {
    const IlluminationSet set = build_illumination_set(hexagon());
    const IlluminationSet back = parse_directions(directions_to_json(set).dump(), 2);
    CHECK(back.directions == set.directions);
    CHECK(back.epsilon == set.epsilon);
    CHECK_THROWS_AS(parse_directions(R"({"epsilon":"0","directions":[]})", 2), InputError);
    CHECK_THROWS_AS(parse_directions(R"({"epsilon":"1","directions":[["1"]]})", 2), InputError);
}

TEST_CASE("classify command", "[cli]") {
    TempDir dir;
    const auto cube = dir.write("cube.json", serialize_polytope(box(3)));
    const Run ok = run({"classify", cube});
    CHECK(ok.code == kSuccess);
    CHECK(ok.json()["strongly_monotypic"] == true);
    CHECK(ok.json()["monotypic"] == true);

    const auto pyr = dir.write("pyr.json", serialize_polytope(square_pyramid()));
    for (const std::string method : {"conical", "mss", "both"}) {
        const Run bad = run({"classify", pyr, "--method", method});
        CHECK(bad.code == kPropertyFails);
        CHECK(bad.json()["monotypic"] == false);
        const auto cert = vectors(bad.json()["certificate"]["normals"]);
        if (method == "mss") {
            CHECK(is_primitive(cert, square_pyramid().normal_set()));
        } else {
            CHECK(cert.size() == 4);
            CHECK(is_conical_position(cert).conical);
            CHECK(testing::same_set(cert, testing::pyramid_slanted()));
        }
    }

    const auto weak = dir.write("weak.json", serialize_polytope(testing::monotypic_not_strong_polytope()));
    const Run w = run({"classify", weak, "--method", "both"});
    CHECK(w.code == kPropertyFails);
    CHECK(w.json()["monotypic"] == true);
    CHECK(is_conical_position(vectors(w.json()["certificate"]["normals"])).conical);
}

TEST_CASE("skeleton, illuminate and verify commands", "[cli]") {
    TempDir dir;
    const auto tet = dir.write("tet.json", serialize_polytope(simplex(3)));
    const Run sk = run({"skeleton", tet});
    CHECK(sk.code == kSuccess);
    CHECK(sk.json()["parts"].size() == 1);

    const Run il = run({"illuminate", tet, "--verify"});
    CHECK(il.code == kSuccess);
    CHECK(il.json()["directions"].size() == 4);
    CHECK(il.json()["verification"]["passed"] == true);

    const auto dirs = dir.write("dirs.json", il.out);
    CHECK(run({"verify", tet, "--directions", dirs}).code == kSuccess);

    const auto partial = dir.write("partial.json", R"({"epsilon":"1/8","directions":[["1","1","1"]]})");
    const Run v = run({"verify", tet, "--directions", partial});
    CHECK(v.code == kPropertyFails);
    CHECK(v.json()["passed"] == false);

    const auto pyr = dir.write("pyr.json", serialize_polytope(square_pyramid()));
    for (const std::string cmd : {"skeleton", "illuminate"}) {
        const Run r = run({cmd, pyr});
        CHECK(r.code == kPropertyFails);
        CHECK(is_conical_position(vectors(r.json()["certificate"]["normals"])).conical);
    }
}

TEST_CASE("fan and oracle commands", "[cli]") {
    TempDir dir;
    const auto hex = dir.write("hex.json", serialize_polytope(hexagon()));
    const Run f = run({"fan", hex, "--verify-unique"});
    CHECK(f.code == kSuccess);
    CHECK(f.json()["primitive_bases"].size() == 6);
    CHECK(f.json()["normal_fan"].size() == 6);
    CHECK(f.json()["unique"] == true);

    const auto pyr = dir.write("pyr.json", serialize_polytope(square_pyramid()));
    const Run pf = run({"fan", pyr});
    CHECK(pf.code == kSuccess);
    CHECK(pf.json().contains("normal_fan_error"));
    CHECK(run({"fan", pyr, "--verify-unique"}).code == kInputError);

    const Run o = run({"oracle", hex});
    CHECK(o.code == kSuccess);
    CHECK(o.json()["min_illumination_number"] == 3);
    CHECK(o.json()["direction_classes"] == 6);
}

TEST_CASE("gen command", "[cli]") {
    const Run g = run({"gen", "box", "--dims", "3"});
    CHECK(g.code == kSuccess);
    CHECK(parse_polytope(g.out) == box(3));

    const Run sp = run({"gen", "simplex_product", "--dims", "2", "1"});
    CHECK(parse_polytope(sp.out) == simplex_product({2, 1}));

    const Run r1 = run({"gen", "hexagon", "--randomize-offsets", "--seed", "9"});
    CHECK(parse_polytope(r1.out) == randomize_offsets(hexagon(), 9));
    CHECK(run({"gen", "hexagon", "--randomize-offsets", "--seed", "9"}).out == r1.out);

    TempDir dir;
    const auto file = (dir.path / "out.json").string();
    CHECK(run({"gen", "simplex", "--dims", "2", "-o", file}).code == kSuccess);
    std::ifstream in(file);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(parse_polytope(ss.str()) == simplex(2));
}

TEST_CASE("errors and usage", "[cli]") {
    TempDir dir;
    CHECK(run({}).code == kInputError);
    CHECK(run({"frobnicate"}).code == kInputError);
    CHECK(run({"classify"}).code == kInputError);
    CHECK(run({"classify", (dir.path / "missing.json").string()}).code == kInputError);
    CHECK(run({"gen", "box", "--dims", "0"}).code == kInputError);
    CHECK(run({"gen", "dodecahedron"}).code == kInputError);

    const auto dup = dir.write("dup.json", R"({"dim":2,"facets":[{"normal":["1","0"],"offset":"1"},)"
                                           R"({"normal":["0","1"],"offset":"1"},{"normal":["-1","-1"],"offset":"1"},)"
                                           R"({"normal":["3","0"],"offset":"1"}]})");
    const Run r = run({"classify", dup});
    CHECK(r.code == kInputError);
    CHECK(r.json()["error"] == "input");
    CHECK(r.json()["facet"] == 3);
    CHECK(run({"classify", dup, "--method", "fast"}).code == kInputError);
}

TEST_CASE("output is stable and --pretty keeps the payload", "[cli][property]") {
    TempDir dir;
    for (const HPolytope& p : {box(3), hexagon(), simplex_product({2, 1}), square_pyramid()}) {
        const auto file = dir.write("p.json", serialize_polytope(p));
        for (const std::string cmd : {"classify", "skeleton", "illuminate", "fan", "oracle"}) {
            const Run a = run({cmd, file});
            const Run b = run({cmd, file});
            CHECK(a.out == b.out);
            CHECK(a.code == b.code);
            const Run pretty = run({"--pretty", cmd, file});
            CHECK(pretty.code == a.code);
            CHECK(pretty.json() == a.json());
            const Run threaded = run({"--threads", "4", cmd, file});
            CHECK(threaded.out == a.out);
        }
    }
}
