#include <doctest.h>

#include <array>
#include <cstdio>
#include <map>
#include <regex>
#include <set>
#include <sys/wait.h>

#include "centerkit/io.hpp"

using namespace centerkit;

namespace {

struct Run {
    std::string out;
    int code = -1;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(CENTERKIT_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string example(const std::string& name) { return std::string(CENTERKIT_EXAMPLES) + "/" + name; }

std::string parse_error(const std::string& text) {
    try {
        parse_object(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("parse objects") {
    const Object m = parse_object(R"({"type":"multiset","points":[[0,0],[3,0],[0,3]]})");
    REQUIRE(kind_of(m) == ObjectKind::Multiset);
    CHECK(std::get<PointMultiset>(m).size() == 3);

    const Object bow = parse_object(R"({"type":"polygon","vertices":[[0,0],[2,2],[2,0],[0,2]]})");
    REQUIRE(kind_of(bow) == ObjectKind::Polygon);
    CHECK_FALSE(std::get<Polygon>(bow).is_simple());

    const Object l = parse_object(
        R"({"type":"region","kind":"area","outer":[[0,0],[2,0],[2,1],[1,1],[1,2],[0,2]],"holes":[]})");
    REQUIRE(kind_of(l) == ObjectKind::Region);
    CHECK(measure(std::get<Region>(l)) == doctest::Approx(3));

    const Object w = parse_object(R"({"type":"weighted","items":[{"point":[0,0],"weight":1},{"point":[3,0],"weight":2}]})");
    CHECK(kind_of(w) == ObjectKind::Weighted);
    const Object t = parse_object(R"({"schema":"centerkit/1","type":"triangle","vertices":[[0,3],[4,0],[0,0]]})");
    CHECK(kind_of(t) == ObjectKind::Triangle);
    const Object c = parse_object(R"({"type":"region","kind":"curve","vertices":[[0,0],[1,0],[0,1]]})");
    CHECK(region_dimension(std::get<Region>(c)) == 1);
    const Object p3 = parse_object(R"({"type":"multiset","points":[[0,0,0],[1,2,3]]})");
    CHECK(std::get<PointMultiset>(p3).dim() == 3);
}

TEST_CASE("parse errors name the offending path") {
    CHECK(parse_error("{") != "");
    CHECK(parse_error(R"({"type":"blob"})").rfind("$.type", 0) == 0);
    CHECK(parse_error(R"({"points":[]})").rfind("$", 0) == 0);
    CHECK(parse_error(R"({"type":"multiset","points":[[0,0],[1,0],[1,"x"]]})").rfind("$.points[2]", 0) == 0);
    CHECK(parse_error(R"({"type":"multiset","points":[[0,0],[1,0,2]]})").rfind("$.points", 0) == 0);
    CHECK(parse_error(R"({"type":"multiset","points":[]})").rfind("$.points", 0) == 0);
    CHECK(parse_error(R"({"type":"triangle","vertices":[[0,0],[1,1],[2,2]]})").rfind("$.vertices", 0) == 0);
    CHECK(parse_error(R"({"type":"weighted","items":[{"point":[0,0],"weight":-1}]})").rfind("$.items[0]", 0) == 0);
    CHECK(parse_error(R"({"type":"region","kind":"area","outer":[[0,0],[4,0],[4,4],[0,4]],"holes":[[[5,5],[6,5],[6,6]]]})")
              .rfind("$.holes[0]", 0) == 0);
    CHECK(parse_error(R"({"type":"region","kind":"area","outer":[[0,0],[4,0],[4,4],[0,4]],"holes":[[[1,1],[2,1],[2,2]],[[1.5,1.2],[3,1.2],[3,3]]]})")
              .rfind("$.holes:", 0) == 0);
    CHECK(parse_error(R"({"type":"region","kind":"blob"})").rfind("$.kind", 0) == 0);
    CHECK(parse_error(R"({"schema":"centerkit/9","type":"multiset","points":[[0,0]]})").rfind("$.schema", 0) == 0);
    CHECK_THROWS_AS(parse_object(std::string("[1,2]")), ParseError);
}

TEST_CASE("round trip keeps every digit") {
    const Point2 p{0.1 + 0.2, 1.0 / 3};
    const std::string text = dump(Json{{"type", "multiset"}, {"points", Json::array({to_json(p), to_json(Point2{-1e-300, 7e22})})}});
    const Object o = parse_object(text);
    const auto& m = std::get<PointMultiset>(o);
    CHECK(m.points()[0].as_point2() == p);
    CHECK(m.points()[1].as_point2() == Point2{-1e-300, 7e22});
    // Re-emitting is a fixed point.
    CHECK(dump(to_json(o)) == dump(to_json(parse_object(dump(to_json(o))))));

    for (std::uint64_t s = 0; s < 50; ++s)
        for (auto k : {ObjectKind::Multiset, ObjectKind::Weighted, ObjectKind::Triangle, ObjectKind::Polygon, ObjectKind::Region}) {
            const Object a = random_object(k, s);
            const std::string once = dump(to_json(a));
            CHECK(dump(to_json(parse_object(once))) == once);
        }
}

TEST_CASE("result documents") {
    const std::vector<NamedPoint> one{{"centroid", {0.5, 0.5}}};
    CHECK(centers_json(one) == Json::parse(R"({"center_id":"centroid","point":[0.5,0.5]})"));
    const std::vector<NamedPoint> two{{"a", {0, 0}}, {"b", {1, 2}}};
    CHECK(centers_json(two).at("centers").size() == 2);
    CHECK(versioned(Json::object()).at("schema") == kSchema);

    const auto r = check_equivariance("centroid", ObjectKind::Multiset, 10, 1);
    const Json j = to_json(r);
    CHECK(j.contains("max_residual"));
    CHECK(j.at("pass") == true);
    CHECK(j.contains("worst_case"));

    const auto g = symmetry_group_multiset({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
    const Json gj = to_json(g);
    CHECK(gj.at("order") == 8);
    CHECK(gj.at("fixed_set").at("kind") == "point");

    const std::vector<AdmissibilityEntry> entries{{"x", {0, 0}, "point", 0.0, true}};
    const Json aj = to_json(entries);
    CHECK(aj.at("pass") == true);
    CHECK(aj.at("entries")[0].at("center_id") == "x");

    const Polygon sq({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
    const Json oj = orbit_json(iterate_automorphism(sq, 2));
    CHECK(oj.at("orbit").size() == 3);

    // Shortest round-trip number text.
    CHECK(dump(Json{{"v", 0.1}}).find("0.1\n") != std::string::npos);
}

TEST_CASE("SVG marks both L-shape centroids") {
    const Object l = parse_object(
        R"({"type":"region","kind":"area","outer":[[0,0],[2,0],[2,1],[1,1],[1,2],[0,2]],"holes":[]})");
    SvgScene scene;
    scene.centers = registered_centers(l);
    const std::string svg = render_svg(l, scene);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);

    const std::regex mark(R"re(<g data-center="([^"]+)" data-x="([^"]+)" data-y="([^"]+)")re");
    std::map<std::string, Point2> marks;
    std::set<std::string> glyphs;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), mark); it != std::sregex_iterator(); ++it)
        marks[(*it)[1]] = {std::stod((*it)[2]), std::stod((*it)[3])};
    REQUIRE(marks.count("centroid") == 1);
    REQUIRE(marks.count("boundary_centroid") == 1);
    CHECK(distance(marks["centroid"], {5.0 / 6, 5.0 / 6}) <= 1e-12);
    CHECK(distance(marks["boundary_centroid"], {0.875, 0.875}) <= 1e-12);
    // Distinct glyph shapes per center.
    const std::regex shape(R"(<g data-center[^>]*>\s*<(\w+))");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), shape); it != std::sregex_iterator(); ++it)
        glyphs.insert((*it)[1]);
    CHECK(glyphs.size() >= 2);

    // Central lines and overlays render too.
    SvgScene lines;
    lines.lines.push_back(Line({0, 0}, {1, 1}));
    lines.overlay = iterate_automorphism(Polygon({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}), 3);
    const std::string s2 = render_svg(l, lines);
    CHECK(s2.find("stroke-dasharray") != std::string::npos);
}

TEST_CASE("CLI exit codes") {
    CHECK(run("compute --in " + example("square.json") + " --center centroid").code == 0);
    CHECK(run("compute --in " + example("square.json") + " --center nope").code == 2);
    CHECK(run("compute --in /nonexistent.json").code == 2);
    CHECK(run("compute --in " + example("bowtie.json") + " --center center_S").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("check-equivariance --center centroid --kind multiset --trials 20 --seed 4").code == 0);
    CHECK(run("check-equivariance --center bbox_center --kind multiset --trials 20 --seed 4").code == 1);
    CHECK(run("symmetry --in " + example("rectangle.json")).code == 0);
    CHECK(run("admissible --in " + example("rectangle.json")).code == 0);
    CHECK(run("coincide --x1 nagel --x2 centroid --family a=1,b=0.9:1.1,c=0.9:1.1,step=0.05").code == 0);
    CHECK(run("iterate --steps 3 --in " + example("square.json")).code == 0);
    CHECK(run("iterate --steps -1 --in " + example("square.json")).code == 2);
}

TEST_CASE("CLI output content") {
    const Run c = run("compute --in " + example("square.json") + " --center centroid");
    const Json j = Json::parse(c.out);
    CHECK(j.at("center_id") == "centroid");
    CHECK(j.at("point") == Json::array({0.5, 0.5}));
    CHECK(j.at("schema") == kSchema);

    const Json s = Json::parse(run("symmetry --in " + example("rectangle.json")).out);
    CHECK(s.at("group") == "Dihedral(2)");

    const Json k = Json::parse(run("coincide --x1 nagel --x2 centroid --family a=1,b=0.9:1.1,c=0.9:1.1,step=0.05").out);
    REQUIRE(k.at("hits").size() == 1);

    const Json it = Json::parse(run("iterate --steps 2 --in " + example("square.json")).out);
    CHECK(it.at("orbit").size() == 3);

    const std::string svg = run("compute --in " + example("l_shape.json") + " --out svg").out;
    CHECK(svg.find("data-center=\"boundary_centroid\"") != std::string::npos);
}

TEST_CASE("CLI output is byte-identical across runs") {
    for (const std::string& args : std::vector<std::string>{"check-equivariance --center medoid --kind multiset --trials 200 --seed 9",
                                   "check-equivariance --center center_A --kind polygon --trials 100 --seed 2",
                                   "compute --in " + example("l_shape.json"),
                                   "compute --in " + example("l_shape.json") + " --out svg",
                                   "coincide --x1 incenter --x2 centroid --family step=0.05"}) {
        const Run a = run(args), b = run(args);
        CHECK(a.code == b.code);
        CHECK_FALSE(a.out.empty());
        CHECK(a.out == b.out);
    }
}
