#include "centerkit/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

namespace centerkit {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ParseError(path + ": " + what);
}

const Json& member(const Json& obj, const std::string& key, const std::string& path) {
    const auto it = obj.find(key);
    if (it == obj.end()) fail(path, "missing member \"" + key + "\"");
    return *it;
}

double number(const Json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) fail(path, "expected a finite number");
    return v;
}

PointN point_n(const Json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) fail(path, "expected a non-empty array of coordinates");
    std::vector<double> c;
    for (std::size_t i = 0; i < j.size(); ++i) c.push_back(number(j[i], path + "[" + std::to_string(i) + "]"));
    return PointN(std::move(c));
}

Point2 point2(const Json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2) fail(path, "expected [x, y]");
    return {number(j[0], path + "[0]"), number(j[1], path + "[1]")};
}

std::vector<Point2> ring(const Json& j, const std::string& path, std::size_t min_size) {
    if (!j.is_array()) fail(path, "expected an array of points");
    if (j.size() < min_size) fail(path, "expected at least " + std::to_string(min_size) + " points");
    std::vector<Point2> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(point2(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<PointN> points_n(const Json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) fail(path, "expected a non-empty array of points");
    std::vector<PointN> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string p = path + "[" + std::to_string(i) + "]";
        out.push_back(point_n(j[i], p));
        if (out.back().dim() != out.front().dim()) fail(p, "dimension differs from the first point");
    }
    return out;
}

// Library constructors validate invariants; report their failures at `path`.
template <class F>
auto guarded(const std::string& path, F&& make) {
    try {
        return make();
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        fail(path, e.what());
    }
}

Json ring_json(std::span<const Point2> r) {
    Json a = Json::array();
    for (const auto& p : r) a.push_back(to_json(p));
    return a;
}

Json point_n_json(const PointN& p) {
    Json a = Json::array();
    for (double c : p.coords()) a.push_back(c);
    return a;
}

Json multiset_points(const PointMultiset& m) {
    Json a = Json::array();
    for (const auto& p : m.points()) a.push_back(point_n_json(p));
    return a;
}

}  // namespace

Object parse_object(const Json& doc) {
    if (!doc.is_object()) fail("$", "expected an object");
    if (const auto it = doc.find("schema"); it != doc.end() && *it != kSchema)
        fail("$.schema", std::string("unsupported schema, expected \"") + kSchema + "\"");
    const Json& type = member(doc, "type", "$");
    if (!type.is_string()) fail("$.type", "expected a string");
    const std::string t = type.get<std::string>();

    if (t == "multiset") {
        auto pts = points_n(member(doc, "points", "$"), "$.points");
        return guarded("$.points", [&] { return PointMultiset(std::move(pts)); });
    }
    if (t == "weighted") {
        const Json& items = member(doc, "items", "$");
        if (!items.is_array() || items.empty()) fail("$.items", "expected a non-empty array");
        std::vector<WeightedPoint> out;
        for (std::size_t i = 0; i < items.size(); ++i) {
            const std::string p = "$.items[" + std::to_string(i) + "]";
            if (!items[i].is_object()) fail(p, "expected {\"point\":..., \"weight\":...}");
            WeightedPoint w{point_n(member(items[i], "point", p), p + ".point"),
                            number(member(items[i], "weight", p), p + ".weight")};
            if (!(w.weight > 0.0)) fail(p + ".weight", "weights must be positive");
            if (!out.empty() && w.point.dim() != out.front().point.dim())
                fail(p + ".point", "dimension differs from the first point");
            out.push_back(std::move(w));
        }
        return guarded("$.items", [&] { return WeightedMultiset(std::move(out)); });
    }
    if (t == "triangle") {
        const Json& v = member(doc, "vertices", "$");
        if (!v.is_array() || v.size() != 3) fail("$.vertices", "expected exactly 3 vertices");
        const auto r = ring(v, "$.vertices", 3);
        return guarded("$.vertices", [&] { return Triangle(r[0], r[1], r[2]); });
    }
    if (t == "polygon") {
        auto r = ring(member(doc, "vertices", "$"), "$.vertices", 3);
        return guarded("$.vertices", [&] { return Polygon(std::move(r)); });
    }
    if (t == "region") {
        const Json& kind = member(doc, "kind", "$");
        if (!kind.is_string()) fail("$.kind", "expected a string");
        const std::string k = kind.get<std::string>();
        if (k == "points") {
            auto pts = points_n(member(doc, "points", "$"), "$.points");
            return guarded("$.points", [&] { return Region{PointMultiset(std::move(pts))}; });
        }
        if (k == "curve") {
            auto r = ring(member(doc, "vertices", "$"), "$.vertices", 3);
            return guarded("$.vertices", [&] { return Region{Curve(std::move(r))}; });
        }
        if (k == "area") {
            auto outer = ring(member(doc, "outer", "$"), "$.outer", 3);
            std::vector<std::vector<Point2>> holes;
            if (const auto it = doc.find("holes"); it != doc.end()) {
                if (!it->is_array()) fail("$.holes", "expected an array of rings");
                for (std::size_t i = 0; i < it->size(); ++i)
                    holes.push_back(ring((*it)[i], "$.holes[" + std::to_string(i) + "]", 3));
            }
            // Narrow the blame: the outer ring alone, then each hole against it.
            guarded("$.outer", [&] { return Area(outer); });
            for (std::size_t i = 0; i < holes.size(); ++i)
                guarded("$.holes[" + std::to_string(i) + "]", [&] { return Area(outer, {holes[i]}); });
            return guarded("$.holes", [&] { return Region{Area(std::move(outer), std::move(holes))}; });
        }
        fail("$.kind", "unknown region kind \"" + k + "\" (expected points, curve or area)");
    }
    fail("$.type", "unknown type \"" + t + "\"");
}

Object parse_object(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        fail("$", std::string("invalid JSON: ") + e.what());
    }
    return parse_object(doc);
}

Json to_json(const Point2& p) { return Json::array({p.x, p.y}); }

Json to_json(const Object& o) {
    return std::visit(
        [](const auto& x) -> Json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, PointMultiset>) {
                return {{"type", "multiset"}, {"points", multiset_points(x)}};
            } else if constexpr (std::is_same_v<T, WeightedMultiset>) {
                Json items = Json::array();
                for (const auto& it : x.items())
                    items.push_back({{"point", point_n_json(it.point)}, {"weight", it.weight}});
                return {{"type", "weighted"}, {"items", items}};
            } else if constexpr (std::is_same_v<T, Triangle>) {
                return {{"type", "triangle"}, {"vertices", ring_json(x.vertices())}};
            } else if constexpr (std::is_same_v<T, Polygon>) {
                return {{"type", "polygon"}, {"vertices", ring_json(x.vertices())}, {"is_simple", x.is_simple()}};
            } else {
                return std::visit(
                    [](const auto& r) -> Json {
                        using R = std::decay_t<decltype(r)>;
                        if constexpr (std::is_same_v<R, PointMultiset>) {
                            return {{"type", "region"}, {"kind", "points"}, {"points", multiset_points(r)}};
                        } else if constexpr (std::is_same_v<R, Curve>) {
                            return {{"type", "region"}, {"kind", "curve"}, {"vertices", ring_json(r.vertices())}};
                        } else {
                            Json holes = Json::array();
                            for (const auto& h : r.holes()) holes.push_back(ring_json(h));
                            return {{"type", "region"}, {"kind", "area"}, {"outer", ring_json(r.outer())}, {"holes", holes}};
                        }
                    },
                    x);
            }
        },
        o);
}

Json centers_json(const std::vector<NamedPoint>& centers) {
    if (centers.size() == 1) return {{"center_id", centers[0].id}, {"point", to_json(centers[0].point)}};
    Json a = Json::array();
    for (const auto& c : centers) a.push_back({{"center_id", c.id}, {"point", to_json(c.point)}});
    return {{"centers", a}};
}

Json to_json(const Similarity2& t) {
    return {{"scale", t.scale()},
            {"rotation", t.rotation()},
            {"reflect", t.reflect()},
            {"translation", to_json(t.translation())}};
}

Json to_json(const EquivarianceReport& r) {
    Json j{{"center_id", r.center_id},
           {"kind", to_string(r.kind)},
           {"trials", r.trials},
           {"max_residual", r.max_residual},
           {"tolerance", r.tolerance},
           {"failures", r.failures},
           {"pass", r.pass}};
    if (r.worst_object && r.worst_similarity)
        j["worst_case"] = {{"object", to_json(*r.worst_object)}, {"similarity", to_json(*r.worst_similarity)}};
    return j;
}

Json to_json(const SymmetryGroup& g) {
    Json j{{"group", describe(g)},
           {"kind", g.kind == GroupKind::Cyclic ? "cyclic" : "dihedral"},
           {"k", g.k},
           {"order", g.order()},
           {"center", to_json(g.center)},
           {"axes", g.axes}};
    const FixedSet fs = fixed_set(g);
    Json f{{"kind", fixed_set_kind(fs)}};
    if (const auto* l = std::get_if<LineSet>(&fs)) {
        f["point"] = to_json(l->point);
        f["direction"] = to_json(l->direction);
    } else if (const auto* p = std::get_if<PointSet>(&fs)) {
        f["point"] = to_json(p->point);
    }
    j["fixed_set"] = f;
    return j;
}

Json to_json(const std::vector<AdmissibilityEntry>& entries) {
    Json a = Json::array();
    bool all = true;
    for (const auto& e : entries) {
        a.push_back({{"center_id", e.center_id},
                     {"point", to_json(e.point)},
                     {"fixed_set", e.fixed_set_kind},
                     {"residual", e.residual},
                     {"pass", e.pass}});
        all = all && e.pass;
    }
    return {{"entries", a}, {"pass", all}};
}

Json to_json(const CoincidenceLocus& locus) {
    Json hits = Json::array();
    for (const auto& h : locus.hits) hits.push_back({{"b", h.b}, {"c", h.c}, {"residual", h.residual}});
    return {{"family_id", locus.family_id},
            {"x1", locus.x1},
            {"x2", locus.x2},
            {"grid", {{"b", locus.grid_b}, {"c", locus.grid_c}}},
            {"hits", hits}};
}

Json orbit_json(const std::vector<Polygon>& orbit) {
    Json steps = Json::array();
    for (const auto& p : orbit)
        steps.push_back({{"vertices", ring_json(p.vertices())},
                         {"centroid", to_json(vertex_centroid(p))},
                         {"diameter", p.diameter()}});
    return {{"orbit", steps}};
}

Json versioned(Json doc) {
    doc["schema"] = kSchema;
    return doc;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

namespace {

std::string num(double v) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

struct View {
    double min_x, min_y, max_x, max_y;
    double unit;  // a size that reads well at the picture's scale

    // SVG's y axis points down; flip so the picture matches the plane.
    double fy(double v) const { return min_y + max_y - v; }
    std::string x(double v) const { return num(v); }
    std::string y(double v) const { return num(fy(v)); }
};

void extend(std::vector<Point2>& acc, const Object& o) {
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, PointMultiset>) {
                for (const auto& p : x.points()) acc.push_back(p.as_point2());
            } else if constexpr (std::is_same_v<T, WeightedMultiset>) {
                for (const auto& it : x.items()) acc.push_back(it.point.as_point2());
            } else if constexpr (std::is_same_v<T, Triangle>) {
                acc.insert(acc.end(), x.vertices().begin(), x.vertices().end());
            } else if constexpr (std::is_same_v<T, Polygon>) {
                acc.insert(acc.end(), x.vertices().begin(), x.vertices().end());
            } else {
                std::visit(
                    [&](const auto& r) {
                        using R = std::decay_t<decltype(r)>;
                        if constexpr (std::is_same_v<R, PointMultiset>) {
                            for (const auto& p : r.points()) acc.push_back(p.as_point2());
                        } else if constexpr (std::is_same_v<R, Curve>) {
                            acc.insert(acc.end(), r.vertices().begin(), r.vertices().end());
                        } else {
                            acc.insert(acc.end(), r.outer().begin(), r.outer().end());
                        }
                    },
                    x);
            }
        },
        o);
}

std::string path_of(std::span<const Point2> ring, const View& v, bool closed) {
    std::ostringstream os;
    for (std::size_t i = 0; i < ring.size(); ++i)
        os << (i == 0 ? "M" : " L") << v.x(ring[i].x) << " " << v.y(ring[i].y);
    if (closed) os << " Z";
    return os.str();
}

std::string dots(std::span<const Point2> pts, const View& v) {
    std::ostringstream os;
    for (const auto& p : pts)
        os << "  <circle cx=\"" << v.x(p.x) << "\" cy=\"" << v.y(p.y) << "\" r=\"" << num(0.6 * v.unit)
           << "\" fill=\"#333\"/>\n";
    return os.str();
}

std::string glyph(std::size_t i, const NamedPoint& c, const View& v) {
    static const std::array<const char*, 6> colors{"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
    const double s = 1.4 * v.unit;
    const double cx = c.point.x, cy = v.fy(c.point.y);
    std::ostringstream os;
    os << "  <g data-center=\"" << c.id << "\" data-x=\"" << num(c.point.x) << "\" data-y=\"" << num(c.point.y)
       << "\" fill=\"" << colors[i % colors.size()] << "\">\n    ";
    auto poly = [&](std::initializer_list<Point2> offs) {
        os << "<polygon points=\"";
        bool first = true;
        for (const auto& o : offs) {
            os << (first ? "" : " ") << num(cx + s * o.x) << "," << num(cy + s * o.y);
            first = false;
        }
        os << "\"/>";
    };
    switch (i % 4) {
        case 0: poly({{0, -1}, {0.87, 0.5}, {-0.87, 0.5}}); break;      // triangle
        case 1: poly({{-0.7, -0.7}, {0.7, -0.7}, {0.7, 0.7}, {-0.7, 0.7}}); break;  // square
        case 2: os << "<circle cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"" << num(0.8 * s) << "\"/>"; break;
        default: poly({{0, -1}, {1, 0}, {0, 1}, {-1, 0}}); break;       // diamond
    }
    os << "\n    <title>" << c.id << " (" << num(c.point.x) << ", " << num(c.point.y) << ")</title>\n  </g>\n";
    return os.str();
}

}  // namespace

std::string render_svg(const Object& o, const SvgScene& scene) {
    std::vector<Point2> all;
    extend(all, o);
    for (const auto& p : scene.overlay) all.insert(all.end(), p.vertices().begin(), p.vertices().end());
    for (const auto& c : scene.centers) all.push_back(c.point);
    View v{all[0].x, all[0].y, all[0].x, all[0].y, 0.0};
    for (const auto& p : all) {
        v.min_x = std::min(v.min_x, p.x);
        v.min_y = std::min(v.min_y, p.y);
        v.max_x = std::max(v.max_x, p.x);
        v.max_y = std::max(v.max_y, p.y);
    }
    double span = std::max(v.max_x - v.min_x, v.max_y - v.min_y);
    if (!(span > 0.0)) span = 1.0;
    v.unit = span / 100.0;
    const double pad = 0.08 * span;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"480\" height=\"480\" viewBox=\""
       << num(v.min_x - pad) << " " << num(v.min_y - pad) << " " << num(v.max_x - v.min_x + 2 * pad) << " "
       << num(v.max_y - v.min_y + 2 * pad) << "\">\n";
    const std::string stroke = "stroke-width=\"" + num(0.4 * v.unit) + "\"";

    for (const auto& p : scene.overlay)
        os << "  <path class=\"overlay\" d=\"" << path_of(p.vertices(), v, true) << "\" fill=\"none\" stroke=\"#aaa\" "
           << stroke << "/>\n";

    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            const std::string outline = "\" fill=\"#e8eef7\" stroke=\"#222\" " + stroke;
            if constexpr (std::is_same_v<T, PointMultiset> || std::is_same_v<T, WeightedMultiset>) {
                std::vector<Point2> pts;
                extend(pts, x);
                os << dots(pts, v);
            } else if constexpr (std::is_same_v<T, Triangle>) {
                os << "  <path class=\"object\" d=\"" << path_of(x.vertices(), v, true) << outline << "/>\n";
            } else if constexpr (std::is_same_v<T, Polygon>) {
                os << "  <path class=\"object\" d=\"" << path_of(x.vertices(), v, true) << outline << "/>\n";
            } else {
                std::visit(
                    [&](const auto& r) {
                        using R = std::decay_t<decltype(r)>;
                        if constexpr (std::is_same_v<R, PointMultiset>) {
                            std::vector<Point2> pts;
                            for (const auto& p : r.points()) pts.push_back(p.as_point2());
                            os << dots(pts, v);
                        } else if constexpr (std::is_same_v<R, Curve>) {
                            os << "  <path class=\"object\" d=\"" << path_of(r.vertices(), v, true)
                               << "\" fill=\"none\" stroke=\"#222\" " << stroke << "/>\n";
                        } else {
                            std::string d = path_of(r.outer(), v, true);
                            for (const auto& h : r.holes()) d += " " + path_of(h, v, true);
                            os << "  <path class=\"object\" fill-rule=\"evenodd\" d=\"" << d << outline << "/>\n";
                        }
                    },
                    x);
            }
        },
        o);

    // Lines are clipped to a generous box around the picture.
    for (const auto& l : scene.lines) {
        const Point2 a = l.point - 2.0 * span * l.direction;
        const Point2 b = l.point + 2.0 * span * l.direction;
        os << "  <line class=\"central-line\" x1=\"" << v.x(a.x) << "\" y1=\"" << v.y(a.y) << "\" x2=\"" << v.x(b.x)
           << "\" y2=\"" << v.y(b.y) << "\" stroke=\"#555\" stroke-dasharray=\"" << num(2 * v.unit) << "\" " << stroke
           << "/>\n";
    }
    for (std::size_t i = 0; i < scene.centers.size(); ++i) os << glyph(i, scene.centers[i], v);
    os << "</svg>\n";
    return os.str();
}

}  // namespace centerkit
