#include "centerkit/harness.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "centerkit/central.hpp"

namespace centerkit {

ObjectKind kind_of(const Object& o) { return static_cast<ObjectKind>(o.index()); }

std::string to_string(ObjectKind k) {
    switch (k) {
        case ObjectKind::Multiset: return "multiset";
        case ObjectKind::Weighted: return "weighted";
        case ObjectKind::Triangle: return "triangle";
        case ObjectKind::Polygon: return "polygon";
        case ObjectKind::Region: return "region";
    }
    return "?";
}

std::optional<ObjectKind> parse_kind(const std::string& name) {
    for (auto k : {ObjectKind::Multiset, ObjectKind::Weighted, ObjectKind::Triangle,
                   ObjectKind::Polygon, ObjectKind::Region})
        if (to_string(k) == name) return k;
    return std::nullopt;
}

Object transform(const Similarity2& t, const Object& o) {
    return std::visit([&](const auto& x) -> Object { return transform(t, x); }, o);
}

double object_diameter(const Object& o) {
    return std::visit(
        [](const auto& x) -> double {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Region>) return region_diameter(x);
            else return x.diameter();
        },
        o);
}

namespace {

template <class T>
const T& as(const Object& o) {
    return std::get<T>(o);
}

Point2 bbox_center(const Object& o) {
    const auto pts = as<PointMultiset>(o).planar_points();
    Point2 lo = pts[0], hi = pts[0];
    for (const auto& p : pts) {
        lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
        hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
    }
    return (lo + hi) * 0.5;
}

// Centroid of the topological boundary: a finite set and a closed curve are
// their own boundaries; an area's boundary is its outer ring plus its holes.
Point2 boundary_centroid(const Region& r) {
    const auto* a = std::get_if<Area>(&r);
    if (a == nullptr) return hausdorff_centroid(r);
    std::vector<Part> parts{part_of(Region{Curve(a->outer())})};
    for (const auto& h : a->holes()) parts.push_back(part_of(Region{Curve(h)}));
    return decomposition_centroid(parts);
}

std::vector<CenterEntry> build_registry() {
    using K = ObjectKind;
    std::vector<CenterEntry> r;
    r.push_back({"centroid", K::Multiset,
                 [](const Object& o) { return centroid(as<PointMultiset>(o)).as_point2(); }});
    r.push_back({"one_center", K::Multiset,
                 [](const Object& o) { return one_center(as<PointMultiset>(o)).center; }});
    r.push_back({"medoid", K::Multiset,
                 [](const Object& o) { return medoid(as<PointMultiset>(o)).as_point2(); }});
    r.push_back({"bbox_center", K::Multiset, bbox_center, true, true});
    r.push_back({"weighted_centroid", K::Weighted, [](const Object& o) {
                     return weighted_centroid(as<WeightedMultiset>(o)).as_point2();
                 }});
    for (CenterId id : builtin_center_ids())
        r.push_back({to_string(id), K::Triangle,
                     [id](const Object& o) { return triangle_center(as<Triangle>(o), id); }});
    r.push_back({"centroid", K::Polygon,
                 [](const Object& o) { return vertex_centroid(as<Polygon>(o)); }});
    r.push_back({"center_S", K::Polygon, [](const Object& o) { return center_S(as<Polygon>(o)); }});
    r.push_back({"center_A", K::Polygon, [](const Object& o) { return center_A(as<Polygon>(o)); }});
    for (const auto& g : matrix_g_registry())
        r.push_back({"matrix_g:" + g.id, K::Polygon, [&g](const Object& o) {
                         return center_from_matrix_g(as<Polygon>(o), g);
                     }});
    r.push_back({"centroid", K::Region,
                 [](const Object& o) { return hausdorff_centroid(as<Region>(o)); }});
    r.push_back({"boundary_centroid", K::Region,
                 [](const Object& o) { return boundary_centroid(as<Region>(o)); }});
    r.push_back({"pole", K::Region,
                 [](const Object& o) {
                     const auto* a = std::get_if<Area>(&as<Region>(o));
                     if (a == nullptr) throw InvalidArgument("pole needs an area region");
                     return pole_of_inaccessibility(*a, 1e-6 * region_diameter(Region{*a})).point;
                 },
                 false});
    return r;
}

}  // namespace

const std::vector<CenterEntry>& center_registry() {
    static const std::vector<CenterEntry> registry = build_registry();
    return registry;
}

const CenterEntry& find_center(const std::string& id, ObjectKind kind) {
    for (const auto& e : center_registry())
        if (e.id == id && e.kind == kind) return e;
    throw InvalidArgument("no center '" + id + "' is registered for " + to_string(kind) + " objects");
}

std::vector<std::string> centers_for(ObjectKind kind) {
    std::vector<std::string> out;
    for (const auto& e : center_registry())
        if (e.kind == kind && !e.negative_control) out.push_back(e.id);
    return out;
}

namespace {

// Subgroup of `g` whose elements also map `pts` onto themselves.
SymmetryGroup restrict_group(const SymmetryGroup& g, std::span<const Point2> pts, double bound) {
    SymmetryGroup out = g;
    int k = 0;
    for (int j = 0; j < g.k; ++j)
        if (maps_onto_itself(Similarity2::rotation_about(g.center, 2.0 * M_PI * j / g.k), pts, bound)) ++k;
    out.k = std::max(k, 1);
    out.axes.clear();
    for (double a : g.axes)
        if (maps_onto_itself(Similarity2::reflection_across(g.center, a), pts, bound)) out.axes.push_back(a);
    out.kind = out.axes.empty() ? GroupKind::Cyclic : GroupKind::Dihedral;
    return out;
}

}  // namespace

SymmetryGroup object_symmetry_group(const Object& o, const Tolerance& tol) {
    struct Visitor {
        const Tolerance& tol;
        SymmetryGroup operator()(const PointMultiset& m) const { return symmetry_group_multiset(m, tol); }
        SymmetryGroup operator()(const WeightedMultiset&) const {
            throw InvalidArgument("symmetry of weighted multisets is not supported");
        }
        SymmetryGroup operator()(const Triangle& t) const {
            return symmetry_group_polygon(Polygon({t.A(), t.B(), t.C()}), tol);
        }
        SymmetryGroup operator()(const Polygon& p) const { return symmetry_group_polygon(p, tol); }
        SymmetryGroup operator()(const Curve& c) const { return symmetry_group_polygon(Polygon(c.vertices()), tol); }
        SymmetryGroup operator()(const Area& a) const {
            SymmetryGroup g = symmetry_group_polygon(Polygon(a.outer()), tol);
            if (a.holes().empty()) return g;
            std::vector<Point2> hv;
            for (const auto& h : a.holes()) hv.insert(hv.end(), h.begin(), h.end());
            return restrict_group(g, hv, tol.rel * region_diameter(Region{a}) + tol.abs);
        }
        SymmetryGroup operator()(const Region& r) const { return std::visit(*this, r); }
    };
    return std::visit(Visitor{tol}, o);
}

std::vector<NamedPoint> registered_centers(const Object& o, bool include_off_suite) {
    std::vector<NamedPoint> out;
    const ObjectKind kind = kind_of(o);
    for (const auto& e : center_registry()) {
        if (e.kind != kind || e.negative_control || (!include_off_suite && !e.in_suite)) continue;
        try {
            out.push_back({e.id, e.compute(o)});
        } catch (const Error&) {
        }
    }
    return out;
}

std::vector<Point2> random_star_polygon(Rng& rng, int m, Point2 center, double r_min, double r_max) {
    for (;;) {
        std::vector<double> gaps(static_cast<std::size_t>(m));
        double total = 0.0;
        for (double& g : gaps) total += (g = rng.uniform(0.5, 1.0));
        double angle = rng.uniform(0.0, 2.0 * M_PI);
        std::vector<Point2> v;
        for (double g : gaps) {
            const double r = rng.uniform(r_min, r_max);
            v.push_back(center + r * Point2{std::cos(angle), std::sin(angle)});
            angle += 2.0 * M_PI * g / total;
        }
        if (ring_is_simple(v)) return v;
    }
}

Object random_object(ObjectKind kind, std::uint64_t seed) {
    Rng rng(seed);
    const Point2 center{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)};
    const double radius = rng.uniform(0.5, 5.0);
    auto disk_point = [&] {
        const double r = radius * std::sqrt(rng.uniform());
        const double t = rng.uniform(0.0, 2.0 * M_PI);
        return center + r * Point2{std::cos(t), std::sin(t)};
    };
    switch (kind) {
        case ObjectKind::Multiset: {
            std::vector<Point2> pts(static_cast<std::size_t>(rng.uniform_int(3, 10)));
            for (auto& p : pts) p = disk_point();
            return PointMultiset::planar(pts);
        }
        case ObjectKind::Weighted: {
            std::vector<WeightedPoint> items(static_cast<std::size_t>(rng.uniform_int(1, 10)));
            for (auto& it : items) it = {PointN(disk_point()), rng.uniform(0.1, 5.0)};
            return WeightedMultiset(std::move(items));
        }
        case ObjectKind::Triangle:
            for (;;) {
                const Point2 a = disk_point(), b = disk_point(), c = disk_point();
                const double d = diameter(std::vector<Point2>{a, b, c});
                if (std::abs(orient2d(a, b, c)) >= 1e-2 * d * d) return Triangle(a, b, c);
            }
        case ObjectKind::Polygon:
            return Polygon(random_star_polygon(rng, rng.uniform_int(3, 10), center, 0.3 * radius, radius));
        case ObjectKind::Region: {
            const int d = rng.uniform_int(0, 2);
            if (d == 0) {
                std::vector<Point2> pts(static_cast<std::size_t>(rng.uniform_int(1, 10)));
                for (auto& p : pts) p = disk_point();
                return Region{PointMultiset::planar(pts)};
            }
            auto ring = random_star_polygon(rng, rng.uniform_int(3, 10), center, 0.3 * radius, radius);
            if (d == 1) return Region{Curve(std::move(ring))};
            if (rng.coin()) {
                // Small triangular hole around the star center; retried
                // without the hole if it does not fit.
                std::vector<Point2> hole;
                const double hr = 0.1 * radius;
                for (int i = 0; i < 3; ++i) {
                    const double t = rng.uniform(0.0, 2.0 * M_PI / 3.0) + 2.0 * M_PI * i / 3.0;
                    hole.push_back(center + hr * Point2{std::cos(t), std::sin(t)});
                }
                try {
                    return Region{Area(ring, {hole})};
                } catch (const Error&) {
                }
            }
            return Region{Area(std::move(ring))};
        }
    }
    throw InvalidArgument("unknown object kind");
}

EquivarianceReport check_equivariance(const std::string& center_id, ObjectKind kind, int trials,
                                      std::uint64_t seed, double tolerance) {
    if (trials <= 0) throw InvalidArgument("trials must be positive");
    const CenterEntry& entry = find_center(center_id, kind);
    EquivarianceReport rep;
    rep.center_id = center_id;
    rep.kind = kind;
    rep.trials = trials;
    rep.tolerance = tolerance;
    const SimilarityRanges ranges;
    for (int i = 0; i < trials; ++i) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
        const Object obj = random_object(kind, rng.next());
        const Similarity2 t = sample_similarity(rng.next(), ranges, true);
        double residual;
        try {
            const Point2 direct = t(entry.compute(obj));
            const Point2 moved = entry.compute(transform(t, obj));
            residual = distance(direct, moved) / (1.0 + t.scale() * object_diameter(obj));
        } catch (const Error&) {
            residual = std::numeric_limits<double>::infinity();
        }
        if (!(residual <= tolerance)) ++rep.failures;
        if (!rep.worst_object || residual > rep.max_residual || std::isnan(residual)) {
            rep.max_residual = residual;
            rep.worst_object = obj;
            rep.worst_similarity = t;
        }
    }
    rep.pass = rep.failures == 0 && rep.max_residual <= tolerance;
    return rep;
}

TriangleFamily TriangleFamily::parse(const std::string& spec) {
    TriangleFamily f;
    std::stringstream ss(spec);
    std::string item;
    auto number = [&](const std::string& s) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size() || s.empty()) throw InvalidArgument("bad number '" + s + "' in family spec");
        return v;
    };
    auto range = [&](const std::string& s, double& lo, double& hi) {
        const auto colon = s.find(':');
        if (colon == std::string::npos) throw InvalidArgument("expected lo:hi, got '" + s + "'");
        lo = number(s.substr(0, colon));
        hi = number(s.substr(colon + 1));
    };
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw InvalidArgument("expected key=value, got '" + item + "'");
        const std::string key = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        if (key == "a") f.a = number(value);
        else if (key == "b") range(value, f.b_min, f.b_max);
        else if (key == "c") range(value, f.c_min, f.c_max);
        else if (key == "step") f.step = number(value);
        else throw InvalidArgument("unknown family key '" + key + "'");
    }
    if (!(f.step > 0.0) || f.b_max < f.b_min || f.c_max < f.c_min || !(f.a > 0.0))
        throw InvalidArgument("empty or invalid parameter grid");
    return f;
}

std::string TriangleFamily::id() const {
    auto num = [](double v) {
        std::array<char, 32> buf{};
        return std::string(buf.data(), std::to_chars(buf.data(), buf.data() + buf.size(), v).ptr);
    };
    return "a=" + num(a) + ",b=" + num(b_min) + ":" + num(b_max) + ",c=" + num(c_min) + ":" + num(c_max) +
           ",step=" + num(step);
}

namespace {

struct LocusProblem {
    CenterId x1, x2;
    double a;

    // X1 - X2 on the triangle with sides (a, b, c); nullopt when invalid.
    std::optional<Point2> residual(double b, double c) const {
        try {
            const Triangle t = Triangle::from_sides(a, b, c);
            return triangle_center(t, x1) - triangle_center(t, x2);
        } catch (const Error&) {
            return std::nullopt;
        }
    }
};

// Damped Newton on the 2x2 system X1 - X2 = 0, confined to a box. Steps
// that do not reduce the residual are halved.
std::optional<LocusHit> refine(const LocusProblem& pb, double b, double c, double b_lo,
                               double b_hi, double c_lo, double c_hi) {
    auto r = pb.residual(b, c);
    if (!r) return std::nullopt;
    const double h = 1e-7;
    for (int it = 0; it < 50 && norm(*r) > 0.0; ++it) {
        const auto rb1 = pb.residual(b + h, c), rb0 = pb.residual(b - h, c);
        const auto rc1 = pb.residual(b, c + h), rc0 = pb.residual(b, c - h);
        if (!rb1 || !rb0 || !rc1 || !rc0) return std::nullopt;
        const Point2 jb = (*rb1 - *rb0) / (2.0 * h);
        const Point2 jc = (*rc1 - *rc0) / (2.0 * h);
        const double det = cross(jb, jc);
        if (std::abs(det) < 1e-14) break;
        // Solve [jb jc] (db, dc) = -r by Cramer's rule.
        double db = -cross(*r, jc) / det;
        double dc = -cross(jb, *r) / det;
        bool improved = false;
        for (int half = 0; half < 40; ++half) {
            const auto rn = pb.residual(b + db, c + dc);
            if (rn && norm(*rn) < norm(*r)) {
                b += db;
                c += dc;
                r = rn;
                improved = true;
                break;
            }
            db *= 0.5;
            dc *= 0.5;
        }
        if (!improved || std::hypot(db, dc) < 1e-14) break;
        if (b < b_lo || b > b_hi || c < c_lo || c > c_hi) return std::nullopt;
    }
    return LocusHit{b, c, norm(*r)};
}

}  // namespace

CoincidenceLocus coincidence_locus(CenterId x1, CenterId x2, const TriangleFamily& f,
                                   const Tolerance& tol) {
    const int nb = static_cast<int>(std::llround((f.b_max - f.b_min) / f.step)) + 1;
    const int nc = static_cast<int>(std::llround((f.c_max - f.c_min) / f.step)) + 1;
    if (nb <= 0 || nc <= 0) throw InvalidArgument("empty parameter grid");
    const LocusProblem pb{x1, x2, f.a};
    auto bval = [&](int i) { return f.b_min + i * f.step; };
    auto cval = [&](int j) { return f.c_min + j * f.step; };
    // Triangles of the family stay within a fixed size, so one bound serves the grid.
    const double bound = tol.bound(std::max({f.a, f.b_max, f.c_max}));

    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> val(static_cast<std::size_t>(nb * nc), inf);
    auto at = [&](int i, int j) -> double& { return val[static_cast<std::size_t>(i * nc + j)]; };
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nc; ++j)
            if (auto r = pb.residual(bval(i), cval(j))) at(i, j) = norm(*r);

    CoincidenceLocus out;
    out.family_id = f.id();
    out.x1 = to_string(x1);
    out.x2 = to_string(x2);
    out.grid_b = nb;
    out.grid_c = nc;

    std::vector<LocusHit> hits;
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nc; ++j) {
            const double v = at(i, j);
            if (!std::isfinite(v)) continue;
            bool local_min = true;
            for (int di = -1; di <= 1 && local_min; ++di)
                for (int dj = -1; dj <= 1; ++dj) {
                    const int ii = i + di, jj = j + dj;
                    if ((di || dj) && ii >= 0 && jj >= 0 && ii < nb && jj < nc && at(ii, jj) < v) {
                        local_min = false;
                        break;
                    }
                }
            if (v > bound && !local_min) continue;
            const double b = bval(i), c = cval(j);
            auto hit = refine(pb, b, c, std::max(f.b_min, b - f.step), std::min(f.b_max, b + f.step),
                              std::max(f.c_min, c - f.step), std::min(f.c_max, c + f.step));
            if (hit && hit->residual <= bound) {
                hits.push_back(*hit);
            } else if (v <= bound) {
                hits.push_back({b, c, v});
            }
        }

    // Neighbouring grid minima converge to the same point.
    for (const auto& h : hits) {
        const bool dup = std::any_of(out.hits.begin(), out.hits.end(), [&](const LocusHit& o) {
            return std::abs(o.b - h.b) <= 1e-6 && std::abs(o.c - h.c) <= 1e-6;
        });
        if (!dup) out.hits.push_back(h);
    }
    return out;
}

}  // namespace centerkit
