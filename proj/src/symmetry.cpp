#include "centerkit/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace centerkit {

namespace {

double axis_mod_pi(double a) {
    a = std::fmod(a, M_PI);
    if (a < 0.0) a += M_PI;
    return a;
}

// Greedy matching of t(from) against `to`, each target used once.
bool maps_onto(const Similarity2& t, std::span<const Point2> from, std::span<const Point2> to,
               double bound) {
    if (from.size() != to.size()) return false;
    std::vector<bool> used(to.size(), false);
    for (const auto& p : from) {
        const Point2 q = t(p);
        std::size_t best = to.size();
        double best_d = bound;
        for (std::size_t j = 0; j < to.size(); ++j) {
            if (used[j]) continue;
            const double d = distance(q, to[j]);
            if (d <= best_d) {
                best_d = d;
                best = j;
            }
        }
        if (best == to.size()) return false;
        used[best] = true;
    }
    return true;
}

Point2 mean_of(std::span<const Point2> pts) {
    Point2 off{};
    for (const auto& p : pts) off += p - pts[0];
    return pts[0] + off / static_cast<double>(pts.size());
}

// Candidate partners of `ref` (same distance from the center).
std::vector<Point2> same_radius(std::span<const Point2> pts, const Point2& center, double radius,
                                double bound) {
    std::vector<Point2> out;
    for (const auto& p : pts)
        if (std::abs(distance(p, center) - radius) <= bound) out.push_back(p);
    return out;
}

double angle_of(const Point2& v) { return std::atan2(v.y, v.x); }

SymmetryGroup group_from(const Point2& center, int k, std::vector<double> axes) {
    SymmetryGroup g;
    g.center = center;
    g.k = k;
    std::sort(axes.begin(), axes.end());
    g.kind = axes.empty() ? GroupKind::Cyclic : GroupKind::Dihedral;
    g.axes = std::move(axes);
    return g;
}

}  // namespace

std::vector<Similarity2> SymmetryGroup::elements() const {
    std::vector<Similarity2> out;
    for (int j = 0; j < k; ++j) out.push_back(Similarity2::rotation_about(center, 2.0 * M_PI * j / k));
    for (double a : axes) out.push_back(Similarity2::reflection_across(center, a));
    return out;
}

std::string describe(const SymmetryGroup& g) {
    std::ostringstream os;
    os << (g.kind == GroupKind::Cyclic ? "Cyclic(" : "Dihedral(") << g.k << ")";
    return os.str();
}

std::string fixed_set_kind(const FixedSet& f) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, PlaneSet>) return "plane";
            else if constexpr (std::is_same_v<T, LineSet>) return "line";
            else return "point";
        },
        f);
}

double distance_to(const FixedSet& f, const Point2& p) {
    return std::visit(
        [&](const auto& x) -> double {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, PlaneSet>) return 0.0;
            else if constexpr (std::is_same_v<T, LineSet>) return std::abs(cross(x.direction, p - x.point));
            else return distance(p, x.point);
        },
        f);
}

bool maps_onto_itself(const Similarity2& t, std::span<const Point2> pts, double bound) {
    return maps_onto(t, pts, pts, bound);
}

SymmetryGroup symmetry_group_multiset(const PointMultiset& o, const Tolerance& tol) {
    const auto pts = o.planar_points();
    const double diam = diameter(pts);
    const double bound = tol.rel * diam + tol.abs;
    if (diam <= tol.abs) throw SingletonUnsupported("all points coincide; the symmetry group is infinite");

    // Every symmetry is an isometry fixing the centroid; the farthest point
    // must go to a point at the same distance.
    const Point2 c = mean_of(pts);
    const Point2 ref = *std::max_element(pts.begin(), pts.end(), [&](const Point2& a, const Point2& b) {
        return distance(a, c) < distance(b, c);
    });
    const auto partners = same_radius(pts, c, distance(ref, c), bound);
    const double ref_angle = angle_of(ref - c);

    int verified_rotations = 0;
    for (const auto& q : partners) {
        const double theta = angle_of(q - c) - ref_angle;
        if (maps_onto_itself(Similarity2::rotation_about(c, theta), pts, bound)) ++verified_rotations;
    }
    // Largest k whose full rotation subgroup verifies. Duplicated partners
    // (multiplicity) can inflate the count; the loop settles on a real group.
    int k = 1;
    for (int cand = std::max(verified_rotations, 1); cand >= 1; --cand) {
        bool ok = true;
        for (int j = 1; j < cand && ok; ++j)
            ok = maps_onto_itself(Similarity2::rotation_about(c, 2.0 * M_PI * j / cand), pts, bound);
        if (ok) {
            k = cand;
            break;
        }
    }

    std::vector<double> axes;
    for (const auto& q : partners) {
        const double phi = axis_mod_pi(0.5 * (angle_of(q - c) + ref_angle));
        if (!maps_onto_itself(Similarity2::reflection_across(c, phi), pts, bound)) continue;
        // All k reflections generated with the rotations must verify too.
        std::vector<double> cand;
        bool ok = true;
        for (int j = 0; j < k && ok; ++j) {
            const double a = axis_mod_pi(phi + M_PI * j / k);
            ok = maps_onto_itself(Similarity2::reflection_across(c, a), pts, bound);
            cand.push_back(a);
        }
        if (ok) {
            axes = std::move(cand);
            break;
        }
    }
    return group_from(c, k, std::move(axes));
}

SymmetryGroup symmetry_group_polygon(const Polygon& p, const Tolerance& tol) {
    if (!p.is_simple()) throw NonSimple("polygon is not simple");
    const auto& v = p.vertices();
    const std::size_t m = v.size();
    const double bound = tol.rel * p.diameter() + tol.abs;
    const SymmetryGroup vertex_group = symmetry_group_multiset(PointMultiset::planar(v), tol);

    // An element is kept when the vertex permutation it induces is a cyclic
    // shift or a reversal of the vertex cycle.
    auto respects_adjacency = [&](const Similarity2& t) {
        std::vector<std::size_t> perm(m);
        for (std::size_t i = 0; i < m; ++i) {
            const Point2 q = t(v[i]);
            std::size_t j = 0;
            while (j < m && distance(q, v[j]) > bound) ++j;
            if (j == m) return false;
            perm[i] = j;
        }
        const std::size_t step = (perm[1] + m - perm[0]) % m;
        if (step != 1 && step != m - 1) return false;
        for (std::size_t i = 0; i < m; ++i)
            if ((perm[(i + 1) % m] + m - perm[i]) % m != step) return false;
        return true;
    };

    int k = 0;
    for (int j = 0; j < vertex_group.k; ++j)
        if (respects_adjacency(Similarity2::rotation_about(vertex_group.center, 2.0 * M_PI * j / vertex_group.k)))
            ++k;
    // The kept rotations form a subgroup, hence are the multiples of 2pi/k.
    std::vector<double> axes;
    for (double a : vertex_group.axes)
        if (respects_adjacency(Similarity2::reflection_across(vertex_group.center, a))) axes.push_back(a);
    if (!axes.empty() && static_cast<int>(axes.size()) != k)
        throw Error("inconsistent polygon symmetry group");  // not a group: cannot happen for exact data
    return group_from(vertex_group.center, k, std::move(axes));
}

FixedSet fixed_set(const SymmetryGroup& g) {
    if (g.trivial()) return PlaneSet{};
    if (g.kind == GroupKind::Dihedral && g.k == 1)
        return LineSet{g.center, {std::cos(g.axes.front()), std::sin(g.axes.front())}};
    return PointSet{g.center};
}

std::vector<AdmissibilityEntry> admissible_center_check(const SymmetryGroup& g, double diam,
                                                        std::span<const NamedPoint> centers,
                                                        const Tolerance& tol) {
    const FixedSet fs = fixed_set(g);
    std::vector<AdmissibilityEntry> out;
    for (const auto& c : centers) {
        const double r = distance_to(fs, c.point);
        out.push_back({c.id, c.point, fixed_set_kind(fs), r, r <= tol.bound(diam)});
    }
    return out;
}

std::vector<AdmissibilityEntry> admissible_center_check(const PointMultiset& o,
                                                        std::span<const NamedPoint> centers,
                                                        const Tolerance& tol) {
    return admissible_center_check(symmetry_group_multiset(o, tol), o.diameter(), centers, tol);
}

std::vector<AdmissibilityEntry> admissible_center_check(const Polygon& p,
                                                        std::span<const NamedPoint> centers,
                                                        const Tolerance& tol) {
    return admissible_center_check(symmetry_group_polygon(p, tol), p.diameter(), centers, tol);
}

std::optional<Similarity2> find_similarity(const PointMultiset& from, const PointMultiset& to,
                                           const Tolerance& tol) {
    if (from.size() != to.size()) return std::nullopt;
    const auto a = from.planar_points();
    const auto b = to.planar_points();
    const Point2 ca = mean_of(a);
    const Point2 cb = mean_of(b);
    double ra = 0.0, rb = 0.0;
    for (const auto& p : a) ra += dot(p - ca, p - ca);
    for (const auto& p : b) rb += dot(p - cb, p - cb);
    const double bound = tol.rel * diameter(b) + tol.abs;
    if (ra <= 0.0 || rb <= 0.0) {
        if (ra > 0.0 || rb > 0.0) return std::nullopt;
        return Similarity2::translation(cb - ca);
    }
    const double s = std::sqrt(rb / ra);
    const Point2 ref = *std::max_element(a.begin(), a.end(), [&](const Point2& x, const Point2& y) {
        return distance(x, ca) < distance(y, ca);
    });
    const double alpha = angle_of(ref - ca);
    for (const auto& q : same_radius(b, cb, s * distance(ref, ca), bound)) {
        const double beta = angle_of(q - cb);
        for (bool refl : {false, true}) {
            const Similarity2 lin(s, refl ? beta + alpha : beta - alpha, refl, {});
            const Similarity2 t(s, lin.rotation(), refl, cb - lin.linear(ca));
            if (maps_onto(t, a, b, bound)) return t;
        }
    }
    return std::nullopt;
}

OrbitCenter::OrbitCenter(PointMultiset o, Point2 p, const Tolerance& tol)
    : base_(std::move(o)), point_(p), tol_(tol) {
    const double diam = base_.diameter();
    if (diam <= tol.abs) {
        if (distance(p, base_.points().front().as_point2()) > tol.bound(0.0))
            throw InvalidArgument("point is not fixed by the symmetries of the object");
        return;
    }
    if (distance_to(fixed_set(symmetry_group_multiset(base_, tol)), p) > tol.bound(diam))
        throw InvalidArgument("point is not fixed by the symmetries of the object");
}

Point2 OrbitCenter::operator()(const PointMultiset& other) const {
    const auto t = find_similarity(base_, other, tol_);
    if (!t) throw InvalidArgument("object is not in the similarity orbit of the base object");
    return (*t)(point_);
}

}  // namespace centerkit
