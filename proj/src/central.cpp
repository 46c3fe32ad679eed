#include "centerkit/central.hpp"

#include <cmath>

#include "centerkit/symmetry.hpp"

namespace centerkit {

Line::Line(Point2 p, Point2 dir) : point(p), direction(dir / norm(dir)) {
    if (!is_finite(direction)) throw InvalidArgument("line direction must be nonzero");
}

bool approx_equal(const Line& a, const Line& b, double size, const Tolerance& tol) {
    const double bound = tol.bound(size);
    // Parallel (up to sign) and each anchor on the other line.
    return std::abs(cross(a.direction, b.direction)) * (1.0 + size) <= bound &&
           a.distance_to(b.point) <= bound && b.distance_to(a.point) <= bound;
}

Line transform(const Similarity2& t, const Line& l) { return {t(l.point), t.linear(l.direction)}; }

Line central_line(const Point2& x1, const Point2& x2, double size, const Tolerance& tol) {
    if (approx_equal(x1, x2, size, tol))
        throw CoincidentCenters("the two centers coincide; no line through them is determined");
    return {x1, x2 - x1};
}

Line central_line(const Triangle& t, CenterId x1, CenterId x2, const Tolerance& tol) {
    return central_line(triangle_center(t, x1), triangle_center(t, x2), t.diameter(), tol);
}

Line symmetry_axis_line(const Polygon& p, const Tolerance& tol) {
    const SymmetryGroup g = symmetry_group_polygon(p, tol);
    if (g.kind == GroupKind::Dihedral && g.k == 1)
        return {g.center, {std::cos(g.axes[0]), std::sin(g.axes[0])}};
    if (g.kind == GroupKind::Dihedral && g.k == 2) {
        // The two axes are not exchanged by any symmetry, so a similarity
        // invariant such as the vertex spread along each axis picks one.
        auto spread = [&](double a) {
            const Point2 u{std::cos(a), std::sin(a)};
            double s = 0.0;
            for (const auto& v : p.vertices()) s += dot(v - g.center, u) * dot(v - g.center, u);
            return s;
        };
        const double s0 = spread(g.axes[0]);
        const double s1 = spread(g.axes[1]);
        const double d = p.diameter();
        if (std::abs(s0 - s1) > tol.rel * (1.0 + d * d) * static_cast<double>(p.size())) {
            const double a = s0 > s1 ? g.axes[0] : g.axes[1];
            return {g.center, {std::cos(a), std::sin(a)}};
        }
    }
    throw CoincidentCenters("no symmetry axis can be singled out for " + describe(g));
}

Polygon midpoint_polygon(const Polygon& p) {
    const auto& v = p.vertices();
    std::vector<Point2> mid(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) mid[i] = v[i] + 0.5 * (v[(i + 1) % v.size()] - v[i]);
    return Polygon(std::move(mid));
}

std::vector<Polygon> iterate_automorphism(const Polygon& p, int steps, bool normalize) {
    if (steps < 0) throw InvalidArgument("steps must be nonnegative");
    std::vector<Polygon> orbit{p};
    orbit.reserve(static_cast<std::size_t>(steps) + 1);
    for (int i = 0; i < steps; ++i) {
        Polygon next = midpoint_polygon(orbit.back());
        if (normalize) {
            const Point2 c = vertex_centroid(next);
            const double d = next.diameter();
            if (d > 0.0) {
                std::vector<Point2> v;
                for (const auto& x : next.vertices()) v.push_back(c + (x - c) / d);
                next = Polygon(std::move(v));
            }
        }
        orbit.push_back(std::move(next));
    }
    return orbit;
}

}  // namespace centerkit
