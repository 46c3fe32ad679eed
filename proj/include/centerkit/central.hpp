#pragma once

#include <vector>

#include "centerkit/geom.hpp"
#include "centerkit/polygon.hpp"
#include "centerkit/triangle.hpp"

namespace centerkit {

/// Unoriented line. Equality ignores the sign of the direction and where
/// along the line the anchor point sits.
struct Line {
    Point2 point;
    Point2 direction;  // unit

    Line(Point2 p, Point2 dir);
    double distance_to(const Point2& q) const { return std::abs(cross(direction, q - point)); }
};

bool approx_equal(const Line& a, const Line& b, double size, const Tolerance& tol = {});
Line transform(const Similarity2& t, const Line& l);

/// Line through two centers of one object. Throws CoincidentCenters when
/// they are within the scale-aware tolerance of each other.
Line central_line(const Point2& x1, const Point2& x2, double size, const Tolerance& tol = {});
Line central_line(const Triangle& t, CenterId x1, CenterId x2, const Tolerance& tol = {});

/// A central line that needs no second center: the reflection axis when the
/// symmetry group is a single reflection, or for a Dihedral(2) polygon (a
/// non-square rectangle, say) the axis along which the vertices spread the
/// most. Throws CoincidentCenters when no axis can be singled out.
Line symmetry_axis_line(const Polygon& p, const Tolerance& tol = {});

/// Polygon of the midpoints of consecutive sides.
Polygon midpoint_polygon(const Polygon& p);

/// [p, F(p), ..., F^steps(p)] for F = midpoint_polygon. With `normalize`,
/// every iterate is rescaled about its vertex centroid to unit diameter.
std::vector<Polygon> iterate_automorphism(const Polygon& p, int steps, bool normalize = false);

}  // namespace centerkit
