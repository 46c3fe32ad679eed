#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "centerkit/geom.hpp"
#include "centerkit/multiset.hpp"

namespace centerkit {

/// Closed polyline (d = 1). Non-self-intersecting, positive length.
class Curve {
public:
    explicit Curve(std::vector<Point2> vertices);
    const std::vector<Point2>& vertices() const { return v_; }

private:
    std::vector<Point2> v_;
};

/// Polygonal area with holes (d = 2). Stored with the outer ring
/// counterclockwise and the holes clockwise.
class Area {
public:
    Area(std::vector<Point2> outer, std::vector<std::vector<Point2>> holes = {});
    const std::vector<Point2>& outer() const { return outer_; }
    const std::vector<std::vector<Point2>>& holes() const { return holes_; }

private:
    std::vector<Point2> outer_;
    std::vector<std::vector<Point2>> holes_;
};

/// Planar set of Hausdorff dimension 0, 1 or 2 with positive finite measure.
using Region = std::variant<PointMultiset, Curve, Area>;

int region_dimension(const Region& r);
/// Count, length or area.
double measure(const Region& r);
double region_diameter(const Region& r);
Region transform(const Similarity2& t, const Region& r);

/// First moment over measure: multiset centroid for d = 0, length-weighted
/// side midpoints for d = 1, area centroid with holes subtracted for d = 2.
/// Throws Degenerate when the measure is below the absolute tolerance.
Point2 hausdorff_centroid(const Region& r, const Tolerance& tol = {});

/// One piece of a geometric decomposition. The measure may be negative for
/// pieces that are cut out of a larger one.
struct Part {
    double measure = 0.0;
    Point2 centroid;
};

/// The part describing a whole region.
Part part_of(const Region& r);
/// The same part with its measure negated.
Part subtracted(Part p);

/// Measure-weighted mean of the part centroids. Throws Degenerate when the
/// total measure is not positive.
Point2 decomposition_centroid(std::span<const Part> parts, const Tolerance& tol = {});

/// Distance between the centroid of the outer boundary (as a curve) and
/// the centroid of the enclosed area. Requires an area without holes.
double boundary_vs_area_discrepancy(const Area& a);

/// Signed distance to the area's boundary: positive inside.
double boundary_clearance(const Area& a, const Point2& p);

struct Pole {
    Point2 point;
    double clearance = 0.0;
    /// False when a second maximizer was found away from `point`.
    bool unique = true;
};

/// Point of the area farthest from its boundary (outer ring and holes), to
/// within `precision` in clearance. Best-first quadtree search.
Pole pole_of_inaccessibility(const Area& a, double precision);

}  // namespace centerkit
