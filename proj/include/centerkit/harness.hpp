#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "centerkit/geom.hpp"
#include "centerkit/multiset.hpp"
#include "centerkit/polygon.hpp"
#include "centerkit/region.hpp"
#include "centerkit/symmetry.hpp"
#include "centerkit/triangle.hpp"

namespace centerkit {

enum class ObjectKind { Multiset, Weighted, Triangle, Polygon, Region };

using Object = std::variant<PointMultiset, WeightedMultiset, Triangle, Polygon, Region>;

ObjectKind kind_of(const Object& o);
std::string to_string(ObjectKind k);
std::optional<ObjectKind> parse_kind(const std::string& name);

Object transform(const Similarity2& t, const Object& o);
double object_diameter(const Object& o);

/// A named center for one kind of object.
struct CenterEntry {
    std::string id;
    ObjectKind kind;
    std::function<Point2(const Object&)> compute;
    /// Part of the equivariance suite. Off for the pole of inaccessibility,
    /// whose location is only determined up to the search precision.
    bool in_suite = true;
    /// Deliberately not a center; the harness must reject it.
    bool negative_control = false;
};

const std::vector<CenterEntry>& center_registry();
/// Throws InvalidArgument for unregistered (id, kind) pairs.
const CenterEntry& find_center(const std::string& id, ObjectKind kind);
/// Ids of the genuine centers registered for a kind, in registry order.
std::vector<std::string> centers_for(ObjectKind kind);

/// Symmetry group of any object: multisets and region point sets by their
/// points, triangles, polygons, curves and hole-free areas by their vertex
/// cycle; holes keep only the elements that also map the holes' vertices
/// onto themselves. Weighted multisets are not supported (InvalidArgument).
SymmetryGroup object_symmetry_group(const Object& o, const Tolerance& tol = {});

/// Every genuine registered center of `o`, computed; centers that throw
/// (e.g. a non-unique medoid) are skipped.
std::vector<NamedPoint> registered_centers(const Object& o, bool include_off_suite = true);

/// Seeded random objects. Multisets are uniform in a disk; polygons are
/// star-shaped (sorted angles around a center), hence simple; triangles
/// are drawn in a disk and rejected when thin; regions cycle through
/// points, curves and areas built from star polygons.
Object random_object(ObjectKind kind, std::uint64_t seed);
std::vector<Point2> random_star_polygon(Rng& rng, int m, Point2 center, double r_min, double r_max);

struct EquivarianceReport {
    std::string center_id;
    ObjectKind kind;
    int trials = 0;
    /// Largest |X(T(O)) - T(X(O))| / (1 + scale * diam(O)) over the trials.
    double max_residual = 0.0;
    double tolerance = 1e-9;
    int failures = 0;
    std::optional<Object> worst_object;
    std::optional<Similarity2> worst_similarity;
    bool pass = false;
};

/// Runs `trials` independent (object, similarity) pairs. Trial i draws from
/// derive_seed(seed, i), so reports do not depend on evaluation order.
EquivarianceReport check_equivariance(const std::string& center_id, ObjectKind kind, int trials,
                                      std::uint64_t seed, double tolerance = 1e-9);

/// Triangles with side a fixed and (b, c) on a rectangular grid.
struct TriangleFamily {
    double a = 1.0;
    double b_min = 0.6, b_max = 1.4;
    double c_min = 0.6, c_max = 1.4;
    double step = 0.01;

    /// Parses "a=1,b=0.6:1.4,c=0.6:1.4,step=0.01" (missing keys keep defaults).
    static TriangleFamily parse(const std::string& spec);
    std::string id() const;
};

struct LocusHit {
    double b = 0.0;
    double c = 0.0;
    double residual = 0.0;
};

struct CoincidenceLocus {
    std::string family_id;
    std::string x1, x2;
    int grid_b = 0;
    int grid_c = 0;
    std::vector<LocusHit> hits;
};

/// Parameters (b, c) where the two centers coincide. Grid nodes already
/// within tolerance are hits; grid-local minima are refined by damped
/// Newton steps (step-halving) on X1 - X2, and hits are merged within 1e-6.
CoincidenceLocus coincidence_locus(CenterId x1, CenterId x2, const TriangleFamily& family,
                                   const Tolerance& tol = {});

}  // namespace centerkit
