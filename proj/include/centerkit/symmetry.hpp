#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "centerkit/geom.hpp"
#include "centerkit/multiset.hpp"
#include "centerkit/polygon.hpp"

namespace centerkit {

enum class GroupKind { Cyclic, Dihedral };

/// Finite group of isometries mapping an object onto itself: Cyclic(k) has
/// the k rotations about `center`; Dihedral(k) adds k reflections whose
/// axes pass through `center`.
struct SymmetryGroup {
    GroupKind kind = GroupKind::Cyclic;
    int k = 1;
    Point2 center;
    /// Axis angles in [0, pi), ascending. Empty for cyclic groups.
    std::vector<double> axes;

    int order() const { return kind == GroupKind::Cyclic ? k : 2 * k; }
    bool trivial() const { return order() == 1; }
    /// All group elements: rotations by 2*pi*j/k, then the reflections.
    std::vector<Similarity2> elements() const;
};

std::string describe(const SymmetryGroup& g);

struct PlaneSet {};
struct LineSet {
    Point2 point;
    Point2 direction;  // unit
};
struct PointSet {
    Point2 point;
};
/// Points fixed by every element of a symmetry group.
using FixedSet = std::variant<PlaneSet, LineSet, PointSet>;

std::string fixed_set_kind(const FixedSet& f);
double distance_to(const FixedSet& f, const Point2& p);

/// Throws SingletonUnsupported when all points coincide.
SymmetryGroup symmetry_group_multiset(const PointMultiset& o, const Tolerance& tol = {});
/// Symmetries of the vertex set that respect adjacency. Throws NonSimple.
SymmetryGroup symmetry_group_polygon(const Polygon& p, const Tolerance& tol = {});

FixedSet fixed_set(const SymmetryGroup& g);

/// Does `t` map the multiset onto itself (as a multiset) within `bound`?
bool maps_onto_itself(const Similarity2& t, std::span<const Point2> pts, double bound);

struct AdmissibilityEntry {
    std::string center_id;
    Point2 point;
    std::string fixed_set_kind;
    double residual = 0.0;
    bool pass = false;
};

struct NamedPoint {
    std::string id;
    Point2 point;
};

/// Every center of an object must be fixed by the object's symmetries.
/// Violations are reported, not thrown.
std::vector<AdmissibilityEntry> admissible_center_check(const SymmetryGroup& g, double diam,
                                                        std::span<const NamedPoint> centers,
                                                        const Tolerance& tol = {});
std::vector<AdmissibilityEntry> admissible_center_check(const PointMultiset& o,
                                                        std::span<const NamedPoint> centers,
                                                        const Tolerance& tol = {});
std::vector<AdmissibilityEntry> admissible_center_check(const Polygon& p,
                                                        std::span<const NamedPoint> centers,
                                                        const Tolerance& tol = {});

/// Some similarity T with T(from) == to as multisets, if one exists.
std::optional<Similarity2> find_similarity(const PointMultiset& from, const PointMultiset& to,
                                           const Tolerance& tol = {});

/// Extends a choice P for one object to its similarity orbit: the center of
/// T(O) is T(P). Only valid when P is fixed by the symmetries of O, which
/// the constructor checks. Objects outside the orbit are rejected.
class OrbitCenter {
public:
    /// Throws InvalidArgument when `p` is not fixed by the symmetries of `o`.
    OrbitCenter(PointMultiset o, Point2 p, const Tolerance& tol = {});

    /// Throws InvalidArgument when `other` is not similar to the base object.
    Point2 operator()(const PointMultiset& other) const;

private:
    PointMultiset base_;
    Point2 point_;
    Tolerance tol_;
};

}  // namespace centerkit
