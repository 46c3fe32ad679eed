#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "centerkit/geom.hpp"

namespace centerkit {

/// Finite multiset of points of a common dimension. Listing order is not
/// part of the value: equality compares sorted contents.
class PointMultiset {
public:
    explicit PointMultiset(std::vector<PointN> points);
    /// Planar convenience constructor.
    PointMultiset(std::initializer_list<Point2> points);
    static PointMultiset planar(std::span<const Point2> points);

    std::size_t size() const { return points_.size(); }
    std::size_t dim() const { return points_.front().dim(); }
    const std::vector<PointN>& points() const { return points_; }

    /// Throws DimensionMismatch unless dim() == 2.
    std::vector<Point2> planar_points() const;
    double diameter() const;

    friend bool operator==(const PointMultiset& a, const PointMultiset& b);

private:
    std::vector<PointN> points_;
};

PointMultiset transform(const Similarity2& t, const PointMultiset& o);

struct WeightedPoint {
    PointN point;
    double weight = 1.0;
};

class WeightedMultiset {
public:
    explicit WeightedMultiset(std::vector<WeightedPoint> items);

    std::size_t size() const { return items_.size(); }
    std::size_t dim() const { return items_.front().point.dim(); }
    const std::vector<WeightedPoint>& items() const { return items_; }
    double diameter() const;

private:
    std::vector<WeightedPoint> items_;
};

WeightedMultiset transform(const Similarity2& t, const WeightedMultiset& o);

struct Circle {
    Point2 center;
    double radius = 0.0;
};

PointN centroid(const PointMultiset& o);
PointN weighted_centroid(const WeightedMultiset& o);

/// Smallest enclosing circle (randomized incremental minidisk with a fixed
/// shuffle seed, so the output is deterministic). Requires dimension 2.
Circle one_center(const PointMultiset& o, const Tolerance& tol = {});

struct MedoidOptions {
    Tolerance tol{};
    int max_iter = 10000;
};

/// Minimizer of the sum of Euclidean distances (the geometric median).
/// Throws NonUnique for the collinear configurations whose minimizer set is
/// a segment.
PointN medoid(const PointMultiset& o, const MedoidOptions& opts = {});

/// Sum of distances from `p` to the points of `o`.
double medoid_objective(const PointMultiset& o, const PointN& p);

}  // namespace centerkit
