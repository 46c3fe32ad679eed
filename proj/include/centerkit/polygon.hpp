#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "centerkit/geom.hpp"

namespace centerkit {

// -- Ring primitives on raw vertex cycles -----------------------------------

/// Twice the signed area (shoelace); positive for counterclockwise cycles.
double signed_area2(std::span<const Point2> ring);
double perimeter(std::span<const Point2> ring);
/// Do the closed segments [p1,p2] and [q1,q2] share a point? Orientation
/// values within `band` are treated as zero.
bool segments_intersect(const Point2& p1, const Point2& p2, const Point2& q1, const Point2& q2,
                        double band);
double point_segment_distance(const Point2& p, const Point2& a, const Point2& b);
/// Even-odd rule; points on the boundary may go either way.
bool point_in_ring(const Point2& p, std::span<const Point2> ring);
/// True iff every side is longer than `tol.abs`, adjacent sides meet only at
/// their shared vertex, and non-adjacent sides are disjoint.
bool ring_is_simple(std::span<const Point2> ring, const Tolerance& tol = {});

/// Polygon as an equivalence class of vertex cycles under cyclic shifts and
/// reversal. The stored cycle is the lexicographically smallest of all 2m
/// relabelings, so equal classes compare equal.
class Polygon {
public:
    explicit Polygon(std::vector<Point2> vertices);

    std::size_t size() const { return v_.size(); }
    const std::vector<Point2>& vertices() const { return v_; }
    bool is_simple() const { return simple_; }
    double diameter() const;

    friend bool operator==(const Polygon& a, const Polygon& b) { return a.v_ == b.v_; }

private:
    std::vector<Point2> v_;
    bool simple_ = false;
};

/// Canonical representative of the relabeling class. Throws InvalidArgument for m < 3.
Polygon canonicalize(std::vector<Point2> vertices);
/// All 2m relabelings (shifts, then shifts of the reversal).
std::vector<std::vector<Point2>> dihedral_relabelings(std::span<const Point2> cycle);

Polygon transform(const Similarity2& t, const Polygon& p);
/// Same class up to `tol`, trying every relabeling.
bool approx_equal(const Polygon& a, const Polygon& b, const Tolerance& tol = {});

struct PerimeterAndAngles {
    double perimeter = 0.0;
    /// Interior angle at each stored vertex, in (0, 2pi).
    std::vector<double> angles;
};

/// Throws NonSimple.
PerimeterAndAngles perimeter_and_angles(const Polygon& p);
std::vector<double> interior_angles(std::span<const Point2> ring);

Point2 vertex_centroid(const Polygon& p);

/// Weights (d_{i,i-1} + d_{i,i+1}) / 2p of the side-length center.
std::vector<double> center_S_weights(const Polygon& p);
/// Side-length center. Throws NonSimple.
Point2 center_S(const Polygon& p);
/// Weights alpha_i / ((m-2) pi) of the angle center.
std::vector<double> center_A_weights(const Polygon& p);
/// Interior-angle center. Throws NonSimple.
Point2 center_A(const Polygon& p);

class DistanceMatrix {
public:
    explicit DistanceMatrix(std::span<const Point2> cycle);

    std::size_t size() const { return m_; }
    double operator()(std::size_t i, std::size_t j) const { return d_[i * m_ + j]; }
    /// Matrix of the cycle relabeled to start at vertex k: entry (i, j) is
    /// the distance between vertices i + k and j + k (indices mod m).
    DistanceMatrix shifted(std::size_t k) const;

private:
    DistanceMatrix(std::size_t m, std::vector<double> d) : m_(m), d_(std::move(d)) {}
    std::size_t m_;
    std::vector<double> d_;
};

/// Weight function on distance matrices; vertex k gets g(M_k) where M_k is
/// the matrix relabeled to start at vertex k.
struct MatrixGFunction {
    std::string id;
    std::function<double(const DistanceMatrix&)> eval;
};

const std::vector<MatrixGFunction>& matrix_g_registry();
/// Throws InvalidArgument for unknown ids.
const MatrixGFunction& matrix_g(const std::string& id);

/// Normalized weights g(M_k) / sum_j g(M_j) computed on the given
/// representative. Throws ZeroNormalizer.
std::vector<double> matrix_g_weights(std::span<const Point2> cycle, const MatrixGFunction& g,
                                     const Tolerance& tol = {});
/// Throws NonSimple or ZeroNormalizer.
Point2 center_from_matrix_g(const Polygon& p, const MatrixGFunction& g, const Tolerance& tol = {});

/// Sum of w_i X_i, accumulated as offsets from the first point.
Point2 barycentric_combination(std::span<const Point2> pts, std::span<const double> weights);

}  // namespace centerkit
