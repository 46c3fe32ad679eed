#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "centerkit/geom.hpp"

namespace centerkit {

/// Non-degenerate triangle as an unordered vertex set. Vertices are stored
/// sorted, so every listing of the same three points is the same value.
class Triangle {
public:
    /// Normalized-area threshold below which a triangle is rejected.
    static constexpr double kMinNormalizedArea = 1e-12;

    Triangle(Point2 a, Point2 b, Point2 c);

    /// Triangle with the given side lengths (a = |BC|, b = |AC|, c = |AB|),
    /// placed with C at the origin and B on the positive x axis.
    static Triangle from_sides(double a, double b, double c);

    const std::array<Point2, 3>& vertices() const { return v_; }
    const Point2& A() const { return v_[0]; }
    const Point2& B() const { return v_[1]; }
    const Point2& C() const { return v_[2]; }
    double diameter() const;

    friend bool operator==(const Triangle&, const Triangle&) = default;

private:
    std::array<Point2, 3> v_;
};

Triangle transform(const Similarity2& t, const Triangle& tri);

/// Side lengths opposite to A, B, C. Strict triangle inequalities hold.
struct SideLengths {
    double a, b, c;

    SideLengths(double a_, double b_, double c_);
    static SideLengths of(const Triangle& t);
    double perimeter() const { return a + b + c; }
};

/// Weight function generating a triangle center as the normalized barycentric
/// combination  g(a,b,c) A + g(b,c,a) B + g(c,a,b) C.
/// `eval` must be a pure function, symmetric in its last two arguments and
/// positively homogeneous of degree `degree`. It may throw DomainError.
///
/// Weights are evaluated in quad precision: expressions such as b²+c²−a²
/// cancel catastrophically on thin triangles, and so does the normalizer.
struct GFunction {
    using Real = boost::multiprecision::cpp_bin_float_quad;
    std::string id;
    std::function<Real(const Real&, const Real&, const Real&)> eval;
    double degree = 0.0;
};

enum class CenterId { Centroid, Incenter, Circumcenter, Orthocenter, Nagel };

const std::vector<CenterId>& builtin_center_ids();
std::string to_string(CenterId id);
std::optional<CenterId> parse_center_id(const std::string& name);

/// Registered weight function of a built-in center.
const GFunction& builtin_g(CenterId id);

/// Barycentric weights (g(a,b,c), g(b,c,a), g(c,a,b)) for the stored vertex order.
std::array<double, 3> g_weights(const Triangle& t, const GFunction& g);

/// Throws ZeroNormalizer when |sum of weights| is below `tol.abs` times the
/// sum of their magnitudes (a scale-free test; weights carry units).
Point2 center_from_g(const Triangle& t, const GFunction& g, const Tolerance& tol = {});

/// The center computed from its synthetic definition (meeting point of
/// medians, angle bisectors, perpendicular bisectors, altitudes, or the
/// cevians through the extouch points). Independent of the weight functions.
Point2 classical_construction(const Triangle& t, CenterId id);

/// Built-in center by weight function, except that the orthocenter of a
/// right triangle (where its weight function is undefined) comes from the
/// altitude construction.
Point2 triangle_center(const Triangle& t, CenterId id);

bool is_equilateral_by_coincidence(const Triangle& t, const Tolerance& tol = {});

/// Twice the area of the triangle formed by incenter, centroid and
/// orthocenter, divided by diam^2.
double center_collinearity_residual(const Triangle& t);
bool is_isosceles_by_collinearity(const Triangle& t, const Tolerance& tol = {});

bool nagel_equals_centroid_iff_equilateral(const SideLengths& s, const Tolerance& tol = {});

/// Spot-checks symmetry g(a,b,c) = g(a,c,b) and homogeneity on random valid
/// side triples. Returns the largest relative violation observed.
double gfunction_law_violation(const GFunction& g, int samples, std::uint64_t seed);

}  // namespace centerkit
