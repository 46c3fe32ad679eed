#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <vector>

#include "centerkit/errors.hpp"

namespace centerkit {

/// Planar point / vector.
struct Point2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Point2& operator+=(const Point2& o) { x += o.x; y += o.y; return *this; }
    constexpr Point2& operator-=(const Point2& o) { x -= o.x; y -= o.y; return *this; }
    constexpr Point2& operator*=(double s) { x *= s; y *= s; return *this; }

    friend constexpr Point2 operator+(Point2 a, const Point2& b) { return a += b; }
    friend constexpr Point2 operator-(Point2 a, const Point2& b) { return a -= b; }
    friend constexpr Point2 operator-(const Point2& a) { return {-a.x, -a.y}; }
    friend constexpr Point2 operator*(Point2 a, double s) { return a *= s; }
    friend constexpr Point2 operator*(double s, Point2 a) { return a *= s; }
    friend constexpr Point2 operator/(const Point2& a, double s) { return {a.x / s, a.y / s}; }
    friend constexpr bool operator==(const Point2&, const Point2&) = default;
    /// Lexicographic (x, then y).
    friend constexpr auto operator<=>(const Point2&, const Point2&) = default;
};

constexpr double dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Point2& a) { return std::hypot(a.x, a.y); }
inline double distance(const Point2& a, const Point2& b) { return norm(a - b); }
inline bool is_finite(const Point2& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Twice the signed area of triangle (a, b, c); positive when counterclockwise.
constexpr double orient2d(const Point2& a, const Point2& b, const Point2& c) {
    return cross(b - a, c - a);
}

/// Largest pairwise distance. Zero for fewer than two points.
double diameter(std::span<const Point2> pts);

/// Point of arbitrary dimension, used by the multiset centers.
class PointN {
public:
    PointN() = default;
    explicit PointN(std::vector<double> coords);
    PointN(std::initializer_list<double> coords);
    PointN(const Point2& p) : PointN{p.x, p.y} {}  // NOLINT(google-explicit-constructor)

    std::size_t dim() const { return coords_.size(); }
    double operator[](std::size_t i) const { return coords_[i]; }
    std::span<const double> coords() const { return coords_; }

    /// Requires dim() == 2.
    Point2 as_point2() const;

    friend bool operator==(const PointN&, const PointN&) = default;
    friend auto operator<=>(const PointN&, const PointN&) = default;

private:
    std::vector<double> coords_;
};

double distance(const PointN& a, const PointN& b);

/// Scale-aware comparison thresholds. Two points count as equal when their
/// distance is at most `rel * (1 + size) + abs`, where `size` is the diameter
/// of the object in context.
struct Tolerance {
    double rel = 1e-9;
    double abs = 1e-12;

    Tolerance() = default;
    Tolerance(double rel_, double abs_);

    double bound(double size) const { return rel * (1.0 + size) + abs; }
};

bool approx_equal(const Point2& a, const Point2& b, double size, const Tolerance& tol = {});

/// Element of the planar similarity group, stored in factored form:
///   p -> scale * R(rotation) * F * p + translation,
/// where F is the reflection (x, y) -> (x, -y) when `reflect` is set.
class Similarity2 {
public:
    Similarity2() = default;
    Similarity2(double scale, double rotation, bool reflect, Point2 translation);

    static Similarity2 identity() { return {}; }
    static Similarity2 translation(Point2 t) { return {1.0, 0.0, false, t}; }
    static Similarity2 rotation_about_origin(double angle) { return {1.0, angle, false, {}}; }
    /// Reflection across the line through the origin at angle `axis_angle`.
    static Similarity2 reflection_about_origin(double axis_angle);
    /// Reflection across the line through `p` at angle `axis_angle`.
    static Similarity2 reflection_across(const Point2& p, double axis_angle);
    static Similarity2 rotation_about(const Point2& c, double angle);

    double scale() const { return scale_; }
    /// In (-pi, pi].
    double rotation() const { return rotation_; }
    bool reflect() const { return reflect_; }
    const Point2& translation() const { return translation_; }

    /// Linear part applied to a vector (no translation).
    Point2 linear(const Point2& v) const;
    Point2 operator()(const Point2& p) const { return linear(p) + translation_; }

    bool is_isometry(double eps = 1e-12) const { return std::abs(scale_ - 1.0) <= eps; }

private:
    double scale_ = 1.0;
    double rotation_ = 0.0;
    bool reflect_ = false;
    Point2 translation_{};
};

Point2 apply(const Similarity2& t, const Point2& p);
/// Throws DimensionMismatch unless p has dimension 2.
PointN apply(const Similarity2& t, const PointN& p);
/// t after s: apply(compose(t, s), p) == apply(t, apply(s, p)).
Similarity2 compose(const Similarity2& t, const Similarity2& s);
Similarity2 inverse(const Similarity2& t);

/// Angle wrapped to (-pi, pi].
double wrap_angle(double a);

/// Parameter box for random similarities.
struct SimilarityRanges {
    double scale_min = 0.1;
    double scale_max = 10.0;
    double rotation_min = -M_PI;
    double rotation_max = M_PI;
    double translation_min = -100.0;
    double translation_max = 100.0;
};

/// Deterministic random similarity: all parameters uniform within `ranges`,
/// reflection with probability 1/2 when allowed. Throws InvalidArgument for
/// empty or non-positive scale ranges.
Similarity2 sample_similarity(std::uint64_t seed, const SimilarityRanges& ranges,
                              bool allow_reflection);

/// Small deterministic generator. Uses mt19937_64, whose output sequence is
/// fixed by the standard, and maps it to doubles by hand so results do not
/// depend on the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Uniform integer in [lo, hi].
    int uniform_int(int lo, int hi);
    bool coin() { return (engine_() >> 63) != 0; }

private:
    std::mt19937_64 engine_;
};

/// Mixes a base seed with a counter; used to give each trial its own stream.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t counter);

}  // namespace centerkit
