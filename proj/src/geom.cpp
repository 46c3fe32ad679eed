#include "centerkit/geom.hpp"

#include <algorithm>
#include <string>

namespace centerkit {

double diameter(std::span<const Point2> pts) {
    double best = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            best = std::max(best, distance(pts[i], pts[j]));
    return best;
}

PointN::PointN(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw InvalidArgument("point must have at least one coordinate");
    for (double c : coords_)
        if (!std::isfinite(c)) throw InvalidArgument("point coordinates must be finite");
}

PointN::PointN(std::initializer_list<double> coords) : PointN(std::vector<double>(coords)) {}

Point2 PointN::as_point2() const {
    if (dim() != 2)
        throw DimensionMismatch("expected a 2-dimensional point, got dimension " +
                                std::to_string(dim()));
    return {coords_[0], coords_[1]};
}

double distance(const PointN& a, const PointN& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("points of different dimension");
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

Tolerance::Tolerance(double rel_, double abs_) : rel(rel_), abs(abs_) {
    if (!(rel > 0.0) || !(abs > 0.0)) throw InvalidArgument("tolerances must be strictly positive");
}

bool approx_equal(const Point2& a, const Point2& b, double size, const Tolerance& tol) {
    return distance(a, b) <= tol.bound(size);
}

double wrap_angle(double a) {
    a = std::remainder(a, 2.0 * M_PI);  // [-pi, pi]
    if (a <= -M_PI) a += 2.0 * M_PI;
    return a;
}

Similarity2::Similarity2(double scale, double rotation, bool reflect, Point2 translation)
    : scale_(scale), rotation_(wrap_angle(rotation)), reflect_(reflect), translation_(translation) {
    if (!(scale > 0.0) || !std::isfinite(scale))
        throw InvalidArgument("similarity scale must be positive and finite");
    if (!std::isfinite(rotation) || !is_finite(translation))
        throw InvalidArgument("similarity parameters must be finite");
}

Similarity2 Similarity2::reflection_about_origin(double axis_angle) {
    // R(2a) F reflects across the line at angle a.
    return {1.0, 2.0 * axis_angle, true, {}};
}

Similarity2 Similarity2::reflection_across(const Point2& p, double axis_angle) {
    const Similarity2 r = reflection_about_origin(axis_angle);
    return {1.0, r.rotation(), true, p - r.linear(p)};
}

Similarity2 Similarity2::rotation_about(const Point2& c, double angle) {
    const Similarity2 r = rotation_about_origin(angle);
    return {1.0, angle, false, c - r.linear(c)};
}

Point2 Similarity2::linear(const Point2& v) const {
    const double y = reflect_ ? -v.y : v.y;
    const double c = std::cos(rotation_);
    const double s = std::sin(rotation_);
    return {scale_ * (c * v.x - s * y), scale_ * (s * v.x + c * y)};
}

Point2 apply(const Similarity2& t, const Point2& p) { return t(p); }

PointN apply(const Similarity2& t, const PointN& p) {
    if (p.dim() != 2)
        throw DimensionMismatch("similarities act on 2-dimensional points only");
    return PointN(t(p.as_point2()));
}

Similarity2 compose(const Similarity2& t, const Similarity2& s) {
    // R(a) F R(b) F = R(a - b), and F R(b) = R(-b) F.
    const double rot = t.reflect() ? t.rotation() - s.rotation() : t.rotation() + s.rotation();
    return {t.scale() * s.scale(), rot, t.reflect() != s.reflect(),
            t.linear(s.translation()) + t.translation()};
}

Similarity2 inverse(const Similarity2& t) {
    // (s R(a) F)^-1 = s^-1 F R(-a) = s^-1 R(a) F; without F it is s^-1 R(-a).
    const double rot = t.reflect() ? t.rotation() : -t.rotation();
    const Similarity2 lin(1.0 / t.scale(), rot, t.reflect(), {});
    return {lin.scale(), lin.rotation(), lin.reflect(), -lin.linear(t.translation())};
}

int Rng::uniform_int(int lo, int hi) {
    if (hi < lo) throw InvalidArgument("empty integer range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next() % span);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t counter) {
    // splitmix64 finalizer over base + golden-ratio multiple of the counter
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (counter + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Similarity2 sample_similarity(std::uint64_t seed, const SimilarityRanges& r,
                              bool allow_reflection) {
    if (!(r.scale_min > 0.0) || r.scale_max < r.scale_min)
        throw InvalidArgument("scale range must be a nonempty subset of (0, inf)");
    if (r.rotation_max < r.rotation_min || r.translation_max < r.translation_min)
        throw InvalidArgument("empty parameter range");
    Rng rng(seed);
    const double scale = rng.uniform(r.scale_min, r.scale_max);
    const double rot = rng.uniform(r.rotation_min, r.rotation_max);
    const double tx = rng.uniform(r.translation_min, r.translation_max);
    const double ty = rng.uniform(r.translation_min, r.translation_max);
    const bool refl = allow_reflection && rng.coin();
    return {scale, rot, refl, {tx, ty}};
}

}  // namespace centerkit
