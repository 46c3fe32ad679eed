#include "centerkit/triangle.hpp"

#include <algorithm>
#include <cmath>

namespace centerkit {

namespace {

struct Ray {
    Point2 p;
    Point2 d;
};

Point2 perp(const Point2& v) { return {-v.y, v.x}; }
Point2 unit(const Point2& v) { return v / norm(v); }

// Intersects the two best-conditioned lines of three concurrent lines.
Point2 meet(const std::array<Ray, 3>& lines) {
    std::size_t bi = 0, bj = 1;
    double best = -1.0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) {
            const double s = std::abs(cross(unit(lines[i].d), unit(lines[j].d)));
            if (s > best) {
                best = s;
                bi = i;
                bj = j;
            }
        }
    const Ray& l1 = lines[bi];
    const Ray& l2 = lines[bj];
    const double t = cross(l2.p - l1.p, l2.d) / cross(l1.d, l2.d);
    return l1.p + t * l1.d;
}

}  // namespace

Triangle::Triangle(Point2 a, Point2 b, Point2 c) : v_{a, b, c} {
    for (const auto& p : v_)
        if (!is_finite(p)) throw InvalidArgument("triangle vertices must be finite");
    std::sort(v_.begin(), v_.end());
    const double d = diameter();
    if (d == 0.0 || std::abs(orient2d(v_[0], v_[1], v_[2])) < kMinNormalizedArea * d * d)
        throw Degenerate("triangle vertices are coincident or collinear");
}

Triangle Triangle::from_sides(double a, double b, double c) {
    const SideLengths s(a, b, c);
    // C at the origin, B = (a, 0); A from the law of cosines.
    const double x = (s.a * s.a + s.b * s.b - s.c * s.c) / (2.0 * s.a);
    const double y = std::sqrt(std::max(0.0, s.b * s.b - x * x));
    return Triangle({x, y}, {s.a, 0.0}, {0.0, 0.0});
}

double Triangle::diameter() const {
    return std::max({distance(v_[0], v_[1]), distance(v_[1], v_[2]), distance(v_[0], v_[2])});
}

Triangle transform(const Similarity2& t, const Triangle& tri) {
    return {t(tri.A()), t(tri.B()), t(tri.C())};
}

SideLengths::SideLengths(double a_, double b_, double c_) : a(a_), b(b_), c(c_) {
    if (!(a > 0.0 && b > 0.0 && c > 0.0)) throw InvalidArgument("side lengths must be positive");
    if (!(a < b + c && b < a + c && c < a + b))
        throw Degenerate("side lengths violate the strict triangle inequality");
}

SideLengths SideLengths::of(const Triangle& t) {
    return {distance(t.B(), t.C()), distance(t.A(), t.C()), distance(t.A(), t.B())};
}

const std::vector<CenterId>& builtin_center_ids() {
    static const std::vector<CenterId> ids{CenterId::Centroid, CenterId::Incenter,
                                           CenterId::Circumcenter, CenterId::Orthocenter,
                                           CenterId::Nagel};
    return ids;
}

std::string to_string(CenterId id) {
    switch (id) {
        case CenterId::Centroid: return "centroid";
        case CenterId::Incenter: return "incenter";
        case CenterId::Circumcenter: return "circumcenter";
        case CenterId::Orthocenter: return "orthocenter";
        case CenterId::Nagel: return "nagel";
    }
    return "?";
}

std::optional<CenterId> parse_center_id(const std::string& name) {
    for (CenterId id : builtin_center_ids())
        if (to_string(id) == name) return id;
    return std::nullopt;
}

const GFunction& builtin_g(CenterId id) {
    using R = GFunction::Real;
    static const GFunction centroid{"centroid", [](const R&, const R&, const R&) { return R(1); }, 0.0};
    static const GFunction incenter{"incenter", [](const R& a, const R&, const R&) { return a; }, 1.0};
    static const GFunction circumcenter{
        "circumcenter", [](const R& a, const R& b, const R& c) { return R(a * a * (b * b + c * c - a * a)); },
        4.0};
    static const GFunction orthocenter{
        "orthocenter",
        [](const R& a, const R& b, const R& c) {
            const R den = b * b + c * c - a * a;
            const R m = std::max({a, b, c});
            if (abs(den) < 1e-12 * m * m) throw DomainError("orthocenter weight is undefined at a right angle");
            return R(1 / den);
        },
        -2.0};
    static const GFunction nagel{"nagel", [](const R& a, const R& b, const R& c) { return R(b + c - a); }, 1.0};
    switch (id) {
        case CenterId::Centroid: return centroid;
        case CenterId::Incenter: return incenter;
        case CenterId::Circumcenter: return circumcenter;
        case CenterId::Orthocenter: return orthocenter;
        case CenterId::Nagel: return nagel;
    }
    throw InvalidArgument("unknown center id");
}

namespace {

using Real = GFunction::Real;

struct QuadVec {
    Real x, y;
};

QuadVec diff(const Point2& p, const Point2& q) { return {Real(p.x) - Real(q.x), Real(p.y) - Real(q.y)}; }
Real length(const QuadVec& v) { return sqrt(v.x * v.x + v.y * v.y); }

std::array<Real, 3> quad_weights(const Triangle& t, const GFunction& g) {
    const Real a = length(diff(t.B(), t.C()));
    const Real b = length(diff(t.A(), t.C()));
    const Real c = length(diff(t.A(), t.B()));
    return {g.eval(a, b, c), g.eval(b, c, a), g.eval(c, a, b)};
}

}  // namespace

std::array<double, 3> g_weights(const Triangle& t, const GFunction& g) {
    const auto w = quad_weights(t, g);
    return {static_cast<double>(w[0]), static_cast<double>(w[1]), static_cast<double>(w[2])};
}

Point2 center_from_g(const Triangle& t, const GFunction& g, const Tolerance& tol) {
    const auto w = quad_weights(t, g);
    const Real sum = w[0] + w[1] + w[2];
    const Real mag = abs(w[0]) + abs(w[1]) + abs(w[2]);
    if (!isfinite(sum) || abs(sum) <= tol.abs * mag)
        throw ZeroNormalizer("weights of '" + g.id + "' sum to zero");
    // Offsets from A keep the combination translation-stable.
    const QuadVec ab = diff(t.B(), t.A());
    const QuadVec ac = diff(t.C(), t.A());
    const Point2 off{static_cast<double>((w[1] * ab.x + w[2] * ac.x) / sum),
                     static_cast<double>((w[1] * ab.y + w[2] * ac.y) / sum)};
    return t.A() + off;
}

Point2 classical_construction(const Triangle& t, CenterId id) {
    const Point2& A = t.A();
    const Point2& B = t.B();
    const Point2& C = t.C();
    switch (id) {
        case CenterId::Centroid:
            return meet({Ray{A, (B + C) * 0.5 - A}, Ray{B, (A + C) * 0.5 - B},
                         Ray{C, (A + B) * 0.5 - C}});
        case CenterId::Incenter:
            return meet({Ray{A, unit(B - A) + unit(C - A)}, Ray{B, unit(A - B) + unit(C - B)},
                         Ray{C, unit(A - C) + unit(B - C)}});
        case CenterId::Circumcenter:
            return meet({Ray{(B + C) * 0.5, perp(C - B)}, Ray{(A + C) * 0.5, perp(C - A)},
                         Ray{(A + B) * 0.5, perp(B - A)}});
        case CenterId::Orthocenter:
            return meet({Ray{A, perp(C - B)}, Ray{B, perp(C - A)}, Ray{C, perp(B - A)}});
        case CenterId::Nagel: {
            // Extouch points: the excircle opposite A touches BC at distance
            // s - c from B, and cyclically.
            const SideLengths s = SideLengths::of(t);
            const double sp = 0.5 * s.perimeter();
            const Point2 ta = B + (sp - s.c) / s.a * (C - B);
            const Point2 tb = C + (sp - s.a) / s.b * (A - C);
            const Point2 tc = A + (sp - s.b) / s.c * (B - A);
            return meet({Ray{A, ta - A}, Ray{B, tb - B}, Ray{C, tc - C}});
        }
    }
    throw InvalidArgument("unknown center id");
}

Point2 triangle_center(const Triangle& t, CenterId id) {
    try {
        return center_from_g(t, builtin_g(id));
    } catch (const DomainError&) {
        if (id != CenterId::Orthocenter) throw;
        return classical_construction(t, id);
    }
}

bool is_equilateral_by_coincidence(const Triangle& t, const Tolerance& tol) {
    const Point2 i = classical_construction(t, CenterId::Incenter);
    const Point2 h = classical_construction(t, CenterId::Orthocenter);
    return approx_equal(i, h, t.diameter(), tol);
}

double center_collinearity_residual(const Triangle& t) {
    const Point2 i = classical_construction(t, CenterId::Incenter);
    const Point2 g = classical_construction(t, CenterId::Centroid);
    const Point2 h = classical_construction(t, CenterId::Orthocenter);
    const double d = t.diameter();
    return std::abs(orient2d(i, g, h)) / (d * d);
}

bool is_isosceles_by_collinearity(const Triangle& t, const Tolerance& tol) {
    return center_collinearity_residual(t) <= tol.rel + tol.abs;
}

bool nagel_equals_centroid_iff_equilateral(const SideLengths& s, const Tolerance& tol) {
    const double p = s.perimeter();
    const double band = tol.rel + tol.abs;
    const std::array<double, 3> lambda{(s.b + s.c - s.a) / p, (s.a + s.c - s.b) / p,
                                       (s.a + s.b - s.c) / p};
    return std::all_of(lambda.begin(), lambda.end(),
                       [&](double l) { return std::abs(l - 1.0 / 3.0) <= band; });
}

double gfunction_law_violation(const GFunction& g, int samples, std::uint64_t seed) {
    Rng rng(seed);
    double worst = 0.0;
    auto rel = [](double x, double y) {
        const double m = std::max({std::abs(x), std::abs(y), 1e-300});
        return std::abs(x - y) / m;
    };
    for (int i = 0; i < samples; ++i) {
        double a, b, c;
        do {
            a = rng.uniform(0.1, 2.0);
            b = rng.uniform(0.1, 2.0);
            c = rng.uniform(0.1, 2.0);
        } while (!(a < b + c && b < a + c && c < a + b));
        const double lambda = rng.uniform(0.1, 10.0);
        try {
            const double base = static_cast<double>(g.eval(a, b, c));
            worst = std::max(worst, rel(base, static_cast<double>(g.eval(a, c, b))));
            const double scaled = static_cast<double>(g.eval(Real(lambda) * a, Real(lambda) * b, Real(lambda) * c));
            worst = std::max(worst, rel(scaled, std::pow(lambda, g.degree) * base));
        } catch (const DomainError&) {
            // outside the function's domain; nothing to check
        }
    }
    return worst;
}

}  // namespace centerkit
