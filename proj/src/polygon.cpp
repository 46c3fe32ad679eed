#include "centerkit/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace centerkit {

double signed_area2(std::span<const Point2> ring) {
    if (ring.size() < 3) return 0.0;
    // Relative to the first vertex to limit cancellation far from the origin.
    const Point2 o = ring[0];
    double s = 0.0;
    for (std::size_t i = 1; i + 1 < ring.size(); ++i) s += cross(ring[i] - o, ring[i + 1] - o);
    return s;
}

double perimeter(std::span<const Point2> ring) {
    double p = 0.0;
    for (std::size_t i = 0; i < ring.size(); ++i)
        p += distance(ring[i], ring[(i + 1) % ring.size()]);
    return p;
}

namespace {

int sign_in_band(double v, double band) { return v > band ? 1 : (v < -band ? -1 : 0); }

// Bounding-box test for a point already known to be collinear with [a, b].
bool on_segment(const Point2& p, const Point2& a, const Point2& b) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

}  // namespace

bool segments_intersect(const Point2& p1, const Point2& p2, const Point2& q1, const Point2& q2,
                        double band) {
    const int o1 = sign_in_band(orient2d(p1, p2, q1), band);
    const int o2 = sign_in_band(orient2d(p1, p2, q2), band);
    const int o3 = sign_in_band(orient2d(q1, q2, p1), band);
    const int o4 = sign_in_band(orient2d(q1, q2, p2), band);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    if (o1 == 0 && on_segment(q1, p1, p2)) return true;
    if (o2 == 0 && on_segment(q2, p1, p2)) return true;
    if (o3 == 0 && on_segment(p1, q1, q2)) return true;
    if (o4 == 0 && on_segment(p2, q1, q2)) return true;
    return false;
}

double point_segment_distance(const Point2& p, const Point2& a, const Point2& b) {
    const Point2 ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 == 0.0) return distance(p, a);
    const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return distance(p, a + t * ab);
}

bool point_in_ring(const Point2& p, std::span<const Point2> ring) {
    bool inside = false;
    for (std::size_t i = 0, j = ring.size() - 1; i < ring.size(); j = i++) {
        const Point2& a = ring[i];
        const Point2& b = ring[j];
        if ((a.y > p.y) != (b.y > p.y) && p.x < (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x)
            inside = !inside;
    }
    return inside;
}

bool ring_is_simple(std::span<const Point2> ring, const Tolerance& tol) {
    const std::size_t m = ring.size();
    if (m < 3) return false;
    const double diam = diameter(ring);
    const double band = tol.abs * (1.0 + diam) * (1.0 + diam);
    for (std::size_t i = 0; i < m; ++i)
        if (distance(ring[i], ring[(i + 1) % m]) <= tol.abs) return false;
    for (std::size_t i = 0; i < m; ++i) {
        // Adjacent sides (prev, cur) and (cur, next) must not fold back.
        const Point2& prev = ring[(i + m - 1) % m];
        const Point2& cur = ring[i];
        const Point2& next = ring[(i + 1) % m];
        if (sign_in_band(orient2d(prev, cur, next), band) == 0 && dot(prev - cur, next - cur) > 0.0)
            return false;
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 2; j < m; ++j) {
            if (i == 0 && j == m - 1) continue;  // adjacent through the wrap
            if (segments_intersect(ring[i], ring[i + 1], ring[j], ring[(j + 1) % m], band))
                return false;
        }
    return true;
}

std::vector<std::vector<Point2>> dihedral_relabelings(std::span<const Point2> cycle) {
    const std::size_t m = cycle.size();
    std::vector<std::vector<Point2>> out;
    out.reserve(2 * m);
    for (int dir : {1, -1})
        for (std::size_t k = 0; k < m; ++k) {
            std::vector<Point2> r(m);
            for (std::size_t i = 0; i < m; ++i) {
                const auto idx = static_cast<std::ptrdiff_t>(k) + dir * static_cast<std::ptrdiff_t>(i);
                const auto mm = static_cast<std::ptrdiff_t>(m);
                r[i] = cycle[static_cast<std::size_t>(((idx % mm) + mm) % mm)];
            }
            out.push_back(std::move(r));
        }
    return out;
}

Polygon::Polygon(std::vector<Point2> vertices) {
    if (vertices.size() < 3) throw InvalidArgument("a polygon needs at least 3 vertices");
    for (const auto& p : vertices)
        if (!is_finite(p)) throw InvalidArgument("polygon vertices must be finite");
    auto reps = dihedral_relabelings(vertices);
    v_ = *std::min_element(reps.begin(), reps.end());
    simple_ = ring_is_simple(v_);
}

double Polygon::diameter() const { return centerkit::diameter(v_); }

Polygon canonicalize(std::vector<Point2> vertices) { return Polygon(std::move(vertices)); }

Polygon transform(const Similarity2& t, const Polygon& p) {
    std::vector<Point2> v;
    v.reserve(p.size());
    for (const auto& x : p.vertices()) v.push_back(t(x));
    return Polygon(std::move(v));
}

bool approx_equal(const Polygon& a, const Polygon& b, const Tolerance& tol) {
    if (a.size() != b.size()) return false;
    const double bound = tol.bound(std::max(a.diameter(), b.diameter()));
    for (const auto& r : dihedral_relabelings(b.vertices())) {
        bool ok = true;
        for (std::size_t i = 0; i < r.size() && ok; ++i) ok = distance(a.vertices()[i], r[i]) <= bound;
        if (ok) return true;
    }
    return false;
}

std::vector<double> interior_angles(std::span<const Point2> ring) {
    const std::size_t m = ring.size();
    const double orientation = signed_area2(ring) >= 0.0 ? 1.0 : -1.0;
    std::vector<double> angles(m);
    for (std::size_t i = 0; i < m; ++i) {
        const Point2 in = ring[i] - ring[(i + m - 1) % m];
        const Point2 out = ring[(i + 1) % m] - ring[i];
        const double turn = std::atan2(cross(in, out), dot(in, out));
        angles[i] = M_PI - orientation * turn;
    }
    return angles;
}

namespace {

void require_simple(const Polygon& p) {
    if (!p.is_simple()) throw NonSimple("polygon is not simple");
}

}  // namespace

PerimeterAndAngles perimeter_and_angles(const Polygon& p) {
    require_simple(p);
    return {perimeter(p.vertices()), interior_angles(p.vertices())};
}

Point2 barycentric_combination(std::span<const Point2> pts, std::span<const double> weights) {
    Point2 off{};
    for (std::size_t i = 1; i < pts.size(); ++i) off += weights[i] * (pts[i] - pts[0]);
    return pts[0] + off;
}

Point2 vertex_centroid(const Polygon& p) {
    const std::vector<double> w(p.size(), 1.0 / static_cast<double>(p.size()));
    return barycentric_combination(p.vertices(), w);
}

std::vector<double> center_S_weights(const Polygon& p) {
    require_simple(p);
    const auto& v = p.vertices();
    const std::size_t m = v.size();
    const double per = perimeter(v);
    std::vector<double> w(m);
    for (std::size_t i = 0; i < m; ++i)
        w[i] = (distance(v[i], v[(i + m - 1) % m]) + distance(v[i], v[(i + 1) % m])) / (2.0 * per);
    return w;
}

Point2 center_S(const Polygon& p) { return barycentric_combination(p.vertices(), center_S_weights(p)); }

std::vector<double> center_A_weights(const Polygon& p) {
    require_simple(p);
    auto w = interior_angles(p.vertices());
    const double total = static_cast<double>(p.size() - 2) * M_PI;
    for (double& x : w) x /= total;
    return w;
}

Point2 center_A(const Polygon& p) { return barycentric_combination(p.vertices(), center_A_weights(p)); }

DistanceMatrix::DistanceMatrix(std::span<const Point2> cycle) : m_(cycle.size()), d_(m_ * m_) {
    for (std::size_t i = 0; i < m_; ++i)
        for (std::size_t j = 0; j < m_; ++j) d_[i * m_ + j] = distance(cycle[i], cycle[j]);
}

DistanceMatrix DistanceMatrix::shifted(std::size_t k) const {
    std::vector<double> d(m_ * m_);
    for (std::size_t i = 0; i < m_; ++i)
        for (std::size_t j = 0; j < m_; ++j) d[i * m_ + j] = (*this)((i + k) % m_, (j + k) % m_);
    return {m_, std::move(d)};
}

const std::vector<MatrixGFunction>& matrix_g_registry() {
    static const std::vector<MatrixGFunction> registry{
        {"constant", [](const DistanceMatrix&) { return 1.0; }},
        // The two sides at the first vertex: reproduces the side-length center.
        {"incident_sides",
         [](const DistanceMatrix& m) { return m(0, 1) + m(0, m.size() - 1); }},
        {"row_sum",
         [](const DistanceMatrix& m) {
             double s = 0.0;
             for (std::size_t j = 0; j < m.size(); ++j) s += m(0, j);
             return s;
         }},
    };
    return registry;
}

const MatrixGFunction& matrix_g(const std::string& id) {
    for (const auto& g : matrix_g_registry())
        if (g.id == id) return g;
    throw InvalidArgument("unknown matrix weight function '" + id + "'");
}

std::vector<double> matrix_g_weights(std::span<const Point2> cycle, const MatrixGFunction& g,
                                     const Tolerance& tol) {
    const DistanceMatrix base(cycle);
    std::vector<double> w(cycle.size());
    for (std::size_t k = 0; k < cycle.size(); ++k) w[k] = g.eval(base.shifted(k));
    const double sum = std::accumulate(w.begin(), w.end(), 0.0);
    double mass = 0.0;
    for (double x : w) mass += std::abs(x);
    if (!std::isfinite(sum) || std::abs(sum) <= tol.abs * mass)
        throw ZeroNormalizer("weights of '" + g.id + "' sum to zero");
    for (double& x : w) x /= sum;
    return w;
}

Point2 center_from_matrix_g(const Polygon& p, const MatrixGFunction& g, const Tolerance& tol) {
    require_simple(p);
    return barycentric_combination(p.vertices(), matrix_g_weights(p.vertices(), g, tol));
}

}  // namespace centerkit
