#include "centerkit/region.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "centerkit/polygon.hpp"

namespace centerkit {

Curve::Curve(std::vector<Point2> vertices) : v_(std::move(vertices)) {
    if (v_.size() < 3) throw InvalidArgument("a closed curve needs at least 3 vertices");
    for (const auto& p : v_)
        if (!is_finite(p)) throw InvalidArgument("curve vertices must be finite");
    if (!ring_is_simple(v_)) throw NonSimple("curve intersects itself");
}

namespace {

void orient(std::vector<Point2>& ring, bool ccw) {
    if ((signed_area2(ring) > 0.0) != ccw) std::reverse(ring.begin(), ring.end());
}

bool rings_touch(std::span<const Point2> r1, std::span<const Point2> r2, double band) {
    for (std::size_t i = 0; i < r1.size(); ++i)
        for (std::size_t j = 0; j < r2.size(); ++j)
            if (segments_intersect(r1[i], r1[(i + 1) % r1.size()], r2[j], r2[(j + 1) % r2.size()],
                                   band))
                return true;
    return false;
}

}  // namespace

Area::Area(std::vector<Point2> outer, std::vector<std::vector<Point2>> holes)
    : outer_(std::move(outer)), holes_(std::move(holes)) {
    const Tolerance tol;
    for (const auto& p : outer_)
        if (!is_finite(p)) throw InvalidArgument("area vertices must be finite");
    if (outer_.size() < 3 || !ring_is_simple(outer_)) throw NonSimple("outer boundary is not simple");
    const double diam = diameter(outer_);
    const double band = tol.abs * (1.0 + diam) * (1.0 + diam);
    for (std::size_t h = 0; h < holes_.size(); ++h) {
        const auto& hole = holes_[h];
        if (hole.size() < 3 || !ring_is_simple(hole))
            throw NonSimple("hole " + std::to_string(h) + " is not simple");
        for (const auto& p : hole)
            if (!point_in_ring(p, outer_))
                throw InvalidArgument("hole " + std::to_string(h) + " is not inside the outer boundary");
        if (rings_touch(hole, outer_, band))
            throw InvalidArgument("hole " + std::to_string(h) + " touches the outer boundary");
        for (std::size_t g = 0; g < h; ++g) {
            if (rings_touch(hole, holes_[g], band) || point_in_ring(hole[0], holes_[g]) ||
                point_in_ring(holes_[g][0], hole))
                throw InvalidArgument("holes " + std::to_string(g) + " and " + std::to_string(h) +
                                      " overlap");
        }
    }
    orient(outer_, true);
    for (auto& hole : holes_) orient(hole, false);
    double a2 = signed_area2(outer_);
    for (const auto& hole : holes_) a2 += signed_area2(hole);
    if (!(0.5 * a2 > tol.abs)) throw Degenerate("area has no positive measure");
}

int region_dimension(const Region& r) { return static_cast<int>(r.index()); }

namespace {

struct Moment {
    double measure = 0.0;
    Point2 first{};  // integral of (x - origin)
};

Moment curve_moment(std::span<const Point2> ring, const Point2& origin) {
    Moment m;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const Point2& p = ring[i];
        const Point2& q = ring[(i + 1) % ring.size()];
        const double len = distance(p, q);
        m.measure += len;
        m.first += len * ((p + q) * 0.5 - origin);
    }
    return m;
}

// Signed; sign follows the ring's orientation.
Moment area_moment(std::span<const Point2> ring, const Point2& origin) {
    Moment m;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const Point2 p = ring[i] - origin;
        const Point2 q = ring[(i + 1) % ring.size()] - origin;
        const double c = cross(p, q);
        m.measure += 0.5 * c;
        m.first += (c / 6.0) * (p + q);
    }
    return m;
}

Moment moment_of(const Region& r, const Point2& origin) {
    return std::visit(
        [&](const auto& x) -> Moment {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, PointMultiset>) {
                Moment m;
                for (const auto& p : x.points()) {
                    m.measure += 1.0;
                    m.first += p.as_point2() - origin;
                }
                return m;
            } else if constexpr (std::is_same_v<T, Curve>) {
                return curve_moment(x.vertices(), origin);
            } else {
                Moment m = area_moment(x.outer(), origin);
                for (const auto& hole : x.holes()) {
                    const Moment h = area_moment(hole, origin);
                    m.measure += h.measure;
                    m.first += h.first;
                }
                return m;
            }
        },
        r);
}

Point2 anchor_of(const Region& r) {
    return std::visit(
        [](const auto& x) -> Point2 {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, PointMultiset>) return x.points().front().as_point2();
            else if constexpr (std::is_same_v<T, Curve>) return x.vertices().front();
            else return x.outer().front();
        },
        r);
}

}  // namespace

double measure(const Region& r) { return moment_of(r, anchor_of(r)).measure; }

double region_diameter(const Region& r) {
    return std::visit(
        [](const auto& x) -> double {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, PointMultiset>) return x.diameter();
            else if constexpr (std::is_same_v<T, Curve>) return diameter(x.vertices());
            else return diameter(x.outer());
        },
        r);
}

Region transform(const Similarity2& t, const Region& r) {
    auto map = [&](const std::vector<Point2>& ring) {
        std::vector<Point2> out;
        out.reserve(ring.size());
        for (const auto& p : ring) out.push_back(t(p));
        return out;
    };
    return std::visit(
        [&](const auto& x) -> Region {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, PointMultiset>) return transform(t, x);
            else if constexpr (std::is_same_v<T, Curve>) return Curve(map(x.vertices()));
            else {
                std::vector<std::vector<Point2>> holes;
                for (const auto& h : x.holes()) holes.push_back(map(h));
                return Area(map(x.outer()), std::move(holes));
            }
        },
        r);
}

Point2 hausdorff_centroid(const Region& r, const Tolerance& tol) {
    // H^0 is the counting measure: exactly the multiset centroid.
    if (const auto* m = std::get_if<PointMultiset>(&r)) return centroid(*m).as_point2();
    const Point2 origin = anchor_of(r);
    const Moment m = moment_of(r, origin);
    if (!(m.measure > tol.abs)) throw Degenerate("region measure is not positive");
    return origin + m.first / m.measure;
}

Part part_of(const Region& r) { return {measure(r), hausdorff_centroid(r)}; }

Part subtracted(Part p) {
    p.measure = -p.measure;
    return p;
}

Point2 decomposition_centroid(std::span<const Part> parts, const Tolerance& tol) {
    if (parts.empty()) throw InvalidArgument("decomposition needs at least one part");
    const Point2 origin = parts.front().centroid;
    double total = 0.0;
    Point2 first{};
    for (const auto& p : parts) {
        total += p.measure;
        first += p.measure * (p.centroid - origin);
    }
    if (!(total > tol.abs)) throw Degenerate("total measure of the decomposition is not positive");
    return origin + first / total;
}

double boundary_vs_area_discrepancy(const Area& a) {
    if (!a.holes().empty()) throw InvalidArgument("discrepancy is defined for areas without holes");
    return distance(hausdorff_centroid(Region{Curve(a.outer())}), hausdorff_centroid(Region{a}));
}

double boundary_clearance(const Area& a, const Point2& p) {
    double d = std::numeric_limits<double>::infinity();
    bool inside = point_in_ring(p, a.outer());
    auto scan = [&](const std::vector<Point2>& ring) {
        for (std::size_t i = 0; i < ring.size(); ++i)
            d = std::min(d, point_segment_distance(p, ring[i], ring[(i + 1) % ring.size()]));
    };
    scan(a.outer());
    for (const auto& hole : a.holes()) {
        if (point_in_ring(p, hole)) inside = false;
        scan(hole);
    }
    return inside ? d : -d;
}

namespace {

struct Cell {
    Point2 c;
    double h;  // half side
    double d;  // clearance at c
    double potential;  // upper bound over the cell
};

struct CellOrder {
    bool operator()(const Cell& a, const Cell& b) const {
        if (a.potential != b.potential) return a.potential < b.potential;
        return b.c < a.c;  // smaller coordinates first on ties
    }
};

struct SearchResult {
    Point2 point;
    double clearance;
    bool found;
};

// Branch and bound over square cells. When `excluded` is set, candidates
// within `radius` of it are ignored (their cells are still refined, since
// they may also cover admissible points).
SearchResult best_first_search(const Area& a, double precision,
                               std::optional<std::pair<Point2, double>> excluded) {
    double minx = a.outer()[0].x, maxx = minx, miny = a.outer()[0].y, maxy = miny;
    for (const auto& p : a.outer()) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }
    const double w = maxx - minx;
    const double hgt = maxy - miny;
    const double size = std::min(w, hgt);
    if (!(size > 0.0)) throw Degenerate("area has zero extent");

    auto admissible = [&](const Point2& p) {
        return !excluded || distance(p, excluded->first) > excluded->second;
    };
    auto make = [&](Point2 c, double h) {
        const double d = boundary_clearance(a, c);
        return Cell{c, h, d, d + h * std::sqrt(2.0)};
    };
    // Drop cells lying entirely inside the excluded disk.
    auto reachable = [&](const Cell& cell) {
        return !excluded ||
               distance(cell.c, excluded->first) + cell.h * std::sqrt(2.0) > excluded->second;
    };

    std::priority_queue<Cell, std::vector<Cell>, CellOrder> queue;
    const double h0 = size / 2.0;
    for (double x = minx; x < maxx; x += size)
        for (double y = miny; y < maxy; y += size) queue.push(make({x + h0, y + h0}, h0));

    SearchResult best{{}, -std::numeric_limits<double>::infinity(), false};
    auto consider = [&](const Cell& cell) {
        if (cell.d > best.clearance && admissible(cell.c)) best = {cell.c, cell.d, true};
    };
    const Point2 seed = hausdorff_centroid(Region{a});
    consider(make(seed, 0.0));

    while (!queue.empty()) {
        const Cell cell = queue.top();
        queue.pop();
        consider(cell);
        if (cell.potential - best.clearance <= precision || !reachable(cell)) continue;
        const double h = cell.h / 2.0;
        for (const Point2 off : {Point2{-h, -h}, Point2{h, -h}, Point2{-h, h}, Point2{h, h}})
            queue.push(make(cell.c + off, h));
    }
    return best;
}

}  // namespace

Pole pole_of_inaccessibility(const Area& a, double precision) {
    if (!(precision > 0.0)) throw InvalidArgument("precision must be positive");
    const SearchResult first = best_first_search(a, precision, std::nullopt);
    if (!first.found || first.clearance <= 0.0) throw Degenerate("no interior point found");

    // A maximizer is unique when every point a little away from it is
    // measurably worse.
    const double diam = diameter(a.outer());
    const double radius = std::max(std::sqrt(precision * diam), 10.0 * precision);
    const SearchResult second =
        best_first_search(a, precision, std::make_pair(first.point, radius));
    const bool unique = !second.found || second.clearance < first.clearance - precision;
    return {first.point, first.clearance, unique};
}

}  // namespace centerkit
