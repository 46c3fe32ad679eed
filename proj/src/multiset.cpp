#include "centerkit/multiset.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace centerkit {

namespace {

void check_uniform_dimension(std::span<const PointN> pts) {
    if (pts.empty()) throw InvalidArgument("multiset must be nonempty");
    for (const auto& p : pts)
        if (p.dim() != pts.front().dim())
            throw DimensionMismatch("all points of a multiset must share one dimension");
}

double diameter_of(std::span<const PointN> pts) {
    double best = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            best = std::max(best, distance(pts[i], pts[j]));
    return best;
}

using Vec = Eigen::VectorXd;

Vec to_vec(const PointN& p) {
    Vec v(static_cast<Eigen::Index>(p.dim()));
    for (std::size_t i = 0; i < p.dim(); ++i) v[static_cast<Eigen::Index>(i)] = p[i];
    return v;
}

PointN to_point(const Vec& v) { return PointN(std::vector<double>(v.data(), v.data() + v.size())); }

// Distinct locations with their multiplicities.
struct Site {
    Vec x;
    double mult;
};

std::vector<Site> group_sites(const PointMultiset& o) {
    std::vector<PointN> sorted = o.points();
    std::sort(sorted.begin(), sorted.end());
    std::vector<Site> sites;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i > 0 && sorted[i] == sorted[i - 1]) {
            sites.back().mult += 1.0;
        } else {
            sites.push_back({to_vec(sorted[i]), 1.0});
        }
    }
    return sites;
}

// Norm of the pull of all other sites on site k; site k is the minimizer iff
// this does not exceed its multiplicity.
double anchor_pull(const std::vector<Site>& sites, std::size_t k) {
    Vec pull = Vec::Zero(sites[k].x.size());
    for (std::size_t i = 0; i < sites.size(); ++i) {
        if (i == k) continue;
        const Vec d = sites[i].x - sites[k].x;
        pull += sites[i].mult * d / d.norm();
    }
    return pull.norm();
}

}  // namespace

PointMultiset::PointMultiset(std::vector<PointN> points) : points_(std::move(points)) {
    check_uniform_dimension(points_);
}

PointMultiset::PointMultiset(std::initializer_list<Point2> points) {
    for (const auto& p : points) points_.emplace_back(p);
    check_uniform_dimension(points_);
}

PointMultiset PointMultiset::planar(std::span<const Point2> points) {
    std::vector<PointN> v;
    v.reserve(points.size());
    for (const auto& p : points) v.emplace_back(p);
    return PointMultiset(std::move(v));
}

std::vector<Point2> PointMultiset::planar_points() const {
    std::vector<Point2> out;
    out.reserve(points_.size());
    for (const auto& p : points_) out.push_back(p.as_point2());
    return out;
}

double PointMultiset::diameter() const { return diameter_of(points_); }

bool operator==(const PointMultiset& a, const PointMultiset& b) {
    if (a.size() != b.size()) return false;
    auto x = a.points_;
    auto y = b.points_;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
}

PointMultiset transform(const Similarity2& t, const PointMultiset& o) {
    std::vector<PointN> out;
    out.reserve(o.size());
    for (const auto& p : o.points()) out.push_back(apply(t, p));
    return PointMultiset(std::move(out));
}

WeightedMultiset::WeightedMultiset(std::vector<WeightedPoint> items) : items_(std::move(items)) {
    if (items_.empty()) throw InvalidArgument("weighted multiset must be nonempty");
    for (const auto& it : items_) {
        if (!(it.weight > 0.0) || !std::isfinite(it.weight))
            throw InvalidArgument("weights must be positive and finite");
        if (it.point.dim() != items_.front().point.dim())
            throw DimensionMismatch("all points of a multiset must share one dimension");
    }
}

double WeightedMultiset::diameter() const {
    std::vector<PointN> pts;
    for (const auto& it : items_) pts.push_back(it.point);
    return diameter_of(pts);
}

WeightedMultiset transform(const Similarity2& t, const WeightedMultiset& o) {
    std::vector<WeightedPoint> out;
    for (const auto& it : o.items()) out.push_back({apply(t, it.point), it.weight});
    return WeightedMultiset(std::move(out));
}

PointN centroid(const PointMultiset& o) {
    Vec sum = Vec::Zero(static_cast<Eigen::Index>(o.dim()));
    for (const auto& p : o.points()) sum += to_vec(p);
    return to_point(sum / static_cast<double>(o.size()));
}

PointN weighted_centroid(const WeightedMultiset& o) {
    Vec sum = Vec::Zero(static_cast<Eigen::Index>(o.dim()));
    double total = 0.0;
    for (const auto& it : o.items()) {
        sum += it.weight * to_vec(it.point);
        total += it.weight;
    }
    return to_point(sum / total);
}

// ---------------------------------------------------------------------------
// Smallest enclosing circle

namespace {

Circle circle_from(const Point2& a, const Point2& b) {
    return {(a + b) * 0.5, 0.5 * distance(a, b)};
}

Circle circle_from(const Point2& a, const Point2& b, const Point2& c) {
    const Point2 ab = b - a;
    const Point2 ac = c - a;
    const double d = 2.0 * cross(ab, ac);
    const double scale = std::max({dot(ab, ab), dot(ac, ac), dot(b - c, b - c)});
    if (std::abs(d) <= 1e-14 * scale) {
        // (Nearly) collinear support: the diametral circle of the farthest pair.
        Circle best = circle_from(a, b);
        for (const Circle& cand : {circle_from(a, c), circle_from(b, c)})
            if (cand.radius > best.radius) best = cand;
        return best;
    }
    const double ab2 = dot(ab, ab);
    const double ac2 = dot(ac, ac);
    const Point2 off{(ac.y * ab2 - ab.y * ac2) / d, (ab.x * ac2 - ac.x * ab2) / d};
    const Point2 center = a + off;
    const double r = std::max({distance(center, a), distance(center, b), distance(center, c)});
    return {center, r};
}

}  // namespace

Circle one_center(const PointMultiset& o, const Tolerance& tol) {
    std::vector<Point2> pts = o.planar_points();
    const double slack = tol.abs * (1.0 + o.diameter());

    // Fisher-Yates with a fixed seed keeps the result reproducible.
    Rng rng(0x5EC0C1C1EULL);
    for (std::size_t i = pts.size(); i > 1; --i)
        std::swap(pts[i - 1], pts[rng.next() % i]);

    auto inside = [&](const Circle& c, const Point2& p) {
        return distance(c.center, p) <= c.radius + slack;
    };

    Circle c{pts[0], 0.0};
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (inside(c, pts[i])) continue;
        c = {pts[i], 0.0};
        for (std::size_t j = 0; j < i; ++j) {
            if (inside(c, pts[j])) continue;
            c = circle_from(pts[i], pts[j]);
            for (std::size_t k = 0; k < j; ++k) {
                if (inside(c, pts[k])) continue;
                c = circle_from(pts[i], pts[j], pts[k]);
            }
        }
    }
    return c;
}

// ---------------------------------------------------------------------------
// Geometric median

double medoid_objective(const PointMultiset& o, const PointN& p) {
    double s = 0.0;
    for (const auto& x : o.points()) s += distance(x, p);
    return s;
}

PointN medoid(const PointMultiset& o, const MedoidOptions& opts) {
    const auto sites = group_sites(o);
    if (sites.size() == 1) return to_point(sites.front().x);

    const double diam = o.diameter();
    const double band = opts.tol.bound(diam);
    const auto dim = sites.front().x.size();

    // Collinear family: the minimizer is a weighted median along the line,
    // unique unless the middle of an even count falls between two sites.
    Vec mean = Vec::Zero(dim);
    double total = 0.0;
    for (const auto& s : sites) {
        mean += s.mult * s.x;
        total += s.mult;
    }
    mean /= total;
    Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(dim, dim);
    for (const auto& s : sites) cov += s.mult * (s.x - mean) * (s.x - mean).transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov);
    const Vec axis = eig.eigenvectors().col(dim - 1);
    bool collinear = true;
    for (const auto& s : sites) {
        const Vec d = s.x - mean;
        if ((d - d.dot(axis) * axis).norm() > band) {
            collinear = false;
            break;
        }
    }
    if (collinear) {
        std::vector<std::pair<double, std::size_t>> order;
        for (std::size_t i = 0; i < sites.size(); ++i)
            order.emplace_back((sites[i].x - mean).dot(axis), i);
        std::sort(order.begin(), order.end());
        // Smallest site whose cumulative multiplicity reaches half the total.
        double cum = 0.0;
        for (std::size_t r = 0; r < order.size(); ++r) {
            cum += sites[order[r].second].mult;
            if (2.0 * cum > total) return to_point(sites[order[r].second].x);
            if (2.0 * cum == total)
                throw NonUnique("even collinear configuration: every point between the two "
                                "middle points minimizes the distance sum");
        }
    }

    // A site is optimal iff the unit pull of the others does not exceed its
    // multiplicity.
    for (std::size_t k = 0; k < sites.size(); ++k)
        if (anchor_pull(sites, k) <= sites[k].mult) return to_point(sites[k].x);

    // Weiszfeld iteration with the Vardi-Zhang modification at data points.
    Vec y = mean;
    const double step_tol = opts.tol.rel * diam;
    for (int it = 0; it < opts.max_iter; ++it) {
        Vec num = Vec::Zero(dim);
        Vec pull = Vec::Zero(dim);
        double den = 0.0;
        double eta = 0.0;
        for (const auto& s : sites) {
            const Vec d = s.x - y;
            const double r = d.norm();
            if (r <= opts.tol.abs) {
                eta += s.mult;
                continue;
            }
            num += s.mult * s.x / r;
            den += s.mult / r;
            pull += s.mult * d / r;
        }
        const Vec t = num / den;
        Vec next = t;
        if (eta > 0.0) {
            const double r = pull.norm();
            if (r <= eta) break;
            const double w = std::min(1.0, eta / r);
            next = (1.0 - w) * t + w * y;
        }
        const double moved = (next - y).norm();
        y = next;
        if (moved <= step_tol) break;
    }

    // Newton polish: the objective is smooth and strictly convex away from
    // the sites once the configuration is not collinear. Steps are accepted
    // on gradient decrease; comparing objective values would stall at about
    // sqrt(machine epsilon) relative accuracy in the location.
    struct Local {
        Vec grad;
        Eigen::MatrixXd hess;
        bool at_site = false;
    };
    auto local = [&](const Vec& p) {
        Local l{Vec::Zero(dim), Eigen::MatrixXd::Zero(dim, dim)};
        for (const auto& s : sites) {
            const Vec d = p - s.x;
            const double r = d.norm();
            if (r <= opts.tol.abs * (1.0 + diam)) {
                l.at_site = true;
                return l;
            }
            const Vec u = d / r;
            l.grad += s.mult * u;
            l.hess += s.mult * (Eigen::MatrixXd::Identity(dim, dim) - u * u.transpose()) / r;
        }
        return l;
    };
    Local cur = local(y);
    for (int it = 0; it < 30 && !cur.at_site; ++it) {
        Vec step = cur.hess.ldlt().solve(-cur.grad);
        if (!step.allFinite()) break;
        bool accepted = false;
        for (int half = 0; half < 30; ++half, step *= 0.5) {
            Local next = local(y + step);
            if (!next.at_site && next.grad.norm() < cur.grad.norm()) {
                y += step;
                cur = std::move(next);
                accepted = true;
                break;
            }
        }
        if (!accepted || step.norm() <= 1e-16 * (1.0 + diam)) break;
    }
    return to_point(y);
}

}  // namespace centerkit
