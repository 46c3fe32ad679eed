#include <doctest.h>

#include "centerkit/multiset.hpp"
#include "oracles.hpp"

using namespace centerkit;

namespace {

std::vector<Point2> random_points(Rng& rng, int m) {
    std::vector<Point2> pts(static_cast<std::size_t>(m));
    for (auto& p : pts) p = {rng.uniform(-5, 5), rng.uniform(-5, 5)};
    return pts;
}

}  // namespace

TEST_CASE("multiset semantics") {
    const PointMultiset a{{0, 0}, {1, 0}, {1, 0}};
    const PointMultiset b{{1, 0}, {0, 0}, {1, 0}};
    const PointMultiset c{{1, 0}, {0, 0}, {0, 0}};
    CHECK(a == b);
    CHECK_FALSE(a == c);
    CHECK_THROWS_AS(PointMultiset(std::vector<PointN>{}), InvalidArgument);
    CHECK_THROWS_AS(PointMultiset(std::vector<PointN>{PointN{1.0, 2.0}, PointN{1.0, 2.0, 3.0}}), DimensionMismatch);
}

TEST_CASE("centroid") {
    CHECK(centroid({{0, 0}, {3, 0}, {0, 3}}).as_point2() == Point2{1, 1});
    CHECK(centroid({{2.5, -1}, {2.5, -1}, {2.5, -1}}).as_point2() == Point2{2.5, -1});
    const auto c = centroid({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}}).as_point2();
    CHECK(distance(c, {0.5, 0.5}) <= 1e-15);
    const auto c3 = centroid(PointMultiset({PointN{0.0, 0.0, 0.0}, PointN{2.0, 4.0, 6.0}}));
    CHECK(c3.dim() == 3);
    CHECK(c3[2] == doctest::Approx(3.0));
}

TEST_CASE("weighted centroid") {
    auto wc = [](std::vector<WeightedPoint> v) { return weighted_centroid(WeightedMultiset(std::move(v))).as_point2(); };
    CHECK(distance(wc({{Point2{0, 0}, 1}, {Point2{3, 0}, 2}}), {2, 0}) <= 1e-15);
    CHECK(distance(wc({{Point2{0, 0}, 1}, {Point2{4, 0}, 1}, {Point2{0, 4}, 2}}), {1, 2}) <= 1e-15);
    CHECK_THROWS_AS(WeightedMultiset({{Point2{0, 0}, 0.0}}), InvalidArgument);
    CHECK_THROWS_AS(WeightedMultiset({{Point2{0, 0}, -1.0}}), InvalidArgument);
    CHECK_THROWS_AS(WeightedMultiset({}), InvalidArgument);

    // Integer weights equal repetition.
    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<WeightedPoint> items;
        std::vector<PointN> repeated;
        for (int i = 0; i < 6; ++i) {
            const Point2 p{rng.uniform(-5, 5), rng.uniform(-5, 5)};
            const int w = rng.uniform_int(1, 4);
            items.push_back({p, static_cast<double>(w)});
            for (int k = 0; k < w; ++k) repeated.push_back(p);
        }
        const Point2 a = weighted_centroid(WeightedMultiset(items)).as_point2();
        const Point2 b = centroid(PointMultiset(repeated)).as_point2();
        CHECK(distance(a, b) <= 1e-14 * 10);
    }
}

TEST_CASE("one_center examples") {
    auto check = [](const PointMultiset& o, Point2 c, double r) {
        const Circle k = one_center(o);
        CHECK(distance(k.center, c) <= 1e-12);
        CHECK(k.radius == doctest::Approx(r).epsilon(1e-12));
    };
    check({{-1, 0}, {1, 0}}, {0, 0}, 1);
    check({{0, 0}, {4, 0}, {1, 1}}, {2, 0}, 2);
    check({{0, 0}, {2, 0}, {1, 2}}, {1, 0.75}, 1.25);
    check({{3, 4}}, {3, 4}, 0);
    check({{3, 4}, {3, 4}}, {3, 4}, 0);
    // Cocircular square: any three corners determine the circle.
    check({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}, {0, 0}, std::sqrt(2.0));

    const auto o = oracle::brute_one_center({{0, 0}, {4, 0}, {1, 1}});
    CHECK(distance(o.center, {2, 0}) <= 1e-12);
    CHECK_THROWS_AS(one_center(PointMultiset({PointN{0.0, 0.0, 0.0}})), DimensionMismatch);
}

TEST_CASE("one_center matches brute force and contains every point") {
    Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const auto pts = random_points(rng, rng.uniform_int(1, 10));
        const Circle c = one_center(PointMultiset::planar(pts));
        const auto o = oracle::brute_one_center(pts);
        CHECK(distance(c.center, o.center) <= 1e-9);
        CHECK(std::abs(c.radius - o.radius) <= 1e-9 * (1.0 + o.radius));
        for (const auto& p : pts) CHECK(distance(p, c.center) <= c.radius + 1e-9);
    }
}

TEST_CASE("one_center radius scales with similarities") {
    Rng rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const auto o = PointMultiset::planar(random_points(rng, rng.uniform_int(2, 10)));
        const auto t = sample_similarity(rng.next(), {}, true);
        CHECK(one_center(transform(t, o)).radius ==
              doctest::Approx(t.scale() * one_center(o).radius).epsilon(1e-9));
    }
}

TEST_CASE("medoid examples") {
    const auto eq = medoid({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}}).as_point2();
    CHECK(distance(eq, {0.5, std::sqrt(3.0) / 6}) <= 1e-12);
    CHECK(distance(medoid({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}).as_point2(), {0, 0}) <= 1e-12);

    // A vertex angle of 130 degrees: that vertex is the minimizer.
    const double phi = 130.0 * M_PI / 180.0;
    const std::vector<Point2> wide{{0, 0}, {3, 0}, {2 * std::cos(phi), 2 * std::sin(phi)}};
    const auto v = medoid(PointMultiset::planar(wide)).as_point2();
    CHECK(v == Point2{0, 0});
    const auto g = oracle::grid_medoid(wide);
    CHECK(oracle::distance_sum(wide, v) <= oracle::distance_sum(wide, g) + 1e-12);

    // All angles below 120 degrees (the largest is 90): the minimizer is
    // interior, near (0.2862, 0.4470), not a vertex.
    const std::vector<Point2> right{{0, 0}, {10, 0}, {0, 1}};
    const auto f = medoid(PointMultiset::planar(right)).as_point2();
    const auto fo = oracle::grid_medoid(right);
    CHECK(distance(f, fo) <= 1e-6);
    CHECK(distance(f, {0.28623535, 0.44697875}) <= 1e-6);
    CHECK(oracle::distance_sum(right, f) < oracle::distance_sum(right, {0, 0}) - 0.1);

    CHECK(medoid({{2, 3}, {2, 3}}).as_point2() == Point2{2, 3});
}

TEST_CASE("medoid on collinear input") {
    // Odd count: the middle point.
    CHECK(distance(medoid({{0, 0}, {1, 1}, {5, 5}}).as_point2(), {1, 1}) <= 1e-12);
    // Multiplicity counts: {0, 0, 3, 10} has the median at 0..3, even; {0,0,0,3,10} at 0.
    CHECK_THROWS_AS(medoid({{0, 0}, {0, 0}, {3, 0}, {10, 0}}), NonUnique);
    CHECK(medoid({{0, 0}, {0, 0}, {0, 0}, {3, 0}, {10, 0}}).as_point2() == Point2{0, 0});
    CHECK_THROWS_AS(medoid({{-1, 0}, {1, 0}}), NonUnique);
}

TEST_CASE("medoid works in any dimension") {
    // Regular simplex in 3D: symmetric, the minimizer is its centroid.
    const PointMultiset o({PointN{1.0, 0.0, 0.0}, PointN{0.0, 1.0, 0.0}, PointN{0.0, 0.0, 1.0}, PointN{1.0, 1.0, 1.0}});
    const PointN m = medoid(o);
    for (std::size_t i = 0; i < 3; ++i) CHECK(m[i] == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("medoid objective is not beaten by the grid oracle") {
    Rng rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const auto pts = random_points(rng, rng.uniform_int(3, 8));
        const auto m = medoid(PointMultiset::planar(pts)).as_point2();
        const auto g = oracle::grid_medoid(pts, 200);
        const double fm = oracle::distance_sum(pts, m);
        CHECK(fm <= oracle::distance_sum(pts, g) * (1 + 1e-9) + 1e-12);
        CHECK(medoid_objective(PointMultiset::planar(pts), m) == doctest::Approx(fm).epsilon(1e-14));
    }
}
