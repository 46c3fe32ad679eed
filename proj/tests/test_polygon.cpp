#include <doctest.h>

#include <numeric>

#include "centerkit/harness.hpp"
#include "centerkit/polygon.hpp"
#include "oracles.hpp"

using namespace centerkit;

namespace {

const std::vector<Point2> l_shape{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}};
const std::vector<Point2> unit_square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};

std::vector<Point2> regular(int m, double r = 1.0, Point2 c = {}) {
    std::vector<Point2> v;
    for (int i = 0; i < m; ++i) v.push_back(c + r * Point2{std::cos(2 * M_PI * i / m), std::sin(2 * M_PI * i / m)});
    return v;
}

// Star polygons, convex or not.
Polygon random_polygon(Rng& rng) {
    const int m = rng.uniform_int(3, 12);
    return Polygon(random_star_polygon(rng, m, {rng.uniform(-5, 5), rng.uniform(-5, 5)}, 0.5, 5));
}

bool near(Point2 a, Point2 b, double eps = 1e-12) { return distance(a, b) <= eps; }

}  // namespace

TEST_CASE("canonical form ignores shifts and reversal") {
    CHECK(canonicalize({{0, 0}, {1, 0}, {0, 1}}) == canonicalize({{1, 0}, {0, 1}, {0, 0}}));
    CHECK(canonicalize({{0, 0}, {1, 0}, {0, 1}}) == canonicalize({{0, 1}, {1, 0}, {0, 0}}));
    CHECK_THROWS_AS(canonicalize({{0, 0}, {1, 0}}), InvalidArgument);

    Rng rng(31);
    const auto hex = random_star_polygon(rng, 6, {}, 1, 3);
    const auto reps = dihedral_relabelings(hex);
    CHECK(reps.size() == 12);
    const Polygon first(reps.front());
    for (const auto& r : reps) CHECK(Polygon(r) == first);
    // A genuinely different cycle over the same vertices is another polygon.
    std::vector<Point2> swapped = hex;
    std::swap(swapped[1], swapped[2]);
    CHECK_FALSE(Polygon(swapped) == first);
}

TEST_CASE("simplicity") {
    CHECK(Polygon(unit_square).is_simple());
    CHECK(Polygon(l_shape).is_simple());
    CHECK_FALSE(Polygon({{0, 0}, {2, 2}, {2, 0}, {0, 2}}).is_simple());
    CHECK_FALSE(Polygon({{0, 0}, {1, 0}, {1, 0}, {0, 1}}).is_simple());
    // A vertex touching a non-adjacent side.
    CHECK_FALSE(Polygon({{0, 0}, {4, 0}, {4, 4}, {2, 0}, {0, 4}}).is_simple());
    CHECK_FALSE(Polygon({{0, 0}, {1, 0}, {2, 0}}).is_simple());
}

TEST_CASE("perimeter and interior angles") {
    const auto sq = perimeter_and_angles(Polygon(unit_square));
    CHECK(sq.perimeter == doctest::Approx(4));
    for (double a : sq.angles) CHECK(a == doctest::Approx(M_PI / 2));

    const auto tri = perimeter_and_angles(Polygon({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}}));
    CHECK(tri.perimeter == doctest::Approx(3));
    for (double a : tri.angles) CHECK(a == doctest::Approx(M_PI / 3));

    const Polygon l(l_shape);
    const auto la = perimeter_and_angles(l);
    CHECK(la.perimeter == doctest::Approx(8));
    CHECK(std::accumulate(la.angles.begin(), la.angles.end(), 0.0) == doctest::Approx(4 * M_PI));
    int reflex = 0;
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (la.angles[i] > M_PI) {
            ++reflex;
            CHECK(l.vertices()[i] == Point2{1, 1});
            CHECK(la.angles[i] == doctest::Approx(1.5 * M_PI));
        } else {
            CHECK(la.angles[i] == doctest::Approx(M_PI / 2));
        }
    }
    CHECK(reflex == 1);
    // Clockwise input gives the same interior angles.
    const auto cw = interior_angles(std::vector<Point2>(l_shape.rbegin(), l_shape.rend()));
    CHECK(std::accumulate(cw.begin(), cw.end(), 0.0) == doctest::Approx(4 * M_PI));

    CHECK_THROWS_AS(perimeter_and_angles(Polygon({{0, 0}, {2, 2}, {2, 0}, {0, 2}})), NonSimple);
}

TEST_CASE("angle sum on random simple polygons") {
    Rng rng(32);
    for (int trial = 0; trial < 300; ++trial) {
        const Polygon p = random_polygon(rng);
        const auto pa = perimeter_and_angles(p);
        const double expect = (static_cast<double>(p.size()) - 2) * M_PI;
        CHECK(std::abs(std::accumulate(pa.angles.begin(), pa.angles.end(), 0.0) - expect) <= 1e-9 * expect);
        for (double a : pa.angles) {
            CHECK(a > 0);
            CHECK(a < 2 * M_PI);
        }
    }
}

TEST_CASE("side-length center") {
    CHECK(near(center_S(Polygon(unit_square)), {0.5, 0.5}));
    for (int m = 3; m <= 9; ++m) CHECK(near(center_S(Polygon(regular(m, 2, {1, -1}))), {1, -1}));

    // Sides (2,1,1,1,1,2) around the L: weights (4,3,2,2,2,3)/16 at
    // (0,0),(2,0),(2,1),(1,1),(1,2),(0,2).
    const Polygon l(l_shape);
    const auto w = center_S_weights(l);
    CHECK(std::accumulate(w.begin(), w.end(), 0.0) == doctest::Approx(1).epsilon(1e-12));
    const std::vector<double> hand{4, 3, 2, 2, 2, 3};
    for (std::size_t i = 0; i < l_shape.size(); ++i) {
        const auto it = std::find(l.vertices().begin(), l.vertices().end(), l_shape[i]);
        REQUIRE(it != l.vertices().end());
        CHECK(w[static_cast<std::size_t>(it - l.vertices().begin())] == doctest::Approx(hand[i] / 16));
    }
    CHECK(near(center_S(l), {0.875, 0.875}));
    CHECK_THROWS_AS(center_S(Polygon({{0, 0}, {2, 2}, {2, 0}, {0, 2}})), NonSimple);
}

TEST_CASE("angle center") {
    CHECK(near(center_A(Polygon({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}})), {0.5, std::sqrt(3.0) / 6}));
    for (int m = 3; m <= 9; ++m) CHECK(near(center_A(Polygon(regular(m, 2, {1, -1}))), {1, -1}));

    const Point2 A{0, 3}, B{4, 0}, C{0, 0};
    const double aA = std::atan(4.0 / 3), aB = std::atan(3.0 / 4), aC = M_PI / 2;
    CHECK(aA + aB + aC == doctest::Approx(M_PI));
    const Point2 expect = (aA * A + aB * B + aC * C) / M_PI;
    CHECK(near(center_A(Polygon({A, B, C})), expect));
    CHECK_THROWS_AS(center_A(Polygon({{0, 0}, {2, 2}, {2, 0}, {0, 2}})), NonSimple);
}

TEST_CASE("weights sum to one") {
    Rng rng(33);
    for (int trial = 0; trial < 200; ++trial) {
        const Polygon p = random_polygon(rng);
        const auto ws = center_S_weights(p);
        const auto wa = center_A_weights(p);
        CHECK(std::abs(std::accumulate(ws.begin(), ws.end(), 0.0) - 1) <= 1e-12);
        CHECK(std::abs(std::accumulate(wa.begin(), wa.end(), 0.0) - 1) <= 1e-12);
    }
}

TEST_CASE("vertex centroid") {
    CHECK(near(vertex_centroid(Polygon(unit_square)), {0.5, 0.5}));
    CHECK(near(vertex_centroid(Polygon(l_shape)), {1, 1}));
    const std::vector<Point2> rev(l_shape.rbegin(), l_shape.rend());
    CHECK(vertex_centroid(Polygon(rev)) == vertex_centroid(Polygon(l_shape)));
}

TEST_CASE("matrix weight functions") {
    CHECK(matrix_g_registry().size() == 3);
    CHECK_THROWS_AS(matrix_g("nope"), InvalidArgument);

    Rng rng(34);
    for (int trial = 0; trial < 200; ++trial) {
        const Polygon p = random_polygon(rng);
        const double d = p.diameter();
        CHECK(distance(center_from_matrix_g(p, matrix_g("constant")), vertex_centroid(p)) <= 1e-12 * d);
        CHECK(distance(center_from_matrix_g(p, matrix_g("incident_sides")), center_S(p)) <= 1e-12 * d);
    }
    CHECK(near(center_from_matrix_g(Polygon(regular(5, 3, {2, 2})), matrix_g("row_sum")), {2, 2}));

    const MatrixGFunction zero{"zero", [](const DistanceMatrix&) { return 0.0; }};
    CHECK_THROWS_AS(center_from_matrix_g(Polygon(unit_square), zero), ZeroNormalizer);
    // Weights +1 and -1 alternating around a square cancel.
    const MatrixGFunction alternating{"alt", [](const DistanceMatrix& m) { return m(0, 1) > m(0, 3) ? 1.0 : -1.0; }};
    CHECK_THROWS_AS(center_from_matrix_g(Polygon({{0, 0}, {2, 0}, {2, 1}, {0, 1}}), alternating), ZeroNormalizer);
}

TEST_CASE("distance matrix relabeling") {
    const DistanceMatrix m(l_shape);
    CHECK(m.size() == 6);
    CHECK(m(0, 1) == doctest::Approx(2));
    CHECK(m(0, 3) == doctest::Approx(std::sqrt(2.0)));
    const auto s = m.shifted(2);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            CHECK(s(i, j) == m((i + 2) % 6, (j + 2) % 6));
            CHECK(m(i, j) == m(j, i));
        }
}

TEST_CASE("centers do not depend on the representative") {
    Rng rng(35);
    for (int trial = 0; trial < 100; ++trial) {
        const Polygon p = random_polygon(rng);
        const double d = p.diameter();
        const auto reps = dihedral_relabelings(p.vertices());
        for (int k = 0; k < 5; ++k) {
            const auto& r = reps[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(reps.size()) - 1))];
            CHECK(distance(center_S(Polygon(r)), center_S(p)) <= 1e-12 * d);
            CHECK(distance(center_A(Polygon(r)), center_A(p)) <= 1e-12 * d);
            // The weights themselves, evaluated on the raw relabeled cycle.
            for (const auto& g : matrix_g_registry()) {
                const Point2 c = barycentric_combination(r, matrix_g_weights(r, g));
                CHECK(distance(c, center_from_matrix_g(p, g)) <= 1e-12 * d);
            }
        }
    }
}

TEST_CASE("polygon centers are equivariant") {
    Rng rng(36);
    for (int trial = 0; trial < 200; ++trial) {
        const Polygon p = random_polygon(rng);
        const auto t = sample_similarity(rng.next(), {}, true);
        const Polygon q = transform(t, p);
        const double bound = 1e-9 * (1 + t.scale() * p.diameter());
        CHECK(distance(center_S(q), t(center_S(p))) <= bound);
        CHECK(distance(center_A(q), t(center_A(p))) <= bound);
        CHECK(distance(vertex_centroid(q), t(vertex_centroid(p))) <= bound);
        for (const auto& g : matrix_g_registry())
            CHECK(distance(center_from_matrix_g(q, g), t(center_from_matrix_g(p, g))) <= bound);
    }
}

TEST_CASE("approximate polygon equality") {
    const Polygon a(unit_square);
    const Polygon b({{1, 1e-14}, {1, 1}, {0, 1}, {0, 0}});
    CHECK(approx_equal(a, b));
    CHECK_FALSE(approx_equal(a, Polygon({{0, 0}, {1, 0}, {1, 1.1}, {0, 1}})));
    CHECK(signed_area2(unit_square) == doctest::Approx(2));
    CHECK(oracle::shoelace_area(l_shape) == doctest::Approx(signed_area2(l_shape) / 2));
    CHECK(perimeter(l_shape) == doctest::Approx(8));
}
