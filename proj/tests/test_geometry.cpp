#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "holdercover/geometry.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace holdercover;
using testing_helpers::random_points;
using testing_helpers::rel_close;

namespace {

// Exact minimal width: it is attained orthogonal to a hull edge, hence to the
// direction between some pair of input points.
Real pair_direction_width(const std::vector<Point2>& pts) {
    if (pts.size() < 3) return 0;
    Real best = std::numeric_limits<Real>::infinity();
    bool any = false;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const Real dx = pts[j].x - pts[i].x, dy = pts[j].y - pts[i].y;
            const Real len = std::hypot(dx, dy);
            if (len == 0) continue;
            any = true;
            Real lo = std::numeric_limits<Real>::infinity(), hi = -lo;
            for (const auto& p : pts) {
                const Real v = (-(p.x - pts[i].x) * dy + (p.y - pts[i].y) * dx) / len;
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
            best = std::min(best, hi - lo);
        }
    return any ? best : 0;
}

Real euclid_diameter(const std::vector<Point2>& pts) {
    Real best = 0;
    for (const auto& a : pts)
        for (const auto& b : pts) best = std::max(best, std::hypot(a.x - b.x, a.y - b.y));
    return best;
}

}  // namespace

TEST_CASE("sup-norm distance") {
    CHECK(dist({0, 0}, {0, 0}) == 0);
    CHECK(dist({0, 0}, {1, 1}) == 1);
    CHECK(dist({0, 0}, {0.3L, 0.7L}) == 0.7L);
    CHECK(dist({0.3L, 0.7L}, {0, 0}) == 0.7L);
}

TEST_CASE("strip width examples") {
    CHECK(strip_width(std::vector<Point2>{}) == 0);
    CHECK(strip_width(std::vector<Point2>{{0.5L, 0.5L}}) == 0);
    CHECK(strip_width(std::vector<Point2>{{0, 0}, {1, 0}, {2, 0}}) == 0);
    const std::vector<Point2> square{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    CHECK(strip_width(square) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(oracle::sweep_width(square, 100000) == doctest::Approx(1.0).epsilon(1e-12));
    // duplicates and collinear runs do not disturb the hull
    CHECK(strip_width(std::vector<Point2>{{0, 0}, {0, 0}, {1, 1}, {2, 2}, {2, 2}}) == 0);
}

TEST_CASE("strip width matches brute force on random small sets") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 3 + rng() % 10;
        const auto pts = random_points(n, 1000 + trial);
        const Real w = strip_width(pts);
        CHECK(rel_close(w, pair_direction_width(pts), 1e-9L));
        // A direction grid can only overshoot, by at most diameter * grid spacing.
        const Real sweep = oracle::sweep_width(pts, 100000);
        CHECK(sweep >= w * (1 - 1e-12L));
        CHECK(sweep - w <= euclid_diameter(pts) * std::numbers::pi_v<Real> / 100000);
    }
}

TEST_CASE("strip width is invariant under rigid motions") {
    for (int trial = 0; trial < 20; ++trial) {
        const auto pts = random_points(8, 77 + trial);
        const Real w = strip_width(pts);
        const Real th = 0.37L * trial;
        std::vector<Point2> moved;
        for (const auto& p : pts)
            moved.push_back({std::cos(th) * p.x - std::sin(th) * p.y + 3.5L, std::sin(th) * p.x + std::cos(th) * p.y - 1.25L});
        CHECK(rel_close(strip_width(moved), w, 1e-9L));
    }
}

TEST_CASE("strip width bounded by diameter and positive for triangles") {
    for (int trial = 0; trial < 30; ++trial) {
        const auto pts = random_points(3 + trial % 7, 300 + trial);
        CHECK(strip_width(pts) <= diameter(pts));
        const std::vector<Point2> tri(pts.begin(), pts.begin() + 3);
        if (orientation(tri[0], tri[1], tri[2]) != 0) CHECK(strip_width(tri) > 0);
    }
}

TEST_CASE("orientation is exact near degeneracy") {
    const Real tiny = std::ldexp(Real(1), -62);
    CHECK(orientation({0, 0}, {1, 1}, {0.5L, 0.5L}) == 0);
    CHECK(orientation({0, 0}, {1, 1}, {0.5L, 0.5L + tiny}) == 1);
    CHECK(orientation({0, 0}, {1, 1}, {0.5L, 0.5L - tiny}) == -1);
    const Real third = 1.0L / 3;
    CHECK(orientation({0, 0}, {3 * third, 3 * third}, {third, third}) == 0);
}

TEST_CASE("triple") {
    auto t0 = triple({0, 0, 0});
    CHECK(t0.center == Point2{0.5L, 0.5L});
    CHECK(t0.side == 3);
    auto t1 = triple({1, 1, 1});
    CHECK(t1.center == Point2{0.75L, 0.75L});
    CHECK(t1.side == 1.5L);
    auto t2 = triple({2, 0, 3});
    CHECK(t2.center == Point2{0.125L, 0.875L});
    CHECK(t2.side == 0.75L);
    for (int level = 0; level < 5; ++level)
        for (std::int64_t jx = -3; jx < 3; ++jx) {
            DyadicSquare q{level, jx, 2 - jx};
            const auto t = triple(q);
            const Point2 ll = q.lower_left();
            const Real s = q.side();
            for (Point2 c : {ll, Point2{ll.x + s, ll.y}, Point2{ll.x, ll.y + s}, Point2{ll.x + s, ll.y + s}})
                CHECK(contains(t, c));
        }
}

TEST_CASE("dyadic squares meeting a point set") {
    CHECK(dyadic_squares_meeting(std::vector<Point2>{}, 3).empty());
    const auto one = dyadic_squares_meeting(std::vector<Point2>{{0.1L, 0.1L}}, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == DyadicSquare{1, 0, 0});

    const std::vector<Point2> corners{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    // closed squares: at level 0 the corners touch the 3x3 block around the unit square,
    // at level 1 each corner touches four squares of its own.
    const auto level0 = dyadic_squares_meeting(corners, 0);
    CHECK(level0.size() == 9);
    CHECK(level0 == oracle::brute_squares(corners, 0));
    const auto level1 = dyadic_squares_meeting(corners, 1);
    CHECK(level1.size() == 16);
    CHECK(level1 == oracle::brute_squares(corners, 1));
}

TEST_CASE("dyadic squares agree with brute force on random and grid-aligned points") {
    for (int level = 0; level <= 6; ++level) {
        auto pts = random_points(50, 900 + level, -1, 2);
        for (int i = 0; i < 10; ++i) pts.push_back({std::ldexp(Real(i), -level), std::ldexp(Real(3 - i), -level)});
        CHECK(dyadic_squares_meeting(pts, level) == oracle::brute_squares(pts, level));
    }
}

TEST_CASE("segment distance matches dense sampling") {
    const auto pts = random_points(60, 5, -1, 2);
    for (std::size_t i = 0; i + 2 < pts.size(); i += 3) {
        const Point2 p = pts[i], a = pts[i + 1], b = pts[i + 2];
        Real sampled = std::numeric_limits<Real>::infinity();
        for (int k = 0; k <= 20000; ++k) {
            const Real u = k / 20000.0L;
            sampled = std::min(sampled, dist(p, {a.x + u * (b.x - a.x), a.y + u * (b.y - a.y)}));
        }
        const Real exact = segment_distance(p, a, b);
        CHECK(exact <= sampled + 1e-15L);
        CHECK(sampled - exact <= 3 * dist(a, b) / 20000);
    }
    CHECK(segment_distance({0.5L, 0.2L}, {0, 0}, {1, 0}) == doctest::Approx(0.2));
    CHECK(segment_distance({2, 0}, {0, 0}, {1, 0}) == 1);
    CHECK(segment_distance({0.3L, 0.3L}, {0, 0}, {0, 0}) == 0.3L);
}
