#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace holdercover {

// Geometry runs in extended precision (64-bit significand on x86-64).
using Real = long double;

struct Point2 {
    Real x = 0;
    Real y = 0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

// Axis-parallel square of side 2^{-level} with lower-left corner (jx, jy) * 2^{-level}.
struct DyadicSquare {
    int level = 0;
    std::int64_t jx = 0;
    std::int64_t jy = 0;

    Real side() const;
    Point2 lower_left() const;

    friend bool operator==(const DyadicSquare&, const DyadicSquare&) = default;
};

struct Square {
    Point2 center;
    Real side = 1;

    Real half() const { return side / 2; }
};

// Sup-norm distance.
Real dist(const Point2& p, const Point2& q);

// Minimal width of a strip containing all points (0 for fewer than three
// points or collinear input).
Real strip_width(std::span<const Point2> points);

Real diameter(std::span<const Point2> points);

// Square with the same center and three times the side.
Square triple(const DyadicSquare& q);

// Closed containment.
bool contains(const DyadicSquare& q, const Point2& p);
bool contains(const Square& s, const Point2& p);

// All dyadic squares of the given level whose closure contains an input point,
// sorted by (jx, jy) without duplicates.
std::vector<DyadicSquare> dyadic_squares_meeting(std::span<const Point2> points, int level);

// Sign of the orientation of (a, b, c): +1 counterclockwise, -1 clockwise, 0 collinear.
// Exact: the floating-point filter falls back to rational arithmetic.
int orientation(const Point2& a, const Point2& b, const Point2& c);

// Counterclockwise convex hull without collinear vertices, starting at the
// lexicographically smallest point.
std::vector<Point2> convex_hull(std::span<const Point2> points);

// Sup-norm distance from p to the closed segment [a, b]. The objective is
// convex piecewise linear in the segment parameter, so its minimum sits at an
// endpoint or a breakpoint; all of them are evaluated.
Real segment_distance(const Point2& p, const Point2& a, const Point2& b);

}  // namespace holdercover
