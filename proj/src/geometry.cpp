#include "holdercover/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "holdercover/exact.hpp"

namespace holdercover {

Real DyadicSquare::side() const { return std::ldexp(Real(1), -level); }

Point2 DyadicSquare::lower_left() const {
    return {std::ldexp(static_cast<Real>(jx), -level), std::ldexp(static_cast<Real>(jy), -level)};
}

Real dist(const Point2& p, const Point2& q) {
    return std::max(std::fabs(p.x - q.x), std::fabs(p.y - q.y));
}

int orientation(const Point2& a, const Point2& b, const Point2& c) {
    const Real left = (b.x - a.x) * (c.y - a.y);
    const Real right = (b.y - a.y) * (c.x - a.x);
    const Real det = left - right;
    // Differences are not exact either, so the bound covers those roundings too.
    constexpr Real eps = std::numeric_limits<Real>::epsilon();
    const Real bound = 8 * eps * (std::fabs(left) + std::fabs(right));
    if (det > bound) return 1;
    if (det < -bound) return -1;
    const Rational ax = from_long_double(a.x), ay = from_long_double(a.y);
    const Rational exact = (from_long_double(b.x) - ax) * (from_long_double(c.y) - ay) -
                           (from_long_double(b.y) - ay) * (from_long_double(c.x) - ax);
    return sgn(exact);
}

std::vector<Point2> convex_hull(std::span<const Point2> points) {
    std::vector<Point2> sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end(), [](const Point2& p, const Point2& q) {
        return p.x < q.x || (p.x == q.x && p.y < q.y);
    });
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() < 3) return sorted;

    std::vector<Point2> hull(2 * sorted.size());
    std::size_t k = 0;
    for (const auto& p : sorted) {
        while (k >= 2 && orientation(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = sorted.size() - 1, lower = k + 1; i-- > 0;) {
        const auto& p = sorted[i];
        while (k >= lower && orientation(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    hull.resize(k - 1);
    return hull;
}

namespace {

// Twice the triangle area, used only for comparisons between candidates.
Real cross(const Point2& o, const Point2& a, const Point2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

Real strip_width(std::span<const Point2> points) {
    const auto hull = convex_hull(points);
    const std::size_t m = hull.size();
    if (m < 3) return 0;

    Real best = std::numeric_limits<Real>::infinity();
    std::size_t j = 1;
    for (std::size_t i = 0; i < m; ++i) {
        const Point2& a = hull[i];
        const Point2& b = hull[(i + 1) % m];
        while (std::fabs(cross(a, b, hull[(j + 1) % m])) > std::fabs(cross(a, b, hull[j]))) {
            j = (j + 1) % m;
        }
        const Real length = std::hypot(b.x - a.x, b.y - a.y);
        best = std::min(best, std::fabs(cross(a, b, hull[j])) / length);
    }
    return best;
}

Real diameter(std::span<const Point2> points) {
    Real best = 0;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j) best = std::max(best, dist(points[i], points[j]));
    return best;
}

Square triple(const DyadicSquare& q) {
    const Real side = q.side();
    const Point2 ll = q.lower_left();
    return {{ll.x + side / 2, ll.y + side / 2}, 3 * side};
}

bool contains(const DyadicSquare& q, const Point2& p) {
    const Real lo_x = std::ldexp(static_cast<Real>(q.jx), -q.level);
    const Real lo_y = std::ldexp(static_cast<Real>(q.jy), -q.level);
    const Real hi_x = std::ldexp(static_cast<Real>(q.jx + 1), -q.level);
    const Real hi_y = std::ldexp(static_cast<Real>(q.jy + 1), -q.level);
    return p.x >= lo_x && p.x <= hi_x && p.y >= lo_y && p.y <= hi_y;
}

bool contains(const Square& s, const Point2& p) {
    const Real h = s.half();
    return p.x >= s.center.x - h && p.x <= s.center.x + h && p.y >= s.center.y - h &&
           p.y <= s.center.y + h;
}

std::vector<DyadicSquare> dyadic_squares_meeting(std::span<const Point2> points, int level) {
    std::vector<DyadicSquare> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        // Scaling by a power of two is exact, so integrality of the scaled
        // coordinate decides whether p sits on a grid line.
        const Real sx = std::ldexp(p.x, level);
        const Real sy = std::ldexp(p.y, level);
        const auto fx = static_cast<std::int64_t>(std::floor(sx));
        const auto fy = static_cast<std::int64_t>(std::floor(sy));
        const bool on_x = sx == std::floor(sx);
        const bool on_y = sy == std::floor(sy);
        for (std::int64_t dx = on_x ? -1 : 0; dx <= 0; ++dx)
            for (std::int64_t dy = on_y ? -1 : 0; dy <= 0; ++dy) out.push_back({level, fx + dx, fy + dy});
    }
    std::sort(out.begin(), out.end(), [](const DyadicSquare& a, const DyadicSquare& b) {
        return a.jx < b.jx || (a.jx == b.jx && a.jy < b.jy);
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace holdercover

namespace holdercover {

Real segment_distance(const Point2& p, const Point2& a, const Point2& b) {
    const Real rx = p.x - a.x, ry = p.y - a.y;
    const Real dx = b.x - a.x, dy = b.y - a.y;
    auto at = [&](Real u) {
        u = std::clamp(u, Real(0), Real(1));
        return std::max(std::fabs(rx - u * dx), std::fabs(ry - u * dy));
    };
    Real best = std::min(at(0), at(1));
    if (dx != 0) best = std::min(best, at(rx / dx));
    if (dy != 0) best = std::min(best, at(ry / dy));
    if (dx != dy) best = std::min(best, at((rx - ry) / (dx - dy)));
    if (dx != -dy) best = std::min(best, at((rx + ry) / (dx + dy)));
    return best;
}

}  // namespace holdercover
