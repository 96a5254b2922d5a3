#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "holdercover/geometry.hpp"

namespace testing_helpers {

using holdercover::Point2;
using holdercover::Real;

inline std::vector<Point2> random_points(std::size_t n, std::uint64_t seed, Real lo = 0, Real hi = 1) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(static_cast<double>(lo), static_cast<double>(hi));
    std::vector<Point2> out;
    for (std::size_t i = 0; i < n; ++i) {
        const Real x = u(rng);
        const Real y = u(rng);
        out.push_back({x, y});
    }
    return out;
}

// Corners of generation `depth` of the classical four-corner set with ratio 1/4.
inline std::vector<Point2> standard_cantor_corners(int depth) {
    std::vector<Point2> origins{{0, 0}};
    Real side = 1;
    for (int j = 0; j < depth; ++j) {
        const Real child = side / 4;
        std::vector<Point2> next;
        for (const auto& o : origins)
            for (int digit = 0; digit < 4; ++digit)
                next.push_back({o.x + ((digit & 1) ? side - child : 0), o.y + ((digit & 2) ? side - child : 0)});
        origins.swap(next);
        side = child;
    }
    std::vector<Point2> out;
    for (const auto& o : origins) {
        out.push_back(o);
        out.push_back({o.x + side, o.y});
        out.push_back({o.x, o.y + side});
        out.push_back({o.x + side, o.y + side});
    }
    return out;
}

inline bool rel_close(Real a, Real b, Real tol) {
    return std::fabs(a - b) <= tol * std::max({Real(1e-300), std::fabs(a), std::fabs(b)});
}

}  // namespace testing_helpers
