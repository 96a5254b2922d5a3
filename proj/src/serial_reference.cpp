#include "holdercover/serial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace holdercover::serial {

PowerRatioSup pairwise_power_ratio_sup(std::span<const Point2> domain, std::span<const Point2> image,
                                       Real exponent) {
    PowerRatioSup out;
    const Real inf = std::numeric_limits<Real>::infinity();
    for (std::size_t i = 0; i < domain.size(); ++i) {
        for (std::size_t j = i + 1; j < domain.size(); ++j) {
            const Real a = dist(domain[i], domain[j]);
            const Real b = dist(image[i], image[j]);
            if (a == 0 && b == 0) continue;
            const Real ap = a == 0 ? Real(0) : std::pow(a, exponent);
            out.upper = std::max(out.upper, a == 0 ? inf : b / ap);
            out.lower = std::max(out.lower, b == 0 ? inf : ap / b);
        }
    }
    return out;
}

Real knot_holder_sup(std::span<const Real> params, std::span<const Point2> points, Real alpha) {
    Real best = 0;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            best = std::max(best, dist(points[i], points[j]) / std::pow(params[j] - params[i], alpha));
    return best;
}

Real sampled_holder_sup(std::span<const Real> s, std::span<const Real> t, std::span<const Point2> ps,
                        std::span<const Point2> pt, Real alpha) {
    Real best = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] == t[k]) continue;
        best = std::max(best, dist(ps[k], pt[k]) / std::pow(std::fabs(s[k] - t[k]), alpha));
    }
    return best;
}

Real polyline_gap(std::span<const Point2> points, std::span<const Point2> polyline) {
    Real worst = 0;
    for (const auto& p : points) {
        Real best = std::numeric_limits<Real>::infinity();
        if (polyline.size() == 1) best = dist(p, polyline[0]);
        for (std::size_t i = 0; i + 1 < polyline.size(); ++i)
            best = std::min(best, segment_distance(p, polyline[i], polyline[i + 1]));
        worst = std::max(worst, best);
    }
    return worst;
}

std::vector<Real> strip_widths(const std::vector<std::vector<Point2>>& groups) {
    std::vector<Real> out;
    out.reserve(groups.size());
    for (const auto& g : groups) out.push_back(strip_width(g));
    return out;
}

std::vector<Point2> corner_grid(std::span<const Real> gaps, int depth) {
    const std::size_t count = std::size_t{1} << (2 * depth);
    std::vector<Point2> out(count);
    for (std::size_t a = 0; a < count; ++a) {
        Point2 p;
        for (int j = 1; j <= depth; ++j) {
            const auto digit = (a >> (2 * (depth - j))) & 3U;
            if (digit & 1U) p.x += gaps[j - 1];
            if (digit & 2U) p.y += gaps[j - 1];
        }
        out[a] = p;
    }
    return out;
}

}  // namespace holdercover::serial
