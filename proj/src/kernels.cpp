#include "holdercover/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace holdercover::kernels {

PowerRatioSup pairwise_power_ratio_sup(std::span<const Point2> domain, std::span<const Point2> image,
                                       Real exponent) {
    const Real inf = std::numeric_limits<Real>::infinity();
    const auto n = static_cast<std::int64_t>(domain.size());
    Real upper = 0, lower = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(max : upper, lower)
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = i + 1; j < n; ++j) {
            const Real a = dist(domain[i], domain[j]);
            const Real b = dist(image[i], image[j]);
            if (a == 0 && b == 0) continue;
            const Real ap = a == 0 ? Real(0) : std::pow(a, exponent);
            upper = std::max(upper, a == 0 ? inf : b / ap);
            lower = std::max(lower, b == 0 ? inf : ap / b);
        }
    }
    return {upper, lower};
}

Real knot_holder_sup(std::span<const Real> params, std::span<const Point2> points, Real alpha) {
    const auto n = static_cast<std::int64_t>(points.size());
    Real best = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(max : best)
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = i + 1; j < n; ++j)
            best = std::max(best, dist(points[i], points[j]) / std::pow(params[j] - params[i], alpha));
    }
    return best;
}

Real sampled_holder_sup(std::span<const Real> s, std::span<const Real> t, std::span<const Point2> ps,
                        std::span<const Point2> pt, Real alpha) {
    const auto n = static_cast<std::int64_t>(s.size());
    Real best = 0;
#pragma omp parallel for schedule(static) reduction(max : best)
    for (std::int64_t k = 0; k < n; ++k) {
        if (s[k] == t[k]) continue;
        best = std::max(best, dist(ps[k], pt[k]) / std::pow(std::fabs(s[k] - t[k]), alpha));
    }
    return best;
}

Real polyline_gap(std::span<const Point2> points, std::span<const Point2> polyline) {
    const auto n = static_cast<std::int64_t>(points.size());
    Real worst = 0;
#pragma omp parallel for schedule(dynamic, 8) reduction(max : worst)
    for (std::int64_t k = 0; k < n; ++k) {
        const Point2& p = points[k];
        Real best = std::numeric_limits<Real>::infinity();
        if (polyline.size() == 1) best = dist(p, polyline[0]);
        for (std::size_t i = 0; i + 1 < polyline.size(); ++i)
            best = std::min(best, segment_distance(p, polyline[i], polyline[i + 1]));
        worst = std::max(worst, best);
    }
    return worst;
}

std::vector<Real> strip_widths(const std::vector<std::vector<Point2>>& groups) {
    const auto n = static_cast<std::int64_t>(groups.size());
    std::vector<Real> out(groups.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < n; ++i) out[i] = strip_width(groups[i]);
    return out;
}

std::vector<Point2> corner_grid(std::span<const Real> gaps, int depth) {
    const auto count = static_cast<std::int64_t>(std::int64_t{1} << (2 * depth));
    std::vector<Point2> out(count);
#pragma omp parallel for schedule(static)
    for (std::int64_t a = 0; a < count; ++a) {
        Point2 p;
        for (int j = 1; j <= depth; ++j) {
            const auto digit = (static_cast<std::uint64_t>(a) >> (2 * (depth - j))) & 3U;
            if (digit & 1U) p.x += gaps[j - 1];
            if (digit & 2U) p.y += gaps[j - 1];
        }
        out[a] = p;
    }
    return out;
}

}  // namespace holdercover::kernels
