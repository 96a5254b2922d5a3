#pragma once

// Single-threaded reference versions of the kernels in kernels.hpp.

#include "holdercover/kernels.hpp"

namespace holdercover::serial {

PowerRatioSup pairwise_power_ratio_sup(std::span<const Point2> domain, std::span<const Point2> image,
                                       Real exponent);
Real knot_holder_sup(std::span<const Real> params, std::span<const Point2> points, Real alpha);
Real sampled_holder_sup(std::span<const Real> s, std::span<const Real> t, std::span<const Point2> ps,
                        std::span<const Point2> pt, Real alpha);
Real polyline_gap(std::span<const Point2> points, std::span<const Point2> polyline);
std::vector<Real> strip_widths(const std::vector<std::vector<Point2>>& groups);
std::vector<Point2> corner_grid(std::span<const Real> gaps, int depth);

}  // namespace holdercover::serial
