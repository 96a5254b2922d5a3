#pragma once

// Data-parallel inner loops. Every kernel here has a serial twin with the same
// signature in namespace serial (serial.hpp); tests require identical results
// and bench/ compares their throughput.

#include <span>
#include <vector>

#include "holdercover/geometry.hpp"

namespace holdercover {

struct PowerRatioSup {
    Real upper = 0;  // max d(image) / d(domain)^p
    Real lower = 0;  // max d(domain)^p / d(image)
};

namespace kernels {

// Over all index pairs i < j. Pairs with d(domain) = 0 and d(image) > 0 make
// `upper` infinite; pairs with d(image) = 0 and d(domain) > 0 make `lower` infinite.
PowerRatioSup pairwise_power_ratio_sup(std::span<const Point2> domain, std::span<const Point2> image,
                                       Real exponent);

// max over knot pairs i < j of dist(points_i, points_j) / (params_j - params_i)^alpha.
Real knot_holder_sup(std::span<const Real> params, std::span<const Point2> points, Real alpha);

// max over k of dist(ps_k, pt_k) / |s_k - t_k|^alpha, skipping s_k == t_k.
Real sampled_holder_sup(std::span<const Real> s, std::span<const Real> t, std::span<const Point2> ps,
                        std::span<const Point2> pt, Real alpha);

// max over points of the sup-distance to the polyline. A single-vertex
// polyline is a point; an empty one yields +inf for nonempty input.
Real polyline_gap(std::span<const Point2> points, std::span<const Point2> polyline);

std::vector<Real> strip_widths(const std::vector<std::vector<Point2>>& groups);

// Lower-left corners of the 4^depth squares of a corner-replacement construction.
// gaps[j-1] is the offset applied at generation j when the digit selects the
// right (bit 0) or upper (bit 1) child; address digits are most significant first.
std::vector<Point2> corner_grid(std::span<const Real> gaps, int depth);

}  // namespace kernels
}  // namespace holdercover
