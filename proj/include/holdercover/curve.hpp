#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "holdercover/covertree.hpp"

namespace holdercover {

// Constant c in the certified bound H = c * eps0 * (2 * total_length)^{1/d}.
//
// Let w_k = 2^{-kd} be the length of an edge into level k and note that a
// parent and child center are at most eps0 (2^{-k} + 2^{-(k-1)}) = 3 eps0 2^{-k} apart.
//  * Vertices, ancestor A at level l over C: |c_A - c_C| < 3 eps0 2^{-l} and
//    d_T >= w_{l+1}, so |c_A - c_C| <= 6 eps0 d_T^{1/d}. Through the least common
//    ancestor, a^{1/d} + b^{1/d} <= 2 (a + b)^{1/d} gives 12 eps0 d_T^{1/d}
//    (the classical 8 eps0 times 3/2 for this edge-length convention).
//  * Inside one edge, the segment is traversed linearly (C_X = 1 for the sup
//    plane): |phi(x) - phi(y)| <= 3 C_X eps0 2^{-k} |a - b| <= 3 C_X eps0 d_T^{1/d}.
//  * Two points on different edges split d_T into edge part, vertex part, edge
//    part; sum the three bounds and use sum c_i t_i^{1/d} <= (sum c_i)(sum t_i)^{1/d}:
//    12 + 2 * 3 C_X = 18.
// The tour map [0,1] -> tree is (2 * total_length)-Lipschitz, which supplies
// the remaining factor.
inline constexpr Real kQuasiconvexity = 1;
inline constexpr Real kVertexDistortion = 12;
inline constexpr Real kHolderConstantFactor = kVertexDistortion + 6 * kQuasiconvexity;

class HolderCurve {
public:
    HolderCurve() = default;
    HolderCurve(std::vector<Real> params, std::vector<Point2> points, Real alpha, Real constant_bound);

    const std::vector<Real>& params() const { return params_; }
    const std::vector<Point2>& points() const { return points_; }
    Real alpha() const { return alpha_; }
    Real constant_bound() const { return constant_bound_; }

    // Linear interpolation on the knot segment containing t (clamped to [0, 1]).
    Point2 operator()(Real t) const;

private:
    std::vector<Real> params_;
    std::vector<Point2> points_;
    Real alpha_ = 1;
    Real constant_bound_ = 0;
};

HolderCurve build_curve(const CoverTree& tree, const CoverChain& chain);

Real theoretical_bound(const CoverChain& chain, Real total_length);

// Sup of dist(curve(s), curve(t)) / |s - t|^alpha over all knot pairs and
// `sample_pairs` seeded uniform pairs.
Real holder_estimate(const HolderCurve& curve, std::size_t sample_pairs, std::uint64_t seed);

Real coverage_gap(std::span<const Point2> points, const HolderCurve& curve);

// max over vertex pairs of |c_u - c_v| / (eps0 * d_T(u, v)^{1/d}); quadratic in the tree size.
Real vertex_distortion(const CoverTree& tree, const CoverChain& chain);

}  // namespace holdercover
