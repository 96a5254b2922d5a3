#include "holdercover/curve.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "holdercover/errors.hpp"
#include "holdercover/kernels.hpp"

namespace holdercover {

namespace {

const Point2& center_of(const CoverTree& tree, const CoverChain& chain, std::size_t v) {
    const auto& vertex = tree.vertices()[v];
    return chain.levels[vertex.level].balls[vertex.index].center;
}

Real uniform01(std::mt19937_64& rng) { return static_cast<Real>(rng() >> 11) * 0x1.0p-53L; }

}  // namespace

HolderCurve::HolderCurve(std::vector<Real> params, std::vector<Point2> points, Real alpha, Real constant_bound)
    : params_(std::move(params)), points_(std::move(points)), alpha_(alpha), constant_bound_(constant_bound) {
    if (params_.size() != points_.size()) throw ValidationError("knot parameters and points differ in length");
    for (std::size_t i = 1; i < params_.size(); ++i)
        if (!(params_[i] > params_[i - 1])) throw ValidationError("knot parameters must increase strictly");
}

Point2 HolderCurve::operator()(Real t) const {
    if (points_.empty()) throw ValidationError("empty curve");
    if (points_.size() == 1) return points_.front();
    t = std::clamp(t, params_.front(), params_.back());
    auto it = std::upper_bound(params_.begin(), params_.end(), t);
    std::size_t hi = static_cast<std::size_t>(it - params_.begin());
    if (hi >= params_.size()) return points_.back();
    const std::size_t lo = hi - 1;
    const Real u = (t - params_[lo]) / (params_[hi] - params_[lo]);
    return {points_[lo].x + u * (points_[hi].x - points_[lo].x), points_[lo].y + u * (points_[hi].y - points_[lo].y)};
}

Real theoretical_bound(const CoverChain& chain, Real total_length) {
    return kHolderConstantFactor * chain.eps0 * std::pow(2 * total_length, 1 / chain.d);
}

HolderCurve build_curve(const CoverTree& tree, const CoverChain& chain) {
    if (!(chain.d >= 1)) throw ValidationError("d must be at least 1");
    const Real alpha = 1 / chain.d;
    const Point2 root = center_of(tree, chain, 0);
    if (tree.size() <= 1) return HolderCurve({0, 1}, {root, root}, alpha, 0);

    const EulerTour tour = euler_tour(tree);
    const Real total = tour.length();
    std::vector<Real> params{0};
    std::vector<Point2> points{root};
    params.reserve(tour.steps.size() + 1);
    points.reserve(tour.steps.size() + 1);
    for (const auto& step : tour.steps) {
        params.push_back(step.cumulative / total);
        points.push_back(center_of(tree, chain, step.to));
    }
    params.back() = 1;
    return HolderCurve(std::move(params), std::move(points), alpha, theoretical_bound(chain, tree.total_length()));
}

Real holder_estimate(const HolderCurve& curve, std::size_t sample_pairs, std::uint64_t seed) {
    Real best = kernels::knot_holder_sup(curve.params(), curve.points(), curve.alpha());
    std::mt19937_64 rng(seed);
    std::vector<Real> s(sample_pairs), t(sample_pairs);
    for (std::size_t k = 0; k < sample_pairs; ++k) {
        s[k] = uniform01(rng);
        t[k] = uniform01(rng);
    }
    std::vector<Point2> ps(sample_pairs), pt(sample_pairs);
    for (std::size_t k = 0; k < sample_pairs; ++k) {
        ps[k] = curve(s[k]);
        pt[k] = curve(t[k]);
    }
    return std::max(best, kernels::sampled_holder_sup(s, t, ps, pt, curve.alpha()));
}

Real coverage_gap(std::span<const Point2> points, const HolderCurve& curve) {
    return kernels::polyline_gap(points, curve.points());
}

Real vertex_distortion(const CoverTree& tree, const CoverChain& chain) {
    Real worst = 0;
    for (std::size_t u = 0; u < tree.size(); ++u) {
        for (std::size_t v = u + 1; v < tree.size(); ++v) {
            const Real dx = dist(center_of(tree, chain, u), center_of(tree, chain, v));
            if (dx == 0) continue;
            const Real dt = tree_distance(tree, u, v);
            worst = std::max(worst, dx / (chain.eps0 * std::pow(dt, 1 / chain.d)));
        }
    }
    return worst;
}

}  // namespace holdercover
