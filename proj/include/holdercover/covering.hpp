#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "holdercover/geometry.hpp"

namespace holdercover {

// Closed sup-norm ball, i.e. an axis-parallel square of side 2 * radius.
struct Ball {
    Point2 center;
    Real radius = 1;
};

struct CoverLevel {
    int k = 0;
    Real radius = 1;
    std::vector<Ball> balls;
    std::vector<std::size_t> parents;  // index into level k-1; empty at k = 0
};

struct CoverChain {
    Real eps0 = 1;
    Real d = 1;
    std::vector<CoverLevel> levels;

    std::vector<std::size_t> counts() const;
};

struct CoverBracket {
    std::size_t lower = 0;
    std::size_t upper = 0;
};

struct DiniTerm {
    int k = 0;
    std::size_t count = 0;
    Real term = 0;
};

enum class DiniVerdict { converging, inconclusive };

struct DiniReport {
    std::vector<DiniTerm> terms;
    std::vector<Real> partial_sums;
    Real ratio = 1;  // fitted geometric decay of the trailing terms
    Real tail_estimate = 0;
    DiniVerdict verdict = DiniVerdict::inconclusive;
};

struct DimSample {
    Real eps = 1;
    Real count = 1;
};

struct DimEstimate {
    std::vector<DimSample> samples;
    Real slope = 0;
    Real intercept = 0;
    Real residual = 0;  // root mean square of the fit residuals in log space
};

struct PushforwardScale {
    Real eps = 1;
    Real image_radius = 1;
    std::size_t image_lower = 0;
    std::size_t domain_upper = 0;
};

struct PushforwardResult {
    Real l_fit = 0;
    bool holds = false;
    std::vector<PushforwardScale> scales;
};

// Greedy r-net in input order: centers are input points, pairwise more than r
// apart, and every point lies within r of a center.
std::vector<Ball> greedy_net(std::span<const Point2> points, Real r);

// Greedy cover by closed axis-parallel squares of the given side, each anchored
// with its lower-left corner at the first uncovered point in (x, y) order.
// Returns the number of squares. `slack` enlarges the side by a relative amount.
std::size_t anchored_square_cover(std::span<const Point2> points, Real side, Real slack = 0);

// Largest number of points inside one closed axis-parallel square of the given side.
std::size_t max_square_occupancy(std::span<const Point2> points, Real side, Real slack = 0);

// Brackets N(points, eps), the least number of closed sup-norm balls of radius
// eps (squares of side 2 eps) covering the set:
//   upper = min(greedy eps-net, anchored square cover)
//   lower = max(greedy 2eps-separated subset, ceil(|P| / max square occupancy)).
// slack widens squares relatively, for coordinates that carry rounding.
CoverBracket cover_bracket(std::span<const Point2> points, Real eps, Real slack = 0);

// Level 0 is one ball at points[0] of radius eps0; level k >= 1 is the greedy
// net at eps0 * 2^{-k}. Each ball's parent is the nearest intersecting ball one
// level up, lowest index on ties.
CoverChain build_chain(std::span<const Point2> points, Real eps0, int levels, Real d);

DiniReport dini_report(std::span<const std::pair<int, std::size_t>> counts, Real d);

DimEstimate box_dim_fit(std::span<const DimSample> samples);

// f maps domain index i to image index image_of[i]; must be onto the image.
// Fits the least L with d(f x, f x') <= L d(x, x')^alpha over all pairs, then
// checks lower bracket of N(image, L eps^alpha) <= upper bracket of N(domain, eps)
// on eps = 2^{-1}, ..., 2^{-grid}.
PushforwardResult pushforward_check(std::span<const Point2> domain, std::span<const Point2> image,
                                    std::span<const std::size_t> image_of, Real alpha, int grid = 8,
                                    Real slack = 0);

}  // namespace holdercover
