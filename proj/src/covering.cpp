#include "holdercover/covering.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "holdercover/errors.hpp"
#include "holdercover/kernels.hpp"

namespace holdercover {

namespace {

// Uniform bucket grid over point indices.
class GridIndex {
public:
    GridIndex(std::span<const Point2> points, Real cell) : points_(points), cell_(cell) {}

    void insert(std::size_t index) { buckets_[key(cell_of(points_[index].x), cell_of(points_[index].y))].push_back(index); }

    template <class Fn>
    void for_each_near(const Point2& p, Real radius, Fn&& fn) const {
        const std::int64_t x0 = cell_of(p.x - radius), x1 = cell_of(p.x + radius);
        const std::int64_t y0 = cell_of(p.y - radius), y1 = cell_of(p.y + radius);
        for (std::int64_t cx = x0; cx <= x1; ++cx) {
            for (std::int64_t cy = y0; cy <= y1; ++cy) {
                auto it = buckets_.find(key(cx, cy));
                if (it == buckets_.end()) continue;
                for (std::size_t index : it->second) fn(index);
            }
        }
    }

    // Grids only make sense while cell coordinates fit comfortably in 64 bits.
    static bool usable(std::span<const Point2> points, Real cell) {
        if (!(cell > 0) || !std::isfinite(cell)) return false;
        for (const auto& p : points)
            if (std::fabs(p.x / cell) > 1e15L || std::fabs(p.y / cell) > 1e15L) return false;
        return true;
    }

private:
    struct KeyHash {
        std::size_t operator()(const std::pair<std::int64_t, std::int64_t>& k) const {
            const auto a = static_cast<std::uint64_t>(k.first) * 0x9E3779B97F4A7C15ULL;
            return static_cast<std::size_t>(a ^ (static_cast<std::uint64_t>(k.second) + 0x7F4A7C159E3779B9ULL + (a << 6) + (a >> 2)));
        }
    };

    std::int64_t cell_of(Real v) const { return static_cast<std::int64_t>(std::floor(v / cell_)); }
    static std::pair<std::int64_t, std::int64_t> key(std::int64_t x, std::int64_t y) { return {x, y}; }

    std::span<const Point2> points_;
    Real cell_;
    std::unordered_map<std::pair<std::int64_t, std::int64_t>, std::vector<std::size_t>, KeyHash> buckets_;
};

std::vector<std::size_t> greedy_net_indices(std::span<const Point2> points, Real r) {
    std::vector<std::size_t> centers;
    if (points.empty()) return centers;
    if (!GridIndex::usable(points, r)) {
        for (std::size_t i = 0; i < points.size(); ++i) {
            bool covered = std::any_of(centers.begin(), centers.end(),
                                       [&](std::size_t c) { return dist(points[c], points[i]) <= r; });
            if (!covered) centers.push_back(i);
        }
        return centers;
    }
    GridIndex grid(points, r);
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool covered = false;
        grid.for_each_near(points[i], r, [&](std::size_t c) {
            if (!covered && dist(points[c], points[i]) <= r) covered = true;
        });
        if (!covered) {
            centers.push_back(i);
            grid.insert(i);
        }
    }
    return centers;
}

std::vector<std::size_t> lexicographic_order(std::span<const Point2> points) {
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& p = points[a];
        const auto& q = points[b];
        return p.x < q.x || (p.x == q.x && (p.y < q.y || (p.y == q.y && a < b)));
    });
    return order;
}

}  // namespace

std::vector<std::size_t> CoverChain::counts() const {
    std::vector<std::size_t> out;
    out.reserve(levels.size());
    for (const auto& level : levels) out.push_back(level.balls.size());
    return out;
}

std::vector<Ball> greedy_net(std::span<const Point2> points, Real r) {
    if (!(r > 0)) throw ValidationError("net radius must be positive");
    std::vector<Ball> balls;
    for (std::size_t i : greedy_net_indices(points, r)) balls.push_back({points[i], r});
    return balls;
}

std::size_t anchored_square_cover(std::span<const Point2> points, Real side, Real slack) {
    const Real s = side * (1 + slack);
    const auto order = lexicographic_order(points);
    std::vector<char> covered(points.size(), 0);
    std::size_t squares = 0;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        const std::size_t i = order[pos];
        if (covered[i]) continue;
        ++squares;
        const Point2 anchor = points[i];
        for (std::size_t q = pos; q < order.size() && points[order[q]].x <= anchor.x + s; ++q) {
            const Point2& p = points[order[q]];
            if (p.y >= anchor.y && p.y <= anchor.y + s) covered[order[q]] = 1;
        }
    }
    return squares;
}

std::size_t max_square_occupancy(std::span<const Point2> points, Real side, Real slack) {
    // An occupied square slides right and up until its left and bottom edges
    // touch points, so left = some x and bottom = some y in the vertical strip.
    const Real s = side * (1 + slack);
    const auto order = lexicographic_order(points);
    std::size_t best = points.empty() ? 0 : 1;
    std::vector<Real> ys;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        if (pos > 0 && points[order[pos]].x == points[order[pos - 1]].x) continue;
        const Real left = points[order[pos]].x;
        ys.clear();
        for (std::size_t q = pos; q < order.size() && points[order[q]].x <= left + s; ++q)
            ys.push_back(points[order[q]].y);
        if (ys.size() <= best) continue;
        std::sort(ys.begin(), ys.end());
        for (std::size_t lo = 0, hi = 0; lo < ys.size(); ++lo) {
            if (hi < lo) hi = lo;
            while (hi < ys.size() && ys[hi] <= ys[lo] + s) ++hi;
            best = std::max(best, hi - lo);
        }
    }
    return best;
}

CoverBracket cover_bracket(std::span<const Point2> points, Real eps, Real slack) {
    if (!(eps > 0)) throw ValidationError("cover radius must be positive");
    if (points.empty()) return {0, 0};
    const Real side = 2 * eps;
    const std::size_t net = greedy_net_indices(points, eps * (1 + slack)).size();
    const std::size_t anchored = anchored_square_cover(points, side, slack);
    const std::size_t separated = greedy_net_indices(points, side * (1 + slack)).size();
    const std::size_t occupancy = max_square_occupancy(points, side, slack);
    const std::size_t packing = (points.size() + occupancy - 1) / occupancy;
    return {std::max(separated, packing), std::min(net, anchored)};
}

CoverChain build_chain(std::span<const Point2> points, Real eps0, int levels, Real d) {
    if (points.empty()) throw ValidationError("cannot build a cover chain of an empty set");
    if (!(eps0 > 0)) throw ValidationError("eps0 must be positive");
    if (levels < 1) throw ValidationError("chain needs at least one level below the root");
    if (!(d >= 1)) throw ValidationError("d must be at least 1");
    const Point2 root = points[0];
    for (const auto& p : points)
        if (dist(root, p) > eps0) throw ValidationError("root radius insufficient");

    CoverChain chain;
    chain.eps0 = eps0;
    chain.d = d;
    chain.levels.push_back({0, eps0, {{root, eps0}}, {}});
    for (int k = 1; k <= levels; ++k) {
        CoverLevel level;
        level.k = k;
        level.radius = std::ldexp(eps0, -k);
        level.balls = greedy_net(points, level.radius);

        const CoverLevel& up = chain.levels.back();
        std::vector<Point2> up_centers;
        up_centers.reserve(up.balls.size());
        for (const auto& b : up.balls) up_centers.push_back(b.center);
        const Real reach = level.radius + up.radius;
        const bool gridded = GridIndex::usable(up_centers, up.radius);
        GridIndex grid(up_centers, up.radius);
        if (gridded)
            for (std::size_t j = 0; j < up_centers.size(); ++j) grid.insert(j);

        level.parents.reserve(level.balls.size());
        for (const auto& ball : level.balls) {
            std::size_t parent = std::numeric_limits<std::size_t>::max();
            Real nearest = std::numeric_limits<Real>::infinity();
            auto consider = [&](std::size_t j) {
                const Real dj = dist(up_centers[j], ball.center);
                if (dj > reach) return;
                if (dj < nearest || (dj == nearest && j < parent)) {
                    nearest = dj;
                    parent = j;
                }
            };
            if (gridded) {
                grid.for_each_near(ball.center, reach, consider);
            } else {
                for (std::size_t j = 0; j < up_centers.size(); ++j) consider(j);
            }
            if (parent == std::numeric_limits<std::size_t>::max())
                throw ValidationError("no parent ball intersects a level-" + std::to_string(k) + " ball");
            level.parents.push_back(parent);
        }
        chain.levels.push_back(std::move(level));
    }
    return chain;
}

DiniReport dini_report(std::span<const std::pair<int, std::size_t>> counts, Real d) {
    if (counts.empty()) throw ValidationError("dini report needs at least one count");
    if (!(d >= 1)) throw ValidationError("d must be at least 1");
    DiniReport report;
    Real sum = 0;
    for (const auto& [k, n] : counts) {
        const Real term = static_cast<Real>(n) * std::exp2(-static_cast<Real>(k) * d);
        sum += term;
        report.terms.push_back({k, n, term});
        report.partial_sums.push_back(sum);
    }

    // Least-squares slope of log(term) against k over the trailing terms.
    std::vector<std::pair<Real, Real>> tail;
    for (auto it = report.terms.rbegin(); it != report.terms.rend() && tail.size() < 4; ++it) {
        if (it->term <= 0) break;
        tail.emplace_back(static_cast<Real>(it->k), std::log(it->term));
    }
    if (tail.size() >= 2) {
        Real mx = 0, my = 0;
        for (const auto& [x, y] : tail) {
            mx += x;
            my += y;
        }
        mx /= tail.size();
        my /= tail.size();
        Real sxy = 0, sxx = 0;
        for (const auto& [x, y] : tail) {
            sxy += (x - mx) * (y - my);
            sxx += (x - mx) * (x - mx);
        }
        if (sxx > 0) report.ratio = std::exp(sxy / sxx);
    }
    if (report.ratio < 1 - 1e-12L) {
        const Real last = report.terms.back().term;
        report.tail_estimate = last * report.ratio / (1 - report.ratio);
        report.verdict = DiniVerdict::converging;
    } else {
        report.tail_estimate = std::numeric_limits<Real>::infinity();
        report.verdict = DiniVerdict::inconclusive;
    }
    return report;
}

DimEstimate box_dim_fit(std::span<const DimSample> samples) {
    DimEstimate est;
    est.samples.assign(samples.begin(), samples.end());
    std::vector<Real> distinct;
    for (const auto& s : samples) {
        if (!(s.eps > 0) || !(s.count > 0)) throw ValidationError("dimension samples need eps > 0 and N > 0");
        distinct.push_back(s.eps);
    }
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() < 2) throw ValidationError("dimension fit needs at least two distinct eps");

    const Real n = static_cast<Real>(samples.size());
    Real mx = 0, my = 0;
    for (const auto& s : samples) {
        mx += std::log(1 / s.eps);
        my += std::log(s.count);
    }
    mx /= n;
    my /= n;
    Real sxy = 0, sxx = 0;
    for (const auto& s : samples) {
        const Real x = std::log(1 / s.eps) - mx;
        sxy += x * (std::log(s.count) - my);
        sxx += x * x;
    }
    est.slope = sxy / sxx;
    est.intercept = my - est.slope * mx;
    Real ss = 0;
    for (const auto& s : samples) {
        const Real r = std::log(s.count) - (est.intercept + est.slope * std::log(1 / s.eps));
        ss += r * r;
    }
    est.residual = std::sqrt(ss / n);
    return est;
}

PushforwardResult pushforward_check(std::span<const Point2> domain, std::span<const Point2> image,
                                    std::span<const std::size_t> image_of, Real alpha, int grid, Real slack) {
    if (!(alpha > 0) || alpha > 1) throw ValidationError("alpha must lie in (0, 1]");
    if (image_of.size() != domain.size()) throw ValidationError("correspondence must map every domain point");
    std::vector<char> hit(image.size(), 0);
    for (std::size_t j : image_of) {
        if (j >= image.size()) throw ValidationError("correspondence index out of range");
        hit[j] = 1;
    }
    if (std::find(hit.begin(), hit.end(), 0) != hit.end())
        throw ValidationError("correspondence is not surjective onto the image set");

    std::vector<Point2> mapped;
    mapped.reserve(domain.size());
    for (std::size_t j : image_of) mapped.push_back(image[j]);

    PushforwardResult result;
    result.l_fit = kernels::pairwise_power_ratio_sup(domain, mapped, alpha).upper;
    if (!std::isfinite(result.l_fit)) throw ValidationError("correspondence is not a function (distinct images of one point)");
    if (result.l_fit == 0) result.l_fit = 1;  // constant map: any L works

    result.holds = true;
    for (int j = 1; j <= grid; ++j) {
        PushforwardScale row;
        row.eps = std::ldexp(Real(1), -j);
        row.image_radius = result.l_fit * std::pow(row.eps, alpha);
        row.image_lower = cover_bracket(image, row.image_radius, slack).lower;
        row.domain_upper = cover_bracket(domain, row.eps, slack).upper;
        if (row.image_lower > row.domain_upper) result.holds = false;
        result.scales.push_back(row);
    }
    return result;
}

}  // namespace holdercover
