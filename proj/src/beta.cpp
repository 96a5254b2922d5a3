#include "holdercover/beta.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "holdercover/errors.hpp"
#include "holdercover/kernels.hpp"

namespace holdercover {

namespace {

// Points sorted by x for range gathering.
class XIndex {
public:
    explicit XIndex(std::span<const Point2> points) : points_(points.begin(), points.end()) {
        std::sort(points_.begin(), points_.end(), [](const Point2& a, const Point2& b) {
            return a.x < b.x || (a.x == b.x && a.y < b.y);
        });
    }

    // Points in the closed box [x0, x1] x [y0, y1].
    std::vector<Point2> gather(Real x0, Real x1, Real y0, Real y1) const {
        std::vector<Point2> out;
        auto it = std::lower_bound(points_.begin(), points_.end(), x0,
                                   [](const Point2& p, Real x) { return p.x < x; });
        for (; it != points_.end() && it->x <= x1; ++it)
            if (it->y >= y0 && it->y <= y1) out.push_back(*it);
        return out;
    }

private:
    std::vector<Point2> points_;
};

Real grid(std::int64_t j, int level) { return std::ldexp(static_cast<Real>(j), -level); }

std::vector<Point2> in_triple(const XIndex& index, const DyadicSquare& q) {
    return index.gather(grid(q.jx - 1, q.level), grid(q.jx + 2, q.level), grid(q.jy - 1, q.level),
                        grid(q.jy + 2, q.level));
}

std::vector<Point2> in_square(const XIndex& index, const DyadicSquare& q) {
    return index.gather(grid(q.jx, q.level), grid(q.jx + 1, q.level), grid(q.jy, q.level), grid(q.jy + 1, q.level));
}

BetaRecord make_record(const DyadicSquare& q, Real omega) {
    const Real side = q.side();
    BetaRecord r{q, omega, omega / (3 * side), 0};
    r.contribution = r.beta * r.beta * side;
    return r;
}

}  // namespace

BetaRecord beta_of(std::span<const Point2> points, const DyadicSquare& q) {
    XIndex index(points);
    const auto inside = in_triple(index, q);
    return make_record(q, strip_width(inside));
}

Real beta_own(std::span<const Point2> points, const DyadicSquare& q) {
    XIndex index(points);
    return strip_width(in_square(index, q)) / q.side();
}

BetaReport beta_squared_sum(std::span<const Point2> points, int level_min, int level_max) {
    if (level_min > level_max) throw ValidationError("level range is empty");
    if (level_min < 0) throw ValidationError("levels must be nonnegative");
    BetaReport report;
    report.level_min = level_min;
    report.level_max = level_max;
    XIndex index(points);
    for (int level = level_min; level <= level_max; ++level) {
        const auto squares = dyadic_squares_meeting(points, level);
        std::vector<std::vector<Point2>> groups;
        groups.reserve(squares.size());
        for (const auto& q : squares) groups.push_back(in_triple(index, q));
        const auto widths = kernels::strip_widths(groups);
        Real level_sum = 0;
        for (std::size_t i = 0; i < squares.size(); ++i) {
            report.records.push_back(make_record(squares[i], widths[i]));
            level_sum += report.records.back().contribution;
        }
        report.per_level_sums.push_back(level_sum);
        report.cumulative += level_sum;
    }
    return report;
}

int dyadic_scale_for(const ScaleSchedule& s, const SideExponents& e, int n) {
    if (n < 1 || n > s.stages) throw ValidationError("stage outside the schedule");
    // 2^{-i} <= 4^{-e} < 2^{-i+1}  <=>  i - 1 < 2e <= i.
    const BigInt i = ceil(Rational(2 * e.at(s.ks[2 * n + 1] - 1)));
    return static_cast<int>(i.get_si());
}

CantorBetaBound cantor_beta_bound(const ScaleSchedule& s, const SideExponents& e, int n) {
    if (n < 1 || n > s.stages) throw ValidationError("stage outside the schedule");
    // At least 4^{k-1} squares, each with beta >= 1/12 and side >= ell_k.
    CantorBetaBound b;
    const std::int64_t k = s.ks[2 * n + 1];
    b.coefficient = Rational(1, 576);
    b.exponent = Rational(static_cast<long>(k)) - e.at(k);
    b.value = to_long_double(b.coefficient) / pow4_neg(b.exponent);
    b.normalized = static_cast<long double>(n) / pow4_neg(b.exponent);
    return b;
}

std::vector<BnvLevel> bnv_sum(std::span<const Point2> points, Real d, int max_level, Real beta0) {
    if (!(beta0 > 0)) throw ValidationError("beta0 must be positive");
    if (max_level < 0) throw ValidationError("levels must be nonnegative");
    XIndex index(points);
    std::vector<BnvLevel> out;
    Real sum = 0;
    for (int level = 0; level <= max_level; ++level) {
        const auto squares = dyadic_squares_meeting(points, level);
        std::vector<std::vector<Point2>> groups;
        groups.reserve(squares.size());
        for (const auto& q : squares) groups.push_back(in_square(index, q));
        const auto widths = kernels::strip_widths(groups);
        const Real side = std::ldexp(Real(1), -level);
        BnvLevel row;
        row.level = level;
        row.count = static_cast<std::size_t>(
            std::count_if(widths.begin(), widths.end(), [&](Real w) { return w / side >= beta0; }));
        row.term = static_cast<Real>(row.count) * std::exp2(-static_cast<Real>(level) * d);
        sum += row.term;
        row.partial_sum = sum;
        out.push_back(row);
    }
    return out;
}

}  // namespace holdercover
