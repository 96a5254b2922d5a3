#include "holdercover/cantor.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_set>

#include "holdercover/errors.hpp"
#include "holdercover/kernels.hpp"

namespace holdercover {

namespace {

constexpr std::int64_t kMaxScale = std::int64_t{1} << 62;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::int64_t to_int64(const BigInt& v) {
    if (v >= kMaxScale || v < -kMaxScale) throw BudgetError("scale index overflows 64 bits; use fewer stages");
    return v.get_si();
}

Rational rat(std::int64_t v) { return Rational(static_cast<long>(v)); }

void require_stage(const ScaleSchedule& s, int n) {
    if (n < 1 || n > s.stages)
        throw ValidationError("stage n=" + std::to_string(n) + " outside 1.." + std::to_string(s.stages));
}

std::vector<Real> generation_gaps(const SideExponents& e, int depth, bool primed) {
    std::vector<Real> gaps;
    gaps.reserve(depth);
    for (int j = 1; j <= depth; ++j) gaps.push_back(pow4_neg_difference(e.exponent(j - 1, primed), e.exponent(j, primed)));
    return gaps;
}

void check_depth(const SideExponents& e, int depth) {
    if (depth < 0) throw ValidationError("depth must be nonnegative");
    if (depth > e.max_k()) throw ValidationError("depth exceeds the schedule; add stages");
}

}  // namespace

std::string to_string(ScheduleVariant variant) {
    return variant == ScheduleVariant::printed ? "printed" : "corrected";
}

ScheduleVariant parse_variant(const std::string& text) {
    if (text == "printed") return ScheduleVariant::printed;
    if (text == "corrected") return ScheduleVariant::corrected;
    throw ValidationError("unknown schedule variant '" + text + "' (expected printed or corrected)");
}

ScaleSchedule schedule(const Rational& gamma, int stages, ScheduleVariant variant, int max_precision_bits) {
    if (!(gamma > Rational(1, 2) && gamma < 1)) throw ValidationError("gamma must satisfy 1/2 < gamma < 1");
    if (stages < 1) throw ValidationError("need at least one stage");

    ScaleSchedule s;
    s.gamma = gamma;
    s.stages = stages;
    s.variant = variant;
    s.ks = {0, 1};
    s.raw = {0, 1};
    s.clamped = {false, false};
    s.thetas = {Rational(0), Rational(0)};

    auto push = [&](const BigInt& ceiling, const Rational& theta) {
        const std::int64_t raw = to_int64(ceiling);
        const bool clamp = raw <= s.ks.back();
        s.raw.push_back(raw);
        s.ks.push_back(clamp ? s.ks.back() + 1 : raw);
        s.clamped.push_back(clamp);
        s.thetas.push_back(theta);
    };

    const Rational one_minus = 1 - gamma;
    const Rational sign = variant == ScheduleVariant::printed ? Rational(1) : Rational(-1);
    for (int n = 1; n <= stages; ++n) {
        const Rational even = Rational(n) / one_minus * rat(s.ks[2 * n - 1]);
        const BigInt even_ceiling = ceil(even);
        push(even_ceiling, Rational(even_ceiling) - even);

        Rational alternating = 0;
        for (int i = 1; i <= 2 * n; ++i) {
            const Rational term = (Rational((i + 1) / 2) - gamma) * rat(s.ks[i]);
            alternating += (i % 2 == 0) ? term : Rational(-term);
        }
        const Rational offset = alternating / one_minus;
        const Rational scale = sign / one_minus;
        const auto un = static_cast<std::uint64_t>(n);
        const BigInt odd_ceiling = ceil_offset_log4(offset, scale, un, max_precision_bits);
        push(odd_ceiling, Rational(odd_ceiling) - approx_offset_log4(offset, scale, un));

        s.eps_diagnostics.push_back(one_minus - (Rational(n) - gamma) * rat(s.ks[2 * n]) / rat(s.ks[2 * n + 1]));
    }
    return s;
}

SideExponents::SideExponents(const ScaleSchedule& s, std::optional<Rational> delta)
    : gamma_(s.gamma), delta_(std::move(delta)), ks_(s.ks) {
    if (ks_.size() < 2) throw ValidationError("schedule too short");
    if (delta_ && !(*delta_ > Rational(1, 2) && *delta_ <= gamma_))
        throw ValidationError("delta must satisfy 1/2 < delta <= gamma");
    boundary_e_.reserve(ks_.size());
    boundary_e_.emplace_back(0);
    for (std::size_t m = 0; m + 1 < ks_.size(); ++m) {
        const Rational step = (m % 2 == 0) ? gamma_ : Rational(static_cast<long>((m + 1) / 2));
        boundary_e_.push_back(boundary_e_.back() + step * rat(ks_[m + 1] - ks_[m]));
    }
}

std::size_t SideExponents::stage_of(std::int64_t k) const {
    if (k < 0 || k >= ks_.back()) throw ValidationError("k=" + std::to_string(k) + " outside the schedule");
    auto it = std::upper_bound(ks_.begin(), ks_.end(), k);
    return static_cast<std::size_t>(it - ks_.begin()) - 1;
}

Rational SideExponents::increment(std::int64_t k) const {
    const std::size_t m = stage_of(k);
    return (m % 2 == 0) ? gamma_ : Rational(static_cast<long>((m + 1) / 2));
}

Rational SideExponents::at(std::int64_t k) const {
    if (k == ks_.back()) return boundary_e_.back();
    const std::size_t m = stage_of(k);
    return boundary_e_[m] + increment(k) * rat(k - ks_[m]);
}

Rational SideExponents::primed_at(std::int64_t k) const {
    if (!delta_) throw ValidationError("primed exponents need delta");
    return *delta_ / gamma_ * at(k);
}

SideExponents side_exponents(const ScaleSchedule& s, std::optional<Rational> delta) {
    return SideExponents(s, std::move(delta));
}

Point2 square_origin(const SideExponents& e, const SquareAddress& address, bool primed) {
    const int depth = static_cast<int>(address.digits.size());
    check_depth(e, depth);
    const auto gaps = generation_gaps(e, depth, primed);
    Point2 p;
    for (int j = 1; j <= depth; ++j) {
        const char c = address.digits[j - 1];
        if (c < '0' || c > '3') throw ValidationError("address digits must be 0..3");
        const int digit = c - '0';
        if (digit & 1) p.x += gaps[j - 1];
        if (digit & 2) p.y += gaps[j - 1];
    }
    return p;
}

std::vector<Point2> corners(const SideExponents& e, int depth, bool primed, std::size_t budget) {
    check_depth(e, depth);
    if (depth >= 31 || (std::size_t{1} << (2 * (depth + 1))) > budget)
        throw BudgetError("depth too deep; use sample_addresses");
    const auto gaps = generation_gaps(e, depth, primed);
    const Real side = pow4_neg(e.exponent(depth, primed));
    const auto origins = kernels::corner_grid(gaps, depth);
    std::vector<Point2> out;
    out.reserve(4 * origins.size());
    for (const auto& o : origins) {
        out.push_back(o);
        out.push_back({o.x + side, o.y});
        out.push_back({o.x, o.y + side});
        out.push_back({o.x + side, o.y + side});
    }
    return out;
}

std::vector<SquareAddress> sample_addresses(int depth, std::size_t count, std::uint64_t seed) {
    if (depth < 0) throw ValidationError("depth must be nonnegative");
    if (count < 1) throw ValidationError("count must be at least 1");
    std::vector<SquareAddress> out;
    const bool saturated = depth < 31 && count >= (std::size_t{1} << (2 * depth));
    if (saturated) {
        const std::size_t total = std::size_t{1} << (2 * depth);
        out.reserve(total);
        for (std::size_t a = 0; a < total; ++a) {
            SquareAddress addr;
            for (int j = 1; j <= depth; ++j) addr.digits.push_back(static_cast<char>('0' + ((a >> (2 * (depth - j))) & 3U)));
            out.push_back(std::move(addr));
        }
        return out;
    }
    // Each draw has its own generator, so a draw does not depend on how the
    // others are scheduled.
    std::unordered_set<std::string> seen;
    for (std::uint64_t draw = 0; out.size() < count; ++draw) {
        std::mt19937_64 rng(splitmix64(seed ^ splitmix64(draw)));
        SquareAddress addr;
        addr.digits.reserve(depth);
        std::uint64_t bits = 0;
        for (int j = 0; j < depth; ++j) {
            if (j % 32 == 0) bits = rng();
            addr.digits.push_back(static_cast<char>('0' + (bits & 3U)));
            bits >>= 2;
        }
        if (seen.insert(addr.digits).second) out.push_back(std::move(addr));
    }
    return out;
}

AnalyticCounts analytic_counts(const SideExponents& e, std::int64_t k) {
    if (k < 0 || k > e.max_k()) throw ValidationError("k outside the schedule");
    AnalyticCounts out;
    mpz_ui_pow_ui(out.n_exact.get_mpz_t(), 4, static_cast<unsigned long>(k));
    const Rational ek = e.at(k);
    out.dini_exponent = rat(k) - ek;
    if (k > 0) out.lower_box_ratio = rat(k) / ek;
    return out;
}

SidelengthBounds sidelength_bounds(const ScaleSchedule& s, const SideExponents& e, int n) {
    require_stage(s, n);
    const Rational& g = s.gamma;
    const Rational rn(n);
    const Rational k0 = rat(s.ks[2 * n - 2]), k1 = rat(s.ks[2 * n - 1]);
    const Rational k2 = rat(s.ks[2 * n]), k3 = rat(s.ks[2 * n + 1]);
    const Rational log_even = -e.at(s.ks[2 * n]);
    const Rational log_odd = -e.at(s.ks[2 * n + 1]);
    SidelengthBounds b;
    b.even_lower = (g - rn + 1) * k0 + (rn - g) * k1 - rn * k2 <= log_even;
    b.even_upper = log_even <= (rn - g) * k1 - rn * k2;
    b.odd_upper = log_odd <= (rn - g) * k1 + (g - rn) * k2 - g * k3;
    b.odd_lower = log_odd >= (g - rn) * k2 - g * k3;
    return b;
}

bool sidelength_bounds_check(const ScaleSchedule& s, const SideExponents& e, int n) {
    return sidelength_bounds(s, e, n).all();
}

Rational hausdorff_premeasure_bound(const ScaleSchedule& s, int n, const Rational& t) {
    require_stage(s, n);
    if (!(t > 0)) throw ValidationError("t must be positive");
    const Rational rn(n);
    return rat(s.ks[2 * n]) + t * (rn - s.gamma) * rat(s.ks[2 * n - 1]) - t * rn * rat(s.ks[2 * n]);
}

Rational normalized_length_exponent(const ScaleSchedule& s, const SideExponents& e, int n) {
    require_stage(s, n);
    const std::int64_t k = s.ks[2 * n + 1];
    return rat(k) - e.at(k);
}

bool normalized_length_in_window(const ScaleSchedule& s, const SideExponents& e, int n, int max_bits) {
    const Rational x = normalized_length_exponent(s, e, n);
    const auto un = static_cast<std::uint64_t>(n);
    const bool above_one = compare_log4(un, x, Rational(0), max_bits) >= 0;
    const bool below_cap = compare_log4(un, x, Rational(1 - s.gamma), max_bits) <= 0;
    return above_one && below_cap;
}

Rational ratio_deviation(const ScaleSchedule& s, int n) {
    if (n < 1 || n + 1 >= static_cast<int>(s.ks.size())) throw ValidationError("n outside the schedule");
    return abs(Rational(n) / 2 * rat(s.ks[n]) / rat(s.ks[n + 1]) - (1 - s.gamma));
}

bool children_disjoint(const SideExponents& e, bool primed) {
    const Rational half(1, 2);
    const auto& ks = e.boundaries();
    for (std::size_t m = 0; m + 1 < ks.size(); ++m) {
        if (ks[m + 1] == ks[m]) continue;
        Rational step = e.increment(ks[m]);
        if (primed) step = *e.delta() / e.gamma() * step;
        if (!(step > half)) return false;
    }
    return true;
}

std::pair<Point2, Point2> F_map(const SquareAddress& address, const SideExponents& e) {
    if (!e.delta()) throw ValidationError("F needs delta");
    return {square_origin(e, address, true), square_origin(e, address, false)};
}

BiHolderFit bihoelder_sample(const SideExponents& e, int depth, std::size_t pairs, std::uint64_t seed,
                             std::size_t budget) {
    if (!e.delta()) throw ValidationError("bi-Hölder fit needs delta");
    BiHolderFit fit;
    fit.exponent = e.gamma() / *e.delta();
    const Real p = to_long_double(fit.exponent);
    const auto primed = corners(e, depth, true, budget);
    const auto plain = corners(e, depth, false, budget);
    if (pairs == 0) {
        const auto sup = kernels::pairwise_power_ratio_sup(primed, plain, p);
        fit.upper_fit = sup.upper;
        fit.lower_fit = sup.lower;
        fit.pairs = primed.size() * (primed.size() - 1) / 2;
        return fit;
    }
    std::mt19937_64 rng(seed);
    const std::size_t n = primed.size();
    for (std::size_t k = 0; k < pairs; ++k) {
        const std::size_t i = rng() % n;
        const std::size_t j = rng() % n;
        if (i == j) continue;
        const Real a = dist(primed[i], primed[j]);
        const Real b = dist(plain[i], plain[j]);
        const Real ap = std::pow(a, p);
        fit.upper_fit = std::max(fit.upper_fit, b / ap);
        fit.lower_fit = std::max(fit.lower_fit, ap / b);
        ++fit.pairs;
    }
    return fit;
}

}  // namespace holdercover
