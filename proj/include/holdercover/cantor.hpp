#pragma once

// Corner-replacement sets with two alternating families of scales: gamma
// phases shrink squares by 4^{-gamma}, n phases by 4^{-n}. Every length is
// 4^{-e} for an exact rational e, and every inequality about lengths is
// decided on those exponents.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "holdercover/exact.hpp"
#include "holdercover/geometry.hpp"

namespace holdercover {

enum class ScheduleVariant {
    printed,    // k_{2n+1} uses + log_4(n)
    corrected,  // k_{2n+1} uses - log_4(n)
};

std::string to_string(ScheduleVariant variant);
ScheduleVariant parse_variant(const std::string& text);

inline constexpr std::size_t kDefaultPointBudget = std::size_t{1} << 22;

struct ScaleSchedule {
    Rational gamma;
    int stages = 0;  // M: indices run over k_0 .. k_{2M+1}
    ScheduleVariant variant = ScheduleVariant::corrected;
    std::vector<std::int64_t> ks;
    std::vector<std::int64_t> raw;      // before clamping
    std::vector<bool> clamped;
    std::vector<Rational> thetas;       // ceiling remainder ks[m] - (unrounded value); approximate when log_4 is irrational
    std::vector<Rational> eps_diagnostics;  // index n-1: (1 - gamma) - (n - gamma) k_{2n} / k_{2n+1}

    friend bool operator==(const ScaleSchedule&, const ScaleSchedule&) = default;
};

ScaleSchedule schedule(const Rational& gamma, int stages, ScheduleVariant variant,
                       int max_precision_bits = kDefaultPrecisionBits);

// e_k with ell_k = 4^{-e_k}, stored at the stage boundaries k_m.
class SideExponents {
public:
    SideExponents() = default;
    SideExponents(const ScaleSchedule& s, std::optional<Rational> delta);

    const Rational& gamma() const { return gamma_; }
    const std::optional<Rational>& delta() const { return delta_; }
    std::int64_t max_k() const { return ks_.back(); }
    const std::vector<std::int64_t>& boundaries() const { return ks_; }

    // e_{k+1} - e_k: gamma in a gamma phase, n in the n-th n phase.
    Rational increment(std::int64_t k) const;
    Rational at(std::int64_t k) const;
    // e'_k = (delta / gamma) e_k; requires delta.
    Rational primed_at(std::int64_t k) const;
    Rational exponent(std::int64_t k, bool primed) const { return primed ? primed_at(k) : at(k); }

private:
    std::size_t stage_of(std::int64_t k) const;

    Rational gamma_;
    std::optional<Rational> delta_;
    std::vector<std::int64_t> ks_;
    std::vector<Rational> boundary_e_;
};

SideExponents side_exponents(const ScaleSchedule& s, std::optional<Rational> delta = std::nullopt);

// Digits in {0,1,2,3}: 0 = lower-left, 1 = lower-right, 2 = upper-left, 3 = upper-right.
struct SquareAddress {
    std::string digits;

    friend bool operator==(const SquareAddress&, const SquareAddress&) = default;
};

// Lower-left corner of the addressed square.
Point2 square_origin(const SideExponents& e, const SquareAddress& address, bool primed);

// The 4^{depth+1} corners of all squares of generation `depth`, square by
// square in address order, each as LL, LR, UL, UR.
std::vector<Point2> corners(const SideExponents& e, int depth, bool primed,
                            std::size_t budget = kDefaultPointBudget);

std::vector<SquareAddress> sample_addresses(int depth, std::size_t count, std::uint64_t seed);

struct AnalyticCounts {
    BigInt n_exact;                         // N(K, ell_k) = 4^k
    Rational dini_exponent;                 // k - e_k, so 4^k ell_k = 4^{dini_exponent}
    std::optional<Rational> lower_box_ratio;  // k / e_k, absent at k = 0
};

AnalyticCounts analytic_counts(const SideExponents& e, std::int64_t k);

struct SidelengthBounds {
    bool even_lower = false;
    bool even_upper = false;
    bool odd_upper = false;
    bool odd_lower = false;

    bool all() const { return even_lower && even_upper && odd_upper && odd_lower; }
};

// Two-sided bounds on ell_{k_{2n}} and ell_{k_{2n+1}} as exponent comparisons.
SidelengthBounds sidelength_bounds(const ScaleSchedule& s, const SideExponents& e, int n);
bool sidelength_bounds_check(const ScaleSchedule& s, const SideExponents& e, int n);

// k_{2n} + t (n - gamma) k_{2n-1} - t n k_{2n}: log_4 of the bound on the
// t-dimensional premeasure at scale ell_{k_{2n}}.
Rational hausdorff_premeasure_bound(const ScaleSchedule& s, int n, const Rational& t);

// x = k_{2n+1} - e_{k_{2n+1}}, so that n * 4^{k_{2n+1}} ell_{k_{2n+1}} = n * 4^x.
Rational normalized_length_exponent(const ScaleSchedule& s, const SideExponents& e, int n);

// Whether 1 <= n * 4^x <= 4^{1-gamma} for x = normalized_length_exponent.
bool normalized_length_in_window(const ScaleSchedule& s, const SideExponents& e, int n,
                                 int max_bits = kDefaultPrecisionBits);

// |(n/2) k_n / k_{n+1} - (1 - gamma)|.
Rational ratio_deviation(const ScaleSchedule& s, int n);

// True when every exponent increment up to max_k exceeds 1/2, i.e. the four
// children of a square are pairwise disjoint.
bool children_disjoint(const SideExponents& e, bool primed);

// Lower-left corners of the corresponding squares in K' and K.
std::pair<Point2, Point2> F_map(const SquareAddress& address, const SideExponents& e);

struct BiHolderFit {
    Real lower_fit = 0;   // least L with L^{-1} |x - y|^p <= |F x - F y|
    Real upper_fit = 0;   // least C with |F x - F y| <= C |x - y|^p
    Rational exponent;    // p = gamma / delta
    std::size_t pairs = 0;
};

// pairs == 0 uses every corner pair; otherwise seeded pairs of corner indices.
BiHolderFit bihoelder_sample(const SideExponents& e, int depth, std::size_t pairs, std::uint64_t seed,
                             std::size_t budget = kDefaultPointBudget);

}  // namespace holdercover
