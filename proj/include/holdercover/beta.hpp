#pragma once

#include <span>
#include <vector>

#include "holdercover/cantor.hpp"
#include "holdercover/geometry.hpp"

namespace holdercover {

struct BetaRecord {
    DyadicSquare square;
    Real omega = 0;         // strip width of the points in the closed square 3Q
    Real beta = 0;          // omega / (3 side(Q))
    Real contribution = 0;  // beta^2 side(Q)
};

struct BetaReport {
    int level_min = 0;
    int level_max = 0;
    std::vector<BetaRecord> records;
    std::vector<Real> per_level_sums;
    Real cumulative = 0;
};

// Jones number of the point set on 3Q.
BetaRecord beta_of(std::span<const Point2> points, const DyadicSquare& q);

// omega(points in Q) / side(Q), the flatness of Q itself.
Real beta_own(std::span<const Point2> points, const DyadicSquare& q);

// Sum of beta(3Q)^2 side(Q) over the squares Q of each level whose closure meets the set.
BetaReport beta_squared_sum(std::span<const Point2> points, int level_min, int level_max);

// i_n with 2^{-i_n} <= ell_{k_{2n+1}-1} < 2^{-i_n+1}, i.e. ceil(2 e_{k_{2n+1}-1}).
int dyadic_scale_for(const ScaleSchedule& s, const SideExponents& e, int n);

// (1/144) 4^{k_{2n+1}-1} ell_{k_{2n+1}} = coefficient * 4^{exponent}.
struct CantorBetaBound {
    Rational coefficient;  // 1/576
    Rational exponent;     // k_{2n+1} - e_{k_{2n+1}}
    long double value = 0;
    long double normalized = 0;  // n * 576 * bound = n 4^{exponent}
};

CantorBetaBound cantor_beta_bound(const ScaleSchedule& s, const SideExponents& e, int n);

struct BnvLevel {
    int level = 0;
    std::size_t count = 0;   // squares with beta_own >= beta0
    Real term = 0;           // count * 2^{-level d}
    Real partial_sum = 0;
};

std::vector<BnvLevel> bnv_sum(std::span<const Point2> points, Real d, int max_level, Real beta0);

}  // namespace holdercover
