#include <doctest.h>

#include <cmath>
#include <set>

#include "holdercover/cantor.hpp"
#include "holdercover/covering.hpp"
#include "holdercover/errors.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace holdercover;

namespace {

const Rational kGamma(3, 4);

ScaleSchedule corrected(int stages = 3) { return schedule(kGamma, stages, ScheduleVariant::corrected); }

// e_k accumulated one step at a time from the phase of each index.
std::vector<Rational> dense_exponents(const ScaleSchedule& s) {
    std::vector<Rational> e{Rational(0)};
    std::size_t m = 0;
    for (std::int64_t k = 0; k < s.ks.back(); ++k) {
        while (k >= s.ks[m + 1]) ++m;
        e.push_back(e.back() + (m % 2 == 0 ? s.gamma : Rational(static_cast<long>((m + 1) / 2))));
    }
    return e;
}

}  // namespace

TEST_CASE("corrected schedule") {
    const auto s = corrected();
    const std::vector<std::int64_t> expected{0, 1, 4, 5, 40, 176, 2112, 17599};
    CHECK(s.ks == expected);
    CHECK(s.ks == oracle::schedule(3, 4, 3, true).ks);
    CHECK(s.raw == oracle::schedule(3, 4, 3, true).raw);
    CHECK(s.raw[3] == 3);
    for (std::size_t m = 0; m < s.clamped.size(); ++m) CHECK(s.clamped[m] == (m == 3));
}

TEST_CASE("printed schedule") {
    const auto s = schedule(kGamma, 3, ScheduleVariant::printed);
    CHECK(s.raw[3] == 3);
    CHECK(s.ks[3] == 5);
    CHECK(s.ks[5] == 180);
    CHECK(s.ks == oracle::schedule(3, 4, 3, false).ks);
}

TEST_CASE("schedules agree with the high-precision oracle across gammas") {
    for (auto [p, q] : {std::pair{3, 4}, {2, 3}, {5, 8}, {7, 10}, {9, 10}, {11, 20}}) {
        for (bool corr : {true, false}) {
            const auto s = schedule(Rational(p, q), 3, corr ? ScheduleVariant::corrected : ScheduleVariant::printed);
            const auto o = oracle::schedule(p, q, 3, corr);
            CHECK(s.ks == o.ks);
            CHECK(s.raw == o.raw);
            CHECK(s.ks[2] == ceil(Rational(1) / (1 - Rational(p, q))));
            CHECK(std::is_sorted(s.ks.begin(), s.ks.end()));
        }
    }
    CHECK(schedule(kGamma, 4, ScheduleVariant::corrected).ks == oracle::schedule(3, 4, 4, true).ks);
}

TEST_CASE("schedule validation") {
    CHECK_THROWS_AS(schedule(Rational(1, 2), 3, ScheduleVariant::corrected), ValidationError);
    CHECK_THROWS_AS(schedule(Rational(1), 3, ScheduleVariant::corrected), ValidationError);
    CHECK_THROWS_AS(schedule(kGamma, 0, ScheduleVariant::corrected), ValidationError);
    CHECK_THROWS_AS(schedule(kGamma, 3, ScheduleVariant::corrected, 32), PrecisionError);
    CHECK(parse_variant("printed") == ScheduleVariant::printed);
    CHECK_THROWS_AS(parse_variant("other"), ValidationError);
}

TEST_CASE("side exponents") {
    const auto s = corrected();
    const auto e = side_exponents(s, Rational(5, 8));
    CHECK(e.at(1) == kGamma);
    CHECK(e.at(4) == Rational(15, 4));
    CHECK(e.at(5) == Rational(9, 2));
    CHECK(e.at(40) == Rational(149, 2));
    CHECK(e.at(176) == Rational(353, 2));
    CHECK(e.primed_at(4) == Rational(25, 8));

    const auto dense = dense_exponents(s);
    for (std::int64_t k = 0; k < e.max_k(); ++k) {
        CHECK(e.at(k) == dense[k]);
        const Rational inc = e.increment(k);
        CHECK(e.at(k + 1) - e.at(k) == inc);
        CHECK((inc == kGamma || (inc == floor(inc) && inc >= 1 && inc <= s.stages)));
        CHECK(e.primed_at(k) == Rational(5, 8) / kGamma * e.at(k));
    }
    CHECK_THROWS_AS(side_exponents(s, Rational(7, 8)), ValidationError);
    CHECK_THROWS_AS(side_exponents(s, Rational(1, 2)), ValidationError);
    CHECK_THROWS_AS(side_exponents(s).primed_at(3), ValidationError);
}

TEST_CASE("corner generation") {
    const auto e = side_exponents(corrected(), Rational(5, 8));
    const auto c0 = corners(e, 0, false);
    CHECK(c0 == std::vector<Point2>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    const auto c1 = corners(e, 1, false);
    REQUIRE(c1.size() == 16);
    const Real l1 = std::pow(4.0L, -0.75L);
    CHECK(c1[0] == Point2{0, 0});
    CHECK(testing_helpers::rel_close(c1[3].x, l1, 1e-18L));
    CHECK(testing_helpers::rel_close(c1[3].y, l1, 1e-18L));
    CHECK_THROWS_WITH_AS(corners(e, 9, false, 1000), "depth too deep; use sample_addresses", BudgetError);

    for (int depth = 0; depth <= 3; ++depth) {
        for (bool primed : {false, true}) {
            const auto pts = corners(e, depth, primed);
            const Real ell = pow4_neg(e.exponent(depth, primed));
            for (std::size_t sq = 0; sq < pts.size(); sq += 4)
                for (std::size_t i = sq; i < sq + 4; ++i)
                    for (std::size_t j = i + 1; j < sq + 4; ++j) CHECK(dist(pts[i], pts[j]) >= ell * (1 - 1e-12L));
            // children of one parent are disjoint closed squares
            if (depth >= 1) {
                const Real parent = pow4_neg(e.exponent(depth - 1, primed));
                for (std::size_t block = 0; block < pts.size(); block += 16)
                    for (std::size_t a = 0; a < 4; ++a)
                        for (std::size_t b = a + 1; b < 4; ++b) {
                            const Point2 pa = pts[block + 4 * a], pb = pts[block + 4 * b];
                            CHECK(dist(pa, pb) > ell);
                            CHECK(dist(pa, pb) <= parent);
                        }
            }
        }
    }
    CHECK(children_disjoint(e, false));
    CHECK(children_disjoint(e, true));
}

TEST_CASE("sampled addresses") {
    const auto a = sample_addresses(2, 1, 0);
    REQUIRE(a.size() == 1);
    CHECK(a[0].digits.size() == 2);
    CHECK(sample_addresses(2, 1, 0) == a);
    const auto all = sample_addresses(3, 1000, 5);
    CHECK(all.size() == 64);
    std::set<std::string> distinct;
    for (const auto& x : all) distinct.insert(x.digits);
    CHECK(distinct.size() == 64);
    const auto s1 = sample_addresses(8, 20, 1), s2 = sample_addresses(8, 20, 2);
    WARN_MESSAGE(s1 != s2, "different seeds produced identical samples");
}

TEST_CASE("analytic counts") {
    const auto e = side_exponents(corrected());
    CHECK(analytic_counts(e, 2).n_exact == 16);
    CHECK(analytic_counts(e, 0).n_exact == 1);
    CHECK_FALSE(analytic_counts(e, 0).lower_box_ratio.has_value());
    CHECK(analytic_counts(e, 176).dini_exponent == Rational(-1, 2));
    CHECK(analytic_counts(e, 5).dini_exponent == Rational(1, 2));
    CHECK(analytic_counts(e, 17599).dini_exponent == Rational(-3, 4));
    CHECK(*analytic_counts(e, 4).lower_box_ratio == Rational(16, 15));
    CHECK(*analytic_counts(e, 40).lower_box_ratio == Rational(80, 149));
    CHECK(*analytic_counts(e, 2112).lower_box_ratio == Rational(4224, 11969));
}

TEST_CASE("side length bounds, premeasures and normalized lengths") {
    const auto s4 = schedule(kGamma, 4, ScheduleVariant::corrected);
    const auto e4 = side_exponents(s4);
    for (int n = 1; n <= 3; ++n) CHECK(sidelength_bounds_check(s4, e4, n));

    CHECK(hausdorff_premeasure_bound(s4, 1, Rational(1)) == Rational(1, 4));
    CHECK(hausdorff_premeasure_bound(s4, 2, Rational(1)) == Rational(-135, 4));
    CHECK(hausdorff_premeasure_bound(s4, 3, Rational(1)) == Rational(-3828));
    for (int n = 1; n < 4; ++n)
        CHECK(hausdorff_premeasure_bound(s4, n + 1, Rational(1)) < hausdorff_premeasure_bound(s4, n, Rational(1)));

    CHECK(normalized_length_exponent(s4, e4, 2) == Rational(-1, 2));
    CHECK_FALSE(normalized_length_in_window(s4, e4, 1));
    for (int n = 2; n <= 4; ++n) CHECK(normalized_length_in_window(s4, e4, n));

    for (int n = 4; n + 2 <= 8; n += 2) CHECK(ratio_deviation(s4, n + 2) < ratio_deviation(s4, n));

    const auto sp = schedule(kGamma, 3, ScheduleVariant::printed);
    const auto ep = side_exponents(sp);
    CHECK_FALSE(normalized_length_in_window(sp, ep, 3));
}

TEST_CASE("the correspondence F") {
    const auto e = side_exponents(corrected(), Rational(5, 8));
    const auto [kp0, k0] = F_map({""}, e);
    CHECK(kp0 == Point2{0, 0});
    CHECK(k0 == Point2{0, 0});
    const auto [kp3, k3] = F_map({"3"}, e);
    CHECK(testing_helpers::rel_close(kp3.x, 1 - std::pow(4.0L, -0.625L), 1e-18L));
    CHECK(testing_helpers::rel_close(k3.y, 1 - std::pow(4.0L, -0.75L), 1e-18L));

    const auto same = side_exponents(corrected(), kGamma);
    for (const char* addr : {"0", "12", "3301", "2"}) {
        const auto [a, b] = F_map({addr}, same);
        CHECK(a == b);
    }
}

TEST_CASE("bi-Hölder fits of F") {
    const auto same = side_exponents(corrected(), kGamma);
    const auto id = bihoelder_sample(same, 3, 0, 0);
    CHECK(id.lower_fit == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(id.upper_fit == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(id.exponent == 1);

    const auto e = side_exponents(corrected(), Rational(5, 8));
    const auto f3 = bihoelder_sample(e, 3, 0, 0);
    const auto f4 = bihoelder_sample(e, 4, 0, 0);
    CHECK(f3.exponent == Rational(6, 5));
    CHECK(std::isfinite(f3.upper_fit));
    CHECK(std::isfinite(f3.lower_fit));
    CHECK(f4.upper_fit <= 4 * f3.upper_fit);
    CHECK(f3.upper_fit <= 4 * f4.upper_fit);

    for (int m = 0; m <= 4; ++m) {
        CHECK(e.at(m) == f3.exponent * e.primed_at(m));
        const auto kp = corners(e, m, true), k = corners(e, m, false);
        const Real lp = dist(kp[0], kp[1]), l = dist(k[0], k[1]);
        CHECK(testing_helpers::rel_close(l, std::pow(lp, 1.2L), 1e-15L));
    }
}

TEST_CASE("pushforward along F") {
    const auto e = side_exponents(corrected(), Rational(5, 8));
    const auto domain = corners(e, 4, false);
    const auto image = corners(e, 4, true);
    std::vector<std::size_t> id(domain.size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    const auto r = pushforward_check(domain, image, id, to_long_double(Rational(5, 6)));
    CHECK(r.holds);
    CHECK(std::isfinite(r.l_fit));
}
