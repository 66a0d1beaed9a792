#include "tfsax/trend.hpp"

#include "tfsax/errors.hpp"
#include "tfsax/random.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace tfsax;

namespace {

constexpr double kPi = 3.14159265358979323846;

double tan_deg(double deg) {
    return std::tan(deg * kPi / 180.0);
}

} // namespace

TEST_SUITE_BEGIN("trend");

TEST_CASE("trend_points finds turning points") {
    CHECK(trend_points(std::vector<double>{1, 2, 1}) == std::vector<std::size_t>{2});
    CHECK(trend_points(std::vector<double>{1, 2, 3, 4}).empty());
    CHECK(trend_points(std::vector<double>{1, 2, 2, 3}) == std::vector<std::size_t>{2, 3});
    CHECK(trend_points(std::vector<double>{1, 2}).empty());
    CHECK(trend_points(std::vector<double>{5, 5, 5, 5}).empty());
}

TEST_CASE("trend_points are interior, sorted, and reversal-invariant in count") {
    Rng rng(31);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t len = 2 + static_cast<std::size_t>(rng.next_range(0, 30));
        std::vector<double> seg = testutil::random_segment(rng, len);
        if (rng.next_range(0, 3) == 0) {
            // plateaus exercise the zero-product branch
            for (std::size_t i = 1; i < seg.size(); i += 2) {
                seg[i] = seg[i - 1];
            }
        }
        const auto points = trend_points(seg);
        for (std::size_t i = 0; i < points.size(); ++i) {
            REQUIRE(points[i] >= 2);
            REQUIRE(points[i] <= seg.size() - 1);
            if (i > 0) {
                REQUIRE(points[i] > points[i - 1]);
            }
        }
        std::vector<double> rev(seg.rbegin(), seg.rend());
        REQUIRE(trend_points(rev).size() == points.size());
    }
}

TEST_CASE("trend_shape_factor") {
    CHECK(trend_shape_factor(std::vector<double>{1, 2, 3, 4}) == 1);
    CHECK(trend_shape_factor(std::vector<double>{1, 3, 2, 4}) == 2);
    CHECK(trend_shape_factor(std::vector<double>{5, 5, 5, 5}) == 1);
}

TEST_CASE("trend_distance_factor") {
    CHECK(trend_distance_factor(std::vector<double>{0, 1, 2, 3}) == 3.0);
    CHECK(trend_distance_factor(std::vector<double>{2, 2, 2}) == 0.0);
    CHECK(trend_distance_factor(std::vector<double>{3, 2, 1, 0}) == -3.0);
}

TEST_CASE("trend_angle examples") {
    const TrendFeature up = trend_angle(std::vector<double>{0, 1, 2, 3});
    CHECK(up.td == 3.0);
    CHECK(up.k == 1);
    CHECK(up.theta_deg == doctest::Approx(71.56505117707799).epsilon(1e-10));

    const TrendFeature vee = trend_angle(std::vector<double>{1, 0, 1});
    CHECK(vee.td == 0.0);
    CHECK(vee.k == 1);
    CHECK(vee.theta_deg == 0.0);

    CHECK(trend_angle(std::vector<double>{2, 2, 2}).theta_deg == 0.0);
}

TEST_CASE("trend_angle properties: antisymmetry, range, tangent identity") {
    Rng rng(32);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t len = 2 + static_cast<std::size_t>(rng.next_range(0, 20));
        const std::vector<double> seg = testutil::random_segment(rng, len);
        const TrendFeature f = trend_angle(seg);
        CHECK(f.k >= 1);
        CHECK(f.theta_deg > -90.0);
        CHECK(f.theta_deg < 90.0);
        CHECK(std::abs(tan_deg(f.theta_deg) * f.k - f.td) < 1e-9);

        std::vector<double> rev(seg.rbegin(), seg.rend());
        const TrendFeature r = trend_angle(rev);
        CHECK(r.td == -f.td);
        CHECK(r.k == f.k);
        CHECK(r.theta_deg == doctest::Approx(-f.theta_deg).epsilon(1e-12));
    }
}

TEST_CASE("angle_breakpoints columns") {
    CHECK(angle_breakpoints(2).thetas_deg == std::vector<double>{0.0});
    CHECK(angle_breakpoints(3).thetas_deg == std::vector<double>{-5.0, 5.0});
    CHECK(angle_breakpoints(4).thetas_deg == std::vector<double>{-30.0, 0.0, 30.0});
    CHECK(angle_breakpoints(5).thetas_deg == std::vector<double>{-30.0, -5.0, 5.0, 30.0});
    CHECK(angle_breakpoints(6).thetas_deg ==
          std::vector<double>{-30.0, -5.0, 0.0, 5.0, 30.0});
    CHECK_THROWS_AS(angle_breakpoints(1), UnsupportedTrendAlpha);
    CHECK_THROWS_AS(angle_breakpoints(7), UnsupportedTrendAlpha);
}

TEST_CASE("trend_symbolize lookups") {
    const AngleBreakpointTable at5 = angle_breakpoints(5);
    const auto symbol_of = [&](double theta) {
        TrendFeature f;
        f.theta_deg = theta;
        return trend_symbolize({f}, at5).symbols.front();
    };
    CHECK(symbol_of(71.565) == 5);  // 'E'
    CHECK(symbol_of(-40.0) == 1);   // 'A'
    CHECK(symbol_of(0.0) == 3);     // 'C'
    CHECK(symbol_of(30.0) == 5);    // boundary goes up
    CHECK(symbol_of(-30.0) == 2);
}

TEST_CASE("tfdist cells for the published alpha_t=5 table") {
    const AngleBreakpointTable at5 = angle_breakpoints(5);
    CHECK(tfdist(1, 2, at5) == 0.0);
    CHECK(tfdist(1, 3, at5) == doctest::Approx(tan_deg(25.0)).epsilon(1e-12));
    CHECK(tfdist(1, 4, at5) == doctest::Approx(tan_deg(35.0)).epsilon(1e-12));
    CHECK(tfdist(1, 5, at5) == doctest::Approx(tan_deg(60.0)).epsilon(1e-12));
    CHECK(tfdist(1, 5, at5) == doctest::Approx(1.73205).epsilon(1e-5));
    CHECK(tfdist(2, 5, at5) == doctest::Approx(tan_deg(35.0)).epsilon(1e-12));
    CHECK(tfdist(3, 5, at5) == doctest::Approx(tan_deg(25.0)).epsilon(1e-12));
    // The (B,D) cell follows the formula (tan 10), not the table's printed
    // tan 5; the two disagree and the formula wins.
    CHECK(tfdist(2, 4, at5) == doctest::Approx(tan_deg(10.0)).epsilon(1e-12));
    CHECK(tfdist(2, 4, at5) == doctest::Approx(0.17633).epsilon(1e-4));
    CHECK(tfdist(2, 4, at5) != doctest::Approx(tan_deg(5.0)).epsilon(1e-3));
    CHECK_THROWS_AS(tfdist(0, 1, at5), SymbolOutOfRange);
    CHECK_THROWS_AS(tfdist(1, 6, at5), SymbolOutOfRange);
}

TEST_CASE("tfdist matrices: symmetric, zero band, nonnegative") {
    for (int alpha_t = 2; alpha_t <= 6; ++alpha_t) {
        const AngleBreakpointTable at = angle_breakpoints(alpha_t);
        for (int i = 1; i <= alpha_t; ++i) {
            for (int j = 1; j <= alpha_t; ++j) {
                const double d = tfdist(i, j, at);
                CHECK(d >= 0.0);
                CHECK(d == tfdist(j, i, at));
                if (std::abs(i - j) <= 1) {
                    CHECK(d == 0.0);
                }
            }
        }
    }
}

TEST_CASE("steep monotone segments take the extreme trend symbols") {
    Rng rng(33);
    const AngleBreakpointTable at5 = angle_breakpoints(5);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t len = 2 + static_cast<std::size_t>(rng.next_range(0, 10));
        std::vector<double> seg(len);
        const double slope = 0.2 + rng.next_double();
        for (std::size_t i = 0; i < len; ++i) {
            seg[i] = slope * static_cast<double>(i);
        }
        const TrendFeature f = trend_angle(seg);
        if (std::abs(f.td) / f.k > tan_deg(30.0)) {
            CHECK(trend_symbolize({f}, at5).symbols.front() == 5);
            std::vector<double> rev(seg.rbegin(), seg.rend());
            CHECK(trend_symbolize({trend_angle(rev)}, at5).symbols.front() == 1);
        }
    }
}

TEST_CASE("length-2 segments degrade gracefully") {
    const std::vector<double> tiny{0.5, 1.5};
    CHECK(trend_points(tiny).empty());
    CHECK(trend_shape_factor(tiny) == 1);
    CHECK(trend_distance_factor(tiny) == 1.0);
    CHECK(trend_angle(tiny).theta_deg == doctest::Approx(45.0).epsilon(1e-12));
}

TEST_SUITE_END();
