#include "tfsax/series.hpp"

#include "tfsax/errors.hpp"
#include "tfsax/random.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace tfsax;

TEST_SUITE_BEGIN("series");

TEST_CASE("znormalize of [1,2,3] hits the hand-computed values") {
    const TimeSeries out = znormalize(TimeSeries{{1.0, 2.0, 3.0}, {}, {}});
    const double expected = std::sqrt(1.5); // 1 / population sigma of [1,2,3]
    CHECK(out.values[0] == doctest::Approx(-expected).epsilon(1e-12));
    CHECK(std::abs(out.values[1]) < 1e-12);
    CHECK(out.values[2] == doctest::Approx(expected).epsilon(1e-12));
    CHECK(out.values[0] == doctest::Approx(-1.22474).epsilon(1e-5));
}

TEST_CASE("znormalize output has mean 0 and sigma 1") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng.next_range(0, 100));
        TimeSeries s;
        for (std::size_t i = 0; i < n; ++i) {
            s.values.push_back(5.0 * rng.next_normal() + 3.0);
        }
        const TimeSeries z = znormalize(s);
        double mean = 0.0;
        for (double v : z.values) {
            mean += v;
        }
        mean /= static_cast<double>(n);
        double sq = 0.0;
        for (double v : z.values) {
            sq += (v - mean) * (v - mean);
        }
        const double sigma = std::sqrt(sq / static_cast<double>(n));
        CHECK(std::abs(mean) < 1e-9);
        CHECK(std::abs(sigma - 1.0) < 1e-9);
    }
}

TEST_CASE("znormalize is idempotent on non-constant input") {
    Rng rng(12);
    const TimeSeries z = testutil::random_walk(rng, 50);
    const TimeSeries zz = znormalize(z);
    for (std::size_t i = 0; i < z.values.size(); ++i) {
        CHECK(zz.values[i] == doctest::Approx(z.values[i]).epsilon(1e-9));
    }
}

TEST_CASE("constant series: error by default, zeros on request") {
    const TimeSeries constant{{5.0, 5.0, 5.0}, {}, {}};
    CHECK_THROWS_AS(znormalize(constant), ConstantSeries);
    const TimeSeries zeros = znormalize(constant, true);
    for (double v : zeros.values) {
        CHECK(v == 0.0);
    }
}

TEST_CASE("validate rejects short and non-finite series") {
    CHECK_THROWS_AS(validate(TimeSeries{{1.0}, {}, {}}), Error);
    CHECK_THROWS_AS(validate(TimeSeries{{1.0, std::nan("")}, {}, {}}), Error);
    CHECK_THROWS_AS(validate(TimeSeries{{1.0, std::numeric_limits<double>::infinity()}, {}, {}}),
                    Error);
}

TEST_CASE("segment splits exactly") {
    const Segmentation s1 = segment(8, 2);
    REQUIRE(s1.bounds.size() == 2);
    CHECK(s1.bounds[0] == std::pair<std::size_t, std::size_t>{0, 4});
    CHECK(s1.bounds[1] == std::pair<std::size_t, std::size_t>{4, 8});

    const Segmentation s2 = segment(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(s2.bounds[i] == std::pair<std::size_t, std::size_t>{i, i + 1});
    }
}

TEST_CASE("segment(470, 128) covers [0, 470) with lengths 3 or 4") {
    const Segmentation seg = segment(470, 128);
    REQUIRE(seg.bounds.size() == 128);
    std::size_t covered = 0;
    for (const auto& [lo, hi] : seg.bounds) {
        const std::size_t len = hi - lo;
        CHECK((len == 3 || len == 4));
        covered += len;
    }
    CHECK(covered == 470);
}

TEST_CASE("segment partition property, exhaustive for n <= 64") {
    for (std::size_t n = 2; n <= 64; ++n) {
        for (std::size_t w = 1; w <= n; ++w) {
            const Segmentation seg = segment(n, w);
            REQUIRE(seg.bounds.size() == w);
            std::size_t cursor = 0;
            std::size_t min_len = n;
            std::size_t max_len = 0;
            for (const auto& [lo, hi] : seg.bounds) {
                REQUIRE(lo == cursor);
                REQUIRE(hi > lo);
                cursor = hi;
                min_len = std::min(min_len, hi - lo);
                max_len = std::max(max_len, hi - lo);
            }
            REQUIRE(cursor == n);
            REQUIRE(max_len - min_len <= 1);
        }
    }
}

TEST_CASE("segment rejects bad w") {
    CHECK_THROWS_AS(segment(8, 0), InvalidW);
    CHECK_THROWS_AS(segment(8, 9), InvalidW);
}

TEST_CASE("paa means") {
    const TimeSeries s{{1, 2, 3, 4, 5, 6}, {}, {}};
    const PaaVector p = paa(s, 2);
    CHECK(p.means[0] == doctest::Approx(2.0));
    CHECK(p.means[1] == doctest::Approx(5.0));

    const TimeSeries constant{{7, 7, 7, 7}, {}, {}};
    for (double m : paa(constant, 3).means) {
        CHECK(m == doctest::Approx(7.0));
    }

    const PaaVector identity = paa(s, s.values.size());
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        CHECK(identity.means[i] == doctest::Approx(s.values[i]));
    }
}

TEST_CASE("euclidean basics") {
    const TimeSeries a{{0, 0}, {}, {}};
    const TimeSeries b{{3, 4}, {}, {}};
    CHECK(euclidean(a, b) == doctest::Approx(5.0));
    CHECK(euclidean(a, a) == 0.0);
    CHECK(euclidean(a, b) == euclidean(b, a));
    CHECK_THROWS_AS(euclidean(a, TimeSeries{{1, 2, 3}, {}, {}}), LengthMismatch);
}

TEST_CASE("paa contraction: weighted segment-mean gap never exceeds the pointwise gap") {
    Rng rng(13);
    for (int trial = 0; trial < 10000; ++trial) {
        const std::size_t n = 8 + static_cast<std::size_t>(rng.next_range(0, 56));
        const std::size_t w = 1 + static_cast<std::size_t>(rng.next_range(0, n - 1));
        std::vector<double> a = testutil::random_segment(rng, n);
        std::vector<double> b = testutil::random_segment(rng, n);
        const TimeSeries sa{a, {}, {}};
        const TimeSeries sb{b, {}, {}};
        const PaaVector pa = paa(sa, w);
        const PaaVector pb = paa(sb, w);
        double paa_gap = 0.0;
        for (std::size_t i = 0; i < w; ++i) {
            const auto [lo, hi] = pa.segmentation.bounds[i];
            const double d = pa.means[i] - pb.means[i];
            paa_gap += static_cast<double>(hi - lo) * d * d;
        }
        double true_gap = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double d = a[i] - b[i];
            true_gap += d * d;
        }
        REQUIRE(paa_gap <= true_gap + 1e-9);
    }
}

TEST_SUITE_END();
