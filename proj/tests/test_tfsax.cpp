#include "tfsax/tfsax.hpp"

#include "tfsax/errors.hpp"
#include "tfsax/random.hpp"
#include "tfsax/words.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace tfsax;

namespace {

// Shared fixture: a tent (up then down) and its vertical mirror (down then
// up). Same segment means, opposite trends.
const TimeSeries kTent{{-1.2, -0.4, 0.4, 1.2, 1.2, 0.4, -0.4, -1.2}, {}, {}};
const TimeSeries kVee{{1.2, 0.4, -0.4, -1.2, -1.2, -0.4, 0.4, 1.2}, {}, {}};

} // namespace

TEST_SUITE_BEGIN("tfsax");

TEST_CASE("encode splits mean and trend channels") {
    const TfsaxWord s = tfsax_encode(kTent, 2, 3, 5);
    CHECK(render(s.sax) == "bb");
    CHECK(render(s.trend) == "EA");
    CHECK(render(s) == "bE bA");

    const TfsaxWord r = tfsax_encode(kVee, 2, 3, 5);
    CHECK(render(r.sax) == "bb");
    CHECK(render(r.trend) == "AE");

    TimeSeries zeros;
    zeros.values.assign(8, 0.0);
    const TfsaxWord z = tfsax_encode(zeros, 4, 3, 5);
    CHECK(render(z.sax) == "bbbb");
    CHECK(render(z.trend) == "CCCC");
}

TEST_CASE("tdist separates what mindist cannot") {
    const BreakpointTable bt = gaussian_breakpoints(3);
    const AngleBreakpointTable at = angle_breakpoints(5);
    const TfsaxWord s = tfsax_encode(kTent, 2, bt, at);
    const TfsaxWord r = tfsax_encode(kVee, 2, bt, at);

    CHECK(tdist(s, s, bt, at) == 0.0);
    CHECK(mindist(s.sax, r.sax, bt) == 0.0);
    CHECK(tdist(s, r, bt, at) == doctest::Approx(std::sqrt(6.0)).epsilon(1e-9));
    CHECK(tdist(s, r, bt, at) == tdist(r, s, bt, at));
    CHECK(euclidean(kTent, kVee) == doctest::Approx(std::sqrt(25.6)).epsilon(1e-12));
}

TEST_CASE("tdist equals mindist when the trend channels agree") {
    const BreakpointTable bt = gaussian_breakpoints(4);
    const AngleBreakpointTable at = angle_breakpoints(5);
    TfsaxWord a;
    a.n = 8;
    a.sax = SaxWord{{1, 3}, 4, 2, 8};
    a.trend = TrendWord{{5, 1}, 5, 2};
    TfsaxWord b = a;
    b.sax.symbols = {3, 1};
    CHECK(tdist(a, b, bt, at) == mindist(a.sax, b.sax, bt));
}

TEST_CASE("tdist >= mindist, exactly, on random word pairs") {
    Rng rng(41);
    const BreakpointTable bt = gaussian_breakpoints(7);
    const AngleBreakpointTable at = angle_breakpoints(5);
    for (int trial = 0; trial < 5000; ++trial) {
        const std::size_t w = 1 + static_cast<std::size_t>(rng.next_range(0, 15));
        TfsaxWord a;
        TfsaxWord b;
        a.n = b.n = w * 4;
        a.sax = b.sax = SaxWord{{}, 7, w, w * 4};
        a.trend = b.trend = TrendWord{{}, 5, w};
        for (std::size_t i = 0; i < w; ++i) {
            a.sax.symbols.push_back(1 + static_cast<int>(rng.next_range(0, 6)));
            b.sax.symbols.push_back(1 + static_cast<int>(rng.next_range(0, 6)));
            a.trend.symbols.push_back(1 + static_cast<int>(rng.next_range(0, 4)));
            b.trend.symbols.push_back(1 + static_cast<int>(rng.next_range(0, 4)));
        }
        const double td = tdist(a, b, bt, at);
        const double md = mindist(a.sax, b.sax, bt);
        REQUIRE(td >= md);
        REQUIRE(td >= 0.0);
        REQUIRE(td == tdist(b, a, bt, at));
    }
}

TEST_CASE("tdist rejects mismatched parameters") {
    const BreakpointTable bt = gaussian_breakpoints(3);
    const AngleBreakpointTable at = angle_breakpoints(5);
    const TfsaxWord s = tfsax_encode(kTent, 2, bt, at);
    TfsaxWord other = s;
    other.n = 16;
    CHECK_THROWS_AS(tdist(s, other, bt, at), ParamMismatch);
    CHECK_THROWS_AS(tdist(s, tfsax_encode(kVee, 4, bt, at), bt, at), ParamMismatch);
    CHECK_THROWS_AS(tdist(s, s, gaussian_breakpoints(4), at), ParamMismatch);
}

TEST_CASE("tlb hand values") {
    const EncodeParams params{2, 3, 5};
    CHECK(tlb(kTent, kVee, Method::kTfsax, params) ==
          doctest::Approx(std::sqrt(6.0 / 25.6)).epsilon(1e-9));
    CHECK(tlb(kTent, kVee, Method::kTfsax, params) == doctest::Approx(0.48412).epsilon(1e-4));
    CHECK(tlb(kTent, kVee, Method::kSax, params) == 0.0);
    CHECK_THROWS_AS(tlb(kTent, kTent, Method::kTfsax, params), ZeroEuclidean);
    CHECK_THROWS_AS(tlb(kTent, kVee, Method::kEuclid, params), Error);
}

TEST_CASE("tlb of mindist stays in [0, 1] on random pairs") {
    Rng rng(42);
    for (int trial = 0; trial < 300; ++trial) {
        const TimeSeries a = testutil::random_walk(rng, 64);
        const TimeSeries b = testutil::random_walk(rng, 64);
        const double value = tlb(a, b, Method::kSax, EncodeParams{8, 5, 5});
        REQUIRE(value >= 0.0);
        REQUIRE(value <= 1.0);
    }
}

TEST_SUITE_END();
