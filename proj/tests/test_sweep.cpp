#include "tfsax/sweep.hpp"

#include "tfsax/errors.hpp"

#include <doctest.h>

using namespace tfsax;

TEST_SUITE_BEGIN("sweep");

TEST_CASE("sweep forms") {
    CHECK(parse_sweep("8") == std::vector<std::size_t>{8});
    CHECK(parse_sweep("3:10") == std::vector<std::size_t>{3, 4, 5, 6, 7, 8, 9, 10});
    CHECK(parse_sweep("2:64:x2") == std::vector<std::size_t>{2, 4, 8, 16, 32, 64});
    CHECK(parse_sweep("2:100:x3") == std::vector<std::size_t>{2, 6, 18, 54});
    CHECK(parse_sweep("5:5") == std::vector<std::size_t>{5});
}

TEST_CASE("sweep rejects malformed input") {
    CHECK_THROWS_AS(parse_sweep(""), ParseError);
    CHECK_THROWS_AS(parse_sweep("a:b"), ParseError);
    CHECK_THROWS_AS(parse_sweep("10:2"), ParseError);
    CHECK_THROWS_AS(parse_sweep("0:4"), ParseError);
    CHECK_THROWS_AS(parse_sweep("2:8:y2"), ParseError);
    CHECK_THROWS_AS(parse_sweep("2:8:x1"), ParseError);
    CHECK_THROWS_AS(parse_sweep("1:2:3:4"), ParseError);
}

TEST_SUITE_END();
