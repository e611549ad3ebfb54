#include "doctest.h"

#include "fatpix/error.hpp"
#include "fatpix/quad.hpp"

using namespace fatpix;

TEST_CASE("morton index basics") {
    CHECK(morton_index(QuadAddress{}, 0) == 0);
    CHECK(morton_index(QuadAddress::parse("3"), 1) == 3);
    CHECK(morton_index(QuadAddress::parse("12"), 2) == 6);  // 1*4 + 2
}

TEST_CASE("morton layout is a bijection at depth 2") {
    // Independent route: the defining digit sum.
    for (std::size_t i = 0; i < 16; ++i) {
        QuadAddress a = morton_address(i, 2);
        std::size_t expect = 0;
        for (std::size_t j = 0; j < 2; ++j) {
            expect += a.digit(j) * (j == 0 ? 4 : 1);
        }
        CHECK(expect == i);
        CHECK(morton_index(a, 2) == i);
    }
}

TEST_CASE("morton rejects wrong-length addresses") {
    CHECK_THROWS_AS(morton_index(QuadAddress::parse("12"), 3), FormatError);
    CHECK_THROWS_AS(morton_address(16, 2), FormatError);
}

TEST_CASE("address parsing") {
    CHECK(QuadAddress::parse("@").empty());
    CHECK(QuadAddress::parse("031").depth() == 3);
    CHECK(QuadAddress::parse("031").to_string() == "031");
    CHECK_THROWS_AS(QuadAddress::parse("04"), FormatError);
    CHECK_THROWS_AS(QuadAddress::parse(""), FormatError);
}

TEST_CASE("prefix relations") {
    auto root = QuadAddress{};
    auto a = QuadAddress::parse("03");
    CHECK(root.is_prefix_of(a));
    CHECK(root.is_proper_prefix_of(a));
    CHECK(a.is_prefix_of(a));
    CHECK(!a.is_proper_prefix_of(a));
    CHECK(!QuadAddress::parse("1").is_prefix_of(a));
}

TEST_CASE("cell rectangles follow the quadrant convention") {
    // 0 = lower-left, 1 = upper-left, 2 = lower-right, 3 = upper-right,
    // row 0 at the top.
    auto r0 = QuadAddress::parse("0").rect(4);
    CHECK(r0.row0 == 2);
    CHECK(r0.col0 == 0);
    CHECK(r0.side == 2);
    auto r1 = QuadAddress::parse("1").rect(4);
    CHECK(r1.row0 == 0);
    CHECK(r1.col0 == 0);
    auto r2 = QuadAddress::parse("2").rect(4);
    CHECK(r2.row0 == 2);
    CHECK(r2.col0 == 2);
    auto r3 = QuadAddress::parse("3").rect(4);
    CHECK(r3.row0 == 0);
    CHECK(r3.col0 == 2);
    // Upper-right pixel of the lower-left quadrant.
    auto r03 = QuadAddress::parse("03").rect(4);
    CHECK(r03.row0 == 2);
    CHECK(r03.col0 == 1);
    CHECK(r03.side == 1);
}

TEST_CASE("child extends depth by one") {
    auto a = QuadAddress::parse("2");
    CHECK(a.child(1).depth() == a.depth() + 1);
    CHECK(a.child(1).to_string() == "21");
}
