#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "xyfse/errors.hpp"
#include "xyfse/intervals.hpp"

using namespace xyfse;

TEST_CASE("pattern validation") {
    CHECK_NOTHROW(Pattern({5}));
    CHECK_NOTHROW(Pattern({1, 3, 2}));
    CHECK_NOTHROW(Pattern({1, 2, 1, 2, 4}));
    CHECK_THROWS_AS(Pattern(std::vector<long long>{}), Error);
    CHECK_THROWS_AS(Pattern({1, 3}), Error);        // even size
    CHECK_THROWS_AS(Pattern({1, 0, 2}), Error);     // zero separator
    CHECK_THROWS_AS(Pattern({-1}), Error);          // negative length
    CHECK_THROWS_AS(Pattern({1, 3, 0}), Error);     // zero interval
}

TEST_CASE("pattern accessors") {
    Pattern a({1, 3, 2});
    CHECK(a.n_blocks() == 2);
    CHECK(a.total_extent() == 6);
    CHECK(a.total_sites() == 3);
    CHECK(a.to_string() == "1,3,2");
    Pattern b({7});
    CHECK(b.n_blocks() == 1);
    CHECK(b.total_extent() == 7);
    CHECK(b.total_sites() == 7);
}

TEST_CASE("dilation scales every entry and composes") {
    Pattern a({1, 3, 2});
    CHECK(dilate(a, 1) == a);
    CHECK(dilate(a, 5) == Pattern({5, 15, 10}));
    CHECK(dilate(dilate(a, 2), 3) == dilate(a, 6));
    CHECK(dilate(a, 4).total_extent() == 4 * a.total_extent());
    CHECK(dilate(a, 4).total_sites() == 4 * a.total_sites());
    CHECK_THROWS_AS(dilate(a, 0), Error);
}

TEST_CASE("pattern parsing") {
    CHECK(parse_pattern("1,3,2") == Pattern({1, 3, 2}));
    CHECK(parse_pattern("1,3,2x5") == Pattern({5, 15, 10}));
    CHECK(parse_pattern(" 4 , 1 , 4 ") == Pattern({4, 1, 4}));
    CHECK(parse_pattern("6") == Pattern({6}));
    CHECK_THROWS_AS(parse_pattern(""), Error);
    CHECK_THROWS_AS(parse_pattern("1,,2"), Error);
    CHECK_THROWS_AS(parse_pattern("1,3,2x0"), Error);
    CHECK_THROWS_AS(parse_pattern("a,b"), Error);
    CHECK_THROWS_AS(parse_pattern("1,2"), Error);  // even entry count
}

TEST_CASE("constituent expansion of a two-interval pattern") {
    // [1,3,2]: every contiguous entry range, sign (-1)^(first+last):
    //   +f(1) -f(4) +f(6) +f(3) -f(5) +f(2)
    auto cs = constituents(Pattern({1, 3, 2}));
    REQUIRE(cs.size() == 6);  // n(2n-1), n = 2
    std::map<long long, int> got;
    int sign_sum = 0;
    for (const auto& c : cs) {
        got[c.length] += c.sign;
        sign_sum += c.sign;
        CHECK(c.sign == ((c.first + c.last) % 2 == 0 ? +1 : -1));
    }
    CHECK(sign_sum == 2);  // equals n: the dilation identity depends on this
    CHECK(got[1] == 1);
    CHECK(got[4] == -1);
    CHECK(got[6] == 1);
    CHECK(got[3] == 1);
    CHECK(got[5] == -1);
    CHECK(got[2] == 1);
}

TEST_CASE("constituent expansion of a three-interval pattern") {
    auto cs = constituents(Pattern({1, 2, 1, 2, 4}));
    CHECK(cs.size() == 15);  // n(2n-1), n = 3
    int sign_sum = 0;
    for (const auto& c : cs) sign_sum += c.sign;
    CHECK(sign_sum == 3);
    // Single intervals are never produced for n = 1 patterns.
    CHECK_THROWS_AS(constituents(Pattern({6})), PatternTooSmall);
}

TEST_CASE("interval sets from patterns") {
    auto s = IntervalSet::from_pattern(Pattern({1, 3, 2}));
    REQUIRE(s.blocks.size() == 2);
    CHECK(s.blocks[0] == std::pair<long long, long long>{0, 1});
    CHECK(s.blocks[1] == std::pair<long long, long long>{4, 2});
    CHECK(s.site_list() == std::vector<long long>{0, 4, 5});
    CHECK(s.total_sites() == 3);
    CHECK(s.min_block_length() == 1);
}

TEST_CASE("interval sets from raw blocks merge and sort") {
    // Touching blocks merge into one.
    auto s = IntervalSet::from_blocks({{0, 2}, {2, 3}});
    REQUIRE(s.blocks.size() == 1);
    CHECK(s.blocks[0] == std::pair<long long, long long>{0, 5});
    // Overlap merges too.
    s = IntervalSet::from_blocks({{0, 4}, {2, 3}});
    REQUIRE(s.blocks.size() == 1);
    CHECK(s.blocks[0] == std::pair<long long, long long>{0, 5});
    // Unsorted disjoint input comes back sorted and untouched.
    s = IntervalSet::from_blocks({{10, 2}, {0, 3}});
    REQUIRE(s.blocks.size() == 2);
    CHECK(s.blocks[0] == std::pair<long long, long long>{0, 3});
    CHECK(s.blocks[1] == std::pair<long long, long long>{10, 2});
    CHECK(s.min_block_length() == 2);
}
