#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wcf/composition.hpp"
#include "wcf/errors.hpp"

using namespace wcf;

namespace {

Composition comp(std::vector<std::int64_t> parts) { return Composition(std::move(parts)); }

}  // namespace

TEST_CASE("enumerate_space on pinned examples") {
    const auto zero = enumerate_space({0, 3});
    REQUIRE(zero.size() == 1);
    CHECK(zero.front() == comp({0, 0, 0}));

    const auto two_two = enumerate_space({2, 2});
    REQUIRE(two_two.size() == 3);
    CHECK(two_two[0] == comp({0, 2}));
    CHECK(two_two[1] == comp({1, 1}));
    CHECK(two_two[2] == comp({2, 0}));

    // length cross-checked against the Pascal-recurrence oracle
    CHECK(enumerate_space({3, 2}).size() == 4);
    CHECK(testing::pascal_binomial(4, 1) == 4);
}

TEST_CASE("count_space matches enumeration and the trivial cases") {
    CHECK(count_space({5, 5}) == testing::brute_enumerate(5, 5).size());
    CHECK(count_space({5, 5}) == 126);
    CHECK(count_space({0, 7}) == 1);
    CHECK(count_space({4, 1}) == 1);
}

TEST_CASE("binomial values and conventions") {
    CHECK(binomial(13, 3) == testing::pascal_binomial(13, 3));
    CHECK(binomial(13, 3) == 286);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(6, -2) == 0);
}

TEST_CASE("binomial satisfies Pascal's rule exactly up to a = 100") {
    for (std::int64_t a = 1; a <= 100; ++a) {
        for (std::int64_t b = 1; b <= a; ++b) {
            REQUIRE(binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b));
        }
    }
}

TEST_CASE("enumeration is lexicographic, duplicate-free and complete") {
    for (std::int64_t n = 0; n <= 12; ++n) {
        for (int l = 1; l <= 5; ++l) {
            const auto all = enumerate_space({n, l});
            REQUIRE(count_space({n, l}) == all.size());
            for (std::size_t i = 0; i + 1 < all.size(); ++i) {
                REQUIRE(all[i] < all[i + 1]);
            }
            for (const auto& u : all) {
                REQUIRE(u.sum() == n);
                REQUIRE(u.length() == l);
            }
        }
    }
    // tiny spaces against the generate-and-filter oracle
    for (std::int64_t n = 0; n <= 6; ++n) {
        for (int l = 1; l <= 4; ++l) {
            CHECK(enumerate_space({n, l}) == testing::brute_enumerate(n, l));
        }
    }
}

TEST_CASE("enumeration cap raises a resource error") {
    CHECK_THROWS_AS(enumerate_space({100, 6}, 1000), ResourceLimitError);
    CHECK(enumerate_space({10, 3}, 100).size() == 66);
}

TEST_CASE("remove_coords on pinned examples") {
    CHECK(remove_coords(comp({5, 0, 2, 1}), {2, 4}) == comp({5, 2}));
    CHECK(remove_coords(comp({1, 2, 3}), {1}) == comp({2, 3}));

    const Composition empty = remove_coords(comp({4, 4}), {1, 2});
    CHECK(empty.length() == 0);
    CHECK(empty.space() == SpaceId{0, 0});
    // length-0 compositions stay usable downstream
    CHECK(count_space({0, 0}) == 1);
    const auto singleton = enumerate_space({0, 0});
    REQUIRE(singleton.size() == 1);
    CHECK(singleton.front() == empty);
}

TEST_CASE("remove_coords rejects bad indices") {
    CHECK_THROWS_AS(remove_coords(comp({1, 2}), {3}), DomainError);
    CHECK_THROWS_AS(remove_coords(comp({1, 2}), {0}), DomainError);
    CHECK_THROWS_AS(remove_coords(comp({1, 2}), {1, 1}), DomainError);
}

TEST_CASE("removal keeps sums and composes one coordinate at a time") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int l = 2 + static_cast<int>(rng() % 6);
        std::vector<std::int64_t> parts(static_cast<std::size_t>(l));
        for (auto& p : parts) p = static_cast<std::int64_t>(rng() % 5);
        const Composition u(parts);

        std::vector<int> coords;
        for (int i = 1; i <= l; ++i) {
            if (rng() % 2 == 0) coords.push_back(i);
        }
        if (coords.empty() || coords.size() == static_cast<std::size_t>(l)) continue;

        std::int64_t removed_sum = 0;
        for (int x : coords) removed_sum += u.part(x);
        const Composition reduced = remove_coords(u, coords);
        REQUIRE(reduced.sum() == u.sum() - removed_sum);

        // R(x_1..x_t; u) = R(x_1..x_{t-1}; R(x_t; u)) applied down to singletons
        Composition step = u;
        for (auto it = coords.rbegin(); it != coords.rend(); ++it) {
            step = remove_coords(step, {*it});
        }
        REQUIRE(step == reduced);
    }
}

TEST_CASE("parts render and parse as family-file lines") {
    CHECK(format_parts(comp({0, 2, 1})) == "0,2,1");
    CHECK(parse_parts("0,2,1") == comp({0, 2, 1}));
    CHECK(parse_parts(" 3 , 4 ") == comp({3, 4}));
    CHECK_THROWS_AS(parse_parts(""), DomainError);
    CHECK_THROWS_AS(parse_parts("1,,2"), DomainError);
    CHECK_THROWS_AS(parse_parts("1,-2"), DomainError);
    CHECK_THROWS_AS(parse_parts("1,x"), DomainError);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const int l = 1 + static_cast<int>(rng() % 7);
        std::vector<std::int64_t> parts(static_cast<std::size_t>(l));
        for (auto& p : parts) p = static_cast<std::int64_t>(rng() % 100);
        const Composition u(parts);
        REQUIRE(parse_parts(format_parts(u)) == u);
    }
}

TEST_CASE("space and composition validation") {
    CHECK_THROWS_AS(validate_space({-1, 2}), DomainError);
    CHECK_THROWS_AS(validate_space({1, 0}), DomainError);
    CHECK_THROWS_AS(Composition({1, -1}), DomainError);
    CHECK_THROWS_AS(comp({1, 2}).part(0), DomainError);
    CHECK_THROWS_AS(comp({1, 2}).part(3), DomainError);
    CHECK(comp({1, 2}).part(2) == 2);
}
