#include "jordanlab/closed_forms.hpp"

#include <doctest.h>

using namespace jordanlab;

TEST_CASE("s examples")
{
    CHECK(s(4, 2) == 10);
    CHECK(s(8, 3) == 3321);
    for (int d = 1; d <= 5; ++d)
        CHECK(s(1, d) == d);
}

TEST_CASE("r examples")
{
    CHECK(r(2, 2) == 1);
    CHECK(r(3, 2) == 2);
    CHECK(r(15, 2) == 15288);
    CHECK(r(1, 3) == 0);
}

TEST_CASE("c examples")
{
    CHECK(c(6, 2) == 1);
    CHECK(c(2, 2) == 0);
}

TEST_CASE("totient")
{
    CHECK(totient(1) == 1);
    CHECK(totient(12) == 4);
    for (std::int64_t n = 1; n <= 100; ++n) {
        std::int64_t sum = 0;
        for (std::int64_t d = 1; d <= n; ++d)
            if (n % d == 0)
                sum += totient(d);
        CHECK(sum == n);
    }
}

TEST_CASE("word census")
{
    const WordCensus w = necklace_bracelet_bruteforce(3, 2);
    CHECK(w.necklaces == 4);
    CHECK(w.oriented_pairs == 0);
    CHECK(necklace_bracelet_bruteforce(6, 2).oriented_pairs == 1);
    for (int d = 1; d <= 4; ++d) {
        const WordCensus one = necklace_bracelet_bruteforce(1, d);
        CHECK(one.necklaces == d);
        CHECK(one.oriented_pairs == 0);
    }
    CHECK_THROWS_AS(necklace_bracelet_bruteforce(30, 3), std::length_error);
}

TEST_CASE("c agrees with enumeration")
{
    for (int d = 1; d <= 3; ++d)
        for (int n = 1; n <= 10; ++n) {
            const WordCensus w = necklace_bracelet_bruteforce(n, d);
            CAPTURE(n);
            CAPTURE(d);
            CHECK(c(n, d) == w.oriented_pairs);
            CHECK(w.necklaces * n == necklace_sum(n, d));
            CHECK(w.words == ipow(d, static_cast<unsigned long>(n)));
        }
}

TEST_CASE("s counts reversal orbits")
{
    for (int d = 1; d <= 3; ++d)
        for (int n = 1; n <= 10; ++n) {
            const WordCensus w = necklace_bracelet_bruteforce(n, d);
            CHECK(s(n, d) * 2 == w.words + w.sigma_fixed);
        }
}
