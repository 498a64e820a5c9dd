#include "jordanlab/laurent_poly.hpp"
#include "jordanlab/tseries.hpp"

#include <doctest.h>

#include <random>

using namespace jordanlab;

namespace {

LaurentPoly random_poly(std::mt19937& rng, int span)
{
    std::uniform_int_distribution<int> coeff(-4, 4);
    LaurentPoly p;
    for (int e = -span; e <= span; ++e)
        p.add_term(e, coeff(rng));
    return p;
}

TSeries random_series(std::mt19937& rng, int trunc, bool unit)
{
    TSeries s(trunc);
    for (int d = 0; d <= trunc; ++d)
        s[d] = random_poly(rng, 2);
    if (unit)
        s[0] = 1;
    return s;
}

} // namespace

TEST_CASE("laurent basics")
{
    const LaurentPoly p = LaurentPoly::monomial(-1) + LaurentPoly(3) + LaurentPoly::monomial(2, -2);
    CHECK(p.coeff(-1) == 1);
    CHECK(p.coeff(0) == 3);
    CHECK(p.coeff(1) == 0);
    CHECK(p.min_exponent() == -1);
    CHECK(p.max_exponent() == 2);
    CHECK(residue(p) == 1);
    CHECK((p - p).is_zero());
    CHECK(p.reflected().coeff(-2) == -2);
    CHECK(p.shifted(1).coeff(0) == 1);

    CHECK(LaurentPoly::irreducible(0) == LaurentPoly(1));
    CHECK(LaurentPoly::irreducible(2).size() == 5);
    CHECK(LaurentPoly::irreducible(2).is_symmetric());
    CHECK_FALSE(LaurentPoly::monomial(1).is_symmetric());
}

TEST_CASE("laurent ring laws")
{
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        const auto a = random_poly(rng, 3), b = random_poly(rng, 2), c = random_poly(rng, 4);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * LaurentPoly(1) == a);
        CHECK(a + (-a) == LaurentPoly());
    }
}

TEST_CASE("multiplicities of irreducibles")
{
    for (int k = 0; k < 6; ++k)
        for (int j = 0; j < 6; ++j)
            CHECK(multiplicity(LaurentPoly::irreducible(k), j) == (j == k ? 1 : 0));
    CHECK_THROWS_AS(multiplicity(LaurentPoly::monomial(1), 0), std::invalid_argument);
}

TEST_CASE("symmetric polynomials are sums of P_k")
{
    std::mt19937 rng(11);
    for (int i = 0; i < 40; ++i) {
        const auto h = random_poly(rng, 4);
        const LaurentPoly a = h + h.reflected();
        LaurentPoly rebuilt;
        for (int k = 0; k <= 4; ++k)
            rebuilt.add_scaled(LaurentPoly::irreducible(k), multiplicity(a, k));
        CHECK(rebuilt == a);
    }
}

TEST_CASE("series ring laws and inverse")
{
    std::mt19937 rng(3);
    for (int i = 0; i < 10; ++i) {
        const auto a = random_series(rng, 6, false), b = random_series(rng, 6, false);
        const auto c = random_series(rng, 6, false);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        const auto u = random_series(rng, 6, true);
        CHECK((u * series_inv(u)).is_one());
    }
    TSeries bad(3);
    bad[0] = 2;
    CHECK_THROWS_AS(series_inv(bad), std::domain_error);
    CHECK_THROWS(series_mul(TSeries(3), TSeries(4)));
}

TEST_CASE("series powers round trip")
{
    std::mt19937 rng(5);
    for (int i = 0; i < 6; ++i) {
        const auto u = random_series(rng, 5, true);
        for (long m : {0L, 1L, 3L, 7L}) {
            CHECK((series_pow(u, m) * series_pow(u, -m)).is_one());
            CHECK(series_pow(u, m + 1) == series_pow(u, m) * u);
        }
    }
}

TEST_CASE("generalized binomial factor")
{
    const int N = 8;
    // (1 - z t)^3 times (1 - z t)^-3
    CHECK((binomial_factor(N, 1, 1, 3) * binomial_factor(N, 1, 1, -3)).is_one());
    const TSeries f = binomial_factor(N, 2, -1, 2);
    CHECK(f[0] == LaurentPoly(1));
    CHECK(f[2] == LaurentPoly::monomial(-1, -2));
    CHECK(f[4] == LaurentPoly::monomial(-2, 1));
    CHECK(f[6].is_zero());
    // (1 - z)^(-1) = sum z^k
    const TSeries g = binomial_factor(N, 1, 0, -1);
    for (int d = 0; d <= N; ++d)
        CHECK(g[d] == LaurentPoly(1));
}

TEST_CASE("series residue and multiplicity")
{
    TSeries f(3);
    f[1] = LaurentPoly::irreducible(1) + LaurentPoly::irreducible(1);
    f[2] = LaurentPoly::irreducible(2) - LaurentPoly(1);
    const ZSeries res = residue(f);
    CHECK(res[1] == 2);
    CHECK(res[2] == 1);
    const ZSeries m0 = multiplicity(f, 0);
    const ZSeries m1 = multiplicity(f, 1);
    CHECK(m0[1] == 0);
    CHECK(m1[1] == 2);
    CHECK(m0[2] == -1);
    CHECK(multiplicity(f, 2)[2] == 1);
}
