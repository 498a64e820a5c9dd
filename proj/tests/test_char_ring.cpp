#include "jordanlab/char_class.hpp"
#include "jordanlab/partition_kit.hpp"

#include <doctest.h>

using namespace jordanlab;

namespace {

/// Semistandard tableaux of shape lambda and content mu, by peeling horizontal strips of the largest letter.
long kostka(const std::vector<int>& shape, std::vector<int> content)
{
    while (!content.empty() && content.back() == 0)
        content.pop_back();
    int total = 0;
    for (int x : shape)
        total += x;
    if (content.empty())
        return total == 0 ? 1 : 0;
    const int k = content.back();
    content.pop_back();
    long count = 0;
    std::vector<int> inner(shape.size());
    auto rec = [&](auto&& self, std::size_t row, int left) -> void {
        if (row == shape.size()) {
            if (left == 0)
                count += kostka(inner, content);
            return;
        }
        const int below = row + 1 < shape.size() ? shape[row + 1] : 0;
        for (int take = 0; take <= std::min(left, shape[row] - below); ++take) {
            inner[row] = shape[row] - take;
            self(self, row + 1, left - take);
        }
    };
    rec(rec, 0, k);
    return count;
}

} // namespace

TEST_CASE("Jacobi-Trudi agrees with Kostka numbers")
{
    for (int n = 1; n <= 6; ++n)
        for (int d = 1; d <= 4; ++d)
            for (const auto& y : partitions_of(n, d)) {
                const CharClass sch = char_of_schur(y, d);
                for (const auto& mu : partitions_of(n, d)) {
                    CAPTURE(y.str());
                    CAPTURE(mu.str());
                    CHECK(sch.coeff(mu) == LaurentPoly(kostka(y.parts(), mu.parts())));
                }
            }
    CHECK(char_of_schur(Partition{1, 1, 1}, 2).is_zero());
}

TEST_CASE("hook content specialization")
{
    for (int d = 1; d <= 4; ++d)
        for (int n = 1; n <= 6; ++n)
            for (const auto& y : partitions_of(n, d)) {
                const TSeries sp = specialize(char_of_schur(y, d, n));
                CHECK(sp[n] == LaurentPoly(dim_gl(y, d)));
            }
}

TEST_CASE("schur decomposition round trip")
{
    const int d = 3, trunc = 5;
    CharClass c(d, trunc);
    c += char_of_schur(Partition{2, 1}, d, trunc) * BigInt(3);
    c += char_of_schur(Partition{3, 1, 1}, d, trunc).times_t(LaurentPoly::monomial(-1));
    c -= char_of_schur(Partition{4}, d, trunc);
    const CharClass s = schur_decompose(c);
    CHECK(s.basis() == CharBasis::schur);
    CHECK(s.coeff(Partition{2, 1}) == LaurentPoly(3));
    CHECK(s.coeff(Partition{3, 1, 1}) == LaurentPoly::monomial(-1));
    CHECK(s.coeff(Partition{4}) == LaurentPoly(-1));
    CHECK(s.terms().size() == 3);
    CHECK(schur_to_monomial(s) == c);
}

TEST_CASE("products")
{
    const int d = 3, trunc = 6;
    const CharClass k = CharClass::generators(d, trunc);
    // K (x) K = S^2 + Lambda^2
    CHECK(schur_decompose(k * k).coeff(Partition{2}) == LaurentPoly(1));
    CHECK(schur_decompose(k * k).coeff(Partition{1, 1}) == LaurentPoly(1));
    CHECK(CharClass::power_sum(d, trunc, 2) + k * k == CharClass::complete(d, trunc, 2) * BigInt(2));
    CHECK(specialize(k * k * k)[3] == LaurentPoly(27));
    CHECK(orbit_size(Partition{2, 1}, 3) == 6);
    CHECK(orbit_size(Partition{1, 1, 1}, 3) == 1);
    CHECK(orbit_size(Partition{2, 2}, 4) == 6);
}

TEST_CASE("lambda operation")
{
    const int d = 2, trunc = 6;
    const CharClass k = CharClass::generators(d, trunc);
    // lambda(K) = (1 - z_1)(1 - z_2)
    CharClass expect = CharClass::one(d, trunc) - k;
    expect += CharClass::monomial(d, trunc, Partition{1, 1});
    CHECK(lambda_class(k) == expect);
    CHECK_THROWS(lambda_class(CharClass::one(d, trunc)));

    const CharClass a = k.times_t(LaurentPoly::irreducible(1));
    const CharClass b = CharClass::monomial(d, trunc, Partition{2}, LaurentPoly::monomial(-2)) +
                        CharClass::monomial(d, trunc, Partition{1, 1}, LaurentPoly(3));
    const CharClass c = CharClass::power_sum(d, trunc, 3) * BigInt(-2);
    CHECK(lambda_class(a + b) == lambda_class(a) * lambda_class(b));
    CHECK(lambda_class(b + c) == lambda_class(b) * lambda_class(c));
    CHECK(lambda_class(a + b + c) == lambda_class(a) * lambda_class(b) * lambda_class(c));
}

TEST_CASE("L(2k) extraction")
{
    const int d = 2, trunc = 4;
    const CharClass k = CharClass::generators(d, trunc);
    const CharClass c = k.times_t(LaurentPoly::irreducible(1)) * BigInt(2) + k * k;
    CHECK(c.is_t_symmetric());
    CHECK(mult_L2k_char(c, 1) == k * BigInt(2));
    CHECK(mult_L2k_char(c, 0) == k * k);
    CHECK(mult_L2k_char(c, 2).is_zero());
    CHECK_FALSE(k.times_t(LaurentPoly::monomial(1)).is_t_symmetric());
}
