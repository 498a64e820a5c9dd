#include "jordanlab/char_solver.hpp"
#include "jordanlab/closed_forms.hpp"

#include <doctest.h>

using namespace jordanlab;

TEST_CASE("low degrees")
{
    for (int d = 1; d <= 4; ++d) {
        const ConjectureTables t = solve_characters(d, 3);
        CHECK(t.A_at(1) == SchurRow{{Partition{1}, 1}});
        CHECK(t.B_at(1).empty());
        if (d >= 2) {
            CHECK(t.A_at(2) == SchurRow{{Partition{2}, 1}});
            CHECK(t.B_at(2) == SchurRow{{Partition{1, 1}, 1}});
        }
    }
}

TEST_CASE("specialization matches the scalar solver")
{
    for (int d = 1; d <= 4; ++d) {
        const int N = 10;
        const DimTable spec = solve_characters(d, N).specialized();
        const DimTable weak = solve_weak(d, N);
        CHECK(spec.a == weak.a);
        CHECK(spec.b == weak.b);
    }
}

TEST_CASE("re-substitution")
{
    for (int d = 1; d <= 4; ++d) {
        const ConjectureTables t = solve_characters(d, 7);
        std::string detail;
        CHECK_MESSAGE(check_resubstitution(t, &detail), detail);
        CHECK(t.non_effective().empty());
    }
}

TEST_CASE("characters of CJ")
{
    CHECK(schur_decompose(char_CJ(2, 3)).terms().size() == 1);
    CHECK(schur_decompose(char_CJ(2, 3)).coeff(Partition{2}) == LaurentPoly(1));
    CHECK(char_CJ(4, 4).coeff(Partition{1, 1, 1, 1}) == LaurentPoly(12));
    for (int d = 1; d <= 4; ++d)
        for (int n = 1; n <= 8; ++n)
            CHECK(specialize(char_CJ(n, d))[n] == LaurentPoly(s(n, d)));
}

TEST_CASE("characters of M")
{
    for (int n = 1; n <= 3; ++n)
        CHECK(char_M(n, 4).is_zero());
    const CharClass m4 = schur_decompose(char_M(4, 4));
    CHECK(m4.terms().size() == 1);
    CHECK(m4.coeff(Partition{1, 1, 1, 1}) == LaurentPoly(1));
    for (int n = 1; n <= 7; ++n)
        CHECK(char_M(n, 3).is_zero());
    CHECK_THROWS_AS(char_M(8, 4), std::out_of_range);
}

TEST_CASE("agreement with CJ minus M")
{
    for (int d = 1; d <= 4; ++d) {
        const OracleComparison cmp = predicted_vs_oracle(d, 7);
        CHECK(cmp.pass());
        CHECK(cmp.degrees.size() == 7);
    }
    const OracleComparison four = predicted_vs_oracle(4, 4);
    SchurRow expect = four.degrees[3].expected;
    CHECK(expect == four.degrees[3].predicted);
}

TEST_CASE("degree eight, three generators")
{
    const ConjectureTables t = solve_characters(3, 8);
    CHECK(special_identity_excess(t, 8) == SchurRow{{Partition{3, 3, 2}, 1}});
    CHECK(schur_row_str(special_identity_excess(t, 8)) == "[3,3,2]");
}
