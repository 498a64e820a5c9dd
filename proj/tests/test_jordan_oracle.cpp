#include "jordanlab/char_solver.hpp"
#include "jordanlab/closed_forms.hpp"
#include "jordanlab/jordan_oracle.hpp"
#include "jordanlab/partition_kit.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace jordanlab;

namespace {

SparseVec word(const std::string& s) { return SparseVec::from_terms({{Word::parse(s), Rational(1)}}); }

} // namespace

TEST_CASE("words")
{
    const Word w = Word::parse("1213");
    CHECK(w.length == 4);
    CHECK(w.at(0) == 0);
    CHECK(w.at(3) == 2);
    CHECK(w.str() == "1213");
    CHECK(w.reversed().str() == "3121");
    CHECK(w.content(3) == std::vector<int>{2, 1, 1});
    CHECK((Word::parse("12") * Word::parse("3")).str() == "123");
    CHECK(Word::parse("112") < Word::parse("121"));
    CHECK(Word::parse("2") < Word::parse("11"));
    CHECK(Word::from_letters({9, 10}).str() == "ab");
    CHECK_THROWS(Word::parse("10"));
}

TEST_CASE("sparse vectors and products")
{
    const SparseVec x = word("1"), y = word("2");
    CHECK(jordan_product(x, y) == SparseVec::from_terms({{Word::parse("12"), 1}, {Word::parse("21"), 1}}));
    CHECK(commutator(x, x).is_zero());
    CHECK(tensor_mul(x, y).coeff(Word::parse("12")) == 1);
    const SparseVec v = SparseVec::from_terms({{Word::parse("12"), Rational(1, 2)}, {Word::parse("12"), Rational(1, 2)},
                                               {Word::parse("21"), Rational(-3)}});
    CHECK(v.size() == 2);
    CHECK(v.coeff(Word::parse("12")) == 1);
    CHECK(reversal(v).coeff(Word::parse("12")) == -3);
    CHECK(v.json() == R"({"12":"1","21":"-3"})");
    CHECK_THROWS(SparseVec::from_terms({{Word::parse("1"), 1}, {Word::parse("12"), 1}}));
}

TEST_CASE("echelon determinism")
{
    std::mt19937 rng(42);
    std::vector<SparseVec> gens;
    std::uniform_int_distribution<int> letter(1, 3), coeff(-3, 3);
    for (int i = 0; i < 14; ++i) {
        std::vector<SparseVec::Entry> t;
        for (int k = 0; k < 4; ++k)
            t.emplace_back(Word::parse(std::to_string(letter(rng)) + std::to_string(letter(rng)) +
                                       std::to_string(letter(rng))),
                           Rational(coeff(rng), 1 + (k % 2)));
        gens.push_back(SparseVec::from_terms(t));
    }
    gens.push_back(SparseVec::from_terms({{Word::parse("111"), 2}}));
    gens.push_back(jordan_product(gens[0], word("1")).is_zero() ? gens[1] : gens[0]);
    const SpanBasis ref = echelonize(gens);
    CHECK(ref.is_reduced_echelon());
    for (int trial = 0; trial < 10; ++trial) {
        std::shuffle(gens.begin(), gens.end(), rng);
        CHECK(echelonize(gens) == ref);
    }
    for (const auto& g : gens)
        CHECK(ref.contains(g));
    CHECK(ref.jsonl().find("\"pivot\"") != std::string::npos);
}

TEST_CASE("oracle examples")
{
    CHECK(span_SJ(3, 2).rank() == 6);
    CHECK(span_CJ(1, 5).rank() == 5);
    CHECK(span_CJ(4, 4, Multidegree{1, 1, 1, 1}).rank() == 12);
    CHECK(span_inner_CJ(2, 2).rank() == 1);
    CHECK(span_SJ(4, 4, multilinear(4)).rank() == 11);
    for (int n = 1; n <= 4; ++n)
        CHECK(span_inner_CJ(n, 3).rank() - span_inner_SJ(n, 3).rank() == 0);

    const auto w = weight_character(span_CJ(2, 2), 2);
    CHECK(w == std::map<Multidegree, std::uint64_t>{{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}});

    for (const auto& b : {span_SJ(4, 3), span_inner_CJ(4, 3), span_inner_SJ(5, 2), span_CJ(5, 2)})
        CHECK(b.is_reduced_echelon());
}

TEST_CASE("dimensions against closed formulas")
{
    for (int d = 1; d <= 3; ++d) {
        JordanOracle o(d);
        for (int n = 1; n <= 7; ++n) {
            CAPTURE(d);
            CAPTURE(n);
            CHECK(BigInt(std::to_string(o.dim(OracleSpace::CJ, n))) == s(n, d));
            CHECK(BigInt(std::to_string(o.dim(OracleSpace::SJ, n))) == s(n, d) - closed_dim_M(n, d));
            CHECK(BigInt(std::to_string(o.dim(OracleSpace::InnerCJ, n))) == r(n, d));
        }
    }
    JordanOracle o4(4);
    for (int n = 1; n <= 6; ++n) {
        const BigInt sj(std::to_string(o4.dim(OracleSpace::SJ, n)));
        const BigInt md(std::to_string(o4.dim(OracleSpace::InnerCJ, n) - o4.dim(OracleSpace::InnerSJ, n)));
        CHECK(sj == s(n, 4) - closed_dim_M(n, 4));
        CHECK(md == closed_dim_MD(n, 4));
    }
    JordanOracle o5(5);
    for (int n = 1; n <= 5; ++n)
        CHECK(BigInt(std::to_string(o5.dim(OracleSpace::SJ, n))) == s(n, 5) - closed_dim_M(n, 5));
}

TEST_CASE("multilinear components")
{
    for (int d = 4; d <= 6; ++d) {
        JordanOracle o(d);
        const Multidegree m = multilinear(d);
        const BigInt cj(std::to_string(o.dim(OracleSpace::CJ, m)));
        const BigInt sj(std::to_string(o.dim(OracleSpace::SJ, m)));
        CHECK(cj == factorial(static_cast<unsigned long>(d)) / 2);
        CHECK(cj - sj == known_m_class(d).dimension());
        const BigInt md(std::to_string(o.dim(OracleSpace::InnerCJ, m) - o.dim(OracleSpace::InnerSJ, m)));
        CHECK(md == (d == 4 ? BigInt(0) : md_class_from_m(known_m_class(d - 1)).dimension()));
    }
    CHECK(JordanOracle(6).dim(OracleSpace::SJ, multilinear(6)) == 330);
}

TEST_CASE("weights match the CJ character")
{
    for (int d = 1; d <= 3; ++d) {
        JordanOracle o(d);
        for (int n = 1; n <= 6; ++n) {
            const auto w = weight_character(o.basis(OracleSpace::CJ, n), d);
            CHECK(weights_to_char(w, d, n) == char_CJ(n, d));
            const auto wsj = weight_character(o.basis(OracleSpace::SJ, n), d);
            CHECK(weights_to_char(wsj, d, n) == char_CJ(n, d) - char_M(n, d));
        }
    }
    CHECK_THROWS(weights_to_char({{{2, 0}, 1}}, 2, 2));
}

TEST_CASE("subspace relations")
{
    JordanOracle o(3);
    const SpanBasis sj = o.basis(OracleSpace::SJ, 4);
    CHECK(o.basis(OracleSpace::CJ, 4).contains(sj));
    CHECK(o.basis(OracleSpace::InnerCJ, 5).contains(o.basis(OracleSpace::InnerSJ, 5)));
    for (const auto& row : sj.rows())
        CHECK(reversal(row) == row);
    const SpanBasis inner = o.basis(OracleSpace::InnerCJ, 4);
    for (const auto& row : inner.rows())
        CHECK(reversal(row) == SparseVec::from_terms([&] {
                  std::vector<SparseVec::Entry> t;
                  for (const auto& [w, c] : row.entries())
                      t.emplace_back(w, -c);
                  return t;
              }()));

    // Re-closing under the Jordan product adds nothing.
    JordanOracle o4(4);
    const Multidegree m{1, 1, 1, 1};
    const SpanBasis top = o4.basis(OracleSpace::SJ, m);
    const SpanBasis low = o4.basis(OracleSpace::SJ, Multidegree{1, 1, 1, 0});
    const SparseVec x4 = word("4");
    for (const auto& row : low.rows())
        CHECK(top.contains(jordan_product(row, x4)));
    const SpanBasis pair_a = o4.basis(OracleSpace::SJ, Multidegree{1, 1, 0, 0});
    const SpanBasis pair_b = o4.basis(OracleSpace::SJ, Multidegree{0, 0, 1, 1});
    for (const auto& a : pair_a.rows())
        for (const auto& b : pair_b.rows())
            CHECK(top.contains(jordan_product(a, b)));
    CHECK_FALSE(top.contains(o4.basis(OracleSpace::CJ, m)));
}

TEST_CASE("budget")
{
    CHECK_THROWS_AS(span_SJ(15, 3), std::length_error);
    OracleConfig small;
    small.budget = 100;
    CHECK_THROWS_AS(span_SJ(5, 5, multilinear(5), small), std::length_error);
    CHECK_THROWS_AS(span_SJ(3, 2, Multidegree{1, 1}), std::invalid_argument);
    CHECK_THROWS(JordanOracle(0));
}

TEST_CASE("Jacobi triple product")
{
    CHECK(jacobi_triple_check(0).pass());
    const JacobiReport rep = jacobi_triple_check(50);
    CHECK(rep.product_equals_sum);
    CHECK(rep.residue_l0);
    CHECK(rep.residue_l2);
}
