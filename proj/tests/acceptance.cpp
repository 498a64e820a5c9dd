#include "jordanlab/char_solver.hpp"
#include "jordanlab/closed_forms.hpp"
#include "jordanlab/dim_solver.hpp"
#include "jordanlab/jordan_oracle.hpp"
#include "jordanlab/partition_kit.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

using namespace jordanlab;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            if (detail.size() < 400)
                detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<void(Outcome&)>& body)
{
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.expect(secs < limit_s, "time limit " + std::to_string(limit_s) + " s exceeded");
    std::printf("%s  %2d  %-52s %8.2f s%s%s\n", out.ok ? "PASS" : "FAIL", id, name, secs,
                out.detail.empty() ? "" : "  ", out.detail.c_str());
    std::fflush(stdout);
    if (!out.ok)
        ++failures;
}

BigInt big(std::size_t v) { return BigInt(std::to_string(v)); }

std::string at(int d, int n) { return "D=" + std::to_string(d) + " n=" + std::to_string(n); }

} // namespace

int main()
{
    criterion(1, "one generator: a_n = 1, b_n = 0 through 30", 1, [](Outcome& o) {
        const DimTable t = solve_weak(1, 30);
        for (int n = 1; n <= 30; ++n) {
            o.expect(t.a_at(n) == 1, "a_" + std::to_string(n));
            o.expect(t.b_at(n) == 0, "b_" + std::to_string(n));
        }
    });

    criterion(2, "Jacobi triple product residues through z^50", 5, [](Outcome& o) {
        const JacobiReport rep = jacobi_triple_check(50);
        o.expect(rep.residue_l0, "Res (1/t - 1) Phi != 1");
        o.expect(rep.residue_l2, "Res (1 - t) Phi != -z");
        o.expect(rep.product_equals_sum, "product != sum");
    });

    criterion(3, "D=2: a = s, b = r through 15 with anchors", 10, [](Outcome& o) {
        const DimTable t = solve_weak(2, 15);
        for (int n = 1; n <= 15; ++n) {
            o.expect(t.a_at(n) == s(n, 2), "a " + at(2, n));
            o.expect(t.b_at(n) == r(n, 2), "b " + at(2, n));
        }
        o.expect(t.a_at(4) == 10, "a_4");
        o.expect(t.a_at(15) == 16512, "a_15");
        o.expect(t.b_at(15) == 15288, "b_15");
    });

    criterion(4, "D=3: a = s through 7, a_8 = 3324, b = r through 8", 30, [](Outcome& o) {
        const DimTable t = solve_weak(3, 8);
        for (int n = 1; n <= 7; ++n)
            o.expect(t.a_at(n) == s(n, 3), "a " + at(3, n));
        o.expect(t.a_at(8) == s(8, 3) + 3 && t.a_at(8) == 3324, "a_8");
        for (int n = 1; n <= 8; ++n)
            o.expect(t.b_at(n) == r(n, 3), "b " + at(3, n));
    });

    criterion(5, "D=4 offsets from s and r", 60, [](Outcome& o) {
        const DimTable t = solve_weak(4, 7);
        const long a_off[] = {0, 0, 0, -1, -4, -20, -60};
        const long b_off[] = {0, 0, 0, 0, -4, -16, -80};
        for (int n = 1; n <= 7; ++n) {
            o.expect(t.a_at(n) - s(n, 4) == a_off[n - 1], "a offset " + at(4, n));
            o.expect(t.b_at(n) - r(n, 4) == b_off[n - 1], "b offset " + at(4, n));
        }
    });

    criterion(6, "weakest a-sequences equal weak ones, D <= 4, N <= 20", 120, [](Outcome& o) {
        for (int d = 1; d <= 4; ++d)
            for (int N = 1; N <= 20; ++N)
                o.expect(solve_weakest(d, N).a == solve_weak(d, N).a, at(d, N));
    });

    criterion(7, "character tables: re-substitution and CJ - M, D <= 4", 300, [](Outcome& o) {
        for (int d = 1; d <= 4; ++d) {
            const ConjectureTables t = solve_characters(d, 7);
            std::string why;
            o.expect(check_resubstitution(t, &why), "re-substitution D=" + std::to_string(d) + " " + why);
            const OracleComparison cmp = predicted_vs_oracle(t);
            o.expect(cmp.degrees.size() == 7, "degree count");
            for (const auto& deg : cmp.degrees)
                o.expect(deg.equal, "A != ch CJ - ch M at " + at(d, deg.degree));
        }
    });

    criterion(8, "oracle dimensions against closed formulas", 900, [](Outcome& o) {
        auto full = [&](int d, int n_top) {
            JordanOracle orc(d);
            for (int n = 1; n <= n_top; ++n) {
                const std::size_t sj = orc.dim(OracleSpace::SJ, n), cj = orc.dim(OracleSpace::CJ, n);
                const std::size_t icj = orc.dim(OracleSpace::InnerCJ, n), isj = orc.dim(OracleSpace::InnerSJ, n);
                o.expect(big(cj) == s(n, d), "CJ " + at(d, n));
                o.expect(big(sj) == s(n, d) - closed_dim_M(n, d), "SJ " + at(d, n));
                o.expect(big(icj) == r(n, d), "Inner CJ " + at(d, n));
                o.expect(big(icj) - big(isj) == closed_dim_MD(n, d), "MD " + at(d, n));
            }
        };
        for (int d = 1; d <= 3; ++d)
            full(d, 7);
        full(4, 6);
        for (int d = 1; d <= 7; ++d) {
            JordanOracle orc(d);
            const Multidegree m = multilinear(d);
            const BigInt cj = big(orc.dim(OracleSpace::CJ, m)), sj = big(orc.dim(OracleSpace::SJ, m));
            const BigInt md = big(orc.dim(OracleSpace::InnerCJ, m)) - big(orc.dim(OracleSpace::InnerSJ, m));
            const std::string tag = "multilinear D=" + std::to_string(d);
            o.expect(cj == (d == 1 ? BigInt(1) : BigInt(factorial(static_cast<unsigned long>(d)) / 2)), tag + " CJ");
            o.expect(cj - sj == (d <= 3 ? BigInt(0) : known_m_class(d).dimension()), tag + " M");
            o.expect(md == (d <= 4 ? BigInt(0) : md_class_from_m(known_m_class(d - 1)).dimension()), tag + " MD");
            if (d == 6)
                o.expect(sj == 330 && cj - sj == 30, tag + " SJ = 330, M = 30");
            if (d == 7)
                o.expect(sj == 2345 && cj - sj == 175, tag + " SJ = 2345, M = 175");
        }
    });

    criterion(9, "branching: hook dims, Res[M(7)], MD(7), MD(8), MD(5)", 10, [](Outcome& o) {
        const std::pair<Partition, long> hooks[] = {{Partition{3, 1, 1, 1, 1}, 15}, {Partition{2, 2, 1, 1, 1}, 14},
                                                    {Partition{4, 1, 1, 1, 1}, 35}, {Partition{3, 2, 1, 1, 1}, 64},
                                                    {Partition{2, 2, 1, 1, 1, 1}, 20}, {Partition{3, 1, 1, 1, 1, 1}, 21}};
        for (const auto& [y, dim] : hooks)
            o.expect(dim_sn(y) == dim, "dim S(" + y.str() + ")");
        const VirtualSymClass m7 = known_m_class(7);
        o.expect(m7.dimension() == 2 * 35 + 64 + 20 + 21 && m7.dimension() == 175, "dim [M(7)]");
        o.expect(restrict(m7) == VirtualSymClass(7, {{Partition{3, 1, 1, 1, 1}, 4},
                                                     {Partition{2, 1, 1, 1, 1, 1}, 2},
                                                     {Partition{2, 2, 1, 1, 1}, 2},
                                                     {Partition{4, 1, 1, 1}, 2},
                                                     {Partition{3, 2, 1, 1}, 1}}),
                 "Res[M(7)]");
        o.expect(md_class_from_m(known_m_class(6)).dimension() == 180, "dim MD(7)");
        o.expect(md_class_from_m(m7).dimension() == 1225, "dim MD(8)");
        o.expect(md_class_from_m(known_m_class(4)) == VirtualSymClass(5, {{Partition{2, 1, 1, 1}, 1}}), "[MD(5)]");
    });

    criterion(10, "properties: lambda, P_k, prefixes, Schur-Weyl, echelon", 120, [](Outcome& o) {
        std::mt19937 rng(2024);
        std::uniform_int_distribution<int> coeff(-3, 3);

        // lambda(a + b) = lambda(a) lambda(b)
        for (int d = 1; d <= 3; ++d) {
            const int trunc = 5;
            for (int trial = 0; trial < 4; ++trial) {
                CharClass a(d, trunc), b(d, trunc);
                for (const auto& y : partitions_of(1 + trial % 2, d))
                    a.add(y, LaurentPoly::monomial(coeff(rng)) * BigInt(coeff(rng)));
                for (const auto& y : partitions_of(2, d))
                    b.add(y, LaurentPoly::irreducible(trial % 2) * BigInt(coeff(rng)));
                o.expect(lambda_class(a + b) == lambda_class(a) * lambda_class(b), "lambda multiplicativity");
            }
        }

        // P_k reconstruction of symmetric Laurent polynomials
        for (int trial = 0; trial < 50; ++trial) {
            LaurentPoly h;
            for (int e = -4; e <= 4; ++e)
                h.add_term(e, coeff(rng));
            const LaurentPoly a = h + h.reflected();
            LaurentPoly rebuilt;
            for (int k = 0; k <= 4; ++k)
                rebuilt.add_scaled(LaurentPoly::irreducible(k), multiplicity(a, k));
            o.expect(rebuilt == a, "P_k reconstruction");
        }

        // prefix stability of both solvers
        for (int d = 1; d <= 4; ++d) {
            const DimTable weak = solve_weak(d, 16), weakest = solve_weakest(d, 16);
            for (int N : {1, 5, 11}) {
                const DimTable w = solve_weak(d, N), ww = solve_weakest(d, N);
                o.expect(std::equal(w.a.begin(), w.a.end(), weak.a.begin()), "weak a prefix");
                o.expect(std::equal(w.b.begin(), w.b.end(), weak.b.begin()), "weak b prefix");
                o.expect(std::equal(ww.a.begin(), ww.a.end(), weakest.a.begin()), "weakest prefix");
            }
        }

        // Schur-Weyl and sum of squares
        for (int n = 1; n <= 8; ++n) {
            BigInt squares = 0;
            for (const auto& y : partitions_of(n))
                squares += dim_sn(y) * dim_sn(y);
            o.expect(squares == factorial(static_cast<unsigned long>(n)), "sum dim^2 = n!");
            for (int d = 1; d <= 6; ++d) {
                BigInt sum = 0;
                for (const auto& y : partitions_of(n))
                    sum += dim_sn(y) * dim_gl(y, d);
                o.expect(sum == ipow(d, static_cast<unsigned long>(n)), "Schur-Weyl");
            }
        }

        // echelon determinism under permuted insertion
        JordanOracle orc(3);
        std::vector<SparseVec> gens;
        const SpanBasis two = orc.basis(OracleSpace::SJ, 2), three = orc.basis(OracleSpace::SJ, 3);
        for (const auto& a : two.rows())
            for (const auto& b : three.rows())
                gens.push_back(jordan_product(a, b));
        const SpanBasis ref = echelonize(gens);
        o.expect(ref.is_reduced_echelon(), "reduced echelon form");
        o.expect(orc.basis(OracleSpace::SJ, 5).contains(ref), "products stay in SJ_5");
        for (int trial = 0; trial < 5; ++trial) {
            std::shuffle(gens.begin(), gens.end(), rng);
            o.expect(echelonize(gens) == ref, "permuted insertion");
        }
    });

    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
