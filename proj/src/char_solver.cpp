#include "jordanlab/char_solver.hpp"

#include <stdexcept>

namespace jordanlab {

namespace {

SchurRow schur_row(const CharClass& homogeneous)
{
    SchurRow row;
    for (const auto& [key, v] : schur_coefficients(homogeneous)) {
        if (key.second != 0)
            throw std::logic_error("schur_row: class is not t-free");
        row.emplace(key.first, v);
    }
    return row;
}

} // namespace

DimTable ConjectureTables::specialized() const
{
    DimTable tbl;
    tbl.D = D;
    tbl.N = N;
    const TSeries sa = specialize(A), sb = specialize(B);
    for (int n = 1; n <= N; ++n) {
        tbl.a.push_back(sa[n].coeff(0));
        tbl.b.push_back(sb[n].coeff(0));
    }
    return tbl;
}

std::vector<std::string> ConjectureTables::non_effective() const
{
    std::vector<std::string> out;
    auto scan = [&](const std::vector<SchurRow>& rows, const char* name) {
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (const auto& [y, v] : rows[i])
                if (v < 0)
                    out.push_back(std::string(name) + " degree " + std::to_string(i + 1) + ": [" + y.str() +
                                  "] has coefficient " + to_string(v));
    };
    scan(A_schur, "A");
    scan(B_schur, "B");
    return out;
}

ConjectureTables solve_characters(int D, int N)
{
    if (D < 1 || N < 1)
        throw std::invalid_argument("solve_characters: need D >= 1 and N >= 1");
    ConjectureTables t;
    t.D = D;
    t.N = N;
    t.A = CharClass(D, N);
    t.B = CharClass(D, N);
    const LaurentPoly p1 = LaurentPoly::irreducible(1);
    for (int n = 1; n <= N; ++n) {
        // A_n P_1 + B_n changes lambda(c) at degree n by -(A_n P_1 + B_n): its L(2)-part is -A_n and
        // its L(0)-part is -B_n, so each unknown is read off its own equation.
        const CharClass c = (t.A.times_t(p1) + t.B).truncated(n);
        const CharClass lam = lambda_class(c);
        CharClass an = mult_L2k_char(lam, 1).degree_part(n);
        CharClass bn = mult_L2k_char(lam, 0).degree_part(n);
        if (n == 1)
            an += CharClass::generators(D, n);
        t.A += an.truncated(N);
        t.B += bn.truncated(N);
        t.A_schur.push_back(schur_row(an));
        t.B_schur.push_back(schur_row(bn));
    }
    return t;
}

bool check_resubstitution(const ConjectureTables& t, std::string* detail)
{
    const LaurentPoly p1 = LaurentPoly::irreducible(1);
    const CharClass lam = lambda_class(t.A.times_t(p1) + t.B);
    const CharClass l0 = mult_L2k_char(lam, 0);
    const CharClass l2 = mult_L2k_char(lam, 1);
    const CharClass want0 = CharClass::one(t.D, t.N);
    CharClass want2(t.D, t.N);
    want2 -= CharClass::generators(t.D, t.N);
    bool ok = true;
    if (!(l0 == want0)) {
        ok = false;
        if (detail)
            *detail += "L(0)-part differs from 1: " + (l0 - want0).str() + "; ";
    }
    if (!(l2 == want2)) {
        ok = false;
        if (detail)
            *detail += "L(2)-part differs from -[K^D]: " + (l2 - want2).str() + "; ";
    }
    return ok;
}

CharClass char_CJ(int n, int D)
{
    if (n < 1)
        throw std::invalid_argument("char_CJ: need n >= 1");
    const CharClass p1 = CharClass::power_sum(D, n, 1);
    CharClass all = CharClass::one(D, n);
    for (int i = 0; i < n; ++i)
        all = all * p1;
    CharClass fixed = CharClass::one(D, n);
    if (n >= 2) {
        const CharClass p2 = CharClass::power_sum(D, n, 2);
        for (int i = 0; i < n / 2; ++i)
            fixed = fixed * p2;
    }
    if (n % 2)
        fixed = fixed * p1;
    return (all + fixed).divided_by(2);
}

CharClass char_M(int n, int D)
{
    if (n < 1 || n > 7)
        throw std::out_of_range("char_M: the missing-tetrad character is only known for n <= 7");
    if (n < 4)
        return CharClass(D, n);
    const CharClass wedge4 = char_of_schur(Partition{1, 1, 1, 1}, D, n);
    const CharClass gens = CharClass::generators(D, n);
    switch (n) {
    case 4:
        return wedge4;
    case 5:
        return gens * wedge4;
    case 6:
        return (CharClass::complete(D, n, 2) * wedge4) * BigInt(2);
    default: {
        const CharClass m6 = char_M(6, D);
        CharClass m6_up(D, n);
        m6_up += m6.truncated(n);
        return gens * m6_up - char_of_schur(Partition{3, 2, 1, 1}, D, n);
    }
    }
}

bool OracleComparison::pass() const
{
    for (const auto& d : degrees)
        if (!d.equal)
            return false;
    return true;
}

OracleComparison predicted_vs_oracle(const ConjectureTables& t)
{
    OracleComparison cmp;
    cmp.D = t.D;
    for (int n = 1; n <= std::min(t.N, 7); ++n) {
        DegreeComparison row;
        row.degree = n;
        row.predicted = t.A_at(n);
        row.expected = schur_row(char_CJ(n, t.D) - char_M(n, t.D));
        row.equal = row.predicted == row.expected;
        cmp.degrees.push_back(std::move(row));
    }
    return cmp;
}

OracleComparison predicted_vs_oracle(int D, int N) { return predicted_vs_oracle(solve_characters(D, N)); }

SchurRow special_identity_excess(const ConjectureTables& t, int n)
{
    CharClass an = t.A.degree_part(n).truncated(n);
    return schur_row(an - char_CJ(n, t.D));
}

std::string schur_row_str(const SchurRow& row)
{
    if (row.empty())
        return "0";
    std::string s;
    for (auto it = row.rbegin(); it != row.rend(); ++it) {
        if (!s.empty())
            s += " + ";
        if (it->second != 1)
            s += to_string(it->second) + "*";
        s += "[" + it->first.str() + "]";
    }
    return s;
}

} // namespace jordanlab
