#pragma once

#include "jordanlab/char_class.hpp"
#include "jordanlab/dim_solver.hpp"

#include <map>
#include <string>
#include <vector>

namespace jordanlab {

using SchurRow = std::map<Partition, BigInt>;

/// Predicted classes A(D) = [J(D)] and B(D) = [Inner J(D)] through degree N.
struct ConjectureTables {
    int D = 0;
    int N = 0;
    CharClass A{1, 0};  // monomial basis, t-free
    CharClass B{1, 0};
    std::vector<SchurRow> A_schur; // index n-1 -> degree-n Schur coefficients
    std::vector<SchurRow> B_schur;

    const SchurRow& A_at(int n) const { return A_schur.at(static_cast<std::size_t>(n - 1)); }
    const SchurRow& B_at(int n) const { return B_schur.at(static_cast<std::size_t>(n - 1)); }

    /// z_i -> 1: the scalar table this class predicts.
    DimTable specialized() const;

    /// Schur coefficients that are negative, as "n:[partition]" labels.
    std::vector<std::string> non_effective() const;
};

ConjectureTables solve_characters(int D, int N);

/// lambda(A P_1 + B) : L(0) == 1 and : L(2) == -[K^D] through degree N.
bool check_resubstitution(const ConjectureTables& t, std::string* detail = nullptr);

/// Character of CJ_n(D) = (p_1^n + p_2^{n/2} p_1^{n mod 2}) / 2.
CharClass char_CJ(int n, int D);

/// Character of M_n(D) for n <= 7 from its known Schur modules; throws std::out_of_range past 7.
CharClass char_M(int n, int D);

struct DegreeComparison {
    int degree = 0;
    SchurRow predicted;
    SchurRow expected;
    bool equal = false;
};

struct OracleComparison {
    int D = 0;
    std::vector<DegreeComparison> degrees;
    bool pass() const;
};

/// [A(D)]_n against ch CJ_n(D) - ch M_n(D) for n <= min(N, 7).
OracleComparison predicted_vs_oracle(int D, int N);
OracleComparison predicted_vs_oracle(const ConjectureTables& t);

/// A_8(3) - ch CJ_8(3) in the Schur basis (expected to be the class of SI_8(3)).
SchurRow special_identity_excess(const ConjectureTables& t, int n);

std::string schur_row_str(const SchurRow& row);

} // namespace jordanlab
