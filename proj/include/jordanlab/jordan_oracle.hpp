#pragma once

#include "jordanlab/char_class.hpp"
#include "jordanlab/span_basis.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace jordanlab {

using Multidegree = std::vector<int>;

struct OracleConfig {
    /// Upper bound on the number of words in the searched space (D^n, n! multilinear, or one component).
    std::uint64_t budget = 10'000'000;
};

/// (1, ..., 1) with d entries.
Multidegree multilinear(int d);

/// All multidegrees of total degree n in d letters, lexicographically decreasing.
std::vector<Multidegree> multidegrees(int n, int d);

enum class OracleSpace { SJ, CJ, InnerCJ, InnerSJ };

/// Brute-force subspaces of the tensor algebra on d generators, computed one multidegree at a time and
/// memoized. Components whose multidegrees differ by a permutation of letters share their work.
class JordanOracle {
public:
    explicit JordanOracle(int d, OracleConfig config = {});
    ~JordanOracle();
    JordanOracle(const JordanOracle&) = delete;
    JordanOracle& operator=(const JordanOracle&) = delete;

    int D() const { return d_; }

    std::size_t dim(OracleSpace space, const Multidegree& m);
    /// Sum over all multidegrees of degree n.
    std::size_t dim(OracleSpace space, int n);
    SpanBasis basis(OracleSpace space, const Multidegree& m);
    SpanBasis basis(OracleSpace space, int n);

private:
    struct Impl;
    int d_;
    OracleConfig config_;
    std::unique_ptr<Impl> impl_;
};

SpanBasis span_SJ(int n, int d, const std::optional<Multidegree>& multidegree = std::nullopt,
                  const OracleConfig& config = {});
SpanBasis span_CJ(int n, int d, const std::optional<Multidegree>& multidegree = std::nullopt,
                  const OracleConfig& config = {});
SpanBasis span_inner_CJ(int n, int d, const std::optional<Multidegree>& multidegree = std::nullopt,
                        const OracleConfig& config = {});
SpanBasis span_inner_SJ(int n, int d, const std::optional<Multidegree>& multidegree = std::nullopt,
                        const OracleConfig& config = {});

/// Dimension of every weight space met by the basis (rows are homogeneous in multidegree).
std::map<Multidegree, std::uint64_t> weight_character(const SpanBasis& basis, int d);

/// Monomial-basis character from weight dimensions; throws if they are not symmetric under S_d.
CharClass weights_to_char(const std::map<Multidegree, std::uint64_t>& weights, int d, int trunc);

struct JacobiReport {
    int N = 0;
    bool product_equals_sum = false;
    bool residue_l0 = false;
    bool residue_l2 = false;
    bool pass() const { return product_equals_sum && residue_l0 && residue_l2; }
};

/// prod (1 - z^n t)(1 - z^n / t)(1 - z^n) against sum (-1)^n z^{n(n+1)/2} P_n through z^N.
JacobiReport jacobi_triple_check(int N);

} // namespace jordanlab
