#pragma once

#include "jordanlab/laurent_poly.hpp"

#include <string>
#include <vector>

namespace jordanlab {

/// Integer sequence indexed by z-degree 0..N (residues, multiplicities).
using ZSeries = std::vector<BigInt>;

/// Truncated power series in z with Laurent-polynomial coefficients in t.
/// Degrees above the truncation order are never read or written.
class TSeries {
public:
    explicit TSeries(int trunc);

    static TSeries one(int trunc);
    static TSeries monomial(int trunc, int zdeg, const LaurentPoly& coeff);

    int trunc() const { return static_cast<int>(coeffs_.size()) - 1; }
    const LaurentPoly& operator[](int deg) const { return coeffs_.at(static_cast<std::size_t>(deg)); }
    LaurentPoly& operator[](int deg) { return coeffs_.at(static_cast<std::size_t>(deg)); }
    const std::vector<LaurentPoly>& coeffs() const { return coeffs_; }

    bool is_one() const;

    TSeries& operator+=(const TSeries& o);
    TSeries& operator-=(const TSeries& o);
    friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
    friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
    friend bool operator==(const TSeries& a, const TSeries& b) { return a.coeffs_ == b.coeffs_; }

    /// Multiply every coefficient by a Laurent polynomial in t (degree-0 in z).
    TSeries times_t(const LaurentPoly& p) const;

    std::string str() const;

private:
    std::vector<LaurentPoly> coeffs_;
};

TSeries series_mul(const TSeries& a, const TSeries& b);
inline TSeries operator*(const TSeries& a, const TSeries& b) { return series_mul(a, b); }

/// Inverse of a unit with constant term exactly 1.
TSeries series_inv(const TSeries& a);

TSeries series_pow(const TSeries& a, const BigInt& m);
inline TSeries series_pow(const TSeries& a, long m) { return series_pow(a, BigInt(m)); }

/// (1 - z^zdeg t^texp)^m by the generalized binomial series; same value as series_pow
/// on the two-term factor, computed without repeated squaring.
TSeries binomial_factor(int trunc, int zdeg, int texp, const BigInt& m);

/// Coefficient of t^{-1} per z-degree.
ZSeries residue(const TSeries& f);

/// [f_n : L(2k)] per z-degree; every coefficient must be symmetric.
ZSeries multiplicity(const TSeries& f, int k);

} // namespace jordanlab
