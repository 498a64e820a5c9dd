#pragma once

#include "jordanlab/bigint.hpp"

#include <map>
#include <string>

namespace jordanlab {

/// Finite-support integer Laurent polynomial in t. Zero coefficients are never stored.
class LaurentPoly {
public:
    using Terms = std::map<int, BigInt>;

    LaurentPoly() = default;
    LaurentPoly(const BigInt& constant);                   // NOLINT(implicit)
    LaurentPoly(long constant) : LaurentPoly(BigInt(constant)) {} // NOLINT(implicit)

    static LaurentPoly monomial(int exponent, const BigInt& coeff = 1);
    /// t^{-k} + ... + t^k, the character of L(2k).
    static LaurentPoly irreducible(int k);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    BigInt coeff(int exponent) const;
    void add_term(int exponent, const BigInt& c);

    /// Only meaningful when non-zero.
    int min_exponent() const { return terms_.begin()->first; }
    int max_exponent() const { return terms_.rbegin()->first; }

    bool is_symmetric() const;
    LaurentPoly reflected() const;          // t -> t^{-1}
    LaurentPoly shifted(int by) const;      // multiply by t^by

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const BigInt& s);
    LaurentPoly operator-() const;

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const BigInt& s) { return a *= s; }
    friend LaurentPoly operator*(const BigInt& s, LaurentPoly a) { return a *= s; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    /// Accumulate c * t^shift * o into *this.
    void add_scaled(const LaurentPoly& o, const BigInt& c, int shift = 0);

    std::string str() const;

private:
    Terms terms_;
};

/// Coefficient of t^{-1}.
BigInt residue(const LaurentPoly& f);

/// [a : L(2k)] = c_k - c_{k+1}; throws std::invalid_argument if a is not symmetric.
BigInt multiplicity(const LaurentPoly& a, int k);

} // namespace jordanlab
