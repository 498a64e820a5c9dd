#pragma once

#include "jordanlab/laurent_poly.hpp"
#include "jordanlab/partition.hpp"
#include "jordanlab/tseries.hpp"

#include <map>
#include <string>
#include <utility>

namespace jordanlab {

enum class CharBasis { monomial, schur };

/// Truncated virtual character of GL(D) x PSL(2): symmetric series in z_1..z_D (total degree <= N)
/// with Laurent coefficients in t. Keys index m_lambda (monomial basis) or s_lambda (Schur basis).
class CharClass {
public:
    using Terms = std::map<Partition, LaurentPoly>;

    CharClass(int d, int trunc, CharBasis basis = CharBasis::monomial);

    static CharClass one(int d, int trunc);
    /// [K^D] = z_1 + ... + z_D.
    static CharClass generators(int d, int trunc);
    /// m_lambda * t^texp.
    static CharClass monomial(int d, int trunc, const Partition& lambda, const LaurentPoly& coeff = LaurentPoly(1));
    /// Power sum p_k = sum z_i^k.
    static CharClass power_sum(int d, int trunc, int k);
    /// Complete homogeneous h_k.
    static CharClass complete(int d, int trunc, int k);

    int D() const { return d_; }
    int trunc() const { return trunc_; }
    CharBasis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    LaurentPoly coeff(const Partition& lambda) const;
    /// Silently drops partitions of size > trunc; throws if height > D.
    void add(const Partition& lambda, const LaurentPoly& c);

    CharClass degree_part(int n) const;
    CharClass truncated(int trunc) const;
    /// Multiply every coefficient by a Laurent polynomial in t.
    CharClass times_t(const LaurentPoly& p) const;
    bool is_t_symmetric() const;
    bool has_constant_term() const { return terms_.count(Partition{}) > 0; }

    CharClass& operator+=(const CharClass& o);
    CharClass& operator-=(const CharClass& o);
    CharClass& operator*=(const BigInt& s);
    friend CharClass operator+(CharClass a, const CharClass& b) { return a += b; }
    friend CharClass operator-(CharClass a, const CharClass& b) { return a -= b; }
    friend CharClass operator*(CharClass a, const BigInt& s) { return a *= s; }
    friend bool operator==(const CharClass& a, const CharClass& b)
    {
        return a.d_ == b.d_ && a.basis_ == b.basis_ && a.terms_ == b.terms_;
    }

    /// Exact division of every coefficient; throws if not divisible.
    CharClass divided_by(long k) const;

    std::string str() const;

private:
    void require_compatible(const CharClass& o, const char* op) const;

    int d_;
    int trunc_;
    CharBasis basis_;
    Terms terms_;
};

/// Number of distinct exponent vectors in D variables that sort to lambda.
BigInt orbit_size(const Partition& lambda, int d);

CharClass char_mul(const CharClass& a, const CharClass& b);
inline CharClass operator*(const CharClass& a, const CharClass& b) { return char_mul(a, b); }

/// lambda(c) = prod over weights z^mu t^j of multiplicity m of (1 - z^mu t^j)^m. Requires zero constant term.
CharClass lambda_class(const CharClass& c);

/// Schur polynomial s_Y(z_1..z_D) in the monomial basis (Jacobi-Trudi); zero when height(Y) > D.
CharClass char_of_schur(const Partition& y, int d, int trunc = -1);

/// Change of basis monomial -> Schur by leading-monomial elimination.
CharClass schur_decompose(const CharClass& c);

/// Schur-basis class back to the monomial basis.
CharClass schur_to_monomial(const CharClass& c);

/// Flattened Schur coefficients keyed by (partition, t-exponent).
std::map<std::pair<Partition, int>, BigInt> schur_coefficients(const CharClass& c);

/// The GL(D)-class [c : L(2k)], extracted per z-monomial; c must be t-symmetric.
CharClass mult_L2k_char(const CharClass& c, int k);

/// Specialize z_i -> z: the image in Z[t, 1/t][[z]] (monomial basis only).
TSeries specialize(const CharClass& c);

} // namespace jordanlab
