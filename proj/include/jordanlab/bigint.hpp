#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace jordanlab {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& v) { return v.get_str(10); }

inline std::string to_string(const Rational& v)
{
    if (v.get_den() == 1)
        return v.get_num().get_str(10);
    return v.get_num().get_str(10) + "/" + v.get_den().get_str(10);
}

/// Generalized binomial coefficient C(m, k) for any integer m and k >= 0.
inline BigInt binomial(const BigInt& m, unsigned long k)
{
    BigInt num = 1;
    for (unsigned long i = 0; i < k; ++i)
        num *= m - BigInt(i);
    BigInt den;
    mpz_fac_ui(den.get_mpz_t(), k);
    return BigInt(num / den);
}

inline BigInt binomial(long m, unsigned long k) { return binomial(BigInt(m), k); }

inline BigInt ipow(long base, unsigned long e)
{
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), e);
    if (base < 0 && (e & 1))
        r = -r;
    return r;
}

inline BigInt factorial(unsigned long n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

} // namespace jordanlab
