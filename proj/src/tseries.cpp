#include "jordanlab/tseries.hpp"

#include <sstream>
#include <stdexcept>

namespace jordanlab {

namespace {

void require_same_trunc(const TSeries& a, const TSeries& b, const char* op)
{
    if (a.trunc() != b.trunc())
        throw std::invalid_argument(std::string(op) + ": truncation mismatch (" + std::to_string(a.trunc()) +
                                    " vs " + std::to_string(b.trunc()) + ")");
}

} // namespace

TSeries::TSeries(int trunc)
{
    if (trunc < 0)
        throw std::invalid_argument("TSeries: negative truncation order");
    coeffs_.resize(static_cast<std::size_t>(trunc) + 1);
}

TSeries TSeries::one(int trunc)
{
    TSeries s(trunc);
    s[0] = LaurentPoly(1);
    return s;
}

TSeries TSeries::monomial(int trunc, int zdeg, const LaurentPoly& coeff)
{
    TSeries s(trunc);
    if (zdeg < 0)
        throw std::invalid_argument("TSeries::monomial: negative z-degree");
    if (zdeg <= trunc)
        s[zdeg] = coeff;
    return s;
}

bool TSeries::is_one() const
{
    if (!(coeffs_[0] == LaurentPoly(1)))
        return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero())
            return false;
    return true;
}

TSeries& TSeries::operator+=(const TSeries& o)
{
    require_same_trunc(*this, o, "series_add");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    return *this;
}

TSeries& TSeries::operator-=(const TSeries& o)
{
    require_same_trunc(*this, o, "series_sub");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    return *this;
}

TSeries TSeries::times_t(const LaurentPoly& p) const
{
    TSeries r(trunc());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        r.coeffs_[i] = coeffs_[i] * p;
    return r;
}

std::string TSeries::str() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero())
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << "(" << coeffs_[i].str() << ")";
        if (i > 0)
            os << "*z^" << i;
    }
    if (first)
        os << "0";
    os << " + O(z^" << coeffs_.size() << ")";
    return os.str();
}

TSeries series_mul(const TSeries& a, const TSeries& b)
{
    require_same_trunc(a, b, "series_mul");
    const int n = a.trunc();
    TSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (a[i].is_zero())
            continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b[j].is_zero())
                continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

TSeries series_inv(const TSeries& a)
{
    if (!(a[0] == LaurentPoly(1)))
        throw std::domain_error("series_inv: constant term must be exactly 1, got " + a[0].str());
    const int n = a.trunc();
    TSeries b(n);
    b[0] = LaurentPoly(1);
    for (int d = 1; d <= n; ++d) {
        LaurentPoly acc;
        for (int k = 1; k <= d; ++k)
            if (!a[k].is_zero() && !b[d - k].is_zero())
                acc += a[k] * b[d - k];
        b[d] = -acc;
    }
    return b;
}

TSeries series_pow(const TSeries& a, const BigInt& m)
{
    if (m == 0)
        return TSeries::one(a.trunc());
    TSeries base = m < 0 ? series_inv(a) : a;
    BigInt e = abs(m);
    TSeries result = TSeries::one(a.trunc());
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = series_mul(result, result);
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = series_mul(result, base);
    }
    return result;
}

TSeries binomial_factor(int trunc, int zdeg, int texp, const BigInt& m)
{
    if (zdeg <= 0)
        throw std::invalid_argument("binomial_factor: z-degree must be positive");
    TSeries r = TSeries::one(trunc);
    BigInt c = 1;
    for (int k = 1; k * zdeg <= trunc; ++k) {
        // c = (-1)^k C(m, k)
        c = -c * (m - (k - 1));
        c /= k;
        if (c == 0)
            break;
        r[k * zdeg].add_term(k * texp, c);
    }
    return r;
}

ZSeries residue(const TSeries& f)
{
    ZSeries r;
    r.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs())
        r.push_back(residue(c));
    return r;
}

ZSeries multiplicity(const TSeries& f, int k)
{
    ZSeries r;
    r.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs())
        r.push_back(multiplicity(c, k));
    return r;
}

} // namespace jordanlab
