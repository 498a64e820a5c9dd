#include "jordanlab/laurent_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace jordanlab {

LaurentPoly::LaurentPoly(const BigInt& constant)
{
    if (constant != 0)
        terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(int exponent, const BigInt& coeff)
{
    LaurentPoly p;
    p.add_term(exponent, coeff);
    return p;
}

LaurentPoly LaurentPoly::irreducible(int k)
{
    if (k < 0)
        throw std::invalid_argument("irreducible: negative index");
    LaurentPoly p;
    for (int e = -k; e <= k; ++e)
        p.terms_.emplace(e, 1);
    return p;
}

BigInt LaurentPoly::coeff(int exponent) const
{
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add_term(int exponent, const BigInt& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

bool LaurentPoly::is_symmetric() const
{
    if (terms_.empty())
        return true;
    if (min_exponent() != -max_exponent())
        return false;
    return reflected() == *this;
}

LaurentPoly LaurentPoly::reflected() const
{
    LaurentPoly r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(-e, c);
    return r;
}

LaurentPoly LaurentPoly::shifted(int by) const
{
    LaurentPoly r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace_hint(r.terms_.end(), e + by, c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const BigInt& s)
{
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_)
        c *= s;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_)
        c = -c;
    return r;
}

void LaurentPoly::add_scaled(const LaurentPoly& o, const BigInt& c, int shift)
{
    if (c == 0)
        return;
    for (const auto& [e, v] : o.terms_)
        add_term(e + shift, v * c);
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    LaurentPoly r;
    if (a.is_zero() || b.is_zero())
        return r;
    for (const auto& [ea, ca] : a.terms_)
        r.add_scaled(b, ca, ea);
    return r;
}

std::string LaurentPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        first = false;
        BigInt a = abs(c);
        if (e == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1)
            os << a.get_str() << "*";
        os << "t";
        if (e != 1)
            os << "^" << e;
    }
    return os.str();
}

BigInt residue(const LaurentPoly& f) { return f.coeff(-1); }

BigInt multiplicity(const LaurentPoly& a, int k)
{
    if (k < 0)
        throw std::invalid_argument("multiplicity: negative index");
    if (!a.is_symmetric())
        throw std::invalid_argument("multiplicity: class is not symmetric under t <-> 1/t: " + a.str());
    return a.coeff(k) - a.coeff(k + 1);
}

} // namespace jordanlab
