#include "jordanlab/partition_kit.hpp"

#include <sstream>
#include <stdexcept>

namespace jordanlab {

namespace {

int hook(const Partition& y, int row, int col)
{
    return (y[row] - col - 1) + (y.column_height(col) - row - 1) + 1;
}

BigInt choose(int n, int k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

} // namespace

BigInt dim_sn(const Partition& y)
{
    BigInt hooks = 1;
    for (int i = 0; i < y.height(); ++i)
        for (int j = 0; j < y[i]; ++j)
            hooks *= hook(y, i, j);
    return factorial(static_cast<unsigned long>(y.size())) / hooks;
}

BigInt dim_gl(const Partition& y, int d)
{
    if (y.height() > d)
        return 0;
    BigInt num = 1, den = 1;
    for (int i = 0; i < y.height(); ++i)
        for (int j = 0; j < y[i]; ++j) {
            num *= d + j - i;
            den *= hook(y, i, j);
        }
    return num / den;
}

VirtualSymClass::VirtualSymClass(int n, std::initializer_list<std::pair<Partition, long>> terms) : n_(n)
{
    for (const auto& [y, c] : terms)
        add(y, c);
}

BigInt VirtualSymClass::coeff(const Partition& y) const
{
    auto it = coeffs_.find(y);
    return it == coeffs_.end() ? BigInt(0) : it->second;
}

void VirtualSymClass::add(const Partition& y, const BigInt& c)
{
    if (y.size() != n_)
        throw std::invalid_argument("VirtualSymClass: diagram " + y.str() + " has size " +
                                    std::to_string(y.size()) + ", expected " + std::to_string(n_));
    if (c == 0)
        return;
    auto [it, inserted] = coeffs_.try_emplace(y, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            coeffs_.erase(it);
    }
}

BigInt VirtualSymClass::dimension() const
{
    BigInt total = 0;
    for (const auto& [y, c] : coeffs_)
        total += c * dim_sn(y);
    return total;
}

VirtualSymClass& VirtualSymClass::operator+=(const VirtualSymClass& o)
{
    if (o.n_ != n_)
        throw std::invalid_argument("VirtualSymClass: size mismatch");
    for (const auto& [y, c] : o.coeffs_)
        add(y, c);
    return *this;
}

VirtualSymClass& VirtualSymClass::operator-=(const VirtualSymClass& o)
{
    if (o.n_ != n_)
        throw std::invalid_argument("VirtualSymClass: size mismatch");
    for (const auto& [y, c] : o.coeffs_)
        add(y, -c);
    return *this;
}

std::string VirtualSymClass::str() const
{
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    // largest diagrams first
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [y, c] = *it;
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        first = false;
        BigInt a = abs(c);
        if (a != 1)
            os << a.get_str();
        os << "[" << y.str() << "]";
    }
    return os.str();
}

std::vector<Partition> removable(const Partition& y)
{
    std::vector<Partition> out;
    for (int i = 0; i < y.height(); ++i) {
        if (y[i] > y[i + 1]) {
            std::vector<int> p = y.parts();
            if (--p[static_cast<std::size_t>(i)] == 0)
                p.pop_back();
            out.emplace_back(std::move(p));
        }
    }
    return out;
}

std::vector<Partition> addable(const Partition& y)
{
    std::vector<Partition> out;
    for (int i = 0; i <= y.height(); ++i) {
        if (i == 0 || y[i - 1] > y[i]) {
            std::vector<int> p = y.parts();
            if (i == y.height())
                p.push_back(1);
            else
                ++p[static_cast<std::size_t>(i)];
            out.emplace_back(std::move(p));
        }
    }
    return out;
}

VirtualSymClass restrict(const VirtualSymClass& c)
{
    if (c.n() < 1)
        throw std::invalid_argument("restrict: class of S_0 has no restriction");
    VirtualSymClass r(c.n() - 1);
    for (const auto& [y, k] : c.coeffs())
        for (const auto& y2 : removable(y))
            r.add(y2, k);
    return r;
}

VirtualSymClass induce(const VirtualSymClass& c)
{
    VirtualSymClass r(c.n() + 1);
    for (const auto& [y, k] : c.coeffs())
        for (const auto& y2 : addable(y))
            r.add(y2, k);
    return r;
}

VirtualSymClass md_class_from_m(const VirtualSymClass& c_m) { return induce(restrict(c_m)) - c_m; }

VirtualSymClass known_m_class(int d)
{
    using P = Partition;
    switch (d) {
    case 4:
        return VirtualSymClass(5, {{P{1, 1, 1, 1, 1}, 1}});
    case 5:
        return VirtualSymClass(6, {{P{2, 1, 1, 1, 1}, 1}});
    case 6:
        return VirtualSymClass(7, {{P{3, 1, 1, 1, 1}, 2}});
    case 7:
        return VirtualSymClass(8, {{P{4, 1, 1, 1, 1}, 2},
                                   {P{3, 2, 1, 1, 1}, 1},
                                   {P{2, 2, 1, 1, 1, 1}, 1},
                                   {P{3, 1, 1, 1, 1, 1}, 1}});
    default:
        if (d >= 1 && d <= 3)
            return VirtualSymClass(d + 1);
        throw std::out_of_range("known_m_class: only D <= 7 is known");
    }
}

VirtualSymClass reference_md8_class()
{
    using P = Partition;
    VirtualSymClass c(8);
    c.add(P{4, 1, 1, 1, 1}, 4);
    c.add(P{3, 2, 1, 1, 1}, 6);
    c.add(P{4, 2, 2}, 1);
    c.add(P{3, 1, 1, 1, 1, 1}, 5);
    c.add(P{2, 1, 1, 1, 1, 1, 1}, 2);
    c.add(P{2, 1, 1, 1, 1, 1, 1}, 2);
    c.add(P{2, 2, 2, 1, 1}, 2);
    c.add(P{3, 3, 1, 1}, 1);
    c.add(P{4, 2, 1, 1}, 3);
    c.add(P{5, 1, 1, 1}, 2);
    return c;
}

BigInt closed_dim_M(int n, int d)
{
    if (n < 1 || n > 7)
        throw std::out_of_range("closed_dim_M: no closed formula for degree " + std::to_string(n));
    switch (n) {
    case 4:
        return choose(d, 4);
    case 5:
        return d * choose(d, 4);
    case 6:
        return 2 * choose(d + 1, 2) * choose(d, 4);
    case 7:
        return 2 * d * choose(d + 1, 2) * choose(d, 4) - dim_gl(Partition{3, 2, 1, 1}, d);
    default:
        return 0;
    }
}

BigInt closed_dim_MD(int n, int d)
{
    if (n < 1 || n > 7)
        throw std::out_of_range("closed_dim_MD: no closed formula for degree " + std::to_string(n));
    switch (n) {
    case 5:
        return d * choose(d, 4) - choose(d, 5);
    case 6:
        return choose(d, 6) + d * d * choose(d, 4) - d * choose(d, 5);
    case 7:
        return 2 * (d * dim_gl(Partition{3, 1, 1, 1}, d) + choose(d, 2) * choose(d, 5) - choose(d, 7));
    default:
        return 0;
    }
}

C1Report check_c1_constraint(const VirtualSymClass& c, int d)
{
    C1Report rep;
    const bool bounded = d % 4 == 2 || d % 4 == 3;
    for (const auto& [y, k] : c.coeffs()) {
        const int c1 = y.column_height(0), c2 = y.column_height(1);
        if (!(c1 >= 5 || (c1 == 4 && c2 == 4))) {
            rep.pass = false;
            rep.violations.push_back("[" + y.str() + "]: c1=" + std::to_string(c1) + ", c2=" + std::to_string(c2));
        }
        if (bounded && c1 > d - 1) {
            rep.pass = false;
            rep.violations.push_back("[" + y.str() + "]: c1=" + std::to_string(c1) + " exceeds D-1=" +
                                     std::to_string(d - 1));
        }
    }
    return rep;
}

} // namespace jordanlab
