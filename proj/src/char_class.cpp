#include "jordanlab/char_class.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace jordanlab {

namespace {

std::vector<int> padded(const Partition& p, int d)
{
    std::vector<int> v(static_cast<std::size_t>(d), 0);
    for (int i = 0; i < p.height(); ++i)
        v[static_cast<std::size_t>(i)] = p[i];
    return v;
}

/// Distinct exponent vectors in d variables whose sorted form is lambda.
std::vector<std::vector<int>> orbit(const Partition& lambda, int d)
{
    std::vector<int> v = padded(lambda, d);
    std::sort(v.begin(), v.end());
    std::vector<std::vector<int>> out;
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

/// Dense index of all exponent vectors of total degree <= n in d variables.
struct MonomialIndex {
    int d;
    int n;
    std::vector<std::vector<int>> exps; // ordered by total degree
    std::vector<int> degree;
    std::vector<int> lookup;            // mixed radix (n+1)^d -> position or -1

    MonomialIndex(int d_, int n_) : d(d_), n(n_)
    {
        std::size_t cells = 1;
        for (int i = 0; i < d; ++i)
            cells *= static_cast<std::size_t>(n + 1);
        lookup.assign(cells, -1);
        for (int deg = 0; deg <= n; ++deg) {
            std::vector<int> e(static_cast<std::size_t>(d), 0);
            std::function<void(int, int)> rec = [&](int i, int rest) {
                if (i == d - 1) {
                    e[static_cast<std::size_t>(i)] = rest;
                    lookup[code(e)] = static_cast<int>(exps.size());
                    exps.push_back(e);
                    degree.push_back(deg);
                    return;
                }
                for (int v = rest; v >= 0; --v) {
                    e[static_cast<std::size_t>(i)] = v;
                    rec(i + 1, rest - v);
                }
            };
            rec(0, deg);
        }
    }

    std::size_t code(const std::vector<int>& e) const
    {
        std::size_t c = 0;
        for (int x : e)
            c = c * static_cast<std::size_t>(n + 1) + static_cast<std::size_t>(x);
        return c;
    }

    int find(const std::vector<int>& e) const
    {
        int total = 0;
        for (int x : e) {
            if (x < 0)
                return -1;
            total += x;
        }
        if (total > n)
            return -1;
        return lookup[code(e)];
    }
};

} // namespace

// ---------------------------------------------------------------------------------------------

CharClass::CharClass(int d, int trunc, CharBasis basis) : d_(d), trunc_(trunc), basis_(basis)
{
    if (d < 1)
        throw std::invalid_argument("CharClass: need D >= 1");
    if (trunc < 0)
        throw std::invalid_argument("CharClass: negative truncation");
}

CharClass CharClass::one(int d, int trunc)
{
    CharClass c(d, trunc);
    c.add(Partition{}, LaurentPoly(1));
    return c;
}

CharClass CharClass::generators(int d, int trunc) { return monomial(d, trunc, Partition{1}); }

CharClass CharClass::monomial(int d, int trunc, const Partition& lambda, const LaurentPoly& coeff)
{
    CharClass c(d, trunc);
    c.add(lambda, coeff);
    return c;
}

CharClass CharClass::power_sum(int d, int trunc, int k)
{
    if (k < 1)
        throw std::invalid_argument("power_sum: k must be positive");
    return monomial(d, trunc, Partition{k});
}

CharClass CharClass::complete(int d, int trunc, int k)
{
    CharClass c(d, trunc);
    if (k < 0)
        return c;
    for (const auto& mu : partitions_of(k, d))
        c.add(mu, LaurentPoly(1));
    return c;
}

LaurentPoly CharClass::coeff(const Partition& lambda) const
{
    auto it = terms_.find(lambda);
    return it == terms_.end() ? LaurentPoly() : it->second;
}

void CharClass::add(const Partition& lambda, const LaurentPoly& c)
{
    if (lambda.height() > d_)
        throw std::invalid_argument("CharClass: partition " + lambda.str() + " has more than D=" +
                                    std::to_string(d_) + " parts");
    if (lambda.size() > trunc_ || c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

CharClass CharClass::degree_part(int n) const
{
    CharClass r(d_, trunc_, basis_);
    for (const auto& [lam, c] : terms_)
        if (lam.size() == n)
            r.terms_.emplace(lam, c);
    return r;
}

CharClass CharClass::truncated(int trunc) const
{
    CharClass r(d_, trunc, basis_);
    for (const auto& [lam, c] : terms_)
        if (lam.size() <= trunc)
            r.terms_.emplace(lam, c);
    return r;
}

CharClass CharClass::times_t(const LaurentPoly& p) const
{
    CharClass r(d_, trunc_, basis_);
    for (const auto& [lam, c] : terms_)
        r.add(lam, c * p);
    return r;
}

bool CharClass::is_t_symmetric() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.is_symmetric(); });
}

void CharClass::require_compatible(const CharClass& o, const char* op) const
{
    if (o.d_ != d_)
        throw std::invalid_argument(std::string(op) + ": D mismatch");
    if (o.trunc_ != trunc_)
        throw std::invalid_argument(std::string(op) + ": truncation mismatch");
    if (o.basis_ != basis_)
        throw std::invalid_argument(std::string(op) + ": basis mismatch");
}

CharClass& CharClass::operator+=(const CharClass& o)
{
    require_compatible(o, "char_add");
    for (const auto& [lam, c] : o.terms_)
        add(lam, c);
    return *this;
}

CharClass& CharClass::operator-=(const CharClass& o)
{
    require_compatible(o, "char_sub");
    for (const auto& [lam, c] : o.terms_)
        add(lam, -c);
    return *this;
}

CharClass& CharClass::operator*=(const BigInt& s)
{
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [lam, c] : terms_)
        c *= s;
    return *this;
}

CharClass CharClass::divided_by(long k) const
{
    CharClass r(d_, trunc_, basis_);
    for (const auto& [lam, c] : terms_) {
        LaurentPoly q;
        for (const auto& [e, v] : c.terms()) {
            if (!mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(k)))
                throw std::domain_error("CharClass::divided_by: coefficient not divisible by " + std::to_string(k));
            q.add_term(e, v / k);
        }
        r.terms_.emplace(lam, std::move(q));
    }
    return r;
}

std::string CharClass::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    const char* sym = basis_ == CharBasis::schur ? "s" : "m";
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << it->second.str() << ")*" << sym << "[" << it->first.str() << "]";
    }
    return os.str();
}

// ---------------------------------------------------------------------------------------------

BigInt orbit_size(const Partition& lambda, int d)
{
    if (lambda.height() > d)
        return 0;
    std::vector<int> v = padded(lambda, d);
    BigInt r = factorial(static_cast<unsigned long>(d));
    std::size_t i = 0;
    while (i < v.size()) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i])
            ++j;
        r /= factorial(j - i);
        i = j;
    }
    return r;
}

CharClass char_mul(const CharClass& a, const CharClass& b)
{
    if (a.D() != b.D() || a.trunc() != b.trunc())
        throw std::invalid_argument("char_mul: D or truncation mismatch");
    if (a.basis() != CharBasis::monomial || b.basis() != CharBasis::monomial)
        throw std::invalid_argument("char_mul: both factors must be in the monomial basis");
    const int d = a.D(), n = a.trunc();
    CharClass r(d, n);
    if (a.is_zero() || b.is_zero())
        return r;

    std::vector<bool> size_a(static_cast<std::size_t>(n) + 1), size_b(static_cast<std::size_t>(n) + 1);
    for (const auto& [lam, c] : a.terms())
        size_a[static_cast<std::size_t>(lam.size())] = true;
    for (const auto& [lam, c] : b.terms())
        size_b[static_cast<std::size_t>(lam.size())] = true;

    // Coefficient of z^nu in the product: sum over alpha <= nu of a[sort alpha] * b[sort(nu - alpha)].
    std::vector<int> alpha(static_cast<std::size_t>(d)), rest(static_cast<std::size_t>(d));
    for (int total = 0; total <= n; ++total) {
        bool reachable = false;
        for (int k = 0; k <= total; ++k)
            reachable = reachable || (size_a[static_cast<std::size_t>(k)] && size_b[static_cast<std::size_t>(total - k)]);
        if (!reachable)
            continue;
        for (const auto& nu : partitions_of(total, d)) {
            const std::vector<int> target = padded(nu, d);
            LaurentPoly acc;
            std::fill(alpha.begin(), alpha.end(), 0);
            while (true) {
                int asize = 0;
                for (int x : alpha)
                    asize += x;
                if (size_a[static_cast<std::size_t>(asize)] && size_b[static_cast<std::size_t>(total - asize)]) {
                    auto ia = a.terms().find(Partition::from_exponents(alpha));
                    if (ia != a.terms().end()) {
                        for (std::size_t i = 0; i < rest.size(); ++i)
                            rest[i] = target[i] - alpha[i];
                        auto ib = b.terms().find(Partition::from_exponents(rest));
                        if (ib != b.terms().end())
                            acc += ia->second * ib->second;
                    }
                }
                // odometer over 0 <= alpha_i <= target_i
                std::size_t i = 0;
                while (i < alpha.size() && alpha[i] == target[i]) {
                    alpha[i] = 0;
                    ++i;
                }
                if (i == alpha.size())
                    break;
                ++alpha[i];
            }
            r.add(nu, acc);
        }
    }
    return r;
}

CharClass lambda_class(const CharClass& c)
{
    if (c.basis() != CharBasis::monomial)
        throw std::invalid_argument("lambda_class: argument must be in the monomial basis");
    if (c.has_constant_term())
        throw std::domain_error("lambda_class: argument has a nonzero constant term");
    const int d = c.D(), n = c.trunc();

    struct Weight {
        std::vector<int> mu;
        int size;
        int texp;
        BigInt mult;
    };
    std::vector<Weight> weights;
    int max_abs_t = 0;
    for (const auto& [lam, coeff] : c.terms()) {
        for (const auto& mu : orbit(lam, d))
            for (const auto& [e, m] : coeff.terms()) {
                weights.push_back({mu, lam.size(), e, m});
                max_abs_t = std::max(max_abs_t, std::abs(e));
            }
    }

    const MonomialIndex idx(d, n);
    const int tspan = n * max_abs_t;
    const int width = 2 * tspan + 1;
    std::vector<BigInt> data(idx.exps.size() * static_cast<std::size_t>(width));
    data[static_cast<std::size_t>(tspan)] = 1; // the constant monomial is index 0

    std::vector<BigInt> binom;
    std::vector<int> src(static_cast<std::size_t>(d));
    for (const auto& w : weights) {
        const int kmax = n / w.size;
        binom.assign(static_cast<std::size_t>(kmax) + 1, 0);
        BigInt ck = 1;
        for (int k = 1; k <= kmax; ++k) {
            ck = -ck * (w.mult - (k - 1));
            ck /= k;
            binom[static_cast<std::size_t>(k)] = ck;
        }
        // descending degree so that sources are still unmodified
        for (std::size_t pos = idx.exps.size(); pos-- > 0;) {
            const auto& beta = idx.exps[pos];
            BigInt* out = &data[pos * static_cast<std::size_t>(width)];
            for (int k = 1; k <= kmax; ++k) {
                if (binom[static_cast<std::size_t>(k)] == 0)
                    break;
                bool ok = true;
                for (int i = 0; i < d; ++i) {
                    src[static_cast<std::size_t>(i)] = beta[static_cast<std::size_t>(i)] - k * w.mu[static_cast<std::size_t>(i)];
                    ok = ok && src[static_cast<std::size_t>(i)] >= 0;
                }
                if (!ok)
                    break;
                const int spos = idx.find(src);
                const BigInt* in = &data[static_cast<std::size_t>(spos) * static_cast<std::size_t>(width)];
                const int shift = k * w.texp;
                const BigInt& bk = binom[static_cast<std::size_t>(k)];
                for (int t = 0; t < width; ++t) {
                    if (in[t] == 0)
                        continue;
                    const int dst = t + shift;
                    if (dst < 0 || dst >= width)
                        throw std::logic_error("lambda_class: t-exponent out of tracked range");
                    out[dst] += bk * in[t];
                }
            }
        }
    }

    CharClass r(d, n);
    for (int total = 0; total <= n; ++total)
        for (const auto& nu : partitions_of(total, d)) {
            const int pos = idx.find(padded(nu, d));
            const BigInt* coeffs = &data[static_cast<std::size_t>(pos) * static_cast<std::size_t>(width)];
            LaurentPoly p;
            for (int t = 0; t < width; ++t)
                p.add_term(t - tspan, coeffs[t]);
            r.add(nu, p);
        }
    return r;
}

namespace {

std::mutex g_schur_mutex;
std::map<std::pair<Partition, int>, CharClass> g_schur_cache;

CharClass jacobi_trudi(const Partition& y, int d)
{
    const int n = y.size();
    const int h = y.height();
    std::vector<CharClass> complete;
    for (int k = 0; k <= n; ++k)
        complete.push_back(CharClass::complete(d, n, k));
    auto h_at = [&](int row, int col) -> const CharClass* {
        const int k = y[row] - row + col;
        if (k < 0 || k > n)
            return nullptr;
        return &complete[static_cast<std::size_t>(k)];
    };
    std::map<std::pair<int, unsigned>, CharClass> memo;
    std::function<CharClass(int, unsigned)> det = [&](int row, unsigned mask) -> CharClass {
        if (row == h)
            return CharClass::one(d, n);
        auto key = std::make_pair(row, mask);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        CharClass acc(d, n);
        int seen = 0;
        for (int col = 0; col < h; ++col) {
            if (!(mask & (1u << col)))
                continue;
            const CharClass* entry = h_at(row, col);
            if (entry && !entry->is_zero()) {
                CharClass term = char_mul(*entry, det(row + 1, mask & ~(1u << col)));
                if (seen % 2)
                    acc -= term;
                else
                    acc += term;
            }
            ++seen;
        }
        memo.emplace(key, acc);
        return acc;
    };
    return det(0, (1u << h) - 1u);
}

} // namespace

CharClass char_of_schur(const Partition& y, int d, int trunc)
{
    if (trunc < 0)
        trunc = y.size();
    CharClass zero(d, trunc);
    if (y.height() > d || y.size() > trunc)
        return zero;
    const auto key = std::make_pair(y, d);
    {
        std::lock_guard lock(g_schur_mutex);
        if (auto it = g_schur_cache.find(key); it != g_schur_cache.end()) {
            CharClass r(d, trunc);
            for (const auto& [lam, c] : it->second.terms())
                r.add(lam, c);
            return r;
        }
    }
    CharClass s = jacobi_trudi(y, d);
    {
        std::lock_guard lock(g_schur_mutex);
        g_schur_cache.emplace(key, s);
    }
    CharClass r(d, trunc);
    for (const auto& [lam, c] : s.terms())
        r.add(lam, c);
    return r;
}

CharClass schur_decompose(const CharClass& c)
{
    if (c.basis() != CharBasis::monomial)
        throw std::invalid_argument("schur_decompose: input must be in the monomial basis");
    CharClass rest = c;
    CharClass out(c.D(), c.trunc(), CharBasis::schur);
    while (!rest.is_zero()) {
        const auto lead = rest.terms().rbegin();
        const Partition lam = lead->first;
        const LaurentPoly coeff = lead->second;
        out.add(lam, coeff);
        const CharClass s = char_of_schur(lam, c.D(), c.trunc());
        for (const auto& [mu, v] : s.terms())
            rest.add(mu, -(v * coeff));
        if (rest.coeff(lam).is_zero() == false)
            throw std::logic_error("schur_decompose: leading coefficient did not cancel");
    }
    return out;
}

CharClass schur_to_monomial(const CharClass& c)
{
    if (c.basis() != CharBasis::schur)
        throw std::invalid_argument("schur_to_monomial: input must be in the Schur basis");
    CharClass out(c.D(), c.trunc());
    for (const auto& [lam, coeff] : c.terms()) {
        const CharClass sch = char_of_schur(lam, c.D(), c.trunc());
        for (const auto& [mu, v] : sch.terms())
            out.add(mu, v * coeff);
    }
    return out;
}

std::map<std::pair<Partition, int>, BigInt> schur_coefficients(const CharClass& c)
{
    const CharClass s = c.basis() == CharBasis::schur ? c : schur_decompose(c);
    std::map<std::pair<Partition, int>, BigInt> out;
    for (const auto& [lam, coeff] : s.terms())
        for (const auto& [e, v] : coeff.terms())
            out.emplace(std::make_pair(lam, e), v);
    return out;
}

CharClass mult_L2k_char(const CharClass& c, int k)
{
    CharClass r(c.D(), c.trunc(), c.basis());
    for (const auto& [lam, coeff] : c.terms())
        r.add(lam, LaurentPoly(multiplicity(coeff, k)));
    return r;
}

TSeries specialize(const CharClass& c)
{
    if (c.basis() != CharBasis::monomial)
        throw std::invalid_argument("specialize: input must be in the monomial basis");
    TSeries s(c.trunc());
    for (const auto& [lam, coeff] : c.terms())
        s[lam.size()].add_scaled(coeff, orbit_size(lam, c.D()));
    return s;
}

} // namespace jordanlab
