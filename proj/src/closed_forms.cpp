#include "jordanlab/closed_forms.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace jordanlab {

namespace {

void require_args(int n, int d, const char* fn)
{
    if (n < 1 || d < 1)
        throw std::invalid_argument(std::string(fn) + ": need n >= 1 and D >= 1");
}

BigInt exact(const Rational& q, const char* fn)
{
    if (q.get_den() != 1)
        throw std::logic_error(std::string(fn) + ": closed formula produced a non-integer " + to_string(q));
    return q.get_num();
}

} // namespace

std::int64_t totient(std::int64_t m)
{
    if (m < 1)
        throw std::invalid_argument("totient: argument must be positive");
    std::int64_t result = m;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0)
                m /= p;
            result -= result / p;
        }
    }
    if (m > 1)
        result -= result / m;
    return result;
}

BigInt necklace_sum(int n, int d)
{
    BigInt sum = 0;
    for (int i = 1; i <= n; ++i)
        if (n % i == 0)
            sum += totient(i) * ipow(d, static_cast<unsigned long>(n / i));
    return sum;
}

BigInt s(int n, int d)
{
    require_args(n, d, "s");
    const int m = n / 2;
    return (ipow(d, n) + ipow(d, static_cast<unsigned long>(n % 2 == 0 ? m : m + 1))) / 2;
}

BigInt r(int n, int d)
{
    require_args(n, d, "r");
    if (n == 1)
        return 0;
    const int m = n / 2;
    Rational val;
    if (n % 2 == 0) {
        val = Rational(ipow(d, n), 2) + Rational((d - 1) * ipow(d, m), 4) - Rational(necklace_sum(n, d), 4 * m);
    } else {
        val = Rational(ipow(d, n), 2) - Rational(necklace_sum(n, d), 4 * m + 2);
    }
    val.canonicalize();
    return exact(val, "r");
}

BigInt c(int n, int d)
{
    require_args(n, d, "c");
    const int m = n / 2;
    Rational val;
    if (n % 2 == 0) {
        val = Rational(necklace_sum(n, d), 4 * m) - Rational((d + 1) * ipow(d, m), 4);
    } else {
        val = Rational(necklace_sum(n, d), 4 * m + 2) - Rational(ipow(d, m + 1), 2);
    }
    val.canonicalize();
    return exact(val, "c");
}

WordCensus necklace_bracelet_bruteforce(int n, int d, std::int64_t budget)
{
    require_args(n, d, "necklace_bracelet_bruteforce");
    const BigInt total = ipow(d, n);
    if (total > budget)
        throw std::length_error("necklace_bracelet_bruteforce: D^n = " + to_string(total) +
                                " exceeds the enumeration budget " + std::to_string(budget));
    WordCensus wc;
    wc.n = n;
    wc.d = d;
    wc.words = total;
    const auto count = total.get_si();

    std::vector<int> w(static_cast<std::size_t>(n)), tmp(w.size()), best(w.size());
    auto least_rotation = [&](const std::vector<int>& word, std::vector<int>& out) {
        out = word;
        for (int sft = 1; sft < n; ++sft) {
            for (int i = 0; i < n; ++i)
                tmp[static_cast<std::size_t>(i)] = word[static_cast<std::size_t>((i + sft) % n)];
            if (tmp < out)
                out = tmp;
        }
    };

    std::int64_t palindromes = 0, necklaces = 0, fixed = 0;
    std::vector<int> rev(w.size()), rev_canon(w.size());
    for (std::int64_t code = 0; code < count; ++code) {
        std::int64_t x = code;
        for (int i = n - 1; i >= 0; --i) {
            w[static_cast<std::size_t>(i)] = static_cast<int>(x % d);
            x /= d;
        }
        rev.assign(w.rbegin(), w.rend());
        if (rev == w)
            ++palindromes;
        least_rotation(w, best);
        if (best != w)
            continue;
        ++necklaces;
        least_rotation(rev, rev_canon);
        if (rev_canon == w)
            ++fixed;
    }
    wc.sigma_fixed = palindromes;
    wc.necklaces = necklaces;
    wc.reversal_fixed = fixed;
    wc.oriented_pairs = (necklaces - fixed) / 2;
    wc.bracelets = wc.reversal_fixed + wc.oriented_pairs;
    return wc;
}

} // namespace jordanlab
