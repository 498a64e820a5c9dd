#include "jordanlab/jordan_oracle.hpp"

#include "jordanlab/echelon.hpp"
#include "jordanlab/tseries.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace jordanlab {

namespace {

using IntVec = std::vector<std::pair<Word, std::int64_t>>;

IntVec normalize(IntVec v)
{
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    IntVec out;
    for (const auto& [w, c] : v) {
        if (!out.empty() && out.back().first == w)
            out.back().second += c;
        else
            out.emplace_back(w, c);
        if (out.back().second == 0)
            out.pop_back();
    }
    return out;
}

IntVec bracket(const IntVec& a, const IntVec& b, int sign)
{
    IntVec terms;
    terms.reserve(2 * a.size() * b.size());
    for (const auto& [u, x] : a)
        for (const auto& [v, y] : b) {
            terms.emplace_back(u * v, x * y);
            terms.emplace_back(v * u, sign * x * y);
        }
    return normalize(std::move(terms));
}

int total(const Multidegree& m) { return std::accumulate(m.begin(), m.end(), 0); }

bool is_canonical(const Multidegree& m) { return std::is_sorted(m.begin(), m.end(), std::greater<>()); }

/// Letter j of the sorted multidegree corresponds to letter order[j] of m.
std::vector<int> sorting_order(const Multidegree& m)
{
    std::vector<int> order(m.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return m[static_cast<std::size_t>(a)] > m[static_cast<std::size_t>(b)]; });
    return order;
}

Multidegree sorted_desc(Multidegree m)
{
    std::sort(m.begin(), m.end(), std::greater<>());
    return m;
}

Word relabel(const Word& w, const std::vector<int>& map)
{
    std::vector<int> letters = w.letters();
    for (int& x : letters)
        x = map[static_cast<std::size_t>(x)];
    return Word::from_letters(letters);
}

BigInt multinomial(const Multidegree& m)
{
    BigInt r = factorial(static_cast<unsigned long>(total(m)));
    for (int k : m)
        r /= factorial(static_cast<unsigned long>(k));
    return r;
}

void enumerate_words(Multidegree& left, std::vector<int>& prefix, int n, std::vector<Word>& out)
{
    if (static_cast<int>(prefix.size()) == n) {
        out.push_back(Word::from_letters(prefix));
        return;
    }
    for (std::size_t i = 0; i < left.size(); ++i) {
        if (left[i] == 0)
            continue;
        --left[i];
        prefix.push_back(static_cast<int>(i));
        enumerate_words(left, prefix, n, out);
        prefix.pop_back();
        ++left[i];
    }
}

/// Pairs (m1, m2) with m1 + m2 = m, both nonzero, each unordered pair once; smaller factor degree first.
std::vector<std::pair<Multidegree, Multidegree>> splits(const Multidegree& m)
{
    std::vector<std::pair<Multidegree, Multidegree>> out;
    Multidegree m1(m.size(), 0);
    while (true) {
        std::size_t i = 0;
        while (i < m.size() && m1[i] == m[i])
            m1[i++] = 0;
        if (i == m.size())
            break;
        ++m1[i];
        Multidegree m2(m.size());
        for (std::size_t k = 0; k < m.size(); ++k)
            m2[k] = m[k] - m1[k];
        if (total(m2) == 0 || m1 > m2)
            continue;
        out.emplace_back(m1, m2);
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::min(total(a.first), total(a.second)) < std::min(total(b.first), total(b.second));
    });
    return out;
}

} // namespace

Multidegree multilinear(int d) { return Multidegree(static_cast<std::size_t>(d), 1); }

std::vector<Multidegree> multidegrees(int n, int d)
{
    std::vector<Multidegree> out;
    Multidegree cur(static_cast<std::size_t>(d), 0);
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i + 1 == cur.size()) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (int k = left; k >= 0; --k) {
            cur[i] = k;
            self(self, i + 1, left - k);
        }
    };
    if (d >= 1 && n >= 0)
        rec(rec, 0, n);
    return out;
}

struct JordanOracle::Impl {
    struct Component {
        std::vector<Word> even;
        std::vector<Word> odd;
        std::unordered_map<std::uint64_t, int> even_index;
        std::unordered_map<std::uint64_t, int> odd_index;
    };
    struct Space {
        std::unique_ptr<EchelonForm> ech;
        std::vector<IntVec> gens;
    };

    int d;
    OracleConfig config;
    std::map<Multidegree, Component> components;
    std::map<Multidegree, Space> sj, inner_cj, inner_sj;
    std::map<Multidegree, std::vector<IntVec>> relabeled;

    void check(const Multidegree& m) const
    {
        if (static_cast<int>(m.size()) != d)
            throw std::invalid_argument("JordanOracle: multidegree has wrong length");
        if (std::any_of(m.begin(), m.end(), [](int k) { return k < 0; }) || total(m) < 1)
            throw std::invalid_argument("JordanOracle: multidegree must be nonnegative with positive total");
        if (total(m) > Word::kMaxLength)
            throw std::invalid_argument("JordanOracle: degree exceeds word capacity");
        if (multinomial(m) > BigInt(std::to_string(config.budget)))
            throw std::length_error("JordanOracle: component exceeds the word budget");
    }

    const Component& component(const Multidegree& m)
    {
        if (auto it = components.find(m); it != components.end())
            return it->second;
        check(m);
        std::vector<Word> words;
        Multidegree left = m;
        std::vector<int> prefix;
        enumerate_words(left, prefix, total(m), words);
        Component c;
        for (const Word& w : words) {
            const Word r = w.reversed();
            if (w.code <= r.code) {
                c.even_index.emplace(w.code, static_cast<int>(c.even.size()));
                c.even.push_back(w);
            }
            if (w.code < r.code) {
                c.odd_index.emplace(w.code, static_cast<int>(c.odd.size()));
                c.odd.push_back(w);
            }
        }
        return components.emplace(m, std::move(c)).first->second;
    }

    static std::vector<std::pair<int, std::int64_t>> coords(const Component& c, const IntVec& v, bool odd)
    {
        std::vector<std::pair<int, std::int64_t>> out;
        const auto& index = odd ? c.odd_index : c.even_index;
        for (const auto& [w, x] : v) {
            auto it = index.find(w.code);
            if (it != index.end())
                out.emplace_back(it->second, x);
        }
        return out;
    }

    const std::vector<IntVec>& sj_gens(const Multidegree& m)
    {
        if (is_canonical(m) || sj.count(m))
            return sj_space(m).gens;
        if (auto it = relabeled.find(m); it != relabeled.end())
            return it->second;
        const std::vector<int> order = sorting_order(m);
        const auto& src = sj_gens(sorted_desc(m));
        std::vector<IntVec> out;
        out.reserve(src.size());
        for (const IntVec& g : src) {
            IntVec v;
            v.reserve(g.size());
            for (const auto& [w, x] : g)
                v.emplace_back(relabel(w, order), x);
            out.push_back(normalize(std::move(v)));
        }
        return relabeled.emplace(m, std::move(out)).first->second;
    }

    Space& sj_space(const Multidegree& m)
    {
        if (auto it = sj.find(m); it != sj.end())
            return it->second;
        const Component& comp = component(m);
        Space s;
        s.ech = std::make_unique<EchelonForm>(static_cast<int>(comp.even.size()));
        auto offer = [&](IntVec v) {
            if (s.ech->insert(coords(comp, v, false)))
                s.gens.push_back(std::move(v));
        };
        if (total(m) == 1) {
            const auto i = static_cast<int>(std::find(m.begin(), m.end(), 1) - m.begin());
            offer(IntVec{{Word::letter(i), 1}});
        } else {
            const std::size_t full = comp.even.size();
            for (const auto& [m1, m2] : splits(m)) {
                if (s.ech->rank() == full)
                    break;
                const auto g1 = sj_gens(m1);
                const auto& g2 = sj_gens(m2);
                for (std::size_t i = 0; i < g1.size() && s.ech->rank() < full; ++i)
                    for (std::size_t j = (m1 == m2 ? i : 0); j < g2.size() && s.ech->rank() < full; ++j)
                        offer(bracket(g1[i], g2[j], 1));
            }
        }
        return sj.emplace(m, std::move(s)).first->second;
    }

    Space& inner_cj_space(const Multidegree& m)
    {
        if (auto it = inner_cj.find(m); it != inner_cj.end())
            return it->second;
        const Component& comp = component(m);
        Space s;
        s.ech = std::make_unique<EchelonForm>(static_cast<int>(comp.odd.size()));
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0 || total(m) < 2)
                continue;
            Multidegree rest = m;
            --rest[i];
            const IntVec x{{Word::letter(static_cast<int>(i)), 1}};
            for (const Word& w : component(rest).even) {
                IntVec sym{{w, 1}};
                if (w.reversed() != w)
                    sym.emplace_back(w.reversed(), 1);
                s.ech->insert(coords(comp, bracket(x, normalize(sym), -1), true));
            }
        }
        return inner_cj.emplace(m, std::move(s)).first->second;
    }

    Space& inner_sj_space(const Multidegree& m)
    {
        if (auto it = inner_sj.find(m); it != inner_sj.end())
            return it->second;
        const Component& comp = component(m);
        Space s;
        s.ech = std::make_unique<EchelonForm>(static_cast<int>(comp.odd.size()));
        if (total(m) >= 2) {
            for (const auto& [m1, m2] : splits(m)) {
                const auto g1 = sj_gens(m1);
                const auto& g2 = sj_gens(m2);
                for (std::size_t i = 0; i < g1.size(); ++i)
                    for (std::size_t j = (m1 == m2 ? i + 1 : 0); j < g2.size(); ++j)
                        s.ech->insert(coords(comp, bracket(g1[i], g2[j], -1), true));
            }
        }
        return inner_sj.emplace(m, std::move(s)).first->second;
    }

    std::size_t dim(OracleSpace space, const Multidegree& m)
    {
        check(m);
        const Multidegree key = sorted_desc(m);
        switch (space) {
        case OracleSpace::SJ:
            return sj_space(key).ech->rank();
        case OracleSpace::CJ:
            return component(key).even.size();
        case OracleSpace::InnerCJ:
            return inner_cj_space(key).ech->rank();
        case OracleSpace::InnerSJ:
            return inner_sj_space(key).ech->rank();
        }
        return 0;
    }

    SpanBasis basis(OracleSpace space, const Multidegree& m)
    {
        check(m);
        const Component& comp = component(m);
        std::vector<SparseVec> rows;
        if (space == OracleSpace::CJ) {
            for (const Word& w : comp.even) {
                std::vector<SparseVec::Entry> t{{w, Rational(1)}};
                if (w.reversed() != w)
                    t.emplace_back(w.reversed(), Rational(1));
                rows.push_back(SparseVec::from_terms(std::move(t)));
            }
            return SpanBasis(std::move(rows));
        }
        const bool odd = space != OracleSpace::SJ;
        const EchelonForm& ech = space == OracleSpace::SJ        ? *sj_space(m).ech
                                 : space == OracleSpace::InnerCJ ? *inner_cj_space(m).ech
                                                                 : *inner_sj_space(m).ech;
        const auto& words = odd ? comp.odd : comp.even;
        for (const auto& r : ech.rows()) {
            std::vector<SparseVec::Entry> t;
            for (std::size_t k = 0; k < r.cols.size(); ++k) {
                const Word& w = words[static_cast<std::size_t>(r.cols[k])];
                t.emplace_back(w, r.vals[k]);
                if (w.reversed() != w)
                    t.emplace_back(w.reversed(), odd ? Rational(-r.vals[k]) : r.vals[k]);
            }
            rows.push_back(SparseVec::from_terms(std::move(t)));
        }
        return SpanBasis(std::move(rows));
    }
};

JordanOracle::JordanOracle(int d, OracleConfig config) : d_(d), config_(config), impl_(std::make_unique<Impl>())
{
    if (d < 1 || d > Word::kMaxLetters)
        throw std::invalid_argument("JordanOracle: D must be in 1..16");
    impl_->d = d;
    impl_->config = config;
}

JordanOracle::~JordanOracle() = default;

std::size_t JordanOracle::dim(OracleSpace space, const Multidegree& m) { return impl_->dim(space, m); }

namespace {

void check_degree_budget(int n, int d, const OracleConfig& config)
{
    if (n < 1)
        throw std::invalid_argument("JordanOracle: degree must be positive");
    if (ipow(d, static_cast<unsigned long>(n)) > BigInt(std::to_string(config.budget)))
        throw std::length_error("JordanOracle: D^n exceeds the word budget");
}

} // namespace

std::size_t JordanOracle::dim(OracleSpace space, int n)
{
    check_degree_budget(n, d_, config_);
    std::size_t sum = 0;
    for (const auto& m : multidegrees(n, d_))
        sum += impl_->dim(space, m);
    return sum;
}

SpanBasis JordanOracle::basis(OracleSpace space, const Multidegree& m) { return impl_->basis(space, m); }

SpanBasis JordanOracle::basis(OracleSpace space, int n)
{
    check_degree_budget(n, d_, config_);
    std::vector<SpanBasis> parts;
    for (const auto& m : multidegrees(n, d_))
        parts.push_back(impl_->basis(space, m));
    return SpanBasis::direct_sum(parts);
}

namespace {

SpanBasis span_of(OracleSpace space, int n, int d, const std::optional<Multidegree>& m, const OracleConfig& config)
{
    JordanOracle oracle(d, config);
    if (!m)
        return oracle.basis(space, n);
    if (total(*m) != n)
        throw std::invalid_argument("span: multidegree does not have total degree n");
    return oracle.basis(space, *m);
}

} // namespace

SpanBasis span_SJ(int n, int d, const std::optional<Multidegree>& m, const OracleConfig& config)
{
    return span_of(OracleSpace::SJ, n, d, m, config);
}

SpanBasis span_CJ(int n, int d, const std::optional<Multidegree>& m, const OracleConfig& config)
{
    return span_of(OracleSpace::CJ, n, d, m, config);
}

SpanBasis span_inner_CJ(int n, int d, const std::optional<Multidegree>& m, const OracleConfig& config)
{
    return span_of(OracleSpace::InnerCJ, n, d, m, config);
}

SpanBasis span_inner_SJ(int n, int d, const std::optional<Multidegree>& m, const OracleConfig& config)
{
    return span_of(OracleSpace::InnerSJ, n, d, m, config);
}

std::map<Multidegree, std::uint64_t> weight_character(const SpanBasis& basis, int d)
{
    std::map<Multidegree, std::uint64_t> out;
    for (const auto& row : basis.rows()) {
        const Multidegree m = row.entries().front().first.content(d);
        for (const auto& e : row.entries())
            if (e.first.content(d) != m)
                throw std::invalid_argument("weight_character: row is not a weight vector");
        ++out[m];
    }
    return out;
}

CharClass weights_to_char(const std::map<Multidegree, std::uint64_t>& weights, int d, int trunc)
{
    std::map<Partition, std::pair<std::uint64_t, BigInt>> seen;
    for (const auto& [m, k] : weights) {
        if (k == 0)
            continue;
        std::vector<int> parts;
        for (int x : sorted_desc(m))
            if (x > 0)
                parts.push_back(x);
        auto [it, fresh] = seen.try_emplace(Partition(parts), k, BigInt(0));
        if (!fresh && it->second.first != k)
            throw std::invalid_argument("weights_to_char: weights are not symmetric");
        it->second.second += 1;
    }
    CharClass out(d, trunc);
    for (const auto& [lambda, info] : seen) {
        if (info.second != orbit_size(lambda, d))
            throw std::invalid_argument("weights_to_char: weights are not symmetric");
        out.add(lambda, LaurentPoly(BigInt(std::to_string(info.first))));
    }
    return out;
}

JacobiReport jacobi_triple_check(int N)
{
    if (N < 0)
        throw std::invalid_argument("jacobi_triple_check: N must be nonnegative");
    JacobiReport rep;
    rep.N = N;
    TSeries product = TSeries::one(N);
    for (int n = 1; n <= N; ++n) {
        product = product * binomial_factor(N, n, 1, 1);
        product = product * binomial_factor(N, n, -1, 1);
        product = product * binomial_factor(N, n, 0, 1);
    }
    TSeries sum(N);
    for (int n = 0; n * (n + 1) / 2 <= N; ++n)
        sum += TSeries::monomial(N, n * (n + 1) / 2, LaurentPoly::irreducible(n) * BigInt(n % 2 == 0 ? 1 : -1));
    rep.product_equals_sum = product == sum;

    ZSeries l0(static_cast<std::size_t>(N) + 1, 0), l2(static_cast<std::size_t>(N) + 1, 0);
    l0[0] = 1;
    if (N >= 1)
        l2[1] = -1;
    const LaurentPoly inv_t_minus_one = LaurentPoly::monomial(-1) - LaurentPoly(1);
    const LaurentPoly one_minus_t = LaurentPoly(1) - LaurentPoly::monomial(1);
    rep.residue_l0 = residue(product.times_t(inv_t_minus_one)) == l0;
    rep.residue_l2 = residue(product.times_t(one_minus_t)) == l2;
    return rep;
}

} // namespace jordanlab
