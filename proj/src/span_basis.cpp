#include "jordanlab/span_basis.hpp"

#include "jordanlab/echelon.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace jordanlab {

namespace {

char letter_char(int i) { return i < 9 ? static_cast<char>('1' + i) : static_cast<char>('a' + (i - 9)); }

int char_letter(char ch)
{
    if (ch >= '1' && ch <= '9')
        return ch - '1';
    if (ch >= 'a' && ch <= 'g')
        return ch - 'a' + 9;
    throw std::invalid_argument(std::string("Word::parse: bad letter '") + ch + "'");
}

} // namespace

Word Word::from_letters(const std::vector<int>& letters)
{
    if (letters.empty() || static_cast<int>(letters.size()) > kMaxLength)
        throw std::invalid_argument("Word: length must be in 1..16");
    Word w;
    for (int x : letters) {
        if (x < 0 || x >= kMaxLetters)
            throw std::invalid_argument("Word: letter out of range");
        w.code = (w.code << 4) | static_cast<std::uint64_t>(x);
    }
    w.length = static_cast<int>(letters.size());
    return w;
}

Word Word::parse(const std::string& digits)
{
    std::vector<int> letters;
    for (char ch : digits)
        letters.push_back(char_letter(ch));
    return from_letters(letters);
}

std::vector<int> Word::letters() const
{
    std::vector<int> out(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i)
        out[static_cast<std::size_t>(i)] = at(i);
    return out;
}

Word Word::reversed() const
{
    Word w{0, length};
    std::uint64_t c = code;
    for (int i = 0; i < length; ++i) {
        w.code = (w.code << 4) | (c & 0xF);
        c >>= 4;
    }
    return w;
}

std::vector<int> Word::content(int d) const
{
    std::vector<int> out(static_cast<std::size_t>(d), 0);
    for (int i = 0; i < length; ++i) {
        const int x = at(i);
        if (x >= d)
            throw std::out_of_range("Word::content: letter exceeds alphabet");
        ++out[static_cast<std::size_t>(x)];
    }
    return out;
}

std::string Word::str() const
{
    std::string s;
    for (int i = 0; i < length; ++i)
        s += letter_char(at(i));
    return s;
}

SparseVec SparseVec::from_terms(std::vector<Entry> terms)
{
    std::sort(terms.begin(), terms.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    SparseVec v;
    for (auto& [w, c] : terms) {
        c.canonicalize();
        if (!v.entries_.empty() && v.entries_.back().first == w)
            v.entries_.back().second += c;
        else
            v.entries_.emplace_back(w, std::move(c));
        if (!v.entries_.empty() && sgn(v.entries_.back().second) == 0)
            v.entries_.pop_back();
    }
    if (!v.entries_.empty()) {
        const int len = v.entries_.front().first.length;
        for (const auto& e : v.entries_)
            if (e.first.length != len)
                throw std::invalid_argument("SparseVec: inhomogeneous terms");
    }
    return v;
}

Rational SparseVec::coeff(const Word& w) const
{
    auto it = std::lower_bound(entries_.begin(), entries_.end(), w,
                               [](const Entry& e, const Word& x) { return e.first < x; });
    if (it == entries_.end() || it->first != w)
        return 0;
    return it->second;
}

std::string SparseVec::json() const
{
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [w, c] : entries_)
        j[w.str()] = c.get_str();
    return j.dump();
}

SparseVec tensor_mul(const SparseVec& a, const SparseVec& b)
{
    std::vector<SparseVec::Entry> terms;
    terms.reserve(a.size() * b.size());
    for (const auto& [u, x] : a.entries())
        for (const auto& [v, y] : b.entries())
            terms.emplace_back(u * v, x * y);
    return SparseVec::from_terms(std::move(terms));
}

SparseVec jordan_product(const SparseVec& a, const SparseVec& b)
{
    std::vector<SparseVec::Entry> terms;
    for (const auto& [u, x] : a.entries())
        for (const auto& [v, y] : b.entries()) {
            terms.emplace_back(u * v, x * y);
            terms.emplace_back(v * u, x * y);
        }
    return SparseVec::from_terms(std::move(terms));
}

SparseVec commutator(const SparseVec& a, const SparseVec& b)
{
    std::vector<SparseVec::Entry> terms;
    for (const auto& [u, x] : a.entries())
        for (const auto& [v, y] : b.entries()) {
            terms.emplace_back(u * v, x * y);
            terms.emplace_back(v * u, -(x * y));
        }
    return SparseVec::from_terms(std::move(terms));
}

SparseVec reversal(const SparseVec& a)
{
    std::vector<SparseVec::Entry> terms;
    for (const auto& [u, x] : a.entries())
        terms.emplace_back(u.reversed(), x);
    return SparseVec::from_terms(std::move(terms));
}

bool SpanBasis::contains(const SparseVec& v) const
{
    std::map<Word, Rational> rem;
    for (const auto& [w, c] : v.entries())
        rem[w] += c;
    // Rows are reduced: each pivot word of v is cleared by exactly one row.
    for (const auto& [w, c] : v.entries()) {
        auto it = std::lower_bound(rows_.begin(), rows_.end(), w, [](const SparseVec& r, const Word& x) {
            return r.entries().front().first < x;
        });
        if (it == rows_.end() || it->entries().front().first != w)
            continue;
        const Rational f = c;
        for (const auto& [u, y] : it->entries())
            rem[u] -= f * y;
    }
    return std::all_of(rem.begin(), rem.end(), [](const auto& e) { return sgn(e.second) == 0; });
}

bool SpanBasis::contains(const SpanBasis& other) const
{
    return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const SparseVec& r) { return contains(r); });
}

bool SpanBasis::is_reduced_echelon() const
{
    std::vector<Word> pivots;
    for (const auto& r : rows_) {
        if (r.is_zero() || r.entries().front().second != 1)
            return false;
        if (!pivots.empty() && !(pivots.back() < r.entries().front().first))
            return false;
        pivots.push_back(r.entries().front().first);
    }
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < pivots.size(); ++j)
            if (i != j && sgn(rows_[i].coeff(pivots[j])) != 0)
                return false;
    return true;
}

SpanBasis SpanBasis::direct_sum(const std::vector<SpanBasis>& parts)
{
    std::vector<SparseVec> rows;
    for (const auto& p : parts)
        rows.insert(rows.end(), p.rows_.begin(), p.rows_.end());
    std::sort(rows.begin(), rows.end(), [](const SparseVec& a, const SparseVec& b) {
        return a.entries().front().first < b.entries().front().first;
    });
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i - 1].entries().front().first == rows[i].entries().front().first)
            throw std::invalid_argument("SpanBasis::direct_sum: overlapping pivots");
    return SpanBasis(std::move(rows));
}

std::string SpanBasis::jsonl() const
{
    std::string out;
    for (const auto& r : rows_) {
        nlohmann::ordered_json j;
        j["pivot"] = r.entries().front().first.str();
        j["entries"] = nlohmann::ordered_json::parse(r.json());
        out += j.dump();
        out += '\n';
    }
    return out;
}

SpanBasis echelonize(const std::vector<SparseVec>& vectors)
{
    std::vector<Word> words;
    for (const auto& v : vectors)
        for (const auto& e : v.entries())
            words.push_back(e.first);
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    auto index = [&](const Word& w) {
        return static_cast<int>(std::lower_bound(words.begin(), words.end(), w) - words.begin());
    };

    EchelonForm ech(static_cast<int>(words.size()));
    for (const auto& v : vectors) {
        std::vector<std::pair<int, Rational>> row;
        for (const auto& [w, c] : v.entries())
            row.emplace_back(index(w), c);
        ech.insert(row);
    }
    std::vector<SparseVec> rows;
    for (const auto& r : ech.rows()) {
        std::vector<SparseVec::Entry> terms;
        for (std::size_t k = 0; k < r.cols.size(); ++k)
            terms.emplace_back(words[static_cast<std::size_t>(r.cols[k])], r.vals[k]);
        rows.push_back(SparseVec::from_terms(std::move(terms)));
    }
    return SpanBasis(std::move(rows));
}

} // namespace jordanlab
