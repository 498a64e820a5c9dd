#pragma once

#include "jordanlab/bigint.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace jordanlab {

/// Word in the free monoid on x_1..x_D: letters 0..D-1 packed four bits each, first letter most
/// significant, so numeric order on equal-length words is lexicographic order.
struct Word {
    std::uint64_t code = 0;
    int length = 0;

    static constexpr int kMaxLength = 16;
    static constexpr int kMaxLetters = 16;

    static Word letter(int i) { return {static_cast<std::uint64_t>(i), 1}; }
    static Word from_letters(const std::vector<int>& letters);
    /// Digit string with one-based letters, "121" = x_1 x_2 x_1.
    static Word parse(const std::string& digits);

    int at(int i) const { return static_cast<int>((code >> (4 * (length - 1 - i))) & 0xF); }
    std::vector<int> letters() const;
    Word reversed() const;
    /// Number of occurrences of each letter (size d).
    std::vector<int> content(int d) const;
    std::string str() const;

    friend Word operator*(const Word& a, const Word& b)
    {
        return {(a.code << (4 * b.length)) | b.code, a.length + b.length};
    }
    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word& a, const Word& b)
    {
        if (auto c = a.length <=> b.length; c != 0)
            return c;
        return a.code <=> b.code;
    }
};

/// Homogeneous element of the tensor algebra: sorted (word, coefficient) pairs, no zeros.
class SparseVec {
public:
    using Entry = std::pair<Word, Rational>;

    SparseVec() = default;
    /// Sums duplicates and drops zeros.
    static SparseVec from_terms(std::vector<Entry> terms);

    const std::vector<Entry>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    Rational coeff(const Word& w) const;

    friend bool operator==(const SparseVec&, const SparseVec&) = default;

    /// {"123":"1","321":"-1/2"}
    std::string json() const;

private:
    std::vector<Entry> entries_;
};

/// Associative product and the Jordan / Lie brackets (x o y = xy + yx, unscaled).
SparseVec tensor_mul(const SparseVec& a, const SparseVec& b);
SparseVec jordan_product(const SparseVec& a, const SparseVec& b);
SparseVec commutator(const SparseVec& a, const SparseVec& b);
SparseVec reversal(const SparseVec& a);

/// Reduced row echelon form under the lexicographic word order: pivots strictly increasing,
/// pivot coefficients 1, pivot columns zero in every other row.
class SpanBasis {
public:
    SpanBasis() = default;
    explicit SpanBasis(std::vector<SparseVec> rows) : rows_(std::move(rows)) {}

    const std::vector<SparseVec>& rows() const { return rows_; }
    std::size_t rank() const { return rows_.size(); }

    /// Reduces v against the rows; true when the remainder vanishes.
    bool contains(const SparseVec& v) const;
    bool contains(const SpanBasis& other) const;
    bool is_reduced_echelon() const;

    /// Union of bases with disjoint word supports (e.g. different multidegrees).
    static SpanBasis direct_sum(const std::vector<SpanBasis>& parts);

    /// One JSON object per line: {"pivot": "...", "entries": {...}}.
    std::string jsonl() const;

    friend bool operator==(const SpanBasis&, const SpanBasis&) = default;

private:
    std::vector<SparseVec> rows_;
};

/// Canonical reduced echelon basis of the span of arbitrary homogeneous vectors.
SpanBasis echelonize(const std::vector<SparseVec>& vectors);

} // namespace jordanlab
