#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace jordanlab {

/// Young diagram: weakly decreasing positive parts. Empty = the empty diagram.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    /// Sorts and drops zeros; accepts any multiset of non-negative integers.
    static Partition from_exponents(std::vector<int> exps);

    /// "4,1,1,1" or the exponent form "4,1^3" / "2^2,1^3".
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int height() const { return static_cast<int>(parts_.size()); }
    int operator[](int i) const { return i < height() ? parts_[static_cast<std::size_t>(i)] : 0; }

    Partition conjugate() const;
    /// Height of column i (0-based), i.e. c_{i+1} in one-based notation.
    int column_height(int i) const;

    /// Comma-joined parts, "" for the empty diagram.
    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b)
    {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// All partitions of n with at most max_parts parts, in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n, int max_parts = -1);

} // namespace jordanlab
