#include "jordanlab/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace jordanlab {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_exponents(std::vector<int> exps)
{
    std::erase(exps, 0);
    std::sort(exps.begin(), exps.end(), std::greater<>());
    return Partition(std::move(exps));
}

namespace {

int parse_int(std::string_view s)
{
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw std::invalid_argument("Partition::parse: bad integer '" + std::string(s) + "'");
    return v;
}

} // namespace

Partition Partition::parse(std::string_view text)
{
    std::vector<int> parts;
    while (!text.empty() && (text.front() == '(' || text.front() == ' '))
        text.remove_prefix(1);
    while (!text.empty() && (text.back() == ')' || text.back() == ' '))
        text.remove_suffix(1);
    if (text.empty())
        return {};
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        std::string_view tok = text.substr(pos, next == std::string_view::npos ? text.size() - pos : next - pos);
        while (!tok.empty() && tok.front() == ' ')
            tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ')
            tok.remove_suffix(1);
        std::size_t caret = tok.find('^');
        int part = parse_int(tok.substr(0, caret));
        int reps = caret == std::string_view::npos ? 1 : parse_int(tok.substr(caret + 1));
        for (int r = 0; r < reps; ++r)
            parts.push_back(part);
        if (next == std::string_view::npos)
            break;
        pos = next + 1;
    }
    return Partition(std::move(parts));
}

Partition Partition::conjugate() const
{
    std::vector<int> c;
    for (int i = 0; i < (parts_.empty() ? 0 : parts_[0]); ++i)
        c.push_back(column_height(i));
    return Partition(std::move(c));
}

int Partition::column_height(int i) const
{
    int h = 0;
    for (int p : parts_)
        if (p > i)
            ++h;
    return h;
}

std::string Partition::str() const
{
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::vector<Partition> partitions_of(int n, int max_parts)
{
    std::vector<Partition> out;
    if (n < 0)
        return out;
    if (max_parts < 0)
        max_parts = n;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_parts)
            return;
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

} // namespace jordanlab
