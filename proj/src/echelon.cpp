#include "jordanlab/echelon.hpp"

#include <algorithm>
#include <stdexcept>

namespace jordanlab {

namespace {

void set_value(Rational& dst, const Rational& x) { dst += x; }
void set_value(Rational& dst, std::int64_t x) { dst += Rational(static_cast<long>(x)); }

} // namespace

Rational EchelonForm::Row::at(int col) const
{
    auto it = std::lower_bound(cols.begin(), cols.end(), col);
    if (it == cols.end() || *it != col)
        return 0;
    return vals[static_cast<std::size_t>(it - cols.begin())];
}

EchelonForm::EchelonForm(int ncols)
    : ncols_(ncols), pivot_row_(static_cast<std::size_t>(ncols), -1), work_(static_cast<std::size_t>(ncols)),
      touched_(static_cast<std::size_t>(ncols), 0)
{
}

template <class T> int EchelonForm::scatter(const std::vector<std::pair<int, T>>& v)
{
    for (const auto& [c, x] : v) {
        if (c < 0 || c >= ncols_)
            throw std::out_of_range("EchelonForm: column out of range");
        set_value(work_[static_cast<std::size_t>(c)], x);
        if (!touched_[static_cast<std::size_t>(c)]) {
            touched_[static_cast<std::size_t>(c)] = 1;
            touched_list_.push_back(c);
        }
    }
    return static_cast<int>(touched_list_.size());
}

void EchelonForm::clear_work()
{
    for (int c : touched_list_) {
        work_[static_cast<std::size_t>(c)] = 0;
        touched_[static_cast<std::size_t>(c)] = 0;
    }
    touched_list_.clear();
}

void EchelonForm::reduce_work()
{
    const std::size_t original = touched_list_.size();
    for (std::size_t i = 0; i < original; ++i) {
        const int c = touched_list_[i];
        const int r = pivot_row_[static_cast<std::size_t>(c)];
        if (r < 0)
            continue;
        Rational& f = work_[static_cast<std::size_t>(c)];
        if (sgn(f) == 0)
            continue;
        const Row& row = rows_[static_cast<std::size_t>(r)];
        for (std::size_t k = 1; k < row.cols.size(); ++k) {
            const auto col = static_cast<std::size_t>(row.cols[k]);
            mpq_mul(tmp_.get_mpq_t(), f.get_mpq_t(), row.vals[k].get_mpq_t());
            mpq_sub(work_[col].get_mpq_t(), work_[col].get_mpq_t(), tmp_.get_mpq_t());
            if (!touched_[col]) {
                touched_[col] = 1;
                touched_list_.push_back(row.cols[k]);
            }
        }
        f = 0;
    }
}

bool EchelonForm::finish_insert()
{
    reduce_work();
    std::sort(touched_list_.begin(), touched_list_.end());
    Row row;
    for (int c : touched_list_) {
        const Rational& x = work_[static_cast<std::size_t>(c)];
        if (sgn(x) == 0)
            continue;
        row.cols.push_back(c);
        row.vals.push_back(x);
    }
    clear_work();
    if (row.cols.empty())
        return false;
    const Rational inv = 1 / row.vals.front();
    for (auto& x : row.vals)
        x *= inv;
    const int pivot = row.pivot();

    // Clear the new pivot column from the existing rows.
    for (Row& other : rows_) {
        const Rational f = other.at(pivot);
        if (sgn(f) == 0)
            continue;
        Row merged;
        merged.cols.reserve(other.cols.size() + row.cols.size());
        merged.vals.reserve(other.cols.size() + row.cols.size());
        std::size_t i = 0, j = 0;
        while (i < other.cols.size() || j < row.cols.size()) {
            if (j == row.cols.size() || (i < other.cols.size() && other.cols[i] < row.cols[j])) {
                merged.cols.push_back(other.cols[i]);
                merged.vals.push_back(other.vals[i]);
                ++i;
            } else if (i == other.cols.size() || row.cols[j] < other.cols[i]) {
                merged.cols.push_back(row.cols[j]);
                merged.vals.push_back(-f * row.vals[j]);
                ++j;
            } else {
                Rational x = other.vals[i] - f * row.vals[j];
                if (sgn(x) != 0) {
                    merged.cols.push_back(other.cols[i]);
                    merged.vals.push_back(std::move(x));
                }
                ++i;
                ++j;
            }
        }
        other = std::move(merged);
    }
    pivot_row_[static_cast<std::size_t>(pivot)] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(row));
    return true;
}

bool EchelonForm::insert(const std::vector<std::pair<int, Rational>>& v)
{
    scatter(v);
    return finish_insert();
}

bool EchelonForm::insert(const std::vector<std::pair<int, std::int64_t>>& v)
{
    scatter(v);
    return finish_insert();
}

bool EchelonForm::contains(const std::vector<std::pair<int, Rational>>& v)
{
    scatter(v);
    reduce_work();
    bool zero = true;
    for (int c : touched_list_)
        zero = zero && sgn(work_[static_cast<std::size_t>(c)]) == 0;
    clear_work();
    return zero;
}

bool EchelonForm::contains(const std::vector<std::pair<int, std::int64_t>>& v)
{
    scatter(v);
    reduce_work();
    bool zero = true;
    for (int c : touched_list_)
        zero = zero && sgn(work_[static_cast<std::size_t>(c)]) == 0;
    clear_work();
    return zero;
}

std::vector<EchelonForm::Row> EchelonForm::rows() const
{
    std::vector<Row> out = rows_;
    std::sort(out.begin(), out.end(), [](const Row& a, const Row& b) { return a.pivot() < b.pivot(); });
    return out;
}

} // namespace jordanlab
