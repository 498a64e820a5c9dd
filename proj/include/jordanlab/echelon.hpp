#pragma once

#include "jordanlab/bigint.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace jordanlab {

/// Incremental exact reduced row echelon form over Q on columns 0..ncols-1.
/// Every row has pivot coefficient 1 and is zero in every other pivot column.
class EchelonForm {
public:
    struct Row {
        std::vector<int> cols;
        std::vector<Rational> vals;
        int pivot() const { return cols.front(); }
        Rational at(int col) const;
    };

    explicit EchelonForm(int ncols = 0);

    int ncols() const { return ncols_; }
    std::size_t rank() const { return rows_.size(); }
    bool is_pivot(int col) const { return pivot_row_[static_cast<std::size_t>(col)] >= 0; }

    /// Adds v (duplicated columns are summed) if independent; returns whether the rank grew.
    bool insert(const std::vector<std::pair<int, Rational>>& v);
    bool insert(const std::vector<std::pair<int, std::int64_t>>& v);

    bool contains(const std::vector<std::pair<int, Rational>>& v);
    bool contains(const std::vector<std::pair<int, std::int64_t>>& v);

    /// Rows sorted by pivot.
    std::vector<Row> rows() const;

private:
    template <class T> int scatter(const std::vector<std::pair<int, T>>& v);
    /// Subtracts the pivot rows met in the scattered support.
    void reduce_work();
    void clear_work();
    bool finish_insert();

    int ncols_;
    std::vector<Row> rows_;
    std::vector<int> pivot_row_;
    std::vector<Rational> work_;
    std::vector<char> touched_;
    std::vector<int> touched_list_;
    Rational tmp_;
};

} // namespace jordanlab
