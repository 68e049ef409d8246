#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace suzuki {

// Exact rank via fraction-free (Bareiss) elimination. Works over any
// exact field type with +,-,*,/, unary minus and is_zero(); every
// division is by a previous pivot and is exact, so intermediate entries
// stay in the subring generated by the input.
template <class T>
long rank_bareiss(std::vector<std::vector<T>> m) {
    if (m.empty() || m[0].empty()) return 0;
    const long rows = static_cast<long>(m.size());
    const long cols = static_cast<long>(m[0].size());
    long rank = 0;
    std::optional<T> prev_pivot;
    for (long c = 0; c < cols && rank < rows; ++c) {
        long pivot = -1;
        for (long r = rank; r < rows; ++r) {
            if (!m[r][c].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (long r = rank + 1; r < rows; ++r) {
            for (long k = c + 1; k < cols; ++k) {
                T v = m[rank][c] * m[r][k] - m[r][c] * m[rank][k];
                m[r][k] = prev_pivot ? v / *prev_pivot : v;
            }
            // column c below the pivot is conceptually zero and never read again
        }
        prev_pivot = m[rank][c];
        ++rank;
    }
    return rank;
}

// Incremental row-echelon accumulator over an exact field. Rows are kept
// sparse and normalized to leading coefficient 1; insert() reduces a row
// against the current pivots and keeps the remainder if nonzero;
// contains() answers span membership.
template <class T>
class Echelon {
public:
    using Row = std::map<long, T>;

    void reduce(Row& row) const {
        for (const auto& [col, idx] : pivots_) {
            auto hit = row.find(col);
            if (hit == row.end()) continue;
            T factor = hit->second;
            for (const auto& [pcol, pval] : rows_[idx]) {
                auto r = row.find(pcol);
                if (r == row.end()) {
                    T v = -(factor * pval);
                    if (!v.is_zero()) row.emplace(pcol, v);
                } else {
                    r->second -= factor * pval;
                    if (r->second.is_zero()) row.erase(r);
                }
            }
        }
    }

    bool insert(Row row) {
        reduce(row);
        if (row.empty()) return false;
        T lead = row.begin()->second;
        for (auto& [col, val] : row) val = val / lead;
        long col = row.begin()->first;
        rows_.push_back(std::move(row));
        pivots_.emplace(col, static_cast<long>(rows_.size()) - 1);
        return true;
    }

    bool contains(Row row) const {
        reduce(row);
        return row.empty();
    }

    long rank() const { return static_cast<long>(rows_.size()); }
    const std::map<long, long>& pivot_columns() const { return pivots_; }

private:
    std::vector<Row> rows_;
    std::map<long, long> pivots_;  // pivot column -> row index
};

}  // namespace suzuki
