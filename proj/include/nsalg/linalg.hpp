#ifndef NSALG_LINALG_HPP
#define NSALG_LINALG_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nsalg/rational.hpp"

namespace nsalg {

// Incremental Gaussian elimination over a field F with first-seen pivoting.
// Vectors are inserted in order; a dependent vector comes back expressed over
// the previously accepted (original, not echelonized) vectors. F needs +,-,*,/
// and the ADL free functions is_zero / zero_like / one_like.
template <class F>
class RowReducer {
public:
    struct Insertion {
        bool independent;
        // for dependent inserts: v = sum coeffs[i].second * original[coeffs[i].first]
        std::vector<std::pair<std::size_t, F>> combination;
    };

    Insertion insert(std::vector<F> v, std::size_t original_index) {
        std::vector<std::pair<std::size_t, F>> combo;
        reduce_in_place(v, combo);
        bool any = false;
        for (const auto& x : v)
            if (!is_zero(x)) {
                any = true;
                break;
            }
        if (!any) {
            for (auto& [idx, c] : combo) c = zero_like(c) - c;
            return {false, std::move(combo)};
        }
        std::size_t piv = 0;
        while (is_zero(v[piv])) ++piv;
        combo.emplace_back(original_index, one_like(v[piv]));
        rows_.push_back(Row{piv, std::move(v), std::move(combo)});
        return {true, {}};
    }

    std::size_t rank() const { return rows_.size(); }

private:
    struct Row {
        std::size_t pivot;
        std::vector<F> vec;
        std::vector<std::pair<std::size_t, F>> combo;  // vec = sum combo * original
    };
    std::vector<Row> rows_;

    void reduce_in_place(std::vector<F>& v, std::vector<std::pair<std::size_t, F>>& combo) const {
        for (const Row& row : rows_) {
            if (row.pivot >= v.size() || is_zero(v[row.pivot])) continue;
            F factor = v[row.pivot] / row.vec[row.pivot];
            for (std::size_t i = row.pivot; i < v.size(); ++i)
                if (!is_zero(row.vec[i])) v[i] = v[i] - factor * row.vec[i];
            for (const auto& [idx, c] : row.combo) {
                bool merged = false;
                for (auto& [jdx, d] : combo)
                    if (jdx == idx) {
                        d = d - factor * c;
                        merged = true;
                        break;
                    }
                if (!merged) combo.emplace_back(idx, zero_like(factor) - factor * c);
            }
        }
    }
};

template <class F>
std::size_t matrix_rank(std::vector<std::vector<F>> rows) {
    RowReducer<F> red;
    std::size_t r = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (red.insert(std::move(rows[i]), i).independent) ++r;
    return r;
}

// Solves U·c = e_i for all unit vectors at once, where U is k x s with full
// row rank. Returns, per row index i, a solution supported on the pivot
// columns. Throws std::domain_error when the rows are dependent.
template <class F>
class DualSolver {
public:
    explicit DualSolver(std::vector<std::vector<F>> u) : u_(std::move(u)) {
        if (u_.empty()) throw std::domain_error("empty system");
        k_ = u_.size();
        s_ = u_[0].size();
        const F one = find_one();
        // RREF of [U | I_k]
        std::vector<std::vector<F>> aug = u_;
        for (std::size_t i = 0; i < k_; ++i) {
            aug[i].resize(s_ + k_, zero_like(one));
            aug[i][s_ + i] = one;
        }
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < s_ && row < k_; ++col) {
            std::size_t pr = row;
            while (pr < k_ && is_zero(aug[pr][col])) ++pr;
            if (pr == k_) continue;
            std::swap(aug[row], aug[pr]);
            F inv = one / aug[row][col];
            for (auto& x : aug[row]) x = x * inv;
            for (std::size_t r = 0; r < k_; ++r) {
                if (r == row || is_zero(aug[r][col])) continue;
                F f = aug[r][col];
                for (std::size_t c = 0; c < s_ + k_; ++c) aug[r][c] = aug[r][c] - f * aug[row][c];
            }
            pivots.push_back(col);
            ++row;
        }
        if (row < k_) throw std::domain_error("dependent rows in separating system");
        pivots_ = std::move(pivots);
        transform_.assign(k_, std::vector<F>(k_, zero_like(one)));
        for (std::size_t r = 0; r < k_; ++r)
            for (std::size_t i = 0; i < k_; ++i) transform_[r][i] = aug[r][s_ + i];
    }

    /// c with U·c = e_i, supported on the pivot columns.
    std::vector<std::pair<std::size_t, F>> solve_unit(std::size_t i) const {
        std::vector<std::pair<std::size_t, F>> c;
        for (std::size_t r = 0; r < k_; ++r)
            if (!is_zero(transform_[r][i])) c.emplace_back(pivots_[r], transform_[r][i]);
        return c;
    }

private:
    std::vector<std::vector<F>> u_;
    std::vector<std::vector<F>> transform_;
    std::vector<std::size_t> pivots_;
    std::size_t k_ = 0, s_ = 0;

    F find_one() const {
        for (const auto& r : u_)
            for (const auto& x : r)
                if (!is_zero(x)) return one_like(x);
        throw std::domain_error("zero system");
    }
};

}  // namespace nsalg

#endif
