#include "boole/simplex.hpp"

#include <limits>

#include "boole/errors.hpp"

namespace boole {

namespace {

// Dense tableau: rows 0..m-1 hold the constraints, row m the reduced-cost
// row of the current phase. Column layout: structural variables, then one
// artificial per row, then the right-hand side.
class Tableau {
  public:
    Tableau(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b)
        : m_(a.size()), n_(a.empty() ? 0 : a[0].size()) {
        rows_.assign(m_ + 1, std::vector<Rational>(n_ + m_ + 1, Rational(0)));
        basis_.resize(m_);
        flipped_.assign(m_, false);
        for (std::size_t i = 0; i < m_; ++i) {
            const bool flip = b[i] < 0;
            flipped_[i] = flip;
            for (std::size_t j = 0; j < n_; ++j) rows_[i][j] = flip ? -a[i][j] : a[i][j];
            rows_[i][n_ + i] = 1;
            rows_[i].back() = flip ? -b[i] : b[i];
            basis_[i] = n_ + i;
        }
    }

    // Minimize the number of artificials; returns the phase-1 optimum.
    Rational phase1() {
        auto& cost = rows_[m_];
        for (auto& entry : cost) entry = 0;
        for (std::size_t i = 0; i < m_; ++i)
            for (std::size_t j = 0; j <= n_ + m_; ++j) cost[j] -= rows_[i][j];
        for (std::size_t i = 0; i < m_; ++i) cost[n_ + i] = 0;
        pivot_until_optimal(n_ + m_);
        return -cost.back();
    }

    // Farkas vector for the original rows, readable once phase 1 ends with a
    // positive optimum: y_i = 1 - reduced_cost(artificial_i), sign-restored
    // for rows that were flipped to make b nonnegative.
    std::vector<Rational> farkas() const {
        std::vector<Rational> y(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            y[i] = Rational(1) - rows_[m_][n_ + i];
            if (flipped_[i]) y[i] = -y[i];
        }
        return y;
    }

    // After a zero phase-1 optimum: pivot artificials out of the basis (or
    // drop redundant rows), discard artificial columns, install the real
    // objective, and optimize. Returns false when unbounded.
    bool phase2(const std::vector<Rational>& c) {
        for (std::size_t i = 0; i < m_;) {
            if (basis_[i] < n_) {
                ++i;
                continue;
            }
            std::size_t enter = n_;
            for (std::size_t j = 0; j < n_; ++j)
                if (rows_[i][j] != 0) {
                    enter = j;
                    break;
                }
            if (enter == n_) {
                // all-zero over structural columns: redundant constraint
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
                --m_;
                continue;
            }
            pivot(i, enter);
            ++i;
        }
        // strip artificial columns
        for (auto& row : rows_) {
            row[n_] = row[n_ + m_orig()];
            row.resize(n_ + 1);
        }
        auto& cost = rows_[m_];
        for (std::size_t j = 0; j <= n_; ++j) cost[j] = j < n_ ? c[j] : Rational(0);
        for (std::size_t i = 0; i < m_; ++i) {
            const Rational factor = c[basis_[i]];
            if (factor == 0) continue;
            for (std::size_t j = 0; j <= n_; ++j) cost[j] -= factor * rows_[i][j];
        }
        return pivot_until_optimal(n_);
    }

    Rational objective() const { return -rows_[m_].back(); }

    std::vector<Rational> solution() const {
        std::vector<Rational> x(n_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) x[basis_[i]] = rows_[i].back();
        return x;
    }

  private:
    std::size_t m_orig() const { return flipped_.size(); }

    // Bland's rule in both choices: lowest-index entering column, ties in the
    // ratio test broken by lowest basis index. `num_cols` excludes the RHS
    // column (and the artificial columns in phase 2). Returns false on
    // unboundedness.
    bool pivot_until_optimal(std::size_t num_cols) {
        for (;;) {
            const auto& cost = rows_[m_];
            std::size_t enter = num_cols;
            for (std::size_t j = 0; j < num_cols; ++j)
                if (cost[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == num_cols) return true;

            std::size_t leave = m_;
            Rational best_ratio;
            std::size_t best_basis = std::numeric_limits<std::size_t>::max();
            for (std::size_t i = 0; i < m_; ++i) {
                if (rows_[i][enter] <= 0) continue;
                const Rational ratio = rows_[i].back() / rows_[i][enter];
                if (leave == m_ || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < best_basis)) {
                    leave = i;
                    best_ratio = ratio;
                    best_basis = basis_[i];
                }
            }
            if (leave == m_) return false;
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        auto& pivot_row = rows_[row];
        const Rational inv = Rational(1) / pivot_row[col];
        for (auto& entry : pivot_row) entry *= inv;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == row) continue;
            auto& target = rows_[i];
            const Rational factor = target[col];
            if (factor == 0) continue;
            for (std::size_t j = 0; j < target.size(); ++j) target[j] -= factor * pivot_row[j];
        }
        basis_[row] = col;
    }

    std::size_t m_;
    std::size_t n_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> basis_;
    std::vector<bool> flipped_;
};

}  // namespace

LpSolution minimize(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                    const std::vector<Rational>& c) {
    if (a.size() != b.size()) throw SizeError("constraint matrix and rhs sizes differ");
    const std::size_t n = a.empty() ? c.size() : a[0].size();
    for (const auto& row : a)
        if (row.size() != n) throw SizeError("ragged constraint matrix");
    if (c.size() != n) throw SizeError("objective length differs from column count");

    Tableau tableau(a, b);
    LpSolution result;
    if (tableau.phase1() != 0) {
        result.status = LpStatus::Infeasible;
        result.farkas = tableau.farkas();
        return result;
    }
    if (!tableau.phase2(c)) {
        result.status = LpStatus::Unbounded;
        return result;
    }
    result.status = LpStatus::Optimal;
    result.objective = tableau.objective();
    result.x = tableau.solution();
    return result;
}

}  // namespace boole
