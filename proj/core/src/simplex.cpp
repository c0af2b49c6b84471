#include "simplex.hpp"

#include <cassert>

namespace elect::detail {

namespace {

// Tableau rows 0..m-1 are the constraints in canonical form (basis columns
// are unit vectors); row m is the reduced-cost row for a minimization, with
// the negated objective value in its rhs cell.
class Tableau {
public:
    Tableau(int m, int n) : m_(m), n_(n), t_(static_cast<size_t>(m) + 1), basis_(static_cast<size_t>(m)) {
        for (auto& row : t_) row.assign(static_cast<size_t>(n) + 1, Rational(0));
    }

    int rows() const { return m_; }
    int cols() const { return n_; }
    Rational& at(int i, int j) { return t_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    const Rational& at(int i, int j) const { return t_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    Rational& rhs(int i) { return at(i, n_); }
    Rational& cost(int j) { return at(m_, j); }
    int& basis(int i) { return basis_[static_cast<size_t>(i)]; }

    void pivot(int row, int col) {
        auto& prow = t_[static_cast<size_t>(row)];
        Rational inv = prow[static_cast<size_t>(col)];
        assert(inv != 0);
        for (auto& v : prow)
            if (v != 0) v /= inv;
        prow[static_cast<size_t>(col)] = 1;
        for (int i = 0; i <= m_; ++i) {
            if (i == row) continue;
            auto& irow = t_[static_cast<size_t>(i)];
            Rational factor = irow[static_cast<size_t>(col)];
            if (factor == 0) continue;
            for (int j = 0; j <= n_; ++j)
                if (prow[static_cast<size_t>(j)] != 0)
                    irow[static_cast<size_t>(j)] -= factor * prow[static_cast<size_t>(j)];
            irow[static_cast<size_t>(col)] = 0;
        }
        basis_[static_cast<size_t>(row)] = col;
    }

    // Bland: entering = lowest-index allowed column with negative reduced
    // cost; leaving = min-ratio row, ties by lowest basis column.
    // Returns false when optimal, throws nothing; sets *unbounded on rays.
    bool step(const std::vector<char>& allowed, bool* unbounded) {
        int enter = -1;
        for (int j = 0; j < n_; ++j) {
            if (!allowed[static_cast<size_t>(j)]) continue;
            if (cost(j) < 0) {
                enter = j;
                break;
            }
        }
        if (enter < 0) return false;
        int leave = -1;
        Rational best;
        for (int i = 0; i < m_; ++i) {
            const Rational& a = at(i, enter);
            if (a <= 0) continue;
            Rational ratio = rhs(i) / a;
            if (leave < 0 || ratio < best || (ratio == best && basis(i) < basis(leave))) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0) {
            *unbounded = true;
            return false;
        }
        pivot(leave, enter);
        return true;
    }

    // Installs the reduced-cost row for minimizing cost . x given the
    // current basis: r_j = c_j - sum_i c_basis(i) * t[i][j].
    void price(const std::vector<Rational>& costv) {
        for (int j = 0; j <= n_; ++j) cost(j) = (j < n_) ? costv[static_cast<size_t>(j)] : Rational(0);
        for (int i = 0; i < m_; ++i) {
            const Rational& cb = costv[static_cast<size_t>(basis(i))];
            if (cb == 0) continue;
            for (int j = 0; j <= n_; ++j)
                if (at(i, j) != 0) cost(j) -= cb * at(i, j);
        }
    }

    void drop_row(int row) {
        t_.erase(t_.begin() + row);
        basis_.erase(basis_.begin() + row);
        --m_;
    }

private:
    int m_;
    int n_;
    std::vector<std::vector<Rational>> t_;
    std::vector<int> basis_;
};

}  // namespace

SimplexResult solve_lp(const LinearProgram& lp) {
    const int m = static_cast<int>(lp.rows.size());
    const int n = lp.num_vars;
    const int total = n + m;  // one artificial per row
    Tableau t(m, total);
    for (int i = 0; i < m; ++i) {
        bool flip = lp.rhs[static_cast<size_t>(i)] < 0;
        for (int j = 0; j < n; ++j) {
            const Rational& v = lp.rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
            t.at(i, j) = flip ? -v : v;
        }
        t.rhs(i) = flip ? -lp.rhs[static_cast<size_t>(i)] : lp.rhs[static_cast<size_t>(i)];
        t.at(i, n + i) = 1;
        t.basis(i) = n + i;
    }

    SimplexResult result;

    // Phase 1: minimize the sum of artificials.
    {
        std::vector<Rational> cost(static_cast<size_t>(total), Rational(0));
        for (int j = n; j < total; ++j) cost[static_cast<size_t>(j)] = 1;
        t.price(cost);
        std::vector<char> allowed(static_cast<size_t>(total), 1);
        bool unbounded = false;
        while (t.step(allowed, &unbounded)) {
        }
        // Objective value = -cost-row rhs.
        if (-t.cost(total) != 0) {
            result.feasible = false;
            return result;
        }
    }

    // Drive surviving artificials out of the basis (their values are zero);
    // a row with no structural pivot is redundant and dropped.
    for (int i = 0; i < t.rows();) {
        if (t.basis(i) < n) {
            ++i;
            continue;
        }
        int col = -1;
        for (int j = 0; j < n; ++j)
            if (t.at(i, j) != 0) {
                col = j;
                break;
            }
        if (col >= 0) {
            t.pivot(i, col);
            ++i;
        } else {
            t.drop_row(i);
        }
    }

    // Phase 2: minimize -objective, artificial columns banned.
    {
        std::vector<Rational> cost(static_cast<size_t>(total), Rational(0));
        for (int j = 0; j < n; ++j) cost[static_cast<size_t>(j)] = -lp.objective[static_cast<size_t>(j)];
        t.price(cost);
        std::vector<char> allowed(static_cast<size_t>(total), 0);
        for (int j = 0; j < n; ++j) allowed[static_cast<size_t>(j)] = 1;
        bool unbounded = false;
        while (t.step(allowed, &unbounded)) {
        }
        if (unbounded) {
            result.feasible = true;
            result.bounded = false;
            return result;
        }
    }

    result.feasible = true;
    result.solution.assign(static_cast<size_t>(n), Rational(0));
    for (int i = 0; i < t.rows(); ++i)
        if (t.basis(i) < n) result.solution[static_cast<size_t>(t.basis(i))] = t.rhs(i);
    for (int j = 0; j < n; ++j)
        result.value += lp.objective[static_cast<size_t>(j)] * result.solution[static_cast<size_t>(j)];
    return result;
}

}  // namespace elect::detail
