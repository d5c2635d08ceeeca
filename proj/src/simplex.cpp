#include "slicekit/simplex.hpp"

#include <algorithm>

#include "slicekit/error.hpp"

namespace slicekit {

namespace {

class Tableau {
public:
    // columns: structural + surplus, then one artificial per row, then rhs
    Tableau(const LPProblem& p) {
        const std::size_t nvars = p.objective.size();
        std::size_t n_ge = 0;
        for (auto s : p.sense)
            if (s == LPProblem::Sense::ge) ++n_ge;
        m_ = p.rows.size();
        width_ = nvars + n_ge;
        rhs_col_ = width_ + m_;

        rows_.assign(m_, std::vector<Rational>(rhs_col_ + 1, Rational(0)));
        std::size_t surplus = nvars;
        for (std::size_t r = 0; r < m_; ++r) {
            if (p.rows[r].size() != nvars) fail(ErrorCode::argument, "LP row width mismatch");
            for (std::size_t c = 0; c < nvars; ++c) rows_[r][c] = p.rows[r][c];
            if (p.sense[r] == LPProblem::Sense::ge) rows_[r][surplus++] = -1;
            rows_[r][rhs_col_] = p.rhs[r];
            if (rows_[r][rhs_col_] < 0)
                for (auto& x : rows_[r]) x = -x;
            rows_[r][width_ + r] = 1;
        }
        basis_.resize(m_);
        for (std::size_t r = 0; r < m_; ++r) basis_[r] = static_cast<int>(width_ + r);
    }

    std::size_t width() const { return width_; }
    std::size_t rhs_col() const { return rhs_col_; }
    const std::vector<int>& basis() const { return basis_; }
    const Rational& at(std::size_t r, std::size_t c) const { return rows_[r][c]; }

    // Minimizes cost over the current feasible basis; Bland's rule on both
    // the entering and the leaving choice prevents cycling.
    LPSolution::Status minimize(const std::vector<Rational>& cost, std::size_t active_width) {
        while (true) {
            const std::vector<Rational> reduced = reduced_costs(cost, active_width);
            std::size_t enter = active_width;
            for (std::size_t c = 0; c < active_width; ++c)
                if (reduced[c] < 0) {
                    enter = c;
                    break;
                }
            if (enter == active_width) return LPSolution::Status::optimal;

            std::size_t leave = m_;
            Rational best;
            for (std::size_t r = 0; r < m_; ++r) {
                if (rows_[r][enter] <= 0) continue;
                const Rational ratio = rows_[r][rhs_col()] / rows_[r][enter];
                if (leave == m_ || ratio < best ||
                    (ratio == best && basis_[r] < basis_[leave])) {
                    best = ratio;
                    leave = r;
                }
            }
            if (leave == m_) return LPSolution::Status::unbounded;
            pivot(leave, enter);
        }
    }

    std::vector<Rational> reduced_costs(const std::vector<Rational>& cost,
                                        std::size_t active_width) const {
        std::vector<Rational> reduced(active_width, Rational(0));
        for (std::size_t c = 0; c < active_width; ++c) reduced[c] = cost[c];
        for (std::size_t r = 0; r < m_; ++r) {
            const Rational& cb = cost[static_cast<std::size_t>(basis_[r])];
            if (cb == 0) continue;
            for (std::size_t c = 0; c < active_width; ++c)
                if (rows_[r][c] != 0) reduced[c] -= cb * rows_[r][c];
        }
        return reduced;
    }

    Rational objective_value(const std::vector<Rational>& cost) const {
        Rational v(0);
        for (std::size_t r = 0; r < m_; ++r)
            v += cost[static_cast<std::size_t>(basis_[r])] * rows_[r][rhs_col()];
        return v;
    }

    // Removes artificials left in the basis after phase 1: pivot them out
    // when possible, else the row is redundant and gets dropped.
    void expel_artificials() {
        for (std::size_t r = 0; r < m_;) {
            if (static_cast<std::size_t>(basis_[r]) < width_) {
                ++r;
                continue;
            }
            std::size_t entering = width_;
            for (std::size_t c = 0; c < width_; ++c)
                if (rows_[r][c] != 0) {
                    entering = c;
                    break;
                }
            if (entering < width_) {
                pivot(r, entering);
                ++r;
            } else {
                if (rows_[r][rhs_col()] != 0)
                    fail(ErrorCode::internal, "inconsistent zero row after phase 1");
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
                --m_;
            }
        }
    }

    std::vector<Rational> primal(std::size_t nvars) const {
        std::vector<Rational> x(nvars, Rational(0));
        for (std::size_t r = 0; r < m_; ++r)
            if (static_cast<std::size_t>(basis_[r]) < nvars)
                x[static_cast<std::size_t>(basis_[r])] = rows_[r][rhs_col()];
        return x;
    }

    bool artificial_in_basis() const {
        return std::any_of(basis_.begin(), basis_.end(),
                           [&](int b) { return static_cast<std::size_t>(b) >= width_; });
    }

private:
    void pivot(std::size_t leave, std::size_t enter) {
        auto& prow = rows_[leave];
        const Rational inv = prow[enter];
        for (auto& x : prow) x /= inv;
        for (std::size_t r = 0; r < m_; ++r) {
            if (r == leave || rows_[r][enter] == 0) continue;
            const Rational f = rows_[r][enter];
            for (std::size_t c = 0; c <= rhs_col(); ++c)
                if (prow[c] != 0) rows_[r][c] -= f * prow[c];
        }
        basis_[leave] = static_cast<int>(enter);
    }

    std::size_t m_ = 0, width_ = 0, rhs_col_ = 0;
    std::vector<std::vector<Rational>> rows_;
    std::vector<int> basis_;
};

} // namespace

LPSolution solve_min(const LPProblem& p) {
    if (p.rows.size() != p.sense.size() || p.rows.size() != p.rhs.size())
        fail(ErrorCode::argument, "LP shape mismatch");
    const std::size_t nvars = p.objective.size();
    Tableau tab(p);

    // phase 1: drive the artificials to zero
    std::vector<Rational> phase1(tab.rhs_col(), Rational(0));
    for (std::size_t c = tab.width(); c < tab.rhs_col(); ++c) phase1[c] = 1;
    if (tab.minimize(phase1, tab.rhs_col()) != LPSolution::Status::optimal ||
        tab.objective_value(phase1) != 0)
        return {LPSolution::Status::infeasible, Rational(0), {}, {}};
    tab.expel_artificials();
    if (tab.artificial_in_basis())
        fail(ErrorCode::internal, "artificial stuck in basis on a zero row");

    // phase 2 over structural + surplus columns only
    std::vector<Rational> cost(tab.rhs_col(), Rational(0));
    for (std::size_t c = 0; c < nvars; ++c) cost[c] = p.objective[c];
    const LPSolution::Status status = tab.minimize(cost, tab.width());
    if (status != LPSolution::Status::optimal) return {status, Rational(0), {}, {}};

    LPSolution sol;
    sol.status = LPSolution::Status::optimal;
    sol.value = tab.objective_value(cost);
    sol.x = tab.primal(nvars);
    sol.basis = tab.basis();

    // exact certificate: primal feasibility and dual feasibility
    for (std::size_t r = 0; r < p.rows.size(); ++r) {
        Rational lhs(0);
        for (std::size_t c = 0; c < nvars; ++c) lhs += p.rows[r][c] * sol.x[c];
        const bool ok = p.sense[r] == LPProblem::Sense::eq ? lhs == p.rhs[r] : lhs >= p.rhs[r];
        if (!ok) fail(ErrorCode::internal, "simplex solution violates a constraint");
    }
    for (const Rational& rc : tab.reduced_costs(cost, tab.width()))
        if (rc < 0) fail(ErrorCode::internal, "simplex stopped with a negative reduced cost");
    return sol;
}

} // namespace slicekit
