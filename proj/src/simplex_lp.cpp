#include "krpoly/simplex_lp.hpp"

#include <cstddef>
#include <stdexcept>

namespace krpoly {

namespace {

// Dense simplex tableau. Columns 0..ncols-1 are the internal variables
// (free originals split into positive/negative parts, then one artificial
// per row); the right-hand side is stored separately. basis[i] is the
// internal column that is basic in row i.
struct Tableau {
    std::size_t m = 0;
    std::size_t ncols = 0;
    std::vector<RatVector> row;
    RatVector rhs;
    RatVector red;  // reduced-cost row of the current phase
    std::vector<std::size_t> basis;

    void pivot(std::size_t r, std::size_t c) {
        const Rational inv = Rational(1) / row[r][c];
        for (std::size_t j = 0; j < ncols; ++j) row[r][j] *= inv;
        rhs[r] *= inv;
        row[r][c] = 1;  // kill residual normalization noise exactly
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || row[i][c] == 0) continue;
            const Rational f = row[i][c];
            for (std::size_t j = 0; j < ncols; ++j) row[i][j] -= f * row[r][j];
            rhs[i] -= f * rhs[r];
            row[i][c] = 0;
        }
        if (red[c] != 0) {
            const Rational f = red[c];
            for (std::size_t j = 0; j < ncols; ++j) red[j] -= f * row[r][j];
            red[c] = 0;
        }
        basis[r] = c;
    }

    // Bland's rule: entering column is the lowest-index one with a negative
    // reduced cost; the leaving row minimizes the ratio, ties broken by the
    // lowest basic-variable index. Columns >= limit are never entered
    // (used to bar artificials in phase 2).
    enum class Step { Optimal, Unbounded, Pivoted };
    Step bland_step(std::size_t limit) {
        std::size_t enter = ncols;
        for (std::size_t j = 0; j < limit; ++j) {
            if (red[j] < 0) { enter = j; break; }
        }
        if (enter == ncols) return Step::Optimal;

        std::size_t leave = m;
        Rational best_ratio;
        for (std::size_t i = 0; i < m; ++i) {
            if (row[i][enter] <= 0) continue;
            const Rational ratio = rhs[i] / row[i][enter];
            if (leave == m || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m) return Step::Unbounded;
        pivot(leave, enter);
        return Step::Pivoted;
    }
};

}  // namespace

LPResult solve_lp(const RatVector& objective,
                  const RatMatrix& eq_matrix,
                  const RatVector& eq_rhs,
                  const std::vector<bool>& nonneg) {
    const std::size_t nv = objective.size();
    if (eq_matrix.cols != nv && !(eq_matrix.rows == 0 && eq_matrix.cols == 0))
        throw std::invalid_argument("solve_lp: matrix column count does not match objective");
    if (eq_matrix.rows != eq_rhs.size())
        throw std::invalid_argument("solve_lp: matrix row count does not match rhs");
    if (nonneg.size() != nv)
        throw std::invalid_argument("solve_lp: nonneg flag count does not match objective");

    // Split free variables into x+ - x-.
    struct ColRef { std::size_t var; int sign; };
    std::vector<ColRef> colmap;
    for (std::size_t j = 0; j < nv; ++j) {
        colmap.push_back({j, +1});
        if (!nonneg[j]) colmap.push_back({j, -1});
    }
    const std::size_t ns = colmap.size();
    const std::size_t m = eq_matrix.rows;

    Tableau t;
    t.m = m;
    t.ncols = ns + m;  // structural columns, then one artificial per row
    t.row.assign(m, RatVector(t.ncols));
    t.rhs.assign(m, Rational(0));
    t.basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = eq_rhs[i] < 0;
        for (std::size_t j = 0; j < ns; ++j) {
            Rational v = eq_matrix.at(i, colmap[j].var);
            if (colmap[j].sign < 0) v = -v;
            t.row[i][j] = flip ? -v : v;
        }
        t.rhs[i] = flip ? -eq_rhs[i] : eq_rhs[i];
        t.row[i][ns + i] = 1;
        t.basis[i] = ns + i;
    }

    // Phase 1: minimize the sum of artificial variables.
    t.red.assign(t.ncols, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < ns; ++j) t.red[j] -= t.row[i][j];
    while (true) {
        const auto step = t.bland_step(t.ncols);
        if (step == Tableau::Step::Optimal) break;
        if (step == Tableau::Step::Unbounded)
            throw std::logic_error("solve_lp: phase 1 cannot be unbounded");
    }
    Rational phase1_value = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (t.basis[i] >= ns) phase1_value += t.rhs[i];
    if (phase1_value != 0) return LPResult{LPStatus::Infeasible, Rational(0), {}};

    // Drive remaining artificials out of the basis; a row with no structural
    // pivot candidate is linearly dependent and gets zeroed out of play.
    std::vector<bool> row_live(m, true);
    for (std::size_t i = 0; i < m; ++i) {
        if (t.basis[i] < ns) continue;
        std::size_t c = ns;
        for (std::size_t j = 0; j < ns; ++j) {
            if (t.row[i][j] != 0) { c = j; break; }
        }
        if (c < ns) {
            t.pivot(i, c);
        } else {
            row_live[i] = false;
        }
    }

    // Phase 2 over the original objective.
    t.red.assign(t.ncols, Rational(0));
    for (std::size_t j = 0; j < ns; ++j) {
        Rational c = objective[colmap[j].var];
        if (colmap[j].sign < 0) c = -c;
        t.red[j] = c;
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (!row_live[i] || t.basis[i] >= ns) continue;
        const Rational cb = t.red[t.basis[i]];
        if (cb == 0) continue;
        for (std::size_t j = 0; j < t.ncols; ++j) t.red[j] -= cb * t.row[i][j];
        t.red[t.basis[i]] = 0;
    }
    while (true) {
        const auto step = t.bland_step(ns);
        if (step == Tableau::Step::Optimal) break;
        if (step == Tableau::Step::Unbounded)
            return LPResult{LPStatus::Unbounded, Rational(0), {}};
    }

    LPResult res;
    res.status = LPStatus::Optimal;
    res.solution.assign(nv, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
        if (!row_live[i] || t.basis[i] >= ns) continue;
        const ColRef& ref = colmap[t.basis[i]];
        res.solution[ref.var] += (ref.sign > 0 ? t.rhs[i] : -t.rhs[i]);
    }
    res.value = 0;
    for (std::size_t j = 0; j < nv; ++j) res.value += objective[j] * res.solution[j];

    // Re-substitute: an optimum must satisfy the constraints exactly.
    for (std::size_t i = 0; i < m; ++i) {
        Rational acc = 0;
        for (std::size_t j = 0; j < nv; ++j) acc += eq_matrix.at(i, j) * res.solution[j];
        if (acc != eq_rhs[i]) throw std::logic_error("solve_lp: infeasible optimum");
    }
    return res;
}

LPResult solve_lp(const RatVector& objective,
                  const RatMatrix& eq_matrix,
                  const RatVector& eq_rhs) {
    return solve_lp(objective, eq_matrix, eq_rhs, std::vector<bool>(objective.size(), true));
}

}  // namespace krpoly
