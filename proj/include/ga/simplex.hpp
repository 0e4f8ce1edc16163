#pragma once

#include <optional>
#include <vector>

#include "ga/rational.hpp"

namespace ga {

// Exact-rational phase-1 simplex: find any point satisfying a system of
// linear constraints over free variables, or report infeasibility. Bland's
// rule, so termination is unconditional.
struct LinearConstraint {
    enum class Rel { LE, GE, EQ };
    std::vector<Rat> coeffs;
    Rel rel;
    Rat rhs;
};

inline std::optional<std::vector<Rat>> lp_feasible_point(
    std::size_t nvars, const std::vector<LinearConstraint>& constraints) {
    const std::size_t m = constraints.size();
    if (m == 0) return std::vector<Rat>(nvars, Rat(0));

    // Columns: x+ (nvars) | x- (nvars) | slack (m, some unused) | artificial (m) | rhs
    const std::size_t n_struct = 2 * nvars;
    const std::size_t slack0 = n_struct;
    const std::size_t art0 = slack0 + m;
    const std::size_t ncols = art0 + m + 1;
    const std::size_t rhs_col = ncols - 1;

    std::vector<std::vector<Rat>> tab(m, std::vector<Rat>(ncols, Rat(0)));
    std::vector<std::size_t> basis(m);

    for (std::size_t r = 0; r < m; ++r) {
        const auto& c = constraints[r];
        if (c.coeffs.size() != nvars) fail(errc::domain, "constraint arity mismatch");
        int flip = 1;
        Rat rhs = c.rhs;
        // normalize to rhs >= 0
        LinearConstraint::Rel rel = c.rel;
        if (sign(rhs) < 0) {
            flip = -1;
            rhs = -rhs;
            if (rel == LinearConstraint::Rel::LE)
                rel = LinearConstraint::Rel::GE;
            else if (rel == LinearConstraint::Rel::GE)
                rel = LinearConstraint::Rel::LE;
        }
        for (std::size_t v = 0; v < nvars; ++v) {
            Rat a = c.coeffs[v] * flip;
            tab[r][v] = a;
            tab[r][nvars + v] = -a;
        }
        if (rel == LinearConstraint::Rel::LE)
            tab[r][slack0 + r] = 1;
        else if (rel == LinearConstraint::Rel::GE)
            tab[r][slack0 + r] = -1;
        tab[r][art0 + r] = 1;
        tab[r][rhs_col] = rhs;
        basis[r] = art0 + r;
    }

    // Phase-1 objective: minimize the sum of artificials. Reduced costs kept
    // as objective row z (cost of artificials is 1, everything else 0).
    std::vector<Rat> z(ncols, Rat(0));
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t cidx = 0; cidx < ncols; ++cidx) z[cidx] += tab[r][cidx];

    auto pivot = [&](std::size_t pr, std::size_t pc) {
        Rat inv = tab[pr][pc];
        for (auto& e : tab[pr]) e /= inv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == pr || sign(tab[r][pc]) == 0) continue;
            Rat f = tab[r][pc];
            for (std::size_t cidx = 0; cidx < ncols; ++cidx)
                tab[r][cidx] -= f * tab[pr][cidx];
        }
        if (sign(z[pc]) != 0) {
            Rat f = z[pc];
            for (std::size_t cidx = 0; cidx < ncols; ++cidx) z[cidx] -= f * tab[pr][cidx];
        }
        basis[pr] = pc;
    };

    while (true) {
        // Bland: entering column = smallest index with positive reduced cost,
        // artificials excluded from re-entry.
        std::size_t enter = ncols;
        for (std::size_t cidx = 0; cidx < art0; ++cidx)
            if (sign(z[cidx]) > 0) {
                enter = cidx;
                break;
            }
        if (enter == ncols) break;

        std::size_t leave = m;
        Rat best;
        for (std::size_t r = 0; r < m; ++r) {
            if (sign(tab[r][enter]) <= 0) continue;
            Rat ratio = tab[r][rhs_col] / tab[r][enter];
            if (leave == m || ratio < best ||
                (ratio == best && basis[r] < basis[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave == m) break; // unbounded in phase 1 cannot happen; defensive
        pivot(leave, enter);
    }

    // Feasible iff all artificials are zero.
    for (std::size_t r = 0; r < m; ++r)
        if (basis[r] >= art0 && sign(tab[r][rhs_col]) != 0) return std::nullopt;

    std::vector<Rat> solution(nvars, Rat(0));
    for (std::size_t r = 0; r < m; ++r) {
        if (basis[r] < nvars)
            solution[basis[r]] += tab[r][rhs_col];
        else if (basis[r] < 2 * nvars)
            solution[basis[r] - nvars] -= tab[r][rhs_col];
    }
    return solution;
}

} // namespace ga
