#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "ga/binopt.hpp"
#include "ga/groebner.hpp"
#include "ga/qubo.hpp"
#include "ga/simplex.hpp"

namespace ga {

struct DynamicRange {
    Rat epsilon = rat(0);  // admissible coefficient magnitudes lie in [1-eps, 1+eps]
    Rat margin = rat(1);   // required separation of the non-zeros of H
};

struct ReductionResult {
    Poly h_plus;                                   // degree <= 2, >= 0 on the cube
    std::vector<std::pair<Poly, Rat>> combination; // basis element -> coefficient a_t
    Qubo qubo;
    DynamicRange range;
};

struct ReduceOptions {
    std::size_t max_lp_calls = 50000;
    BuchbergerOptions gb;
};

// Input polynomials plus x^2 - x for every variable that occurs in them.
inline IdealGens boolean_closure(const std::vector<Poly>& polys) {
    if (polys.empty()) return IdealGens{};
    const Ring& ring = polys.front().ring();
    std::set<std::size_t> vars;
    std::vector<Poly> gens;
    for (const auto& p : polys) {
        if (p.ring() != ring) fail(errc::ring_mismatch, "boolean closure over mixed rings");
        if (!p.is_zero()) gens.push_back(p);
        for (auto v : p.support()) vars.insert(v);
    }
    for (auto v : vars) {
        Poly x = Poly::variable(ring, v);
        gens.push_back(x * x - x);
    }
    return IdealGens{std::move(gens), ring};
}

namespace qubocdetail {

// Feasibility program over the quadratic basis elements. Slots are the
// coupling coefficients of H+ (QUBO-folded, one per unordered variable
// pair); linear coefficients and the offset are unconstrained.
struct Program {
    std::vector<Poly> candidates;
    std::vector<std::vector<Rat>> slot_coeff;   // [t][slot]
    std::vector<std::vector<Rat>> point_values; // [t][cube point]
    std::vector<std::vector<Rat>> cube;
    std::vector<std::size_t> nonzero_points;
    std::size_t n_slots = 0;
};

// One feasibility LP: pattern entry per slot, +1/-1 selects the magnitude
// window, 0 forces the coefficient to vanish, 2 is the |c| <= 1+eps
// relaxation.
inline std::optional<std::vector<Rat>> try_pattern(const Program& sys,
                                                   const std::vector<int>& pattern,
                                                   const DynamicRange& range) {
    const std::size_t nt = sys.candidates.size();
    std::vector<LinearConstraint> cons;
    for (auto pidx : sys.nonzero_points) {
        LinearConstraint c;
        c.coeffs.resize(nt);
        for (std::size_t t = 0; t < nt; ++t) c.coeffs[t] = sys.point_values[t][pidx];
        c.rel = LinearConstraint::Rel::GE;
        c.rhs = range.margin;
        cons.push_back(std::move(c));
    }
    Rat lo = Rat(1) - range.epsilon, hi = Rat(1) + range.epsilon;
    for (std::size_t s = 0; s < sys.n_slots; ++s) {
        std::vector<Rat> row(nt);
        for (std::size_t t = 0; t < nt; ++t) row[t] = sys.slot_coeff[t][s];
        switch (pattern[s]) {
        case 0:
            cons.push_back({std::move(row), LinearConstraint::Rel::EQ, Rat(0)});
            break;
        case 1: {
            std::vector<Rat> r2 = row;
            cons.push_back({std::move(row), LinearConstraint::Rel::GE, lo});
            cons.push_back({std::move(r2), LinearConstraint::Rel::LE, hi});
            break;
        }
        case -1: {
            std::vector<Rat> r2 = row;
            cons.push_back({std::move(row), LinearConstraint::Rel::LE, -lo});
            cons.push_back({std::move(r2), LinearConstraint::Rel::GE, -hi});
            break;
        }
        default: {
            std::vector<Rat> r2 = row;
            cons.push_back({std::move(row), LinearConstraint::Rel::LE, hi});
            cons.push_back({std::move(r2), LinearConstraint::Rel::GE, -hi});
            break;
        }
        }
    }
    return lp_feasible_point(nt, cons);
}

} // namespace qubocdetail

inline bool verify_reduction(const Poly& H, const ReductionResult& r,
                             const BuchbergerOptions& gbopts = {});

// Groebner-driven reduction of H to a certified positive quadratic whose
// cube minima are exactly the zeros of H and whose coefficients respect the
// hardware window [1-eps, 1+eps].
inline ReductionResult reduce_to_qubo(const Poly& H, const DynamicRange& range,
                                      const ReduceOptions& opts = {}) {
    using namespace qubocdetail;
    const Ring& ring = H.ring();
    const std::size_t n = ring.arity();
    if (n > 12) fail(errc::resource_limit, "reduction certification limited to 12 variables");
    if (H.is_zero()) fail(errc::domain, "nothing to reduce: H is zero");

    Program sys;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.push_back({i, j});
    sys.n_slots = pairs.size();

    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        std::vector<Rat> p(n);
        for (std::size_t v = 0; v < n; ++v) p[v] = rat(static_cast<long>((mask >> v) & 1));
        sys.cube.push_back(std::move(p));
    }
    bool any_zero = false;
    for (std::size_t i = 0; i < sys.cube.size(); ++i) {
        if (sign(H.evaluate(sys.cube[i])) == 0)
            any_zero = true;
        else
            sys.nonzero_points.push_back(i);
    }
    if (!any_zero) fail(errc::infeasible, "H has no zeros on the cube; reduction rejected");

    auto gb = buchberger(boolean_closure({H}), Order::grevlex(), opts.gb);
    for (const auto& g : gb.elements) {
        if (g.total_degree() > 2) continue;
        Qubo folded = poly_to_qubo(g);
        std::vector<Rat> slots;
        for (auto pr : pairs) {
            auto it = folded.quadratic.find(pr);
            slots.push_back(it == folded.quadratic.end() ? Rat(0) : it->second);
        }
        // The boolean relations fold to nothing: no contribution to values
        // or coefficients, so they are left out of the program.
        bool useful = sign(folded.offset) != 0;
        for (std::size_t v = 0; v < n && !useful; ++v)
            if (sign(folded.linear[v]) != 0) useful = true;
        for (const auto& s : slots)
            if (sign(s) != 0) useful = true;
        if (!useful) continue;
        sys.candidates.push_back(g);
        sys.slot_coeff.push_back(std::move(slots));
        std::vector<Rat> vals;
        for (const auto& p : sys.cube) vals.push_back(g.evaluate(p));
        sys.point_values.push_back(std::move(vals));
    }
    if (sys.candidates.empty())
        fail(errc::infeasible, "no quadratic elements in the basis; extra variables required");

    const std::size_t nt = sys.candidates.size();
    std::size_t lp_calls = 0;
    auto budget = [&]() {
        if (++lp_calls > opts.max_lp_calls)
            fail(errc::resource_limit, "reduction search exceeded the LP budget");
    };

    auto finish = [&](const std::vector<Rat>& a) -> ReductionResult {
        ReductionResult out;
        out.range = range;
        out.h_plus = Poly(ring);
        for (std::size_t t = 0; t < nt; ++t) {
            if (sign(a[t]) == 0) continue;
            out.combination.push_back({sys.candidates[t], a[t]});
            out.h_plus = out.h_plus + sys.candidates[t] * a[t];
        }
        out.qubo = poly_to_qubo(out.h_plus);
        if (!verify_reduction(H, out, opts.gb))
            fail(errc::domain, "reduction failed exhaustive certification");
        return out;
    };

    // Stage 0: relaxation with only the upper magnitude bound; infeasible
    // here means no windowed quadratic combination can exist either.
    budget();
    auto relaxed = try_pattern(sys, std::vector<int>(sys.n_slots, 2), range);
    if (!relaxed)
        fail(errc::infeasible,
             "no positive quadratic combination exists; extra-variable reduction required");

    // Stage 1: adopt the sign pattern the relaxation chose.
    auto pattern_of = [&](const std::vector<Rat>& a) {
        std::vector<int> pat(sys.n_slots, 0);
        for (std::size_t s = 0; s < sys.n_slots; ++s) {
            Rat c(0);
            for (std::size_t t = 0; t < nt; ++t) c += a[t] * sys.slot_coeff[t][s];
            pat[s] = sign(c);
        }
        return pat;
    };
    budget();
    if (auto sol = try_pattern(sys, pattern_of(*relaxed), range)) return finish(*sol);

    // Stage 2: branch-and-prune over per-slot windows. Each slot is fixed to
    // absent / positive window / negative window in turn; a node is pruned
    // when the LP with the remaining slots relaxed is already infeasible.
    // Absent-first ordering favours sparse results.
    std::vector<int> pattern(sys.n_slots, 2);
    std::function<std::optional<std::vector<Rat>>(std::size_t)> search =
        [&](std::size_t depth) -> std::optional<std::vector<Rat>> {
        budget();
        auto node = try_pattern(sys, pattern, range);
        if (!node) return std::nullopt;
        if (depth == sys.n_slots) return node;
        for (int choice : {0, 1, -1}) {
            pattern[depth] = choice;
            if (auto sol = search(depth + 1)) return sol;
        }
        pattern[depth] = 2;
        return std::nullopt;
    };
    if (auto sol = search(0)) return finish(*sol);
    fail(errc::infeasible, "no window-feasible quadratic combination found");
}

// Exhaustive certification of a ReductionResult against its source H.
inline bool verify_reduction(const Poly& H, const ReductionResult& r,
                             const BuchbergerOptions& gbopts) {
    const Ring& ring = H.ring();
    const std::size_t n = ring.arity();
    if (n > 20) fail(errc::resource_limit, "verification limited to 20 variables");

    if (r.h_plus.total_degree() > 2) return false;
    Poly recombined(ring);
    for (const auto& [t, a] : r.combination) recombined = recombined + t * a;
    if (recombined != r.h_plus) return false;

    // membership in the closure ideal
    auto gb = buchberger(boolean_closure({H}), Order::grevlex(), gbopts);
    if (!normal_form(r.h_plus, gb).is_zero()) return false;

    // pointwise: zero exactly on the zero set, separated elsewhere, min == 0
    bool attained_zero = false;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        std::vector<Rat> p(n);
        std::vector<int> bits(n);
        for (std::size_t v = 0; v < n; ++v) {
            bits[v] = static_cast<int>((mask >> v) & 1);
            p[v] = rat(bits[v]);
        }
        int h = sign(H.evaluate(p));
        Rat hp = r.h_plus.evaluate(p);
        if (r.qubo.n == n && r.qubo.energy(bits) != hp) return false;
        if (h == 0) {
            if (sign(hp) != 0) return false;
            attained_zero = true;
        } else {
            if (hp < r.range.margin) return false;
        }
    }
    if (!attained_zero) return false;

    // coupling magnitudes inside the window
    Rat lo = Rat(1) - r.range.epsilon, hi = Rat(1) + r.range.epsilon;
    for (const auto& [ij, c] : r.qubo.quadratic) {
        Rat a = rat_abs(c);
        if (a < lo || a > hi) return false;
    }
    return true;
}

} // namespace ga
