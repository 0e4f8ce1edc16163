#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ga/groebner.hpp"
#include "ga/univariate.hpp"

namespace ga {

struct BinaryProblem {
    Poly objective;                         // over the y-ring
    std::vector<Poly> equality_constraints; // each required to vanish on {0,1}^m
};

struct Optimum {
    Rat value;
    std::vector<std::vector<int>> minimizers; // 0/1 vectors, sorted
    std::vector<Rat> value_spectrum;           // sorted distinct attained values, when computed
};

// Penalized objective f~ = f + sum a_i y_i (y_i - 1). The penalty variable
// a_i stands for the squared multiplier, so its partial derivative is the
// boolean relation y_i(y_i - 1) and the critical variety is always finite.
struct TildeProblem {
    Ring extended_ring; // y variables followed by the penalty variables
    Poly tilde_f;
    std::vector<Poly> gradient_gens; // y-partials then penalty-variable partials
};

struct BinoptOptions {
    std::size_t elimination_var_limit = 16;
    std::size_t eigen_var_limit = 6;
    BuchbergerOptions gb;
};

inline std::vector<Poly> boolean_relations(const Ring& ring, const std::vector<std::size_t>& vars) {
    std::vector<Poly> out;
    for (auto i : vars) {
        Poly v = Poly::variable(ring, i);
        out.push_back(v * v - v);
    }
    return out;
}

inline std::vector<Poly> boolean_relations(const Ring& ring) {
    std::vector<std::size_t> all(ring.arity());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return boolean_relations(ring, all);
}

// Multilinear representative: the normal form modulo <y_i^2 - y_i>, equal to
// f on every binary point.
inline Poly multilinear_form(const Poly& f) {
    return normal_form(f, boolean_relations(f.ring()), Order::grevlex());
}

// Enumerate all assignments from the given per-variable value domains on
// which every polynomial vanishes. Variables are assigned from the last
// declaration index backwards so lex-triangular systems prune early.
inline std::vector<std::vector<Rat>> enumerate_zeros(const std::vector<Poly>& polys,
                                                     const Ring& ring,
                                                     const std::vector<std::vector<Rat>>& domains) {
    if (domains.size() != ring.arity()) fail(errc::domain, "domain list has wrong arity");
    std::vector<std::vector<Rat>> solutions;
    std::vector<Rat> assignment(ring.arity());

    auto prune = [&](const std::vector<Poly>& ps) {
        for (const auto& p : ps)
            if (p.is_constant() && !p.is_zero()) return true;
        return false;
    };

    std::function<void(std::size_t, const std::vector<Poly>&)> walk =
        [&](std::size_t depth, const std::vector<Poly>& current) {
            if (prune(current)) return;
            if (depth == ring.arity()) {
                solutions.push_back(assignment);
                return;
            }
            std::size_t var = ring.arity() - 1 - depth;
            for (const auto& val : domains[var]) {
                assignment[var] = val;
                std::vector<std::optional<Rat>> sub(ring.arity());
                sub[var] = val;
                std::vector<Poly> next;
                next.reserve(current.size());
                bool dead = false;
                for (const auto& p : current) {
                    Poly q = p.substitute(sub);
                    if (q.is_constant()) {
                        if (!q.is_zero()) {
                            dead = true;
                            break;
                        }
                        continue; // satisfied, drop
                    }
                    next.push_back(std::move(q));
                }
                if (!dead) walk(depth + 1, next);
            }
        };
    walk(0, polys);
    std::sort(solutions.begin(), solutions.end());
    return solutions;
}

inline std::vector<std::vector<int>> enumerate_binary_zeros(const std::vector<Poly>& polys,
                                                            const Ring& ring) {
    std::vector<std::vector<Rat>> domains(ring.arity(), {Rat(0), Rat(1)});
    auto sols = enumerate_zeros(polys, ring, domains);
    std::vector<std::vector<int>> out;
    for (const auto& s : sols) {
        std::vector<int> bits(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) bits[i] = s[i] == 1 ? 1 : 0;
        out.push_back(std::move(bits));
    }
    return out;
}

// Range-variable elimination: adjoin z - f and the boolean relations, compute
// a lex basis with z rightmost, read the attained values off the univariate
// element and walk the triangular basis for the minimizers.
inline Optimum solve_by_elimination(const BinaryProblem& problem, const BinoptOptions& opts = {}) {
    const Ring& yring = problem.objective.ring();
    const std::size_t m = yring.arity();
    if (m > opts.elimination_var_limit)
        fail(errc::resource_limit, "elimination method variable limit exceeded");

    std::string zname = "z";
    while (yring.index_of(zname) >= 0) zname += "_";
    std::vector<std::string> names = yring.names();
    names.push_back(zname);
    Ring ext(names);
    const std::size_t zidx = m;

    std::vector<Poly> gens;
    gens.push_back(Poly::variable(ext, zidx) - change_ring(problem.objective, ext));
    for (const auto& c : problem.equality_constraints) gens.push_back(change_ring(c, ext));
    std::vector<std::size_t> yvars(m);
    for (std::size_t i = 0; i < m; ++i) yvars[i] = i;
    for (auto& b : boolean_relations(ext, yvars)) gens.push_back(std::move(b));

    auto gb = buchberger(gens, Order::lex(ext), opts.gb);
    if (gb.is_unit_ideal()) fail(errc::infeasible, "binary problem is infeasible");

    // The z-eliminant: reduced lex basis has exactly one element in z alone.
    std::optional<UniPoly> eliminant;
    for (const auto& g : gb.elements) {
        auto sup = g.support();
        if (sup.size() == 1 && sup[0] == zidx) {
            eliminant = to_univariate(g, zidx);
            break;
        }
    }
    if (!eliminant) fail(errc::domain, "no univariate range element found");

    // Every root is a value of f at a feasible binary point, so evaluation
    // over the cube supplies a complete candidate set for exact deflation.
    std::vector<Rat> candidates;
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        std::vector<Rat> p(m);
        for (std::size_t v = 0; v < m; ++v) p[v] = rat(static_cast<long>((mask >> v) & 1));
        Rat val = problem.objective.evaluate(p);
        if (std::find(candidates.begin(), candidates.end(), val) == candidates.end())
            candidates.push_back(val);
    }
    auto roots = rational_roots_from_candidates(*eliminant, candidates);
    if (roots.residual_degree != 0)
        fail(errc::domain, "range polynomial has a nonrational root"); // cannot occur, by construction

    Optimum out;
    for (const auto& [r, mult] : roots.roots) out.value_spectrum.push_back(r);
    std::sort(out.value_spectrum.begin(), out.value_spectrum.end());
    if (out.value_spectrum.empty()) fail(errc::infeasible, "binary problem is infeasible");
    out.value = out.value_spectrum.front();

    // Back-substitute the optimum into the triangular basis, both branches of
    // every binary variable, verifying leaves against the full system.
    std::vector<std::optional<Rat>> sub(ext.arity());
    sub[zidx] = out.value;
    std::vector<Poly> at_min;
    for (const auto& g : gb.elements) {
        Poly q = g.substitute(sub);
        if (q.is_constant()) {
            if (!q.is_zero()) fail(errc::domain, "minimum value inconsistent with basis");
            continue;
        }
        at_min.push_back(std::move(q));
    }
    std::vector<std::vector<Rat>> domains(ext.arity(), {Rat(0), Rat(1)});
    domains[zidx] = {out.value};
    for (const auto& sol : enumerate_zeros(at_min, ext, domains)) {
        std::vector<int> bits(m);
        std::vector<Rat> pt(m);
        for (std::size_t i = 0; i < m; ++i) {
            bits[i] = sol[i] == 1 ? 1 : 0;
            pt[i] = sol[i];
        }
        bool ok = problem.objective.evaluate(pt) == out.value;
        for (const auto& c : problem.equality_constraints)
            if (sign(c.evaluate(pt)) != 0) ok = false;
        if (ok) out.minimizers.push_back(std::move(bits));
    }
    std::sort(out.minimizers.begin(), out.minimizers.end());
    out.minimizers.erase(std::unique(out.minimizers.begin(), out.minimizers.end()),
                         out.minimizers.end());
    if (out.minimizers.empty()) fail(errc::domain, "no minimizer recovered at the optimum");
    return out;
}

// Parametric feasibility: adjoin booleans for the binary block, eliminate it,
// and return the conditions on the parameters.
inline GroebnerBasis feasibility_conditions(const Ring& ring, const std::vector<Poly>& system,
                                            const std::vector<std::size_t>& binary_vars,
                                            const std::vector<std::size_t>& param_vars,
                                            const BinoptOptions& opts = {}) {
    std::vector<bool> seen(ring.arity(), false);
    for (auto v : binary_vars) seen.at(v) = true;
    for (auto v : param_vars) {
        if (seen.at(v)) fail(errc::domain, "binary and parameter blocks overlap");
        seen[v] = true;
    }
    for (bool s : seen)
        if (!s) fail(errc::domain, "every ring variable must be binary or parameter");

    std::vector<Poly> gens;
    for (const auto& p : system) {
        if (p.ring() != ring) fail(errc::ring_mismatch, "system polynomial in wrong ring");
        if (!p.is_zero()) gens.push_back(p);
    }
    if (gens.empty()) {
        // vacuous system: no condition on the parameters
        return GroebnerBasis{{}, Order::lex(ring), ring};
    }
    for (auto& b : boolean_relations(ring, binary_vars)) gens.push_back(std::move(b));

    std::vector<std::size_t> perm = binary_vars;
    std::sort(perm.begin(), perm.end());
    std::vector<std::size_t> params_sorted = param_vars;
    std::sort(params_sorted.begin(), params_sorted.end());
    perm.insert(perm.end(), params_sorted.begin(), params_sorted.end());

    auto gb = buchberger(gens, Order::lex(perm), opts.gb);
    return eliminate(gb, param_vars.size());
}

inline TildeProblem build_tilde(const Poly& f) {
    const Ring& yring = f.ring();
    const std::size_t m = yring.arity();
    std::vector<std::string> names = yring.names();
    for (std::size_t i = 0; i < m; ++i) {
        std::string n = "a" + std::to_string(i + 1);
        while (std::find(names.begin(), names.end(), n) != names.end()) n = "a" + n;
        names.push_back(n);
    }
    Ring ext(names);

    TildeProblem out;
    out.extended_ring = ext;
    Poly tf = change_ring(f, ext);
    for (std::size_t i = 0; i < m; ++i) {
        Poly y = Poly::variable(ext, i);
        Poly a = Poly::variable(ext, m + i);
        tf = tf + a * y * (y - Poly::constant(ext, 1));
    }
    out.tilde_f = tf;
    for (std::size_t i = 0; i < m; ++i) out.gradient_gens.push_back(tf.derivative(i));
    for (std::size_t i = 0; i < m; ++i) out.gradient_gens.push_back(tf.derivative(m + i));
    return out;
}

struct EigenReport {
    TildeProblem tilde;
    GroebnerBasis reduced_gb;      // gradient ideal eliminated to the y-ring
    QuotientBasis quotient;        // standard monomials, ascending
    RatMatrix mult_matrix;          // multiplication by f on the quotient
    std::vector<Rat> eigenvalues;  // distinct rational eigenvalues, sorted
    std::vector<Rat> eigenvector;  // simultaneous eigenvector at the optimum, when unique
    Optimum optimum;
};

// Gradient-ideal route: eliminate the penalty variables from the gradient
// ideal, build the finite quotient in the y-ring, and read the optimum off
// the multiplication matrix spectrum.
inline EigenReport solve_by_eigenvalues_report(const Poly& f_in, const BinoptOptions& opts = {}) {
    const Ring& yring = f_in.ring();
    const std::size_t m = yring.arity();
    if (m > opts.eigen_var_limit)
        fail(errc::resource_limit, "eigenvalue method variable limit exceeded");

    EigenReport rep;
    Poly f = multilinear_form(f_in);
    rep.tilde = build_tilde(f);
    const Ring& ext = rep.tilde.extended_ring;

    // alpha block first (eliminated), y block last.
    std::vector<std::size_t> perm;
    for (std::size_t i = 0; i < m; ++i) perm.push_back(m + i);
    for (std::size_t i = 0; i < m; ++i) perm.push_back(i);
    auto gb_full = buchberger(rep.tilde.gradient_gens, Order::lex(perm), opts.gb);
    if (gb_full.is_unit_ideal()) fail(errc::infeasible, "gradient ideal is the unit ideal");

    auto elim = eliminate(gb_full, m);
    std::vector<Poly> reduced;
    for (const auto& g : elim.elements) reduced.push_back(change_ring(g, yring));
    rep.reduced_gb = GroebnerBasis{std::move(reduced), Order::lex(yring), yring};

    rep.quotient = standard_monomials(rep.reduced_gb, 1u << 12);
    rep.mult_matrix = multiplication_matrix(f, rep.quotient);
    const std::size_t dim = rep.quotient.standard_monomials.size();

    // Characteristic polynomial of the multiplication matrix, factored over
    // the candidate values f takes on the cube.
    Ring lring({"lambda"});
    PolyMatrix shifted(dim, std::vector<Poly>(dim, Poly(lring)));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            shifted[i][j] = Poly::constant(lring, -rep.mult_matrix.at(i, j));
            if (i == j) shifted[i][j] = shifted[i][j] + Poly::variable(lring, 0);
        }
    UniPoly charpoly = to_univariate(det_over_ring(shifted), 0);

    std::vector<Rat> candidates;
    std::vector<std::vector<Rat>> cube;
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        std::vector<Rat> p(m);
        for (std::size_t v = 0; v < m; ++v) p[v] = rat(static_cast<long>((mask >> v) & 1));
        Rat val = f.evaluate(p);
        if (std::find(candidates.begin(), candidates.end(), val) == candidates.end())
            candidates.push_back(val);
        cube.push_back(std::move(p));
    }
    auto roots = rational_roots_from_candidates(charpoly, candidates);
    if (roots.residual_degree != 0)
        fail(errc::domain, "multiplication matrix has eigenvalues outside the binary value set");
    for (const auto& [r, mult] : roots.roots) rep.eigenvalues.push_back(r);
    std::sort(rep.eigenvalues.begin(), rep.eigenvalues.end());
    if (rep.eigenvalues.empty()) fail(errc::domain, "no rational eigenvalues found");

    const Rat lambda0 = rep.eigenvalues.front();

    // Eigenvector extraction. Evaluation functionals are right eigenvectors
    // of the transpose, so the optimum's coordinate vector lives in
    // null(M^T - lambda0 I).
    RatMatrix mt = rep.mult_matrix.transpose();
    for (std::size_t i = 0; i < dim; ++i) mt.at(i, i) -= lambda0;
    auto null_basis = rational_nullspace(mt);

    auto recover_from_vector = [&](const std::vector<Rat>& w) -> std::optional<std::vector<Rat>> {
        std::size_t pivot = dim;
        for (std::size_t i = 0; i < dim; ++i)
            if (sign(w[i]) != 0) {
                pivot = i;
                break;
            }
        if (pivot == dim) return std::nullopt;
        std::vector<Rat> coords(m);
        for (std::size_t v = 0; v < m; ++v) {
            RatMatrix tv = multiplication_matrix(Poly::variable(yring, v), rep.quotient).transpose();
            auto u = tv.apply(w);
            Rat c = u[pivot] / w[pivot];
            for (std::size_t i = 0; i < dim; ++i)
                if (u[i] != c * w[i]) return std::nullopt; // not a simultaneous eigenvector
            coords[v] = c;
        }
        return coords;
    };

    Optimum& opt = rep.optimum;
    bool recovered = false;
    if (null_basis.size() == 1) {
        auto coords = recover_from_vector(null_basis[0]);
        if (coords) {
            bool binary = true;
            for (const auto& c : *coords)
                if (c != 0 && c != 1) binary = false;
            if (binary && f.evaluate(*coords) == lambda0) {
                rep.eigenvector = null_basis[0];
                std::vector<int> bits(m);
                for (std::size_t v = 0; v < m; ++v) bits[v] = (*coords)[v] == 1 ? 1 : 0;
                opt.value = lambda0;
                opt.minimizers = {bits};
                opt.value_spectrum = rep.eigenvalues;
                recovered = true;
            }
        }
    }
    if (!recovered) {
        // Multiple minimizers or a spurious smallest eigenvalue: scan the
        // eigenvalues upward for binary points attaining them.
        for (const auto& lambda : rep.eigenvalues) {
            std::vector<std::vector<int>> mins;
            for (const auto& p : cube) {
                if (f.evaluate(p) != lambda) continue;
                std::vector<int> bits(m);
                for (std::size_t v = 0; v < m; ++v) bits[v] = p[v] == 1 ? 1 : 0;
                mins.push_back(std::move(bits));
            }
            if (!mins.empty()) {
                opt.value = lambda;
                std::sort(mins.begin(), mins.end());
                opt.minimizers = std::move(mins);
                if (lambda == lambda0) opt.value_spectrum = rep.eigenvalues;
                break;
            }
        }
        if (opt.minimizers.empty()) fail(errc::domain, "no binary point attains any eigenvalue");
    }
    return rep;
}

inline Optimum solve_by_eigenvalues(const Poly& f, const BinoptOptions& opts = {}) {
    return solve_by_eigenvalues_report(f, opts).optimum;
}

} // namespace ga
