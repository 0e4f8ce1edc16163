// Acceptance runner: one line per criterion, checked at the stated
// tolerances, timed against the stated budgets. Exit status is the number of
// failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ga/binopt.hpp"
#include "ga/embed.hpp"
#include "ga/groebner.hpp"
#include "ga/poly_io.hpp"
#include "ga/quboc.hpp"
#include "ga/solvers.hpp"
#include "ga/spectra.hpp"
#include "ga/toric.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace ga;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream notes;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            pass = false;
            notes << (notes.tellp() > 0 ? "; " : "") << what;
        }
    }
    void note(const std::string& what) {
        notes << (notes.tellp() > 0 ? "; " : "") << what;
    }
};

int g_failures = 0;

void run(const std::string& id, const std::string& label, double budget_seconds,
         const std::function<void(Outcome&)>& body) {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.pass = false;
        out.notes << "exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > budget_seconds) {
        out.pass = false;
        out.notes << (out.notes.tellp() > 0 ? "; " : "") << "over time budget";
    }
    std::ostringstream line;
    line << "criterion " << id << " [" << label << "]: " << (out.pass ? "PASS" : "FAIL");
    line.setf(std::ios::fixed);
    line.precision(2);
    line << " (" << secs << "s";
    if (out.notes.tellp() > 0) line << "; " << out.notes.str();
    line << ")";
    std::cout << line.str() << std::endl;
    if (!out.pass) ++g_failures;
}

std::vector<Rat> rat_point(const std::vector<int>& bits) {
    std::vector<Rat> p;
    for (int b : bits) p.push_back(rat(b));
    return p;
}

void criterion1(Outcome& out) {
    auto gb = buchberger(fixtures::quadric_system(), Order::lex(fixtures::quadric_ring()));
    out.require(gb.elements == fixtures::quadric_expected_gb(), "basis differs");
    // independent validation: every S-pair reduces to zero
    for (std::size_t i = 0; i < gb.elements.size(); ++i)
        for (std::size_t j = i + 1; j < gb.elements.size(); ++j) {
            Poly s = s_polynomial(gb.elements[i], gb.elements[j], gb.order);
            out.require(s.is_zero() || normal_form(s, gb).is_zero(), "s-pair fails");
        }
}

void criterion2(Outcome& out) {
    Ring R({"y1", "y2", "y3", "y4"});
    BinaryProblem p;
    p.objective = parse_poly("y1+2*y2+3*y3+3*y4", R);
    p.equality_constraints = {parse_poly("y1+y2+2*y3+y4-3", R)};
    auto opt = solve_by_elimination(p);
    auto brute = oracle::brute_force_binary(p.objective, p.equality_constraints);
    out.require(opt.value == rat(4), "value != 4");
    out.require(opt.minimizers == std::vector<std::vector<int>>{{1, 0, 1, 0}},
                "minimizer != (1,0,1,0)");
    out.require(opt.value_spectrum == brute.spectrum, "spectrum mismatch");
}

void criterion3(Outcome& out) {
    auto rep = solve_by_eigenvalues_report(fixtures::sec32_objective());
    out.require(rep.eigenvalues == fixtures::sec32_eigenvalues(), "eigenvalue set differs");
    out.require(rep.optimum.value == rat(0), "optimal value != 0");
    out.require(rep.optimum.minimizers == std::vector<std::vector<int>>{{1, 1, 1, 0}},
                "minimizer != (1,1,1,0)");

    const auto& mons = rep.quotient.standard_monomials;
    out.require(mons.size() == 16, "standard monomial count != 16");
    // the boolean pattern in the reference ordering: binary counting with the
    // last variable least significant
    bool pattern_ok = mons.size() == 16;
    for (std::size_t k = 0; pattern_ok && k < mons.size(); ++k)
        for (std::size_t v = 0; v < 4; ++v)
            if (mons[k].exps[v] != ((k >> (3 - v)) & 1)) pattern_ok = false;
    out.require(pattern_ok, "standard monomials not the boolean pattern");

    out.require(rep.eigenvector.size() == 16, "no unique eigenvector");
    if (rep.eigenvector.size() == 16) {
        Rat scale = rep.eigenvector[0];
        out.require(sign(scale) != 0, "eigenvector first coordinate vanishes");
        for (std::size_t i = 0; i < 16; ++i)
            out.require(rep.eigenvector[i] == (i % 2 == 0 ? scale : Rat(0)),
                        "eigenvector not proportional to (1,0,1,0,...)");
    }
}

void criterion4(Outcome& out) {
    Poly H = fixtures::hij();

    // reference basis elements lie in the closure ideal
    auto gb = buchberger(boolean_closure({H}), Order::grevlex());
    for (const auto& t : fixtures::hij_basis_elements())
        out.require(ideal_membership(t, gb), "reference element not in the ideal");

    // the reduction clause at epsilon = 1/10, exactly as stated: the window
    // is unattainable, because every positive combination needs the Q- and
    // P-row basis elements whose couplings Q*S0 and Q*Z1 come in a fixed 1:2
    // magnitude ratio, so all couplings in [1-e, 1+e] needs e >= 1/3 (and
    // exhaustive pattern search shows e = 1/3 is still short). Reported as
    // the honest failure it is.
    bool tight_ok = false;
    try {
        auto r = reduce_to_qubo(H, DynamicRange{rat(1, 10), rat(1, 16)});
        tight_ok = verify_reduction(H, r);
    } catch (const error&) {
        tight_ok = false;
    }
    out.require(tight_ok, "reduction at epsilon=1/10 infeasible (coupling ratio obstruction)");

    // the machinery itself, demonstrated at the smallest clean feasible
    // window: every coupling live and inside [1/2, 3/2], minima certified
    DynamicRange feasible{rat(1, 2), rat(1, 16)};
    auto r = reduce_to_qubo(H, feasible);
    bool demo = verify_reduction(H, r);
    for (const auto& p : oracle::binary_points(6)) {
        Rat h = H.evaluate(p);
        Rat hp = r.h_plus.evaluate(p);
        if (sign(h) == 0) {
            if (sign(hp) != 0) demo = false;
        } else if (hp < feasible.margin) {
            demo = false;
        }
    }
    if (demo)
        out.note("epsilon=1/2 demonstration certified (15 couplings in window)");
    else
        out.require(false, "feasible-window demonstration failed");
}

void criterion5(Outcome& out) {
    Graph X(fixtures::x_vertices(), fixtures::x_edges());
    Graph Y(fixtures::y_vertices(), fixtures::y_edges());

    auto res = enumerate_embeddings(X, Y);
    out.require(res.solutions.size() == 48, "unfolded count != 48");
    out.require(res.system.ring.arity() == 20, "unfolded variable count != 20");

    auto withcf =
        enumerate_embeddings(X, Y, fixtures::x_connectivity_extras(res.system.ring));
    auto beta = eliminate(withcf.gb, 5);
    std::vector<Poly> expect = {
        parse_poly("b5^2-b5", res.system.ring), parse_poly("b4-1", res.system.ring),
        parse_poly("b3-1", res.system.ring), parse_poly("b2-1", res.system.ring),
        parse_poly("b1-1", res.system.ring)};
    out.require(beta.elements == expect, "support-bit elimination ideal differs");

    std::vector<std::size_t> swap13 = {2, 1, 0, 3, 4};
    auto fold = fold_by_symmetry(X, swap13);
    auto folded = enumerate_embeddings_folded(X, Y, fold);
    out.require(folded.solutions.size() == 24, "folded count != 24");
    out.require(folded.variable_count == 12, "folded variable count != 12");

    // brute-force enumerator agreement on the full solution set
    std::set<std::vector<int>> brute;
    {
        const std::size_t nx = X.size(), ny = Y.size();
        std::vector<int> label(nx, -1);
        std::function<void(std::size_t)> walk = [&](std::size_t v) {
            if (v == nx) {
                std::vector<std::set<std::size_t>> fibers(ny);
                for (std::size_t i = 0; i < nx; ++i)
                    if (label[i] >= 0) fibers[static_cast<std::size_t>(label[i])].insert(i);
                for (const auto& f : fibers)
                    if (f.empty() || !X.connected_subset(f)) return;
                for (const auto& [j, k] : Y.edges()) {
                    std::size_t links = 0;
                    for (auto a : fibers[j])
                        for (auto b : fibers[k])
                            if (X.adjacent(a, b)) ++links;
                    if (links != 1) return;
                }
                std::vector<int> bits;
                for (std::size_t i = 0; i < nx; ++i)
                    for (std::size_t j = 0; j < ny; ++j)
                        bits.push_back(label[i] == static_cast<int>(j) ? 1 : 0);
                brute.insert(std::move(bits));
                return;
            }
            for (int j = -1; j < static_cast<int>(ny); ++j) {
                label[v] = j;
                walk(v + 1);
            }
            label[v] = -1;
        };
        walk(0);
    }
    std::set<std::vector<int>> ours;
    for (const auto& sol : res.solutions) ours.insert(sol.alpha_bits);
    out.require(ours == brute, "groebner route differs from brute force");
}

void criterion6(Outcome& out) {
    ConfigurationMatrix A{fixtures::toric_A()};
    auto basis = lattice_kernel(A);
    std::vector<std::vector<Int>> expected;
    for (const auto& r : fixtures::toric_kernel_expected()) {
        std::vector<Int> row;
        for (auto e : r) row.push_back(Int(e));
        expected.push_back(std::move(row));
    }
    out.require(hermite_normal_form(basis.vectors) == hermite_normal_form(expected),
                "kernel lattice differs");

    auto order = Order::matrix(fixtures::reversal_order_rows());
    auto classical = toric_gb_classical(A, order);
    out.require(classical.elements == fixtures::toric_expected_gb(),
                "classical basis differs from the five binomials");

    ToricSolverConfig exh;
    exh.backend = Backend::Exhaustive;
    auto annealed = toric_gb_annealed(A, order, fixtures::reversal_order_rows(),
                                      DigitEncoding{}, exh);
    out.require(annealed.gb.elements == classical.elements,
                "exhaustive-backend basis differs");

    ToricSolverConfig sa;
    sa.backend = Backend::Anneal;
    sa.schedule.sweeps = 2000;
    sa.schedule.restarts = 100;
    sa.schedule.base_seed = 2019;
    auto sampled = toric_gb_annealed(A, order, fixtures::reversal_order_rows(),
                                     DigitEncoding{}, sa);
    out.require(sampled.gb.elements == classical.elements, "annealing-backend basis differs");
    out.require(sampled.sampled_count() >= 1, "no binomial credited to sampling");
}

void criterion7(Outcome& out) {
    auto surf = char_surface({fixtures::hinit_2x2(), fixtures::hfinal_2x2()});
    Rat tol = rat(1, 1000000000);
    auto pts = find_critical_points(surf, tol);
    out.require(pts.size() == 1, "expected exactly one critical point");
    if (pts.size() == 1) {
        const auto& p = pts[0];
        out.require(p.s_box.width() <= tol && p.s_box.lo <= rat(1, 2) && p.s_box.hi >= rat(1, 2),
                    "s* box misses 1/2");
        out.require(p.lambda_box.width() <= tol && p.lambda_box.lo <= rat(0) &&
                        p.lambda_box.hi >= rat(0),
                    "lambda* box misses 0");
        out.require(!p.degenerate, "point flagged degenerate");
        out.require(p.normal_form_value.lo == rat(-8) && p.normal_form_value.hi == rat(-8),
                    "normal-form value != -8");
    }
}

void criterion8(Outcome& out) {
    // (a) reducedness + Buchberger criterion over 100 random systems
    {
        oracle::Rng rng(0x8a);
        for (int iter = 0; iter < 100; ++iter) {
            std::size_t nv = 2 + rng.below(2);
            std::vector<std::string> names;
            for (std::size_t i = 0; i < nv; ++i) names.push_back("v" + std::to_string(i + 1));
            Ring R(names);
            std::vector<Poly> gens;
            for (int g = 0; g < 2; ++g) gens.push_back(oracle::random_poly(R, rng, 3, 2, -4, 4));
            bool allzero = true;
            for (const auto& g : gens)
                if (!g.is_zero()) allzero = false;
            if (allzero) continue;
            auto gb = buchberger(gens, rng.below(2) ? Order::lex(R) : Order::grevlex());
            for (const auto& g : gb.elements) {
                auto [lm, lc] = g.leading_term(gb.order);
                out.require(lc == rat(1), "(a) basis element not monic");
                for (const auto& h : gb.elements) {
                    if (&h == &g) continue;
                    auto hlm = h.leading_term(gb.order).first;
                    for (const auto& [mm, cc] : g.terms())
                        out.require(!hlm.divides(mm), "(a) basis not reduced");
                }
            }
            for (std::size_t i = 0; i < gb.elements.size(); ++i)
                for (std::size_t j = i + 1; j < gb.elements.size(); ++j) {
                    Poly s = s_polynomial(gb.elements[i], gb.elements[j], gb.order);
                    out.require(s.is_zero() || normal_form(s, gb).is_zero(),
                                "(a) s-pair fails to reduce");
                }
            if (!out.pass) return;
        }
    }
    // (b) elim == eigen == brute force, 100 random objectives, m <= 4
    {
        oracle::Rng rng(0x8b);
        for (int iter = 0; iter < 100; ++iter) {
            std::size_t m = 1 + rng.below(4);
            std::vector<std::string> names;
            for (std::size_t i = 0; i < m; ++i) names.push_back("y" + std::to_string(i + 1));
            Ring R(names);
            Poly f = oracle::random_multilinear(R, rng);
            auto brute = oracle::brute_force_binary(f, {});
            BinaryProblem p;
            p.objective = f;
            auto elim = solve_by_elimination(p);
            auto eig = solve_by_eigenvalues(f);
            out.require(elim.value == brute.value && eig.value == brute.value,
                        "(b) value mismatch");
            out.require(elim.minimizers == brute.minimizers && eig.minimizers == brute.minimizers,
                        "(b) minimizer set mismatch");
            out.require(elim.value_spectrum == brute.spectrum, "(b) spectrum mismatch");
            if (!out.pass) return;
        }
    }
    // (c) embedding routes agree on 20 random pairs
    {
        oracle::Rng rng(0x8c);
        int done = 0;
        while (done < 20) {
            std::size_t nx = 2 + rng.below(5);
            std::size_t ny = 2 + rng.below(3);
            if (nx * ny > 18) continue;
            std::vector<std::string> xv, yv;
            for (std::size_t i = 0; i < nx; ++i) xv.push_back("x" + std::to_string(i + 1));
            for (std::size_t j = 0; j < ny; ++j) yv.push_back("y" + std::to_string(j + 1));
            std::vector<std::pair<std::string, std::string>> xe, ye;
            for (std::size_t i = 0; i < nx; ++i)
                for (std::size_t j = i + 1; j < nx; ++j)
                    if (rng.below(2)) xe.push_back({xv[i], xv[j]});
            for (std::size_t i = 0; i < ny; ++i)
                for (std::size_t j = i + 1; j < ny; ++j)
                    if (rng.below(2)) ye.push_back({yv[i], yv[j]});
            Graph X(xv, xe), Y(yv, ye);
            auto res = enumerate_embeddings(X, Y);

            std::set<std::vector<int>> brute;
            std::vector<int> label(nx, -1);
            std::function<void(std::size_t)> walk = [&](std::size_t v) {
                if (v == nx) {
                    std::vector<std::set<std::size_t>> fibers(ny);
                    for (std::size_t i = 0; i < nx; ++i)
                        if (label[i] >= 0)
                            fibers[static_cast<std::size_t>(label[i])].insert(i);
                    for (const auto& f : fibers)
                        if (f.empty() || !X.connected_subset(f)) return;
                    for (const auto& [j, k] : Y.edges()) {
                        std::size_t links = 0;
                        for (auto a : fibers[j])
                            for (auto b : fibers[k])
                                if (X.adjacent(a, b)) ++links;
                        if (links != 1) return;
                    }
                    std::vector<int> bits;
                    for (std::size_t i = 0; i < nx; ++i)
                        for (std::size_t j = 0; j < ny; ++j)
                            bits.push_back(label[i] == static_cast<int>(j) ? 1 : 0);
                    brute.insert(std::move(bits));
                    return;
                }
                for (int j = -1; j < static_cast<int>(ny); ++j) {
                    label[v] = j;
                    walk(v + 1);
                }
                label[v] = -1;
            };
            walk(0);
            std::set<std::vector<int>> ours;
            for (const auto& sol : res.solutions) ours.insert(sol.alpha_bits);
            out.require(ours == brute, "(c) embedding sets differ");
            if (!out.pass) return;
            ++done;
        }
    }
    // (d) annealed (exhaustive backend) == classical on 20 random matrices
    {
        oracle::Rng rng(0x8d);
        int done = 0;
        while (done < 20) {
            std::size_t m = 1 + rng.below(2), n = 2 + rng.below(3);
            ConfigurationMatrix A;
            A.entries.assign(m, std::vector<long>(n, 0));
            for (auto& row : A.entries)
                for (auto& e : row) e = rng.range(0, 5);
            bool zerocol = false;
            for (std::size_t j = 0; j < n; ++j) {
                bool allz = true;
                for (std::size_t i = 0; i < m; ++i)
                    if (A.entries[i][j] != 0) allz = false;
                if (allz) zerocol = true;
            }
            if (zerocol) continue;
            std::vector<std::vector<long>> rows;
            rows.push_back(std::vector<long>(n, 1));
            for (std::size_t i = 0; i + 1 < n; ++i) {
                std::vector<long> r(n, 0);
                r[i] = 1;
                rows.push_back(std::move(r));
            }
            Order ord = Order::matrix(rows);
            auto classical = toric_gb_classical(A, ord);
            std::vector<std::vector<long>> M(n, std::vector<long>(n, 0));
            for (std::size_t i = 0; i < n; ++i) M[i][i] = 1;
            auto annealed = toric_gb_annealed(A, ord, M, DigitEncoding{}, ToricSolverConfig{});
            out.require(annealed.gb.elements == classical.elements, "(d) toric routes differ");
            if (!out.pass) return;
            ++done;
        }
    }
    // (e) multiplication matrices commute pairwise, 100 random draws
    {
        oracle::Rng rng(0x8e);
        for (int iter = 0; iter < 100; ++iter) {
            std::size_t m = 1 + rng.below(3);
            std::vector<std::string> names;
            for (std::size_t i = 0; i < m; ++i) names.push_back("y" + std::to_string(i + 1));
            Ring R(names);
            auto gb = buchberger(boolean_relations(R), Order::lex(R));
            auto qb = standard_monomials(gb);
            Poly f = oracle::random_multilinear(R, rng);
            Poly g = oracle::random_multilinear(R, rng);
            auto mf = multiplication_matrix(f, qb);
            auto mg = multiplication_matrix(g, qb);
            out.require(mf * mg == mg * mf, "(e) matrices do not commute");
            if (!out.pass) return;
        }
    }
    // (f) surfaces match numeric determinants at 20 random rational points
    {
        oracle::Rng rng(0x8f);
        for (int iter = 0; iter < 20; ++iter) {
            std::size_t n = 2 + rng.below(3);
            RatMatrix hi(n, n), hf(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j) {
                    hi.at(i, j) = rat(rng.range(-4, 4), 1 + static_cast<long>(rng.below(3)));
                    hi.at(j, i) = hi.at(i, j);
                    hf.at(i, j) = rat(rng.range(-4, 4), 1 + static_cast<long>(rng.below(3)));
                    hf.at(j, i) = hf.at(i, j);
                }
            auto surf = char_surface({hi, hf});
            Rat s0 = rat(rng.range(-5, 5), 1 + static_cast<long>(rng.below(4)));
            Rat l0 = rat(rng.range(-5, 5), 1 + static_cast<long>(rng.below(4)));
            std::vector<std::vector<Rat>> num(n, std::vector<Rat>(n));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    num[i][j] = (Rat(1) - s0) * hi.at(i, j) + s0 * hf.at(i, j);
                    if (i == j) num[i][j] -= l0;
                }
            out.require(surf.f.evaluate({s0, l0}) == oracle::det_gauss(num),
                        "(f) surface disagrees with the numeric determinant");
            if (!out.pass) return;
        }
    }
}

} // namespace

int main() {
    run("1", "lex basis of the quadric system", 1.0, criterion1);
    run("2", "constrained binary optimum by elimination", 1.0, criterion2);
    run("3", "eigenvalue pipeline on the four-variable objective", 30.0, criterion3);
    run("4", "dynamic-range reduction of the multiplication constraint", 60.0, criterion4);
    run("5", "embedding counts, support ideal, symmetry fold", 300.0, criterion5);
    run("6", "toric kernel, classical and annealed bases", 120.0, criterion6);
    run("7", "anti-crossing of the two-level pair", 1.0, criterion7);
    run("8", "property suites", 600.0, criterion8);
    if (g_failures)
        std::cout << g_failures << " criterion(s) failed" << std::endl;
    else
        std::cout << "all criteria passed" << std::endl;
    return g_failures;
}
