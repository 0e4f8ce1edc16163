#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "ga/binopt.hpp"
#include "ga/graph.hpp"
#include "ga/groebner.hpp"

namespace ga {

// Fiber-bundle system for embedding the logical graph Y into the hardware
// graph X: one binary a_{i,j} per (hardware, logical) vertex pair and one
// support bit b_i per hardware vertex, placed rightmost in the ring.
struct BundleSystem {
    Graph hardware, logical;
    Ring ring;                     // a_{1,1}, ..., a_{|X|,|Y|}, b_1, ..., b_|X|
    std::vector<Poly> equations;   // booleans, disjointness, support sums

    std::size_t alpha_index(std::size_t i, std::size_t j) const {
        return i * logical.size() + j;
    }
    std::size_t beta_index(std::size_t i) const {
        return hardware.size() * logical.size() + i;
    }
};

struct EmbeddingSolution {
    std::map<std::string, std::set<std::string>> fibers; // logical -> hardware vertices
    std::set<std::string> used;                          // support
    std::vector<int> alpha_bits;                         // row-major, for canonical ordering

    friend bool operator<(const EmbeddingSolution& a, const EmbeddingSolution& b) {
        return a.alpha_bits < b.alpha_bits;
    }
    friend bool operator==(const EmbeddingSolution& a, const EmbeddingSolution& b) {
        return a.alpha_bits == b.alpha_bits;
    }
};

struct EmbedOptions {
    std::size_t var_limit = 30; // alpha-variable cap for the Groebner route
    BuchbergerOptions gb;
};

inline BundleSystem bundle_equations(const Graph& X, const Graph& Y) {
    if (X.size() == 0 || Y.size() == 0) fail(errc::domain, "graphs must be nonempty");
    BundleSystem sys;
    sys.hardware = X;
    sys.logical = Y;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < X.size(); ++i)
        for (std::size_t j = 0; j < Y.size(); ++j)
            names.push_back("a" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    for (std::size_t i = 0; i < X.size(); ++i) names.push_back("b" + std::to_string(i + 1));
    sys.ring = Ring(names);

    auto alpha = [&](std::size_t i, std::size_t j) {
        return Poly::variable(sys.ring, sys.alpha_index(i, j));
    };
    // booleans
    for (std::size_t i = 0; i < X.size(); ++i)
        for (std::size_t j = 0; j < Y.size(); ++j) {
            Poly a = alpha(i, j);
            sys.equations.push_back(a * a - a);
        }
    // fibers don't intersect
    for (std::size_t i = 0; i < X.size(); ++i)
        for (std::size_t j1 = 0; j1 < Y.size(); ++j1)
            for (std::size_t j2 = j1 + 1; j2 < Y.size(); ++j2)
                sys.equations.push_back(alpha(i, j1) * alpha(i, j2));
    // support bits
    for (std::size_t i = 0; i < X.size(); ++i) {
        Poly sum(sys.ring);
        for (std::size_t j = 0; j < Y.size(); ++j) sum = sum + alpha(i, j);
        sys.equations.push_back(sum - Poly::variable(sys.ring, sys.beta_index(i)));
    }
    return sys;
}

// One equation per logical edge (j,k): exactly one hardware edge connects
// the two fibers,
//   -1 + sum_{(a,b) in E(X)} (a_{a,j} a_{b,k} + a_{a,k} a_{b,j}) = 0.
inline std::vector<Poly> pullback_equations(const BundleSystem& sys) {
    const Graph& X = sys.hardware;
    const Graph& Y = sys.logical;
    auto alpha = [&](std::size_t i, std::size_t j) {
        return Poly::variable(sys.ring, sys.alpha_index(i, j));
    };
    std::vector<Poly> out;
    for (const auto& [j, k] : Y.edges()) {
        Poly eq = Poly::constant(sys.ring, -1);
        for (const auto& [a, b] : X.edges())
            eq = eq + alpha(a, j) * alpha(b, k) + alpha(a, k) * alpha(b, j);
        out.push_back(std::move(eq));
    }
    return out;
}

inline bool connected_fiber_filter(const std::map<std::string, std::set<std::string>>& fibers,
                                   const Graph& X) {
    for (const auto& [y, fib] : fibers) {
        std::set<std::size_t> idx;
        for (const auto& v : fib) idx.insert(X.index_of(v));
        if (!X.connected_subset(idx)) return false;
    }
    return true;
}

struct EmbedResult {
    BundleSystem system;
    std::vector<Poly> pullback;
    GroebnerBasis gb;
    std::vector<EmbeddingSolution> solutions;
};

// Groebner route: lex basis with the support bits rightmost, solution
// enumeration by back-substitution, then the graph-side filters (nonempty
// connected fibers); every assignment is re-checked against the original
// equations.
inline EmbedResult enumerate_embeddings(const Graph& X, const Graph& Y,
                                        const std::vector<Poly>& extra_constraints = {},
                                        const EmbedOptions& opts = {}) {
    EmbedResult res;
    res.system = bundle_equations(X, Y);
    if (X.size() * Y.size() > opts.var_limit)
        fail(errc::resource_limit, "embedding system exceeds the variable limit");
    res.pullback = pullback_equations(res.system);

    std::vector<Poly> gens = res.system.equations;
    for (const auto& p : res.pullback) gens.push_back(p);
    for (const auto& p : extra_constraints) {
        if (p.ring() != res.system.ring)
            fail(errc::ring_mismatch, "extra constraint in a different ring");
        gens.push_back(p);
    }

    res.gb = buchberger(gens, Order::lex(res.system.ring), opts.gb);
    if (res.gb.is_unit_ideal()) return res; // no embeddings

    for (const auto& bits : enumerate_binary_zeros(res.gb.elements, res.system.ring)) {
        // guard against extraction drift: check the original system
        std::vector<Rat> pt(bits.size());
        for (std::size_t v = 0; v < bits.size(); ++v) pt[v] = rat(bits[v]);
        bool ok = true;
        for (const auto& g : gens)
            if (sign(g.evaluate(pt)) != 0) {
                ok = false;
                break;
            }
        if (!ok) continue;

        EmbeddingSolution sol;
        bool nonempty = true;
        for (std::size_t j = 0; j < Y.size(); ++j) {
            std::set<std::string> fib;
            for (std::size_t i = 0; i < X.size(); ++i)
                if (bits[res.system.alpha_index(i, j)]) fib.insert(X.name(i));
            if (fib.empty()) nonempty = false;
            sol.fibers[Y.name(j)] = std::move(fib);
        }
        if (!nonempty) continue;
        for (std::size_t i = 0; i < X.size(); ++i)
            if (bits[res.system.beta_index(i)]) sol.used.insert(X.name(i));
        if (!connected_fiber_filter(sol.fibers, X)) continue;
        for (std::size_t i = 0; i < X.size(); ++i)
            for (std::size_t j = 0; j < Y.size(); ++j)
                sol.alpha_bits.push_back(bits[res.system.alpha_index(i, j)]);
        res.solutions.push_back(std::move(sol));
    }
    std::sort(res.solutions.begin(), res.solutions.end());
    return res;
}

// Orbit fold of the hardware graph along an automorphism.
struct SymmetryFold {
    std::vector<std::vector<std::size_t>> orbits; // partition of V(X), each sorted
    std::vector<std::string> invariant_names;     // one per orbit
    Graph folded;                                 // orbit graph
    Poly folded_quadratic;                        // Q_X in orbit invariants
};

inline SymmetryFold fold_by_symmetry(const Graph& X, const std::vector<std::size_t>& aut) {
    if (!X.is_automorphism(aut)) fail(errc::domain, "permutation is not an automorphism");
    SymmetryFold fold;

    std::vector<bool> seen(X.size(), false);
    for (std::size_t v = 0; v < X.size(); ++v) {
        if (seen[v]) continue;
        std::vector<std::size_t> orbit;
        std::size_t w = v;
        do {
            orbit.push_back(w);
            seen[w] = true;
            w = aut[w];
        } while (w != v);
        std::sort(orbit.begin(), orbit.end());
        fold.orbits.push_back(std::move(orbit));
    }
    std::sort(fold.orbits.begin(), fold.orbits.end());

    for (const auto& orbit : fold.orbits) {
        std::string n = X.name(orbit[0]);
        for (std::size_t k = 1; k < orbit.size(); ++k) n += "_" + X.name(orbit[k]);
        fold.invariant_names.push_back(n);
    }

    // orbit graph + expressibility of Q_X in the orbit sums
    std::vector<std::size_t> orbit_of(X.size());
    for (std::size_t o = 0; o < fold.orbits.size(); ++o)
        for (auto v : fold.orbits[o]) orbit_of[v] = o;
    std::vector<std::pair<std::string, std::string>> fedges;
    Ring invring(fold.invariant_names);
    Poly q(invring);
    for (std::size_t o1 = 0; o1 < fold.orbits.size(); ++o1) {
        for (std::size_t o2 = o1; o2 < fold.orbits.size(); ++o2) {
            std::size_t count = 0;
            for (auto u : fold.orbits[o1])
                for (auto v : fold.orbits[o2])
                    if ((o1 != o2 || u < v) && X.adjacent(u, v)) ++count;
            if (count == 0) continue;
            if (o1 == o2)
                fail(errc::unsupported, "edge inside an orbit; fold is not chain-like");
            if (count != fold.orbits[o1].size() * fold.orbits[o2].size())
                fail(errc::unsupported,
                     "quadratic form is not expressible in the orbit invariants");
            q = q + Poly::variable(invring, o1) * Poly::variable(invring, o2);
            fedges.push_back({fold.invariant_names[o1], fold.invariant_names[o2]});
        }
    }
    fold.folded = Graph(fold.invariant_names, fedges);
    fold.folded_quadratic = q;
    return fold;
}

struct FoldedSolution {
    // logical vertex -> (orbit name, multiplicity) fibers
    std::map<std::string, std::vector<std::pair<std::string, int>>> orbit_fibers;
    EmbeddingSolution representative; // canonical lift over the original X
    std::vector<int> key;

    friend bool operator<(const FoldedSolution& a, const FoldedSolution& b) {
        return a.key < b.key;
    }
};

struct FoldedEmbedResult {
    SymmetryFold fold;
    Ring folded_ring;            // invariant coordinates
    GroebnerBasis folded_basis;  // eliminated system over the invariants
    std::size_t variable_count = 0;
    std::vector<FoldedSolution> solutions;
};

// Invariant-coordinate route: adjoin one coordinate per (orbit, logical
// vertex) summing the orbit's alpha row, eliminate the non-singleton alpha
// rows by lex, and enumerate the eliminated system over the invariant
// domains. Support bits play no role here; a folded class is kept when some
// lift passes the graph-side checks.
inline FoldedEmbedResult enumerate_embeddings_folded(const Graph& X, const Graph& Y,
                                                     const SymmetryFold& fold,
                                                     const EmbedOptions& opts = {}) {
    const std::size_t nx = X.size(), ny = Y.size();
    if (nx * ny > opts.var_limit)
        fail(errc::resource_limit, "embedding system exceeds the variable limit");

    FoldedEmbedResult res;
    res.fold = fold;

    // ring: all alpha variables, then invariant sums for non-singleton orbits
    std::vector<std::string> names;
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < ny; ++j)
            names.push_back("a" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    std::vector<std::size_t> big_orbits;
    for (std::size_t o = 0; o < fold.orbits.size(); ++o)
        if (fold.orbits[o].size() > 1) big_orbits.push_back(o);
    for (auto o : big_orbits)
        for (std::size_t j = 0; j < ny; ++j)
            names.push_back("u_" + fold.invariant_names[o] + "_" + std::to_string(j + 1));
    Ring ring(names);
    auto alpha_idx = [&](std::size_t i, std::size_t j) { return i * ny + j; };
    auto u_idx = [&](std::size_t bo, std::size_t j) { return nx * ny + bo * ny + j; };
    auto alpha = [&](std::size_t i, std::size_t j) {
        return Poly::variable(ring, alpha_idx(i, j));
    };

    std::vector<Poly> gens;
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < ny; ++j) {
            Poly a = alpha(i, j);
            gens.push_back(a * a - a);
        }
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j1 = 0; j1 < ny; ++j1)
            for (std::size_t j2 = j1 + 1; j2 < ny; ++j2)
                gens.push_back(alpha(i, j1) * alpha(i, j2));
    for (const auto& [j, k] : Y.edges()) {
        Poly eq = Poly::constant(ring, -1);
        for (const auto& [a, b] : X.edges())
            eq = eq + alpha(a, j) * alpha(b, k) + alpha(a, k) * alpha(b, j);
        gens.push_back(std::move(eq));
    }
    for (std::size_t bo = 0; bo < big_orbits.size(); ++bo)
        for (std::size_t j = 0; j < ny; ++j) {
            Poly sum(ring);
            for (auto v : fold.orbits[big_orbits[bo]]) sum = sum + alpha(v, j);
            gens.push_back(Poly::variable(ring, u_idx(bo, j)) - sum);
        }

    // eliminate the alpha rows of the non-singleton orbits
    std::set<std::size_t> eliminated;
    for (auto o : big_orbits)
        for (auto v : fold.orbits[o])
            for (std::size_t j = 0; j < ny; ++j) eliminated.insert(alpha_idx(v, j));
    std::vector<std::size_t> perm(eliminated.begin(), eliminated.end());
    std::vector<std::size_t> kept;
    for (std::size_t v = 0; v < ring.arity(); ++v)
        if (!eliminated.count(v)) kept.push_back(v);
    perm.insert(perm.end(), kept.begin(), kept.end());

    auto gb = buchberger(gens, Order::lex(perm), opts.gb);
    auto elim = eliminate(gb, kept.size());

    // restrict to the invariant coordinates
    std::vector<std::string> fnames;
    for (auto v : kept) fnames.push_back(ring.name(v));
    res.folded_ring = Ring(fnames);
    res.variable_count = fnames.size();
    std::vector<Poly> fbasis;
    for (const auto& g : elim.elements) fbasis.push_back(change_ring(g, res.folded_ring));
    res.folded_basis = GroebnerBasis{fbasis, Order::lex(res.folded_ring), res.folded_ring};
    if (res.folded_basis.is_unit_ideal()) return res;

    // enumerate over the invariant domains: binary for singleton rows,
    // 0..|orbit| for the sums
    std::vector<std::vector<Rat>> domains;
    for (auto v : kept) {
        if (v < nx * ny) {
            domains.push_back({rat(0), rat(1)});
        } else {
            std::size_t bo = (v - nx * ny) / ny;
            std::vector<Rat> d;
            for (std::size_t c = 0; c <= fold.orbits[big_orbits[bo]].size(); ++c)
                d.push_back(rat(static_cast<long>(c)));
            domains.push_back(std::move(d));
        }
    }

    std::map<std::size_t, std::size_t> kept_pos;
    for (std::size_t p = 0; p < kept.size(); ++p) kept_pos[kept[p]] = p;

    for (const auto& assignment : enumerate_zeros(fbasis, res.folded_ring, domains)) {
        // Reconstruct per-orbit fiber counts.
        // count[o][j]: how many vertices of orbit o sit in fiber j
        std::vector<std::vector<int>> count(fold.orbits.size(), std::vector<int>(ny, 0));
        for (std::size_t o = 0, bo = 0; o < fold.orbits.size(); ++o) {
            if (fold.orbits[o].size() == 1) {
                for (std::size_t j = 0; j < ny; ++j) {
                    auto it = kept_pos.find(alpha_idx(fold.orbits[o][0], j));
                    count[o][j] = assignment[it->second] == 1 ? 1 : 0;
                }
            } else {
                for (std::size_t j = 0; j < ny; ++j) {
                    auto it = kept_pos.find(u_idx(bo, j));
                    count[o][j] = static_cast<int>(assignment[it->second].get_num().get_si());
                }
                ++bo;
            }
        }

        // search for a valid lift: distribute each orbit's members over the
        // fibers according to the counts, then run the graph checks
        std::optional<EmbeddingSolution> lift;
        std::vector<std::map<std::string, std::set<std::string>>> partial;
        std::map<std::string, std::set<std::string>> fibers;
        for (std::size_t j = 0; j < ny; ++j) fibers[Y.name(j)] = {};

        std::function<bool(std::size_t)> assign_orbit = [&](std::size_t o) -> bool {
            if (o == fold.orbits.size()) {
                for (const auto& [y, fib] : fibers)
                    if (fib.empty()) return false;
                if (!connected_fiber_filter(fibers, X)) return false;
                // pullback: exactly one connecting hardware edge per logical edge
                for (const auto& [j, k] : Y.edges()) {
                    std::size_t links = 0;
                    const auto& fj = fibers[Y.name(j)];
                    const auto& fk = fibers[Y.name(k)];
                    for (const auto& a : fj)
                        for (const auto& b : fk)
                            if (X.adjacent(X.index_of(a), X.index_of(b))) ++links;
                    if (links != 1) return false;
                }
                EmbeddingSolution sol;
                sol.fibers = fibers;
                for (const auto& [y, fib] : fibers)
                    for (const auto& v : fib) sol.used.insert(v);
                for (std::size_t i = 0; i < nx; ++i)
                    for (std::size_t j = 0; j < ny; ++j)
                        sol.alpha_bits.push_back(fibers[Y.name(j)].count(X.name(i)) ? 1 : 0);
                lift = std::move(sol);
                return true;
            }
            const auto& members = fold.orbits[o];
            int total = 0;
            for (std::size_t j = 0; j < ny; ++j) total += count[o][j];
            if (total > static_cast<int>(members.size())) return false;
            // distribute members to fibers by counts, trying all choices
            std::vector<int> label(members.size(), -1); // -1 unused, else fiber
            std::function<bool(std::size_t, std::vector<int>&)> dfs =
                [&](std::size_t m, std::vector<int>& remaining) -> bool {
                if (m == members.size()) {
                    for (std::size_t j = 0; j < ny; ++j)
                        if (remaining[j] != 0) return false;
                    return assign_orbit(o + 1);
                }
                for (int j = -1; j < static_cast<int>(ny); ++j) {
                    if (j >= 0) {
                        if (remaining[j] == 0) continue;
                        remaining[j] -= 1;
                        fibers[Y.name(j)].insert(X.name(members[m]));
                    }
                    bool done = dfs(m + 1, remaining);
                    if (j >= 0) {
                        remaining[j] += 1;
                        fibers[Y.name(j)].erase(X.name(members[m]));
                    }
                    if (done) return true;
                }
                return false;
            };
            std::vector<int> remaining(count[o].begin(), count[o].end());
            return dfs(0, remaining);
        };
        if (!assign_orbit(0)) continue;

        FoldedSolution fs;
        fs.representative = std::move(*lift);
        for (std::size_t j = 0; j < ny; ++j) {
            std::vector<std::pair<std::string, int>> fib;
            for (std::size_t o = 0; o < fold.orbits.size(); ++o)
                if (count[o][j] > 0) fib.push_back({fold.invariant_names[o], count[o][j]});
            fs.orbit_fibers[Y.name(j)] = std::move(fib);
            for (std::size_t o = 0; o < fold.orbits.size(); ++o) fs.key.push_back(count[o][j]);
        }
        res.solutions.push_back(std::move(fs));
    }
    std::sort(res.solutions.begin(), res.solutions.end());
    return res;
}

inline nlohmann::json embedding_to_json(const EmbeddingSolution& sol) {
    nlohmann::json j;
    j["fibers"] = nlohmann::json::object();
    for (const auto& [y, fib] : sol.fibers) j["fibers"][y] = fib;
    j["used"] = sol.used;
    return j;
}

} // namespace ga
