#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "ga/groebner.hpp"
#include "ga/qubo.hpp"
#include "ga/solvers.hpp"

namespace ga {

// Integer configuration matrix A; columns define the toric ideal J_A.
struct ConfigurationMatrix {
    std::vector<std::vector<long>> entries; // m rows, n cols

    std::size_t rows() const { return entries.size(); }
    std::size_t cols() const { return entries.empty() ? 0 : entries[0].size(); }

    void validate() const {
        if (entries.empty() || entries[0].empty())
            fail(errc::domain, "configuration matrix must be nonempty");
        for (const auto& r : entries)
            if (r.size() != entries[0].size())
                fail(errc::domain, "configuration matrix rows have unequal length");
    }

    bool nonnegative() const {
        for (const auto& r : entries)
            for (auto e : r)
                if (e < 0) return false;
        return true;
    }
};

struct LatticeBasis {
    std::vector<std::vector<Int>> vectors; // each in Ker_Z A
};

struct Binomial {
    std::vector<Int> u; // exponent vector u+ - u-
    // canonical sign: first nonzero entry positive
};

struct DigitEncoding {
    std::size_t bits_per_coefficient = 3; // signed pairs cover [-(2^b-1), 2^b-1]
};

// Column-style Hermite reduction: returns a lattice basis of Ker_Z A.
inline LatticeBasis lattice_kernel(const ConfigurationMatrix& A) {
    A.validate();
    const std::size_t m = A.rows(), n = A.cols();
    // Work on [A; I], column operations only.
    std::vector<std::vector<Int>> W(m + n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) W[i][j] = A.entries[i][j];
    for (std::size_t j = 0; j < n; ++j) W[m + j][j] = 1;

    auto col_swap = [&](std::size_t a, std::size_t b) {
        for (auto& row : W) std::swap(row[a], row[b]);
    };
    auto col_axpy = [&](std::size_t dst, std::size_t src, const Int& q) {
        // col_dst -= q * col_src
        for (auto& row : W) row[dst] -= q * row[src];
    };
    auto col_neg = [&](std::size_t c) {
        for (auto& row : W) row[c] = -row[c];
    };

    std::size_t pivot_col = 0;
    for (std::size_t r = 0; r < m && pivot_col < n; ++r) {
        // gcd sweep: make all but one entry in row r (from pivot_col on) zero
        while (true) {
            std::size_t nonzero = n;
            Int best;
            for (std::size_t c = pivot_col; c < n; ++c) {
                if (W[r][c] == 0) continue;
                Int a = abs(W[r][c]);
                if (nonzero == n || a < best) {
                    nonzero = c;
                    best = a;
                }
            }
            if (nonzero == n) break; // row is zero from pivot_col on
            col_swap(pivot_col, nonzero);
            if (W[r][pivot_col] < 0) col_neg(pivot_col);
            bool reduced_all = true;
            for (std::size_t c = pivot_col + 1; c < n; ++c) {
                if (W[r][c] == 0) continue;
                Int q = W[r][c] / W[r][pivot_col]; // floor toward zero is fine with remainder fixup
                col_axpy(c, pivot_col, q);
                if (W[r][c] != 0) reduced_all = false;
            }
            if (reduced_all) break;
        }
        if (W[r][pivot_col] != 0) ++pivot_col;
    }

    LatticeBasis basis;
    for (std::size_t c = pivot_col; c < n; ++c) {
        bool zero_top = true;
        for (std::size_t i = 0; i < m; ++i)
            if (W[i][c] != 0) zero_top = false;
        if (!zero_top) fail(errc::domain, "hermite reduction failed to clear a kernel column");
        std::vector<Int> v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = W[m + j][c];
        // canonical sign: first nonzero entry positive
        for (const auto& e : v) {
            if (e == 0) continue;
            if (e < 0)
                for (auto& x : v) x = -x;
            break;
        }
        basis.vectors.push_back(std::move(v));
    }
    // verify A v = 0 exactly
    for (const auto& v : basis.vectors)
        for (std::size_t i = 0; i < m; ++i) {
            Int dot = 0;
            for (std::size_t j = 0; j < n; ++j) dot += Int(A.entries[i][j]) * v[j];
            if (dot != 0) fail(errc::domain, "kernel vector fails A*v = 0");
        }
    std::sort(basis.vectors.begin(), basis.vectors.end());
    return basis;
}

// Row-style Hermite normal form of a full-row-rank-or-not integer matrix;
// canonical per lattice, used to compare lattices for equality.
inline std::vector<std::vector<Int>> hermite_normal_form(std::vector<std::vector<Int>> rows) {
    if (rows.empty()) return rows;
    const std::size_t n = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        // gcd sweep down the column
        while (true) {
            std::size_t piv = rows.size();
            Int best;
            for (std::size_t i = r; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                Int a = abs(rows[i][c]);
                if (piv == rows.size() || a < best) {
                    piv = i;
                    best = a;
                }
            }
            if (piv == rows.size()) break;
            std::swap(rows[r], rows[piv]);
            if (rows[r][c] < 0)
                for (auto& e : rows[r]) e = -e;
            bool clean = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                Int q = rows[i][c] / rows[r][c];
                for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
                if (rows[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (rows[r][c] != 0) {
            // reduce entries above the pivot into [0, pivot)
            for (std::size_t i = 0; i < r; ++i) {
                Int q = rows[i][c] / rows[r][c];
                if (rows[i][c] - q * rows[r][c] < 0) q -= 1;
                for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
            }
            ++r;
        }
    }
    rows.resize(r);
    return rows;
}

// Default ring for a toric instance: w1, ..., wn.
inline Ring toric_ring(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t j = 0; j < n; ++j) names.push_back("w" + std::to_string(j + 1));
    return Ring(names);
}

inline Poly binomial_poly(const std::vector<Int>& u, const Ring& ring) {
    Mono up(ring.arity()), um(ring.arity());
    for (std::size_t j = 0; j < u.size(); ++j) {
        if (u[j] > 0) up.exps[j] = static_cast<std::uint32_t>(u[j].get_ui());
        if (u[j] < 0) um.exps[j] = static_cast<std::uint32_t>(Int(-u[j]).get_ui());
    }
    return Poly::term(ring, up, rat(1)) - Poly::term(ring, um, rat(1));
}

// Classical route: eliminate the auxiliary y-block from <x_i - y^{a_i}>.
inline GroebnerBasis toric_gb_classical(const ConfigurationMatrix& A, const Order& order,
                                        const BuchbergerOptions& opts = {}) {
    A.validate();
    if (!A.nonnegative())
        fail(errc::unsupported, "negative configuration entries are not supported");
    const std::size_t m = A.rows(), n = A.cols();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m; ++i) names.push_back("y" + std::to_string(i + 1));
    Ring xr = toric_ring(n);
    for (std::size_t j = 0; j < n; ++j) names.push_back(xr.name(j));
    Ring ext(names);

    std::vector<Poly> gens;
    for (std::size_t j = 0; j < n; ++j) {
        Mono ya(ext.arity());
        for (std::size_t i = 0; i < m; ++i)
            ya.exps[i] = static_cast<std::uint32_t>(A.entries[i][j]);
        gens.push_back(Poly::variable(ext, m + j) - Poly::term(ext, ya, rat(1)));
    }
    Order block = Order::elimination(ext.arity(), m, order);
    auto gb = buchberger(gens, block, opts);
    auto elim = eliminate(gb, n);

    std::vector<Poly> xpolys;
    for (const auto& g : elim.elements) xpolys.push_back(change_ring(g, xr));
    return GroebnerBasis{std::move(xpolys), order, xr};
}

// Cost 'norm of M u^T squared' over the signed digit encoding of the kernel
// coefficients, expanded exactly into a QUBO on the digit bits. Digit layout
// per basis vector k: d_{k,0,+}, d_{k,0,-}, d_{k,1,+}, ...
inline Qubo kernel_qubo(const LatticeBasis& basis, const std::vector<std::vector<long>>& M,
                        const DigitEncoding& enc) {
    if (basis.vectors.empty()) fail(errc::domain, "kernel basis is empty");
    const std::size_t n = basis.vectors[0].size();
    if (M.size() != n) fail(errc::domain, "order matrix must be square of the column count");
    for (const auto& r : M)
        if (r.size() != n) fail(errc::domain, "order matrix must be square");
    const std::size_t K = basis.vectors.size();
    const std::size_t B = enc.bits_per_coefficient;
    const std::size_t nbits = K * B * 2;

    // weight of digit bit d in u_j:  u_j = sum_k c_k v_kj,
    // c_k = sum_i (d+ - d-) 2^i
    auto digit_weight = [&](std::size_t bit, std::size_t j) -> Int {
        std::size_t k = bit / (2 * B);
        std::size_t rem = bit % (2 * B);
        std::size_t i = rem / 2;
        bool plus = rem % 2 == 0;
        Int w = basis.vectors[k][j] * Int(1) * (Int(1) << i);
        return plus ? w : Int(-w);
    };

    Qubo q(nbits);
    // cost = sum_r ( sum_j M[r][j] u_j )^2 = sum_r l_r(d)^2
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<Int> lin(nbits, 0);
        for (std::size_t bit = 0; bit < nbits; ++bit)
            for (std::size_t j = 0; j < n; ++j)
                if (M[r][j] != 0) lin[bit] += Int(M[r][j]) * digit_weight(bit, j);
        for (std::size_t a = 0; a < nbits; ++a) {
            if (lin[a] == 0) continue;
            q.linear[a] += Rat(lin[a] * lin[a]); // d^2 = d on binaries
            for (std::size_t b = a + 1; b < nbits; ++b)
                if (lin[b] != 0) q.add_quadratic(a, b, Rat(2 * lin[a] * lin[b]));
        }
    }
    return q;
}

inline std::vector<Int> decode_digits(const std::vector<int>& bits, const LatticeBasis& basis,
                                      const DigitEncoding& enc) {
    const std::size_t K = basis.vectors.size();
    const std::size_t B = enc.bits_per_coefficient;
    if (bits.size() != K * B * 2) fail(errc::domain, "digit assignment has wrong length");
    const std::size_t n = basis.vectors[0].size();
    std::vector<Int> u(n, 0);
    for (std::size_t k = 0; k < K; ++k) {
        Int c = 0;
        for (std::size_t i = 0; i < B; ++i) {
            int dplus = bits[k * 2 * B + 2 * i];
            int dminus = bits[k * 2 * B + 2 * i + 1];
            c += Int(dplus - dminus) * (Int(1) << i);
        }
        for (std::size_t j = 0; j < n; ++j) u[j] += c * basis.vectors[k][j];
    }
    return u;
}

// Decode samples to kernel vectors, drop zero / corrupted ones, canonicalize
// signs and dedupe.
inline std::vector<Binomial> harvest_binomials(const std::vector<std::vector<int>>& samples,
                                               const ConfigurationMatrix& A,
                                               const LatticeBasis& basis,
                                               const DigitEncoding& enc) {
    std::set<std::vector<Int>> seen;
    std::vector<Binomial> out;
    for (const auto& s : samples) {
        std::vector<Int> u = decode_digits(s, basis, enc);
        bool zero = true;
        for (const auto& e : u)
            if (e != 0) zero = false;
        if (zero) continue;
        bool in_kernel = true;
        for (std::size_t i = 0; i < A.rows(); ++i) {
            Int dot = 0;
            for (std::size_t j = 0; j < A.cols(); ++j) dot += Int(A.entries[i][j]) * u[j];
            if (dot != 0) in_kernel = false;
        }
        if (!in_kernel) continue;
        for (const auto& e : u) {
            if (e == 0) continue;
            if (e < 0)
                for (auto& x : u) x = -x;
            break;
        }
        if (seen.insert(u).second) out.push_back(Binomial{u});
    }
    return out;
}

enum class Backend { Exhaustive, Anneal };

struct ToricSolverConfig {
    Backend backend = Backend::Exhaustive;
    AnnealSchedule schedule;     // used by the anneal backend
    std::size_t exclusion_rounds = 6;
    Rat exclusion_penalty = rat(10);
};

struct ProvenancedBasis {
    GroebnerBasis gb;
    std::vector<bool> sampled; // element i came from sampling (vs completion)
    std::size_t sampled_count() const {
        std::size_t c = 0;
        for (bool b : sampled) c += b;
        return c;
    }
};

// Annealer route: sample low-energy digit patterns of the kernel QUBO,
// decode them to binomials, then always verify/complete with Buchberger so
// correctness never depends on sampler luck.
inline ProvenancedBasis toric_gb_annealed(const ConfigurationMatrix& A, const Order& order,
                                          const std::vector<std::vector<long>>& M,
                                          const DigitEncoding& enc,
                                          const ToricSolverConfig& config,
                                          const BuchbergerOptions& opts = {}) {
    A.validate();
    Ring xr = toric_ring(A.cols());
    auto basis = lattice_kernel(A);
    if (basis.vectors.empty()) return ProvenancedBasis{GroebnerBasis{{}, order, xr}, {}};

    Qubo q = kernel_qubo(basis, M, enc);
    std::vector<std::vector<int>> raw;
    if (config.backend == Backend::Exhaustive) {
        // full digit enumeration: decode every assignment
        if (q.n > 24) fail(errc::resource_limit, "digit space too large for exhaustive decode");
        for (std::uint64_t mask = 0; mask < (1ull << q.n); ++mask) {
            std::vector<int> bits(q.n);
            for (std::size_t v = 0; v < q.n; ++v) bits[v] = static_cast<int>((mask >> v) & 1);
            raw.push_back(std::move(bits));
        }
    } else {
        Qubo current = q;
        for (std::size_t round = 0; round < config.exclusion_rounds; ++round) {
            AnnealSchedule sched = config.schedule;
            sched.base_seed = config.schedule.base_seed + round * 0x9e3779b9ull;
            auto set = simulated_anneal(current, sched);
            std::vector<std::vector<int>> found;
            for (const auto& s : set.samples) {
                raw.push_back(s.assignment);
                found.push_back(s.assignment);
            }
            current = exclude_solutions(current, found, config.exclusion_penalty);
        }
    }

    auto harvested = harvest_binomials(raw, A, basis, enc);
    if (config.backend == Backend::Anneal && harvested.empty())
        fail(errc::infeasible, "sampler produced no usable kernel vectors");

    // The basis vectors plus saturation already generate the full ideal, so
    // only the shortest harvested binomials need to enter the completion;
    // the rest still count for provenance.
    std::vector<Binomial> seeds = harvested;
    std::sort(seeds.begin(), seeds.end(), [](const Binomial& a, const Binomial& b) {
        Int na = 0, nb = 0;
        for (const auto& e : a.u) na += abs(e);
        for (const auto& e : b.u) nb += abs(e);
        if (na != nb) return na < nb;
        return a.u < b.u;
    });
    if (seeds.size() > 64) seeds.resize(64);

    std::vector<Poly> gens;
    for (const auto& b : seeds) gens.push_back(binomial_poly(b.u, xr));
    // the lattice basis itself guarantees a generating set for completion
    for (const auto& v : basis.vectors) gens.push_back(binomial_poly(v, xr));

    auto gb = buchberger(gens, order, opts);
    // saturate by the product of variables: for toric lattice ideals the
    // kernel-basis binomials generate J_A only up to saturation
    Poly prod = Poly::constant(xr, 1);
    for (std::size_t j = 0; j < xr.arity(); ++j) prod = prod * Poly::variable(xr, j);
    gb = saturate(IdealGens{gb.elements, xr}, prod, order, opts);

    ProvenancedBasis out;
    out.gb = std::move(gb);
    std::set<Poly> sampled_polys;
    for (const auto& b : harvested) {
        Poly p = binomial_poly(b.u, xr);
        sampled_polys.insert(p);
        sampled_polys.insert(-p);
        auto lt = p.leading_term(order);
        sampled_polys.insert(p * (Rat(1) / lt.second));
    }
    for (const auto& g : out.gb.elements) out.sampled.push_back(sampled_polys.count(g) > 0);
    return out;
}

// Order-optimal nonnegative solution of A v = b via normal-form reduction of
// y^b against the elimination basis.
inline std::vector<Int> conti_traverso_ip(const ConfigurationMatrix& A,
                                          const std::vector<long>& b, const Order& order,
                                          const BuchbergerOptions& opts = {}) {
    A.validate();
    if (!A.nonnegative())
        fail(errc::unsupported, "negative configuration entries are not supported");
    for (auto e : b)
        if (e < 0) fail(errc::unsupported, "negative right-hand side");
    const std::size_t m = A.rows(), n = A.cols();
    if (b.size() != m) fail(errc::domain, "right-hand side has wrong length");

    std::vector<std::string> names;
    for (std::size_t i = 0; i < m; ++i) names.push_back("y" + std::to_string(i + 1));
    Ring xr = toric_ring(n);
    for (std::size_t j = 0; j < n; ++j) names.push_back(xr.name(j));
    Ring ext(names);

    std::vector<Poly> gens;
    for (std::size_t j = 0; j < n; ++j) {
        Mono ya(ext.arity());
        for (std::size_t i = 0; i < m; ++i)
            ya.exps[i] = static_cast<std::uint32_t>(A.entries[i][j]);
        gens.push_back(Poly::variable(ext, m + j) - Poly::term(ext, ya, rat(1)));
    }
    Order block = Order::elimination(ext.arity(), m, order);
    auto gb = buchberger(gens, block, opts);

    Mono yb(ext.arity());
    for (std::size_t i = 0; i < m; ++i) yb.exps[i] = static_cast<std::uint32_t>(b[i]);
    Poly nf = normal_form(Poly::term(ext, yb, rat(1)), gb);

    if (nf.term_count() != 1) fail(errc::domain, "normal form is not a monomial");
    const auto& [mono, coef] = *nf.terms().begin();
    for (std::size_t i = 0; i < m; ++i)
        if (mono.exps[i] != 0) fail(errc::infeasible, "instance is infeasible");
    std::vector<Int> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = static_cast<long>(mono.exps[m + j]);
    return v;
}

} // namespace ga
