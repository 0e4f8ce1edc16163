#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "ga/matrix.hpp"
#include "ga/poly.hpp"

namespace ga {

struct IdealGens {
    std::vector<Poly> generators; // nonzero, same ring
    Ring ring;

    IdealGens() = default;
    IdealGens(std::vector<Poly> gens, Ring r) : generators(std::move(gens)), ring(std::move(r)) {
        for (const auto& g : generators) {
            if (g.is_zero()) fail(errc::domain, "ideal generators must be nonzero");
            if (g.ring() != ring) fail(errc::ring_mismatch, "generator in wrong ring");
        }
    }
};

struct GroebnerBasis {
    std::vector<Poly> elements; // monic, inter-reduced, sorted by leading monomial ascending
    Order order;
    Ring ring;

    bool is_unit_ideal() const {
        return elements.size() == 1 && elements[0].is_constant() && !elements[0].is_zero();
    }
};

struct QuotientBasis {
    std::vector<Mono> standard_monomials; // ascending under gb.order
    GroebnerBasis gb;
};

struct BuchbergerOptions {
    std::uint64_t pair_budget = 1'000'000; // reductions before resource_limit
};

namespace gbdetail {

using Term = std::pair<Mono, Rat>;
using TermVec = std::vector<Term>; // strictly descending under the active order

inline TermVec to_sorted(const Poly& p, const Order& ord) {
    TermVec v(p.terms().begin(), p.terms().end());
    std::sort(v.begin(), v.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.first, b.first); });
    return v;
}

inline Poly to_poly(const TermVec& v, const Ring& ring) {
    Poly p(ring);
    for (const auto& [m, c] : v) p.add_term(m, c);
    return p;
}

// a[from..] - c * (m * b), both inputs sorted descending; result sorted.
inline TermVec sub_scaled(const TermVec& a, std::size_t from, const Rat& c, const Mono& m,
                          const TermVec& b, const Order& ord) {
    TermVec out;
    out.reserve(a.size() - from + b.size());
    std::size_t i = from, j = 0;
    while (i < a.size() && j < b.size()) {
        Mono bm = m * b[j].first;
        Cmp cmp = ord.compare(a[i].first, bm);
        if (cmp == Cmp::GT) {
            out.push_back(a[i++]);
        } else if (cmp == Cmp::LT) {
            out.emplace_back(std::move(bm), -(c * b[j].second));
            ++j;
        } else {
            Rat coef = a[i].second - c * b[j].second;
            if (sign(coef) != 0) out.emplace_back(a[i].first, std::move(coef));
            ++i;
            ++j;
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) {
        out.emplace_back(m * b[j].first, -(c * b[j].second));
        ++j;
    }
    return out;
}

// Full multivariate division remainder: no term of the result is divisible by
// any divisor's leading monomial. Divisor choice: first match by index.
inline TermVec normal_form_sorted(TermVec h, const std::vector<TermVec>& divisors,
                                  const Order& ord) {
    TermVec rem;
    std::size_t head = 0;
    while (head < h.size()) {
        const Mono& hm = h[head].first;
        const TermVec* red = nullptr;
        for (const auto& g : divisors) {
            if (!g.empty() && g[0].first.divides(hm)) {
                red = &g;
                break;
            }
        }
        if (red == nullptr) {
            rem.push_back(h[head]);
            ++head;
            continue;
        }
        Rat c = h[head].second / (*red)[0].second;
        Mono m = hm / (*red)[0].first;
        // Skip the cancelled leading term of both sides.
        TermVec tail((*red).begin() + 1, (*red).end());
        h = sub_scaled(h, head + 1, c, m, tail, ord);
        head = 0;
    }
    return rem;
}

inline TermVec s_poly_sorted(const TermVec& f, const TermVec& g, const Order& ord) {
    Mono l = lcm(f[0].first, g[0].first);
    // (l/LT(f))*f - (l/LT(g))*g, both made monic through the leading coefficients.
    TermVec lhs;
    lhs.reserve(f.size());
    Mono mf = l / f[0].first;
    for (const auto& [m, c] : f) lhs.emplace_back(mf * m, c / f[0].second);
    Mono mg = l / g[0].first;
    return sub_scaled(lhs, 1, Rat(1) / g[0].second, mg, TermVec(g.begin() + 1, g.end()), ord);
}

} // namespace gbdetail

inline Poly s_polynomial(const Poly& f, const Poly& g, const Order& order) {
    if (f.is_zero() || g.is_zero()) fail(errc::domain, "S-polynomial of the zero polynomial");
    f.check_same_ring(g);
    auto fs = gbdetail::to_sorted(f, order);
    auto gs = gbdetail::to_sorted(g, order);
    return gbdetail::to_poly(gbdetail::s_poly_sorted(fs, gs, order), f.ring());
}

inline Poly normal_form(const Poly& f, const std::vector<Poly>& basis, const Order& order) {
    std::vector<gbdetail::TermVec> divisors;
    for (const auto& g : basis) {
        if (g.is_zero()) fail(errc::domain, "normal form against a zero divisor");
        f.check_same_ring(g);
        divisors.push_back(gbdetail::to_sorted(g, order));
    }
    auto r = gbdetail::normal_form_sorted(gbdetail::to_sorted(f, order), divisors, order);
    return gbdetail::to_poly(r, f.ring());
}

inline Poly normal_form(const Poly& f, const GroebnerBasis& gb) {
    return normal_form(f, gb.elements, gb.order);
}

inline bool ideal_membership(const Poly& f, const GroebnerBasis& gb) {
    if (f.ring() != gb.ring) fail(errc::ring_mismatch, "membership test in wrong ring");
    if (f.is_zero()) return true;
    if (gb.elements.empty()) return false;
    return normal_form(f, gb).is_zero();
}

inline GroebnerBasis buchberger(const IdealGens& gens, const Order& order,
                                const BuchbergerOptions& opts = {}) {
    using namespace gbdetail;
    const Ring& ring = gens.ring;
    if (gens.generators.empty()) fail(errc::domain, "buchberger needs at least one generator");

    std::vector<TermVec> basis;
    for (const auto& g : gens.generators) {
        if (g.is_zero()) continue;
        basis.push_back(to_sorted(g, order));
    }

    struct Pair {
        std::size_t i, j;
        Mono l;
    };
    auto pair_less = [&](const Pair& a, const Pair& b) {
        Cmp c = order.compare(a.l, b.l);
        if (c != Cmp::EQ) return c == Cmp::LT;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    std::vector<Pair> pending;
    std::set<std::pair<std::size_t, std::size_t>> pending_keys;
    auto push_pair = [&](std::size_t i, std::size_t j) {
        if (i > j) std::swap(i, j);
        pending.push_back({i, j, lcm(basis[i][0].first, basis[j][0].first)});
        pending_keys.insert({i, j});
    };
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) push_pair(i, j);

    std::uint64_t reductions = 0;
    while (!pending.empty()) {
        auto it = std::min_element(pending.begin(), pending.end(), pair_less);
        Pair p = *it;
        pending.erase(it);
        pending_keys.erase({p.i, p.j});

        const Mono& lmi = basis[p.i][0].first;
        const Mono& lmj = basis[p.j][0].first;
        if (coprime(lmi, lmj)) continue; // Buchberger's first criterion
        // Chain criterion: some k with LM(k) | lcm and both (i,k), (j,k) already treated.
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!basis[k][0].first.divides(p.l)) continue;
            auto key1 = std::minmax(p.i, k);
            auto key2 = std::minmax(p.j, k);
            if (!pending_keys.count({key1.first, key1.second}) &&
                !pending_keys.count({key2.first, key2.second}))
                skip = true;
        }
        if (skip) continue;

        if (++reductions > opts.pair_budget)
            fail(errc::resource_limit, "buchberger: pair reduction budget exceeded");

        TermVec s = s_poly_sorted(basis[p.i], basis[p.j], order);
        TermVec r = normal_form_sorted(std::move(s), basis, order);
        if (r.empty()) continue;
        std::size_t idx = basis.size();
        basis.push_back(std::move(r));
        for (std::size_t k = 0; k < idx; ++k) push_pair(k, idx);
    }

    // Inter-reduction: drop elements whose leading monomial is divisible by
    // another's, then fully reduce each against the rest until stable.
    std::vector<Poly> polys;
    for (const auto& v : basis) polys.push_back(to_poly(v, ring));
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < polys.size(); ++i) {
            std::vector<Poly> others;
            for (std::size_t k = 0; k < polys.size(); ++k)
                if (k != i && !polys[k].is_zero()) others.push_back(polys[k]);
            if (others.empty()) continue;
            Poly r = normal_form(polys[i], others, order);
            if (r != polys[i]) {
                polys[i] = std::move(r);
                changed = true;
            }
        }
        polys.erase(std::remove_if(polys.begin(), polys.end(),
                                   [](const Poly& p) { return p.is_zero(); }),
                    polys.end());
    }
    for (auto& p : polys) {
        auto [m, c] = p.leading_term(order);
        p = p * (Rat(1) / c);
    }
    std::sort(polys.begin(), polys.end(), [&](const Poly& a, const Poly& b) {
        Cmp c = order.compare(a.leading_term(order).first, b.leading_term(order).first);
        if (c != Cmp::EQ) return c == Cmp::LT;
        return a < b;
    });

    return GroebnerBasis{std::move(polys), order, ring};
}

inline GroebnerBasis buchberger(const std::vector<Poly>& gens, const Order& order,
                                const BuchbergerOptions& opts = {}) {
    if (gens.empty()) fail(errc::domain, "buchberger needs at least one generator");
    std::vector<Poly> nz;
    for (const auto& g : gens)
        if (!g.is_zero()) nz.push_back(g);
    if (nz.empty()) return GroebnerBasis{{}, order, gens.front().ring()};
    return buchberger(IdealGens(nz, nz.front().ring()), order, opts);
}

// Variables eliminated by the basis order when keeping the trailing
// `keep_suffix_len` block; errors if the order is not an elimination order
// for that split.
inline std::vector<bool> eliminated_mask(const GroebnerBasis& gb, std::size_t keep_suffix_len) {
    const std::size_t arity = gb.ring.arity();
    if (keep_suffix_len > arity) fail(errc::domain, "keep block larger than ring");
    const std::size_t elim = arity - keep_suffix_len;
    std::vector<bool> mask(arity, false);
    if (elim == 0) return mask;
    switch (gb.order.kind()) {
    case Order::Kind::Lex: {
        for (std::size_t pos = 0; pos < elim; ++pos) mask[gb.order.lex_perm()[pos]] = true;
        return mask;
    }
    case Order::Kind::Matrix: {
        if (!gb.order.eliminates_prefix(elim, arity))
            fail(errc::domain, "order is not an elimination order for the requested split");
        for (std::size_t i = 0; i < elim; ++i) mask[i] = true;
        return mask;
    }
    default:
        fail(errc::domain, "order is not an elimination order for the requested split");
    }
}

// Elimination theorem: the subset of a suitable-order GB involving only the
// kept variables is a reduced GB of the elimination ideal.
inline GroebnerBasis eliminate(const GroebnerBasis& gb, std::size_t keep_suffix_len) {
    auto mask = eliminated_mask(gb, keep_suffix_len);
    std::vector<Poly> kept;
    for (const auto& g : gb.elements) {
        bool ok = true;
        for (auto v : g.support())
            if (mask[v]) {
                ok = false;
                break;
            }
        if (ok) kept.push_back(g);
    }
    return GroebnerBasis{std::move(kept), gb.order, gb.ring};
}

// (I : g^inf) via the Rabinowitsch construction: adjoin t*g - 1 with a fresh
// leading variable t, compute a lex GB, drop t, then rebuild under `order`.
inline GroebnerBasis saturate(const IdealGens& gens, const Poly& g, const Order& order,
                              const BuchbergerOptions& opts = {}) {
    if (g.is_zero()) fail(errc::domain, "saturation by the zero polynomial");
    const Ring& ring = gens.ring;
    std::string tname = "t_";
    while (ring.index_of(tname) >= 0) tname += "_";
    std::vector<std::string> names{tname};
    names.insert(names.end(), ring.names().begin(), ring.names().end());
    Ring ext(names);

    std::vector<Poly> extended;
    for (const auto& f : gens.generators) extended.push_back(change_ring(f, ext));
    extended.push_back(Poly::variable(ext, 0) * change_ring(g, ext) -
                       Poly::constant(ext, 1));

    GroebnerBasis egb = buchberger(IdealGens(extended, ext), Order::lex(ext), opts);
    GroebnerBasis dropped = eliminate(egb, ring.arity());

    std::vector<Poly> back;
    for (const auto& f : dropped.elements) back.push_back(change_ring(f, ring));
    if (back.empty()) return GroebnerBasis{{}, order, ring};
    return buchberger(IdealGens(back, ring), order, opts);
}

// All monomials outside the leading-term ideal, ascending under the basis
// order; errors when the quotient is infinite-dimensional (detected by a
// variable with no pure power among the leading monomials).
inline QuotientBasis standard_monomials(const GroebnerBasis& gb, std::size_t max_count = 100000) {
    const std::size_t arity = gb.ring.arity();
    std::vector<Mono> lms;
    for (const auto& g : gb.elements) lms.push_back(g.leading_term(gb.order).first);

    if (gb.is_unit_ideal()) return QuotientBasis{{}, gb};

    std::vector<std::uint32_t> bound(arity, 0);
    for (std::size_t v = 0; v < arity; ++v) {
        bool found = false;
        for (const auto& m : lms) {
            bool pure = m.exps[v] > 0;
            for (std::size_t w = 0; pure && w < arity; ++w)
                if (w != v && m.exps[w] != 0) pure = false;
            if (pure) {
                bound[v] = found ? std::min(bound[v], m.exps[v]) : m.exps[v];
                found = true;
            }
        }
        if (!found)
            fail(errc::infinite, "quotient is infinite-dimensional: no pure power of '" +
                                     gb.ring.name(v) + "' among leading terms");
    }

    // Every standard monomial lies strictly below the pure-power staircase.
    std::uint64_t box = 1;
    for (auto b : bound) {
        box *= b;
        if (box > 10'000'000ull)
            fail(errc::resource_limit, "standard monomial search box too large");
    }

    std::vector<Mono> out;
    Mono cur(arity);
    auto divisible = [&](const Mono& m) {
        for (const auto& lm : lms)
            if (lm.divides(m)) return true;
        return false;
    };
    while (true) {
        if (!divisible(cur)) {
            out.push_back(cur);
            if (out.size() > max_count)
                fail(errc::resource_limit, "standard monomial count exceeds limit");
        }
        std::size_t v = 0;
        while (v < arity) {
            if (cur.exps[v] + 1 < bound[v]) {
                cur.exps[v] += 1;
                break;
            }
            cur.exps[v] = 0;
            ++v;
        }
        if (v == arity) break;
    }
    std::sort(out.begin(), out.end(),
              [&](const Mono& a, const Mono& b) { return gb.order.less(a, b); });
    return QuotientBasis{std::move(out), gb};
}

// Matrix of multiplication by g on the quotient, column j = coordinates of
// NF(g * b_j) in the standard-monomial basis.
inline RatMatrix multiplication_matrix(const Poly& g, const QuotientBasis& qb) {
    const auto& mons = qb.standard_monomials;
    if (mons.empty()) fail(errc::domain, "multiplication matrix over the zero algebra");
    std::map<Mono, std::size_t> index;
    for (std::size_t i = 0; i < mons.size(); ++i) index[mons[i]] = i;
    RatMatrix m(mons.size(), mons.size());
    for (std::size_t j = 0; j < mons.size(); ++j) {
        Poly prod = g * Poly::term(g.ring(), mons[j], Rat(1));
        Poly nf = normal_form(prod, qb.gb);
        for (const auto& [mono, coef] : nf.terms()) {
            auto it = index.find(mono);
            if (it == index.end())
                fail(errc::domain, "normal form left the standard-monomial span");
            m.at(it->second, j) = coef;
        }
    }
    return m;
}

} // namespace ga
