#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ga/poly.hpp"

namespace ga {

// Dense univariate polynomial, coeffs[i] is the coefficient of t^i.
using UniPoly = std::vector<Rat>;

inline void upoly_trim(UniPoly& p) {
    while (!p.empty() && sign(p.back()) == 0) p.pop_back();
}

inline int upoly_degree(const UniPoly& p) {
    for (std::size_t i = p.size(); i-- > 0;)
        if (sign(p[i]) != 0) return static_cast<int>(i);
    return -1;
}

inline Rat upoly_eval(const UniPoly& p, const Rat& x) {
    Rat acc(0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

inline UniPoly upoly_derivative(const UniPoly& p) {
    UniPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
    upoly_trim(d);
    return d;
}

// Euclidean division, returns (quotient, remainder).
inline std::pair<UniPoly, UniPoly> upoly_divmod(UniPoly num, const UniPoly& den) {
    int dd = upoly_degree(den);
    if (dd < 0) fail(errc::domain, "univariate division by zero");
    upoly_trim(num);
    UniPoly q(num.size(), Rat(0));
    while (upoly_degree(num) >= dd) {
        int dn = upoly_degree(num);
        Rat c = num[dn] / den[dd];
        int shift = dn - dd;
        q[shift] = c;
        for (int i = 0; i <= dd; ++i) num[i + shift] -= c * den[i];
        upoly_trim(num);
    }
    upoly_trim(q);
    return {q, num};
}

inline UniPoly upoly_monic(UniPoly p) {
    int d = upoly_degree(p);
    if (d < 0) return p;
    Rat lc = p[d];
    for (auto& c : p) c /= lc;
    upoly_trim(p);
    return p;
}

inline UniPoly upoly_gcd(UniPoly a, UniPoly b) {
    upoly_trim(a);
    upoly_trim(b);
    while (upoly_degree(b) >= 0) {
        auto [q, r] = upoly_divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return upoly_monic(a);
}

inline UniPoly upoly_squarefree(const UniPoly& p) {
    if (upoly_degree(p) <= 1) return upoly_monic(p);
    auto g = upoly_gcd(p, upoly_derivative(p));
    if (upoly_degree(g) == 0) return upoly_monic(p);
    return upoly_monic(upoly_divmod(p, g).first);
}

// Extract a single-variable polynomial; errors if other variables occur.
inline UniPoly to_univariate(const Poly& p, std::size_t var) {
    UniPoly out;
    for (const auto& [m, c] : p.terms()) {
        for (std::size_t v = 0; v < m.arity(); ++v)
            if (v != var && m.exps[v] != 0)
                fail(errc::domain, "polynomial is not univariate in the requested variable");
        std::size_t e = m.exps[var];
        if (out.size() <= e) out.resize(e + 1, Rat(0));
        out[e] = c;
    }
    return out;
}

// Divide out (t - r) when r is a root; nullopt otherwise.
inline std::optional<UniPoly> upoly_deflate(const UniPoly& p, const Rat& r) {
    if (sign(upoly_eval(p, r)) != 0) return std::nullopt;
    int d = upoly_degree(p);
    if (d < 1) return std::nullopt;
    UniPoly q(static_cast<std::size_t>(d), Rat(0));
    Rat carry(0);
    for (int i = d; i >= 1; --i) {
        carry = p[static_cast<std::size_t>(i)] + carry * r;
        q[static_cast<std::size_t>(i - 1)] = carry;
    }
    return q;
}

// Roots drawn from a candidate set, with multiplicities, plus the degree of
// the unfactored residual (0 when the candidates explain the whole poly).
struct RationalRoots {
    std::map<Rat, int> roots;
    int residual_degree = 0;
};

inline RationalRoots rational_roots_from_candidates(UniPoly p, const std::vector<Rat>& candidates) {
    RationalRoots out;
    upoly_trim(p);
    for (const auto& r : candidates) {
        while (true) {
            auto q = upoly_deflate(p, r);
            if (!q) break;
            out.roots[r] += 1;
            p = std::move(*q);
        }
    }
    out.residual_degree = std::max(0, upoly_degree(p));
    return out;
}

// ---- Sturm sequences and certified real root isolation ----

inline std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    std::vector<UniPoly> chain;
    UniPoly a = p;
    upoly_trim(a);
    if (upoly_degree(a) < 0) return chain;
    chain.push_back(a);
    UniPoly d = upoly_derivative(a);
    if (upoly_degree(d) < 0) return chain;
    chain.push_back(std::move(d));
    while (true) {
        auto [q, r] = upoly_divmod(chain[chain.size() - 2], chain.back());
        upoly_trim(r);
        if (upoly_degree(r) < 0) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    return chain;
}

inline int sturm_variations(const std::vector<UniPoly>& chain, const Rat& x) {
    int var = 0, last = 0;
    for (const auto& p : chain) {
        int s = sign(upoly_eval(p, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

// Number of distinct real roots in the half-open interval (a, b].
inline int sturm_count(const std::vector<UniPoly>& chain, const Rat& a, const Rat& b) {
    return sturm_variations(chain, a) - sturm_variations(chain, b);
}

inline Rat cauchy_root_bound(const UniPoly& p) {
    int d = upoly_degree(p);
    if (d < 0) return Rat(1);
    Rat m(0);
    for (int i = 0; i < d; ++i) {
        Rat a = rat_abs(p[static_cast<std::size_t>(i)] / p[static_cast<std::size_t>(d)]);
        if (a > m) m = a;
    }
    return m + 1;
}

struct RootInterval {
    Rat lo, hi;   // lo == hi means an exact rational root
    bool exact() const { return lo == hi; }
    Rat mid() const { return (lo + hi) / 2; }
    Rat width() const { return hi - lo; }
};

namespace unidetail {

// Emits isolating intervals for every root in (lo, hi]; requires p(lo) != 0.
inline void isolate_rec(const std::vector<UniPoly>& chain, const UniPoly& p, const Rat& lo,
                        const Rat& hi, std::vector<RootInterval>& out) {
    int count = sturm_count(chain, lo, hi);
    if (count == 0) return;
    if (count == 1) {
        if (sign(upoly_eval(p, hi)) == 0)
            out.push_back({hi, hi});
        else
            out.push_back({lo, hi});
        return;
    }
    // Split at a non-root interior point.
    Rat mid = (lo + hi) / 2;
    Rat step = (hi - lo) / 4;
    while (sign(upoly_eval(p, mid)) == 0) {
        mid += step;
        step /= 2;
    }
    isolate_rec(chain, p, lo, mid, out);
    isolate_rec(chain, p, mid, hi, out);
}

} // namespace unidetail

// Isolating intervals for all real roots of a squarefree polynomial; each
// interval contains exactly one root, intervals are sorted and disjoint.
inline std::vector<RootInterval> isolate_real_roots(const UniPoly& squarefree) {
    UniPoly p = squarefree;
    upoly_trim(p);
    std::vector<RootInterval> out;
    int d = upoly_degree(p);
    if (d <= 0) return out;
    if (d == 1) {
        Rat r = -p[0] / p[1];
        out.push_back({r, r});
        return out;
    }
    Rat bound = cauchy_root_bound(p);
    auto chain = sturm_chain(p);
    unidetail::isolate_rec(chain, p, -bound, bound, out);
    std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) {
        return a.lo < b.lo;
    });
    return out;
}

// Bisect an isolating interval down to the requested width; keeps the
// sign-change invariant, and collapses onto exact rational roots when hit.
inline RootInterval refine_root(const UniPoly& p, RootInterval iv, const Rat& width) {
    if (iv.exact()) return iv;
    int slo = sign(upoly_eval(p, iv.lo));
    while (iv.width() > width) {
        Rat mid = iv.mid();
        int sm = sign(upoly_eval(p, mid));
        if (sm == 0) return {mid, mid};
        if (sm == slo)
            iv.lo = mid;
        else
            iv.hi = mid;
    }
    return iv;
}

// Interval arithmetic evaluation of a bivariate polynomial over a box, used
// for certified sign decisions at isolated points.
struct RatInterval {
    Rat lo, hi;

    static RatInterval point(const Rat& v) { return {v, v}; }

    RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }

    RatInterval operator*(const RatInterval& o) const {
        Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
    }

    bool contains_zero() const { return sign(lo) <= 0 && sign(hi) >= 0; }
};

inline RatInterval interval_evaluate(const Poly& f, const std::vector<RatInterval>& box) {
    if (box.size() != f.ring().arity()) fail(errc::domain, "interval box has wrong arity");
    RatInterval acc{Rat(0), Rat(0)};
    for (const auto& [m, c] : f.terms()) {
        RatInterval t{c, c};
        for (std::size_t v = 0; v < m.arity(); ++v)
            for (std::uint32_t e = 0; e < m.exps[v]; ++e) t = t * box[v];
        acc = acc + t;
    }
    return acc;
}

} // namespace ga
