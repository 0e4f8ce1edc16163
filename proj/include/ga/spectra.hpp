#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "ga/groebner.hpp"
#include "ga/matrix.hpp"
#include "ga/univariate.hpp"

namespace ga {

struct HamiltonianPair {
    RatMatrix h_initial, h_final;

    void validate() const {
        if (h_initial.rows() != h_initial.cols() || h_final.rows() != h_final.cols())
            fail(errc::domain, "hamiltonians must be square");
        if (h_initial.rows() != h_final.rows())
            fail(errc::domain, "hamiltonians must have the same dimension");
        if (h_initial.rows() < 2) fail(errc::domain, "need dimension at least 2");
        for (std::size_t i = 0; i < h_initial.rows(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (h_initial.at(i, j) != h_initial.at(j, i) ||
                    h_final.at(i, j) != h_final.at(j, i))
                    fail(errc::domain, "hamiltonians must be symmetric");
    }
};

// Characteristic surface f(s, lambda) = det((1-s) H_i + s H_f - lambda I)
// over the ring (s, lambda).
struct SpectralSurface {
    Poly f;

    Ring ring() const { return f.ring(); }
    std::size_t s_index() const { return 0; }
    std::size_t lambda_index() const { return 1; }
};

inline SpectralSurface char_surface(const HamiltonianPair& pair) {
    pair.validate();
    const std::size_t n = pair.h_initial.rows();
    Ring R({"s", "lambda"});
    Poly s = Poly::variable(R, 0), l = Poly::variable(R, 1);
    Poly one = Poly::constant(R, 1);
    PolyMatrix m(n, std::vector<Poly>(n, Poly(R)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = (one - s) * pair.h_initial.at(i, j) + s * pair.h_final.at(i, j);
            if (i == j) m[i][j] = m[i][j] - l;
        }
    return SpectralSurface{det_over_ring(m)};
}

// Generators {d f/d s, d f/d lambda}, zero generators dropped.
inline IdealGens critical_ideal(const SpectralSurface& surface) {
    std::vector<Poly> gens;
    Poly fs = surface.f.derivative(surface.s_index());
    Poly fl = surface.f.derivative(surface.lambda_index());
    if (!fs.is_zero()) gens.push_back(fs);
    if (!fl.is_zero()) gens.push_back(fl);
    return IdealGens{std::move(gens), surface.ring()};
}

inline Poly hessian_det(const SpectralSurface& surface) {
    Poly fss = surface.f.derivative(0).derivative(0);
    Poly fll = surface.f.derivative(1).derivative(1);
    Poly fsl = surface.f.derivative(0).derivative(1);
    return fss * fll - fsl * fsl;
}

struct CriticalPoint {
    RootInterval s_box, lambda_box;
    bool degenerate = false;
    RatInterval normal_form_value{Rat(0), Rat(0)};
};

struct SpectraOptions {
    bool widen_domain = false; // report s outside [0,1] as well
    std::size_t max_refinements = 128;
    BuchbergerOptions gb;
};

inline RatInterval box_interval(const RootInterval& b) { return RatInterval{b.lo, b.hi}; }

// True iff the normal form of the Hessian determinant against the critical
// ideal's basis is certifiably nonzero over the point's isolating box;
// an interval still straddling zero is reported as degenerate.
inline bool nondegeneracy_test(const SpectralSurface& surface, const GroebnerBasis& gb,
                               const CriticalPoint& p, const Rat& tol,
                               RatInterval* value_out = nullptr) {
    Poly r = normal_form(hessian_det(surface), gb);
    std::vector<RatInterval> box{box_interval(p.s_box), box_interval(p.lambda_box)};
    RatInterval val = interval_evaluate(r, box);
    if (value_out) *value_out = val;
    (void)tol;
    return !val.contains_zero();
}

// Certified critical points of the surface: lex basis with lambda first, the
// univariate eliminant isolated by Sturm sequences, lambda back-substituted
// through the shape-position element, boxes refined until both partials are
// within tol.
inline std::vector<CriticalPoint> find_critical_points(const SpectralSurface& surface,
                                                       const Rat& tol,
                                                       const SpectraOptions& opts = {}) {
    if (sign(tol) <= 0) fail(errc::domain, "tolerance must be positive");
    auto gens = critical_ideal(surface);
    if (gens.generators.empty())
        fail(errc::infinite, "constant surface: every point is critical");
    if (surface.f.derivative(surface.s_index()).is_zero())
        fail(errc::infinite, "surface does not depend on s: critical set is positive-dimensional");

    Order order = Order::lex({1, 0}); // lambda before s
    auto gb = buchberger(gens, order, opts.gb);
    if (gb.is_unit_ideal()) return {};

    // zero-dimensionality
    try {
        standard_monomials(gb, 1u << 16);
    } catch (const error& e) {
        if (e.code() == errc::infinite)
            fail(errc::infinite, "critical set is positive-dimensional");
        throw;
    }

    // univariate eliminant in s and the lambda element
    std::optional<UniPoly> eliminant;
    std::optional<Poly> lambda_elem;
    for (const auto& g : gb.elements) {
        auto sup = g.support();
        if (sup.empty() || (sup.size() == 1 && sup[0] == 0)) {
            eliminant = to_univariate(g, 0);
        } else if (g.degree_in(1) >= 1) {
            if (lambda_elem) fail(errc::unsupported, "basis is not in shape position");
            lambda_elem = g;
        }
    }
    if (!eliminant) fail(errc::domain, "no univariate eliminant found");
    if (!lambda_elem) fail(errc::domain, "no lambda element found");
    if (lambda_elem->degree_in(1) != 1)
        fail(errc::unsupported, "basis is not in shape position");
    // lambda - h(s): reduced and monic means the lambda coefficient is 1
    Poly h(surface.ring());
    for (const auto& [m, c] : lambda_elem->terms()) {
        if (m.exps[1] == 0) {
            h.add_term(m, -c);
        } else if (m.exps[1] == 1 && m.exps[0] == 0) {
            if (c != rat(1)) fail(errc::unsupported, "basis is not in shape position");
        } else {
            fail(errc::unsupported, "basis is not in shape position");
        }
    }
    UniPoly h_s = to_univariate(h, 0);

    UniPoly g_sf = upoly_squarefree(*eliminant);
    Poly fs = surface.f.derivative(0);
    Poly fl = surface.f.derivative(1);

    std::vector<CriticalPoint> out;
    for (auto iv : isolate_real_roots(g_sf)) {
        // domain filter: s in [0,1] unless widened
        if (!opts.widen_domain) {
            std::size_t guard = 0;
            while (!(iv.lo >= 0 && iv.hi <= 1) && !(iv.hi < 0 || iv.lo > 1) &&
                   guard++ < opts.max_refinements)
                iv = refine_root(g_sf, iv, iv.width() / 4);
            if (iv.hi < 0 || iv.lo > 1) continue;
            if (!(iv.lo >= 0 && iv.hi <= 1)) continue; // undecidable at budget; skip
        }

        iv = refine_root(g_sf, iv, tol);
        CriticalPoint p;
        p.s_box = iv;

        auto lambda_box_of = [&](const RootInterval& sb) {
            RatInterval s_int = box_interval(sb);
            RatInterval acc{Rat(0), Rat(0)};
            for (std::size_t i = h_s.size(); i-- > 0;)
                acc = acc * s_int + RatInterval::point(h_s[i]);
            return RootInterval{acc.lo, acc.hi};
        };
        p.lambda_box = lambda_box_of(p.s_box);

        // refine until both partials are certifiably small on the box
        std::size_t guard = 0;
        while (guard++ < opts.max_refinements) {
            std::vector<RatInterval> box{box_interval(p.s_box), box_interval(p.lambda_box)};
            RatInterval is = interval_evaluate(fs, box);
            RatInterval il = interval_evaluate(fl, box);
            Rat ms = std::max(rat_abs(is.lo), rat_abs(is.hi));
            Rat ml = std::max(rat_abs(il.lo), rat_abs(il.hi));
            if (ms <= tol && ml <= tol) break;
            if (p.s_box.exact()) break; // exact point: partials are exact values
            p.s_box = refine_root(g_sf, p.s_box, p.s_box.width() / 4);
            p.lambda_box = lambda_box_of(p.s_box);
        }

        p.degenerate = !nondegeneracy_test(surface, gb, p, tol, &p.normal_form_value);
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
        if (a.s_box.lo != b.s_box.lo) return a.s_box.lo < b.s_box.lo;
        return a.lambda_box.lo < b.lambda_box.lo;
    });
    return out;
}

// Saturation of the critical ideal by the Hessian determinant: the part of
// the critical locus where the saddle test stays alive.
inline GroebnerBasis saturated_critical_ideal(const SpectralSurface& surface,
                                              const SpectraOptions& opts = {}) {
    auto gens = critical_ideal(surface);
    Order order = Order::lex({1, 0});
    if (gens.generators.empty()) return GroebnerBasis{{}, order, surface.ring()};
    Poly hd = hessian_det(surface);
    if (hd.is_zero()) fail(errc::domain, "hessian determinant is identically zero");
    return saturate(gens, hd, order, opts.gb);
}

// Spectral gap estimate at an s value: difference of the two middle real
// roots of f(s0, lambda). Reporting metadata, not certified.
inline std::optional<double> gap_estimate(const SpectralSurface& surface, const Rat& s0) {
    std::vector<std::optional<Rat>> sub(2);
    sub[0] = s0;
    Poly fs = surface.f.substitute(sub);
    UniPoly p = to_univariate(fs, 1);
    auto roots = isolate_real_roots(upoly_squarefree(p));
    if (roots.size() < 2) return std::nullopt;
    std::vector<double> vals;
    for (auto iv : roots) {
        iv = refine_root(upoly_squarefree(p), iv, rat(1, 1 << 20));
        vals.push_back(rat_double(iv.mid()));
    }
    std::sort(vals.begin(), vals.end());
    std::size_t mid = vals.size() / 2;
    return vals[mid] - vals[mid - 1];
}

inline nlohmann::json critical_points_to_json(const std::vector<CriticalPoint>& pts) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : pts) {
        nlohmann::json j;
        j["s_box"] = {rat_str(p.s_box.lo), rat_str(p.s_box.hi)};
        j["lambda_box"] = {rat_str(p.lambda_box.lo), rat_str(p.lambda_box.hi)};
        j["degenerate"] = p.degenerate;
        j["normal_form_value_interval"] = {rat_str(p.normal_form_value.lo),
                                           rat_str(p.normal_form_value.hi)};
        arr.push_back(std::move(j));
    }
    return arr;
}

} // namespace ga
