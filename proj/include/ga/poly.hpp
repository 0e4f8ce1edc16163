#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ga/order.hpp"
#include "ga/rational.hpp"
#include "ga/ring.hpp"

namespace ga {

// Sparse exact polynomial. Terms are kept in a map keyed by declaration-order
// lex on exponents, so equal polynomials have identical representations no
// matter how they were built. Zero coefficients are never stored.
class Poly {
public:
    using TermMap = std::map<Mono, Rat>;

    Poly() = default;
    explicit Poly(Ring ring) : ring_(std::move(ring)) {}

    static Poly constant(const Ring& ring, const Rat& c) {
        Poly p(ring);
        if (sign(c) != 0) p.terms_[Mono(ring.arity())] = c;
        return p;
    }

    static Poly variable(const Ring& ring, std::size_t index, std::uint32_t power = 1) {
        if (index >= ring.arity()) fail(errc::domain, "variable index out of range");
        Poly p(ring);
        Mono m(ring.arity());
        m.exps[index] = power;
        if (power == 0)
            p.terms_[Mono(ring.arity())] = 1;
        else
            p.terms_[m] = 1;
        return p;
    }

    static Poly term(const Ring& ring, Mono m, Rat c) {
        Poly p(ring);
        if (sign(c) != 0) p.terms_[std::move(m)] = std::move(c);
        return p;
    }

    const Ring& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    Rat constant_value() const {
        auto it = terms_.find(Mono(ring_.arity()));
        return it == terms_.end() ? Rat(0) : it->second;
    }

    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    std::uint32_t degree_in(std::size_t var) const {
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.exps[var]);
        return d;
    }

    // Indices of variables that actually occur.
    std::vector<std::size_t> support() const {
        std::vector<bool> used(ring_.arity(), false);
        for (const auto& [m, c] : terms_)
            for (std::size_t i = 0; i < m.arity(); ++i)
                if (m.exps[i] > 0) used[i] = true;
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < used.size(); ++i)
            if (used[i]) out.push_back(i);
        return out;
    }

    void add_term(const Mono& m, const Rat& c) {
        if (sign(c) == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (sign(it->second) == 0) terms_.erase(it);
        }
    }

    Poly operator-() const {
        Poly r(ring_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    Poly operator+(const Poly& o) const {
        check_same_ring(o);
        Poly r(*this);
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }

    Poly operator-(const Poly& o) const {
        check_same_ring(o);
        Poly r(*this);
        for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }

    Poly operator*(const Poly& o) const {
        check_same_ring(o);
        Poly r(ring_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    Poly operator*(const Rat& c) const {
        Poly r(ring_);
        if (sign(c) == 0) return r;
        for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef * c);
        return r;
    }

    friend Poly operator*(const Rat& c, const Poly& p) { return p * c; }

    Poly pow(std::uint32_t e) const {
        Poly r = constant(ring_, 1);
        Poly base(*this);
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.ring_ == b.ring_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Deterministic total order used when polynomial sets are sorted.
    friend bool operator<(const Poly& a, const Poly& b) { return a.terms_ < b.terms_; }

    Rat evaluate(const std::vector<Rat>& point) const {
        if (point.size() != ring_.arity()) fail(errc::domain, "evaluation point has wrong length");
        Rat acc(0);
        for (const auto& [m, c] : terms_) {
            Rat t = c;
            for (std::size_t i = 0; i < m.arity(); ++i) {
                for (std::uint32_t e = 0; e < m.exps[i]; ++e) t *= point[i];
            }
            acc += t;
        }
        return acc;
    }

    Poly derivative(std::size_t var) const {
        if (var >= ring_.arity()) fail(errc::domain, "derivative index out of range");
        Poly r(ring_);
        for (const auto& [m, c] : terms_) {
            if (m.exps[var] == 0) continue;
            Mono d(m);
            d.exps[var] -= 1;
            r.add_term(d, c * Rat(static_cast<long>(m.exps[var])));
        }
        return r;
    }

    // Substitute values for a subset of variables, staying in the same ring.
    Poly substitute(const std::vector<std::optional<Rat>>& values) const {
        if (values.size() != ring_.arity()) fail(errc::domain, "substitution has wrong length");
        Poly r(ring_);
        for (const auto& [m, c] : terms_) {
            Rat coef = c;
            Mono rest(ring_.arity());
            for (std::size_t i = 0; i < m.arity(); ++i) {
                if (!values[i]) {
                    rest.exps[i] = m.exps[i];
                    continue;
                }
                for (std::uint32_t e = 0; e < m.exps[i]; ++e) coef *= *values[i];
            }
            r.add_term(rest, coef);
        }
        return r;
    }

    // Leading term under an order; polynomial must be nonzero.
    std::pair<Mono, Rat> leading_term(const Order& order) const {
        if (terms_.empty()) fail(errc::domain, "leading term of the zero polynomial");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (order.greater(it->first, best->first)) best = it;
        return {best->first, best->second};
    }

    void check_same_ring(const Poly& o) const {
        if (ring_ != o.ring_) fail(errc::ring_mismatch, "polynomials live in different rings");
    }

private:
    Ring ring_;
    TermMap terms_;
};

// Map a polynomial into another ring by variable name; every variable in the
// support must exist in the target.
inline Poly change_ring(const Poly& p, const Ring& target) {
    std::vector<int> map(p.ring().arity(), -1);
    for (std::size_t i = 0; i < p.ring().arity(); ++i) map[i] = target.index_of(p.ring().name(i));
    Poly out(target);
    for (const auto& [m, c] : p.terms()) {
        Mono t(target.arity());
        for (std::size_t i = 0; i < m.arity(); ++i) {
            if (m.exps[i] == 0) continue;
            if (map[i] < 0)
                fail(errc::ring_mismatch,
                     "variable '" + p.ring().name(i) + "' does not exist in the target ring");
            t.exps[static_cast<std::size_t>(map[i])] += m.exps[i];
        }
        out.add_term(t, c);
    }
    return out;
}

} // namespace ga
