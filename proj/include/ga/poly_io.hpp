#pragma once

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>
#include <string>
#include <string_view>

#include "ga/poly.hpp"

namespace ga {

// Recursive-descent parser for the polynomial text grammar:
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := coeff ['*' factor ('*' factor)*] | factor ('*' factor)*
//   factor := var ['^' uint]
//   coeff  := int ['/' uint]
// Whitespace is ignored; variables are [A-Za-z][A-Za-z0-9_]*.
namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

    Poly parse() {
        Poly acc(ring_);
        skip_ws();
        int s = 1;
        if (peek() == '+' || peek() == '-') s = take() == '-' ? -1 : 1;
        acc = acc + parse_term(s);
        skip_ws();
        while (pos_ < text_.size()) {
            char c = peek();
            if (c != '+' && c != '-') fail_here("expected '+' or '-'");
            take();
            acc = acc + parse_term(c == '-' ? -1 : 1);
            skip_ws();
        }
        return acc;
    }

private:
    Poly parse_term(int sgn) {
        skip_ws();
        Rat coef(sgn);
        bool have_any = false;
        Mono mono(ring_.arity());

        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coef *= parse_coeff();
            have_any = true;
            skip_ws();
            if (peek() == '*') {
                take();
                parse_factor(mono);
                have_any = true;
            }
        } else {
            parse_factor(mono);
            have_any = true;
        }
        skip_ws();
        while (peek() == '*') {
            take();
            parse_factor(mono);
            skip_ws();
        }
        if (!have_any) fail_here("expected a term");
        return Poly::term(ring_, mono, coef);
    }

    Rat parse_coeff() {
        Int num = parse_uint();
        skip_ws();
        if (peek() == '/') {
            take();
            skip_ws();
            Int den = parse_uint();
            if (den == 0) fail_here("division by zero in coefficient");
            Rat q(num, den);
            q.canonicalize();
            return q;
        }
        return Rat(num);
    }

    Int parse_uint() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail_here("expected a number");
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek())))
            digits.push_back(take());
        return Int(digits);
    }

    void parse_factor(Mono& mono) {
        skip_ws();
        if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(peek())))
            fail_here("expected a variable");
        std::string name;
        name.push_back(take());
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            name.push_back(take());
        int idx = ring_.index_of(name);
        if (idx < 0) fail_here("unknown variable '" + name + "'");
        std::uint32_t e = 1;
        skip_ws();
        if (peek() == '^') {
            take();
            Int p = parse_uint();
            if (p < 0 || p > 100000) fail_here("exponent out of range");
            e = static_cast<std::uint32_t>(p.get_ui());
        }
        mono.exps[static_cast<std::size_t>(idx)] += e;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail_here(const std::string& what) const {
        fail(errc::syntax, "parse error at position " + std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    const Ring& ring_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Poly parse_poly(std::string_view text, const Ring& ring) {
    return detail::PolyParser(text, ring).parse();
}

inline std::string format_mono(const Mono& m, const Ring& ring) {
    if (m.is_one()) return "1";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < m.arity(); ++i) {
        if (m.exps[i] == 0) continue;
        if (!first) out << "*";
        out << ring.name(i);
        if (m.exps[i] > 1) out << "^" << m.exps[i];
        first = false;
    }
    return out.str();
}

namespace detail {

inline std::string format_terms(const Poly& p,
                                const std::vector<std::pair<Mono, Rat>>& terms) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms) {
        Rat a = rat_abs(c);
        if (first) {
            if (sign(c) < 0) out << "-";
            first = false;
        } else {
            out << (sign(c) < 0 ? "-" : "+");
        }
        if (m.is_one()) {
            out << rat_str(a);
        } else {
            if (a != 1) out << rat_str(a) << "*";
            out << format_mono(m, p.ring());
        }
    }
    return out.str();
}

} // namespace detail

// Terms printed in descending storage order, so for a quadric over (x,y,z)
// this reads "x^2+y^2+z^2-4". parse(format(p)) == p on canonical polynomials.
inline std::string format_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<Mono, Rat>> terms(p.terms().rbegin(), p.terms().rend());
    return detail::format_terms(p, terms);
}

// Terms printed descending under a monomial order (leading term first).
inline std::string format_poly(const Poly& p, const Order& order) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<Mono, Rat>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
        return order.greater(a.first, b.first);
    });
    return detail::format_terms(p, terms);
}

} // namespace ga
