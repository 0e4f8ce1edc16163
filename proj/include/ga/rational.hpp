#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "ga/error.hpp"

namespace ga {

// Exact rational scalar. mpq_class canonical form is exactly the contract we
// need: lowest terms, positive denominator, zero stored as 0/1.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline int sign(const Rat& q) { return sgn(q); }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

// Renders "p" for integers and "p/q" otherwise; matches the wire format used
// in every JSON artifact.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Rat rat_parse(std::string_view text) {
    std::string s(text);
    Rat q;
    if (q.set_str(s, 10) != 0)
        fail(errc::syntax, "invalid rational literal: '" + s + "'");
    q.canonicalize();
    return q;
}

inline double rat_double(const Rat& q) { return q.get_d(); }

} // namespace ga
