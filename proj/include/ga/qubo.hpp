#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ga/poly.hpp"

namespace ga {

// Quadratic unconstrained binary objective:
//   E(x) = offset + sum_i linear[i] x_i + sum_{i<j} quadratic[{i,j}] x_i x_j.
struct Qubo {
    std::size_t n = 0;
    std::vector<Rat> linear;
    std::map<std::pair<std::size_t, std::size_t>, Rat> quadratic; // keys i < j
    Rat offset;

    explicit Qubo(std::size_t vars = 0) : n(vars), linear(vars, Rat(0)), offset(0) {}

    void add_quadratic(std::size_t i, std::size_t j, const Rat& c) {
        if (i == j) fail(errc::domain, "diagonal quadratic term; fold into linear");
        if (i > j) std::swap(i, j);
        if (j >= n) fail(errc::domain, "qubo index out of range");
        auto [it, inserted] = quadratic.try_emplace({i, j}, c);
        if (!inserted) it->second += c;
        if (sign(it->second) == 0) quadratic.erase(it);
    }

    Rat energy(const std::vector<int>& x) const {
        if (x.size() != n) fail(errc::domain, "assignment has wrong length");
        Rat e = offset;
        for (std::size_t i = 0; i < n; ++i)
            if (x[i]) e += linear[i];
        for (const auto& [ij, c] : quadratic)
            if (x[ij.first] && x[ij.second]) e += c;
        return e;
    }

    friend bool operator==(const Qubo& a, const Qubo& b) {
        return a.n == b.n && a.linear == b.linear && a.quadratic == b.quadratic &&
               a.offset == b.offset;
    }
};

// Exact transcription of a degree <= 2 polynomial on binary variables;
// squares fold onto the diagonal since x^2 = x on {0,1}.
inline Qubo poly_to_qubo(const Poly& q) {
    const Ring& ring = q.ring();
    Qubo out(ring.arity());
    for (const auto& [m, c] : q.terms()) {
        std::vector<std::size_t> vars;
        std::uint64_t deg = 0;
        for (std::size_t v = 0; v < m.arity(); ++v) {
            deg += m.exps[v];
            if (m.exps[v] > 0) vars.push_back(v);
        }
        if (deg > 2) fail(errc::domain, "polynomial has degree > 2");
        if (vars.empty())
            out.offset += c;
        else if (vars.size() == 1)
            out.linear[vars[0]] += c; // covers x and x^2 alike
        else
            out.add_quadratic(vars[0], vars[1], c);
    }
    return out;
}

inline Poly qubo_to_poly(const Qubo& q, const Ring& ring) {
    if (ring.arity() != q.n) fail(errc::domain, "ring arity does not match qubo size");
    Poly p = Poly::constant(ring, q.offset);
    for (std::size_t i = 0; i < q.n; ++i)
        if (sign(q.linear[i]) != 0) p = p + Poly::variable(ring, i) * q.linear[i];
    for (const auto& [ij, c] : q.quadratic)
        p = p + Poly::variable(ring, ij.first) * Poly::variable(ring, ij.second) * c;
    return p;
}

// JSON wire format, rationals as "p/q" strings; round trips bit-exactly.
inline nlohmann::json qubo_to_json(const Qubo& q) {
    nlohmann::json j;
    j["n"] = q.n;
    j["linear"] = nlohmann::json::array();
    for (const auto& c : q.linear) j["linear"].push_back(rat_str(c));
    j["quadratic"] = nlohmann::json::array();
    for (const auto& [ij, c] : q.quadratic)
        j["quadratic"].push_back({ij.first, ij.second, rat_str(c)});
    j["offset"] = rat_str(q.offset);
    return j;
}

inline Qubo qubo_from_json(const nlohmann::json& j) {
    Qubo q(j.at("n").get<std::size_t>());
    const auto& lin = j.at("linear");
    if (lin.size() != q.n) fail(errc::syntax, "qubo linear block has wrong length");
    for (std::size_t i = 0; i < q.n; ++i) q.linear[i] = rat_parse(lin[i].get<std::string>());
    for (const auto& entry : j.at("quadratic")) {
        if (entry.size() != 3) fail(errc::syntax, "qubo quadratic entry must be [i, j, rat]");
        q.add_quadratic(entry[0].get<std::size_t>(), entry[1].get<std::size_t>(),
                        rat_parse(entry[2].get<std::string>()));
    }
    q.offset = rat_parse(j.at("offset").get<std::string>());
    return q;
}

} // namespace ga
