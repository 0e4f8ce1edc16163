#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <unordered_set>
#include <vector>

#include "ga/error.hpp"

namespace ga {

// Named polynomial ring Q[v0, ..., v_{n-1}]. Copies are cheap (shared names);
// two rings compare equal iff they declare the same variables in the same
// order.
class Ring {
public:
    Ring() = default;

    explicit Ring(std::vector<std::string> names)
        : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
        if (names_->empty()) fail(errc::domain, "ring needs at least one variable");
        std::unordered_set<std::string> seen;
        for (const auto& n : *names_)
            if (!seen.insert(n).second)
                fail(errc::domain, "duplicate ring variable '" + n + "'");
    }

    std::size_t arity() const { return names_ ? names_->size() : 0; }
    const std::string& name(std::size_t i) const { return (*names_).at(i); }
    const std::vector<std::string>& names() const { return *names_; }

    // -1 when the identifier is not a ring variable.
    int index_of(const std::string& name) const {
        if (!names_) return -1;
        auto it = std::find(names_->begin(), names_->end(), name);
        return it == names_->end() ? -1 : static_cast<int>(it - names_->begin());
    }

    friend bool operator==(const Ring& a, const Ring& b) {
        if (a.names_ == b.names_) return true;
        if (!a.names_ || !b.names_) return false;
        return *a.names_ == *b.names_;
    }
    friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

// Exponent vector; length always equals the ring arity.
struct Mono {
    std::vector<std::uint32_t> exps;

    Mono() = default;
    explicit Mono(std::size_t arity) : exps(arity, 0) {}
    explicit Mono(std::vector<std::uint32_t> e) : exps(std::move(e)) {}
    Mono(std::initializer_list<std::uint32_t> e) : exps(e) {}

    std::size_t arity() const { return exps.size(); }

    std::uint64_t degree() const {
        return std::accumulate(exps.begin(), exps.end(), std::uint64_t{0});
    }

    bool is_one() const {
        return std::all_of(exps.begin(), exps.end(), [](auto e) { return e == 0; });
    }

    bool divides(const Mono& other) const {
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > other.exps[i]) return false;
        return true;
    }

    Mono operator*(const Mono& o) const {
        Mono r(*this);
        for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] += o.exps[i];
        return r;
    }

    // Caller guarantees divisibility.
    Mono operator/(const Mono& o) const {
        Mono r(*this);
        for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] -= o.exps[i];
        return r;
    }

    friend Mono lcm(const Mono& a, const Mono& b) {
        Mono r(a);
        for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] = std::max(a.exps[i], b.exps[i]);
        return r;
    }

    friend bool coprime(const Mono& a, const Mono& b) {
        for (std::size_t i = 0; i < a.exps.size(); ++i)
            if (a.exps[i] != 0 && b.exps[i] != 0) return false;
        return true;
    }

    friend bool operator==(const Mono& a, const Mono& b) { return a.exps == b.exps; }
    friend bool operator!=(const Mono& a, const Mono& b) { return !(a == b); }

    // Storage order only: lexicographic in declaration order, independent of
    // any monomial order used for division.
    friend bool operator<(const Mono& a, const Mono& b) { return a.exps < b.exps; }
};

} // namespace ga
