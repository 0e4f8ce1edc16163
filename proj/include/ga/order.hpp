#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "ga/error.hpp"
#include "ga/ring.hpp"

namespace ga {

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

// Total multiplicative monomial order. Lex is parameterized by a permutation
// of variable indices (most significant first) so elimination orders never
// require re-declaring the ring.
class Order {
public:
    enum class Kind { Lex, GrLex, GrevLex, Matrix };

    static Order lex(std::vector<std::size_t> perm) {
        Order o;
        o.kind_ = Kind::Lex;
        o.perm_ = std::move(perm);
        std::vector<bool> seen(o.perm_.size(), false);
        for (auto i : o.perm_) {
            if (i >= o.perm_.size() || seen[i]) fail(errc::domain, "lex permutation is not a bijection");
            seen[i] = true;
        }
        return o;
    }

    // Declaration-order lex: v0 > v1 > ... > v_{n-1}.
    static Order lex(const Ring& ring) {
        std::vector<std::size_t> perm(ring.arity());
        std::iota(perm.begin(), perm.end(), 0);
        return lex(std::move(perm));
    }

    static Order grlex() {
        Order o;
        o.kind_ = Kind::GrLex;
        return o;
    }

    static Order grevlex() {
        Order o;
        o.kind_ = Kind::GrevLex;
        return o;
    }

    static Order matrix(std::vector<std::vector<long>> rows) {
        Order o;
        o.kind_ = Kind::Matrix;
        o.rows_ = std::move(rows);
        if (o.rows_.empty()) fail(errc::domain, "matrix order needs at least one row");
        for (const auto& r : o.rows_)
            if (r.size() != o.rows_.front().size())
                fail(errc::domain, "matrix order rows must have equal length");
        return o;
    }

    // Block order: lex on the first `eliminated` variables, then `inner`
    // (shifted to the trailing block). Standard elimination-order builder.
    static Order elimination(std::size_t arity, std::size_t eliminated, const Order& inner);

    Kind kind() const { return kind_; }
    const std::vector<std::size_t>& lex_perm() const { return perm_; }
    const std::vector<std::vector<long>>& matrix_rows() const { return rows_; }

    Cmp compare(const Mono& a, const Mono& b) const {
        switch (kind_) {
        case Kind::Lex: {
            if (perm_.size() != a.arity()) fail(errc::ring_mismatch, "order arity mismatch");
            for (auto i : perm_) {
                if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i] ? Cmp::GT : Cmp::LT;
            }
            return Cmp::EQ;
        }
        case Kind::GrLex: {
            auto da = a.degree(), db = b.degree();
            if (da != db) return da > db ? Cmp::GT : Cmp::LT;
            for (std::size_t i = 0; i < a.arity(); ++i)
                if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i] ? Cmp::GT : Cmp::LT;
            return Cmp::EQ;
        }
        case Kind::GrevLex: {
            auto da = a.degree(), db = b.degree();
            if (da != db) return da > db ? Cmp::GT : Cmp::LT;
            for (std::size_t i = a.arity(); i-- > 0;) {
                if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? Cmp::GT : Cmp::LT;
            }
            return Cmp::EQ;
        }
        case Kind::Matrix: {
            if (rows_.front().size() != a.arity()) fail(errc::ring_mismatch, "order arity mismatch");
            for (const auto& row : rows_) {
                long long sa = 0, sb = 0;
                for (std::size_t i = 0; i < a.arity(); ++i) {
                    sa += static_cast<long long>(row[i]) * a.exps[i];
                    sb += static_cast<long long>(row[i]) * b.exps[i];
                }
                if (sa != sb) return sa > sb ? Cmp::GT : Cmp::LT;
            }
            return Cmp::EQ;
        }
        }
        return Cmp::EQ;
    }

    bool less(const Mono& a, const Mono& b) const { return compare(a, b) == Cmp::LT; }
    bool greater(const Mono& a, const Mono& b) const { return compare(a, b) == Cmp::GT; }

    // True when this order makes the first `eliminated` declaration indices an
    // elimination block: any monomial containing one of them beats any
    // monomial in the remaining variables.
    bool eliminates_prefix(std::size_t eliminated, std::size_t arity) const {
        if (eliminated == 0) return true;
        switch (kind_) {
        case Kind::Lex: {
            for (std::size_t pos = 0; pos < eliminated; ++pos)
                if (perm_[pos] >= eliminated) return false;
            return true;
        }
        case Kind::Matrix: {
            // Sufficient structural test: some leading row block touches only
            // eliminated columns with positive weights covering all of them,
            // and later rows never touch them. We accept the common shape
            // produced by elimination(): leading rows each positive on one
            // eliminated column.
            std::vector<bool> covered(eliminated, false);
            std::size_t r = 0;
            for (; r < rows_.size(); ++r) {
                bool touches_kept = false, touches_elim = false;
                for (std::size_t i = 0; i < arity; ++i) {
                    if (rows_[r][i] == 0) continue;
                    if (i < eliminated) touches_elim = true;
                    else touches_kept = true;
                }
                if (!touches_elim) break;
                if (touches_kept) return false;
                for (std::size_t i = 0; i < eliminated; ++i)
                    if (rows_[r][i] > 0) covered[i] = true;
            }
            for (std::size_t i = 0; i < eliminated; ++i)
                if (!covered[i]) return false;
            for (; r < rows_.size(); ++r)
                for (std::size_t i = 0; i < eliminated; ++i)
                    if (rows_[r][i] != 0) return false;
            return true;
        }
        default:
            return false;
        }
    }

private:
    Kind kind_ = Kind::GrevLex;
    std::vector<std::size_t> perm_;
    std::vector<std::vector<long>> rows_;
};

inline Order Order::elimination(std::size_t arity, std::size_t eliminated, const Order& inner) {
    if (eliminated > arity) fail(errc::domain, "elimination block larger than ring");
    std::vector<std::vector<long>> rows;
    for (std::size_t i = 0; i < eliminated; ++i) {
        std::vector<long> row(arity, 0);
        row[i] = 1;
        rows.push_back(std::move(row));
    }
    const std::size_t kept = arity - eliminated;
    auto kept_row = [&](const std::vector<long>& sub) {
        std::vector<long> row(arity, 0);
        for (std::size_t i = 0; i < kept; ++i) row[eliminated + i] = sub[i];
        return row;
    };
    switch (inner.kind()) {
    case Kind::Lex: {
        for (auto idx : inner.lex_perm()) {
            std::vector<long> sub(kept, 0);
            sub[idx] = 1;
            rows.push_back(kept_row(sub));
        }
        break;
    }
    case Kind::GrLex: {
        rows.push_back(kept_row(std::vector<long>(kept, 1)));
        for (std::size_t i = 0; i < kept; ++i) {
            std::vector<long> sub(kept, 0);
            sub[i] = 1;
            rows.push_back(kept_row(sub));
        }
        break;
    }
    case Kind::GrevLex: {
        rows.push_back(kept_row(std::vector<long>(kept, 1)));
        for (std::size_t i = kept; i-- > 0;) {
            std::vector<long> sub(kept, 0);
            sub[i] = -1;
            rows.push_back(kept_row(sub));
        }
        break;
    }
    case Kind::Matrix: {
        for (const auto& r : inner.matrix_rows()) rows.push_back(kept_row(r));
        break;
    }
    }
    return Order::matrix(std::move(rows));
}

} // namespace ga
