#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ga/poly.hpp"

namespace ga {

// Dense matrix over Q.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {
        if (rows == 0 || cols == 0) fail(errc::domain, "matrix dimensions must be positive");
    }

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RatMatrix transpose() const {
        RatMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    RatMatrix operator*(const RatMatrix& o) const {
        if (cols_ != o.rows_) fail(errc::domain, "matrix product shape mismatch");
        RatMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                if (sign(at(i, k)) == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
            }
        return r;
    }

    std::vector<Rat> apply(const std::vector<Rat>& v) const {
        if (v.size() != cols_) fail(errc::domain, "matrix-vector shape mismatch");
        std::vector<Rat> out(rows_, Rat(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
        return out;
    }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

// Reduced row echelon form in place; returns the pivot column of each row.
inline std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && sign(m.at(p, c)) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        Rat inv = m.at(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) /= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || sign(m.at(i, c)) == 0) continue;
            Rat f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Basis of the right nullspace; empty iff the matrix has full column rank.
inline std::vector<std::vector<Rat>> rational_nullspace(RatMatrix m) {
    auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(m.cols(), Rat(0));
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Exact quotient f/g when g divides f; nullopt otherwise. Any monomial order
// works for the greedy cancellation since LT(f) = LT(g)*LT(f/g) in a domain.
inline std::optional<Poly> poly_divide_exact(const Poly& f, const Poly& g) {
    if (g.is_zero()) fail(errc::domain, "division by the zero polynomial");
    Order ord = Order::grevlex();
    Poly h = f;
    Poly q(f.ring());
    auto [gm, gc] = g.leading_term(ord);
    while (!h.is_zero()) {
        auto [hm, hc] = h.leading_term(ord);
        if (!gm.divides(hm)) return std::nullopt;
        Poly t = Poly::term(f.ring(), hm / gm, hc / gc);
        q = q + t;
        h = h - t * g;
    }
    return q;
}

using PolyMatrix = std::vector<std::vector<Poly>>;

inline Poly det_cofactor(const PolyMatrix& m);

namespace detail {

inline Poly det_bareiss(PolyMatrix m, const Ring& ring) {
    const std::size_t n = m.size();
    int sgn = 1;
    Poly prev = Poly::constant(ring, 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m[p][k].is_zero()) ++p;
            if (p == n) return Poly(ring); // zero column below the diagonal
            std::swap(m[p], m[k]);
            sgn = -sgn;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto q = poly_divide_exact(num, prev);
                if (!q) fail(errc::domain, "fraction-free elimination: inexact division");
                m[i][j] = std::move(*q);
            }
            m[i][k] = Poly(ring);
        }
        prev = m[k][k];
    }
    Poly d = m[n - 1][n - 1];
    return sgn < 0 ? -d : d;
}

} // namespace detail

// Determinant of a square polynomial matrix: Bareiss fraction-free
// elimination, with cofactor expansion for small sizes.
inline Poly det_over_ring(const PolyMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) fail(errc::domain, "determinant of an empty matrix");
    for (const auto& row : m)
        if (row.size() != n) fail(errc::domain, "determinant requires a square matrix");
    const Ring& ring = m[0][0].ring();
    for (const auto& row : m)
        for (const auto& e : row)
            if (e.ring() != ring) fail(errc::ring_mismatch, "matrix entries in different rings");
    if (n <= 3) return det_cofactor(m);
    return detail::det_bareiss(m, ring);
}

inline Poly det_cofactor(const PolyMatrix& m) {
    const std::size_t n = m.size();
    const Ring& ring = m[0][0].ring();
    if (n == 1) return m[0][0];
    Poly acc(ring);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        PolyMatrix minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Poly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        Poly term = m[0][j] * det_cofactor(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// Matrix file format: whitespace-separated rationals, one row per line.
inline RatMatrix parse_matrix_text(const std::string& text) {
    std::vector<std::vector<Rat>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<Rat> row;
        std::string tok;
        while (ls >> tok) row.push_back(rat_parse(tok));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) fail(errc::syntax, "matrix file has no rows");
    for (const auto& r : rows)
        if (r.size() != rows[0].size()) fail(errc::syntax, "matrix file rows have unequal length");
    RatMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[0].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

inline std::string format_matrix(const RatMatrix& m) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << rat_str(m.at(i, j));
        }
        out << '\n';
    }
    return out.str();
}

} // namespace ga
