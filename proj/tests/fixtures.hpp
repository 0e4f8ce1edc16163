#pragma once

// Shared worked-example data used across the suites: the quadric system, the
// four-variable objective with its reference multiplication matrix, the long-
// multiplication Hamiltonian with its basis elements, the five-vertex
// embedding pair, and the 2x4 toric configuration.

#include <string>
#include <vector>

#include "ga/matrix.hpp"
#include "ga/poly_io.hpp"

namespace fixtures {

inline ga::Ring quadric_ring() { return ga::Ring({"x", "y", "z"}); }

inline std::vector<ga::Poly> quadric_system() {
    auto R = quadric_ring();
    return {ga::parse_poly("x^2+y^2+z^2-4", R), ga::parse_poly("x^2+2*y^2-5", R),
            ga::parse_poly("x*z-1", R)};
}

// Ascending by leading monomial, the deterministic output order.
inline std::vector<ga::Poly> quadric_expected_gb() {
    auto R = quadric_ring();
    return {ga::parse_poly("z^4-3/2*z^2+1/2", R), ga::parse_poly("y^2-z^2-1", R),
            ga::parse_poly("x+2*z^3-3*z", R)};
}

// Objective in x1..x4 whose gradient-ideal quotient has the 16 squarefree
// standard monomials; optimum 0 at (1,1,1,0).
inline ga::Ring sec32_ring() { return ga::Ring({"x1", "x2", "x3", "x4"}); }

inline ga::Poly sec32_objective() {
    return ga::parse_poly("2+7*x4+2*x3+2*x4*x3-2*x3*x2-x1-4*x4*x1-2*x3*x1+x2*x1", sec32_ring());
}

// The 16x16 multiplication matrix as reference (row k = image of basis element
// k), in the ascending-lex basis ordering starting 1, x4, x3, x4*x3, x2, ...
inline ga::RatMatrix sec32_reference_matrix() {
    static const int rows[16][16] = {
        {2, 7, 2, 2, 0, 0, -2, 0, -1, -4, -2, 0, 1, 0, 0, 0},
        {0, 9, 0, 4, 0, 0, 0, -2, 0, -5, 0, -2, 0, 1, 0, 0},
        {0, 0, 4, 9, 0, 0, -2, 0, 0, 0, -3, -4, 0, 0, 1, 0},
        {0, 0, 0, 13, 0, 0, 0, -2, 0, 0, 0, -7, 0, 0, 0, 1},
        {0, 0, 0, 0, 2, 7, 0, 2, 0, 0, 0, 0, 0, -4, -2, 0},
        {0, 0, 0, 0, 0, 9, 0, 2, 0, 0, 0, 0, 0, -4, 0, -2},
        {0, 0, 0, 0, 0, 0, 2, 9, 0, 0, 0, 0, 0, 0, -2, -4},
        {0, 0, 0, 0, 0, 0, 0, 11, 0, 0, 0, 0, 0, 0, 0, -6},
        {0, 0, 0, 0, 0, 0, 0, 0, 1, 3, 0, 2, 1, 0, -2, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 2, 0, 1, 0, -2},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 5, 0, 0, -1, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 6, 0, 0, 0, -1},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 3, -2, 2},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 5, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 5},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 5},
    };
    ga::RatMatrix m(16, 16);
    for (std::size_t i = 0; i < 16; ++i)
        for (std::size_t j = 0; j < 16; ++j) m.at(i, j) = ga::rat(rows[i][j]);
    return m;
}

inline std::vector<ga::Rat> sec32_eigenvalues() {
    return {ga::rat(0), ga::rat(1), ga::rat(2),  ga::rat(4), ga::rat(5),
            ga::rat(6), ga::rat(9), ga::rat(11), ga::rat(13)};
}

// Long-multiplication constraint: Q*P + S0 + Z0 - S1 - 2*Z1, with variables
// (Q, P, S0, S1, Z0, Z1) standing for Q_i, P_j, S_{i,j}, S_{i+1,j-1},
// Z_{i,j}, Z_{i,j+1}.
inline ga::Ring hij_ring() { return ga::Ring({"Q", "P", "S0", "S1", "Z0", "Z1"}); }

inline ga::Poly hij() { return ga::parse_poly("Q*P+S0+Z0-S1-2*Z1", hij_ring()); }

inline std::vector<ga::Poly> hij_basis_elements() {
    auto R = hij_ring();
    return {
        ga::parse_poly("Q*P+S0+Z0-S1-2*Z1", R),
        ga::parse_poly("-Z1*S1+Z0*S1+Z1*Z0-Z0", R),
        ga::parse_poly("-Z1*S0+Z0*S0+Z1-Z1*Z0", R),
        ga::parse_poly("S1*S0+Z1*S0-S0-S1*Z1", R),
        ga::parse_poly("-S1*Q-2*Z1*Q+Z0*Q+S0*Q-S0-Z0+S1+2*Z1", R),
        ga::parse_poly("-S1*P-2*Z1*P+Z0*P+S0*P-S0-Z0+S1+2*Z1", R),
    };
}

// Five-vertex hardware graph with quadratic form
// x1x2 + x2x3 + x3x4 + x1x4 + x4x5, and the triangle logical graph.
inline std::vector<std::string> x_vertices() { return {"x1", "x2", "x3", "x4", "x5"}; }
inline std::vector<std::pair<std::string, std::string>> x_edges() {
    return {{"x1", "x2"}, {"x2", "x3"}, {"x3", "x4"}, {"x1", "x4"}, {"x4", "x5"}};
}
inline std::vector<std::string> y_vertices() { return {"y1", "y2", "y3"}; }
inline std::vector<std::pair<std::string, std::string>> y_edges() {
    return {{"y1", "y2"}, {"y1", "y3"}, {"y2", "y3"}};
}

// The connected-fiber polynomials listed with the five-vertex example: the
// disconnected patterns {x1,x2,x5}, {x1,x3,x5}, {x2,x3,x5}, {x2,x4,x5} and
// {x2,x5} are forbidden per logical vertex (signs are immaterial for the
// generated ideal).
inline std::vector<ga::Poly> x_connectivity_extras(const ga::Ring& bundle_ring) {
    std::vector<ga::Poly> out;
    for (int j = 1; j <= 3; ++j) {
        std::string sj = std::to_string(j);
        for (const char* triple : {"a1_J*a2_J*a5_J", "a1_J*a3_J*a5_J", "a2_J*a3_J*a5_J",
                                   "a2_J*a4_J*a5_J", "a2_J*a5_J"}) {
            std::string text(triple);
            std::string::size_type pos;
            while ((pos = text.find('J')) != std::string::npos) text.replace(pos, 1, sj);
            out.push_back(ga::parse_poly(text, bundle_ring));
        }
    }
    return out;
}

// Toric configuration from the integer-programming example.
inline std::vector<std::vector<long>> toric_A() { return {{4, 5, 1, 0}, {2, 3, 0, 1}}; }

inline std::vector<std::vector<long>> toric_kernel_expected() {
    return {{1, 0, -4, -2}, {0, 1, -5, -3}};
}

inline std::vector<std::vector<long>> reversal_order_rows() {
    return {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}};
}

inline ga::Ring toric_ring() { return ga::Ring({"w1", "w2", "w3", "w4"}); }

inline std::vector<ga::Poly> toric_expected_gb() {
    auto R = toric_ring();
    return {ga::parse_poly("w2^2*w3^2-w1^3", R), ga::parse_poly("w1^4*w4-w2^3*w3", R),
            ga::parse_poly("w1*w4*w3-w2", R), ga::parse_poly("w2*w4*w3^3-w1^2", R),
            ga::parse_poly("w3^4*w4^2-w1", R)};
}

// Two-level crossing pair: H_i = [[0,1],[1,0]], H_f = diag(1,-1).
inline ga::RatMatrix hinit_2x2() {
    ga::RatMatrix m(2, 2);
    m.at(0, 1) = 1;
    m.at(1, 0) = 1;
    return m;
}

inline ga::RatMatrix hfinal_2x2() {
    ga::RatMatrix m(2, 2);
    m.at(0, 0) = 1;
    m.at(1, 1) = -1;
    return m;
}

} // namespace fixtures
