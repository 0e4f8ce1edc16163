#include <catch2/catch.hpp>

#include "ga/groebner.hpp"
#include "ga/poly_io.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace ga;

namespace {

// Reduced-basis conditions plus the Buchberger criterion, checked from
// scratch (not via the library's own bookkeeping).
void check_reduced_gb(const GroebnerBasis& gb) {
    for (const auto& g : gb.elements) {
        auto [lm, lc] = g.leading_term(gb.order);
        CHECK(lc == rat(1));
        for (const auto& h : gb.elements) {
            if (&h == &g) continue;
            auto hlm = h.leading_term(gb.order).first;
            for (const auto& [m, c] : g.terms()) CHECK_FALSE(hlm.divides(m));
        }
    }
    for (std::size_t i = 0; i < gb.elements.size(); ++i)
        for (std::size_t j = i + 1; j < gb.elements.size(); ++j) {
            Poly s = s_polynomial(gb.elements[i], gb.elements[j], gb.order);
            if (!s.is_zero()) CHECK(normal_form(s, gb).is_zero());
        }
}

} // namespace

TEST_CASE("s-polynomials", "[groebner]") {
    Ring R({"x", "y"});
    auto lex = Order::lex(R);

    SECTION("worked pair") {
        Poly f = parse_poly("x^2-y", R), g = parse_poly("x*y-1", R);
        CHECK(s_polynomial(f, g, lex) == parse_poly("-y^2+x", R));
    }
    SECTION("self pair vanishes") {
        Poly f = parse_poly("x^2+3*y-1", R);
        CHECK(s_polynomial(f, f, lex).is_zero());
    }
    SECTION("coprime leading monomials reduce to zero") {
        Poly f = parse_poly("x^2-1", R), g = parse_poly("y^2-1", R);
        Poly s = s_polynomial(f, g, lex);
        CHECK(normal_form(s, {f, g}, lex).is_zero());
    }
}

TEST_CASE("normal form is a full remainder", "[groebner]") {
    Ring R({"x", "y"});
    auto lex = Order::lex(R);

    CHECK(normal_form(parse_poly("x^2", R), {parse_poly("x^2-x", R)}, lex) ==
          parse_poly("x", R));
    CHECK(normal_form(parse_poly("x^2-x", R), {parse_poly("x^2-x", R)}, lex).is_zero());

    SECTION("division oracle agrees and certifies membership of f - NF") {
        auto QR = fixtures::quadric_ring();
        auto qlex = Order::lex(QR);
        auto gb = buchberger(fixtures::quadric_system(), qlex);
        Poly f = parse_poly("x^2*y", QR);
        Poly nf = normal_form(f, gb);

        auto div = oracle::divide_tracking(f, gb.elements, qlex);
        CHECK(div.remainder == nf);
        Poly recomposed = div.remainder;
        for (std::size_t i = 0; i < gb.elements.size(); ++i)
            recomposed = recomposed + div.quotients[i] * gb.elements[i];
        CHECK(recomposed == f);
        for (const auto& [m, c] : nf.terms())
            for (const auto& g : gb.elements)
                CHECK_FALSE(g.leading_term(qlex).first.divides(m));
    }
}

TEST_CASE("buchberger on the quadric system", "[groebner]") {
    auto R = fixtures::quadric_ring();
    auto gb = buchberger(fixtures::quadric_system(), Order::lex(R));
    CHECK(gb.elements == fixtures::quadric_expected_gb());
    check_reduced_gb(gb);

    SECTION("elimination keeps the univariate element") {
        auto z_only = eliminate(gb, 1);
        REQUIRE(z_only.elements.size() == 1);
        CHECK(z_only.elements[0] == parse_poly("z^4-3/2*z^2+1/2", R));
    }
    SECTION("keeping all variables is the identity") {
        CHECK(eliminate(gb, 3).elements == gb.elements);
    }
    SECTION("idempotence") {
        auto again = buchberger(gb.elements, Order::lex(R));
        CHECK(again.elements == gb.elements);
    }
}

TEST_CASE("buchberger edge cases", "[groebner]") {
    Ring R({"x", "y"});
    auto lex = Order::lex(R);

    SECTION("single generator") {
        auto gb = buchberger({parse_poly("x^2-x", R)}, lex);
        REQUIRE(gb.elements.size() == 1);
        CHECK(gb.elements[0] == parse_poly("x^2-x", R));
    }
    SECTION("unit ideal") {
        auto gb = buchberger({parse_poly("3", R), parse_poly("x-1", R)}, lex);
        REQUIRE(gb.elements.size() == 1);
        CHECK(gb.elements[0] == Poly::constant(R, 1));
        CHECK(gb.is_unit_ideal());
    }
    SECTION("pair budget is enforced") {
        BuchbergerOptions opts;
        opts.pair_budget = 0;
        std::vector<Poly> gens = {parse_poly("x^2-y", R), parse_poly("x*y-1", R)};
        CHECK_THROWS_AS(buchberger(gens, lex, opts), error);
    }
}

TEST_CASE("normal form is linear for a fixed basis", "[groebner][property]") {
    auto R = fixtures::quadric_ring();
    auto lex = Order::lex(R);
    auto gb = buchberger(fixtures::quadric_system(), lex);
    oracle::Rng rng(0x11f0);
    for (int iter = 0; iter < 30; ++iter) {
        Poly f = oracle::random_poly(R, rng, 5, 3);
        Poly g = oracle::random_poly(R, rng, 5, 3);
        Rat c = rat(rng.range(-6, 6));
        CHECK(normal_form(f + g, gb) == normal_form(f, gb) + normal_form(g, gb));
        CHECK(normal_form(f * c, gb) == normal_form(f, gb) * c);
    }
}

TEST_CASE("boolean systems keep their zero set", "[groebner][property]") {
    // V(S) = V(GB) checked pointwise over the cube on random boolean ideals.
    oracle::Rng rng(0xb001);
    for (int iter = 0; iter < 25; ++iter) {
        std::size_t n = 2 + rng.below(3);
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i) names.push_back("y" + std::to_string(i + 1));
        Ring R(names);
        std::vector<Poly> gens;
        gens.push_back(oracle::random_multilinear(R, rng, -3, 3));
        if (gens[0].is_zero()) continue;
        for (std::size_t i = 0; i < n; ++i) {
            Poly v = Poly::variable(R, i);
            gens.push_back(v * v - v);
        }
        auto gb = buchberger(gens, Order::lex(R));
        check_reduced_gb(gb);
        for (const auto& p : oracle::binary_points(n)) {
            bool zero_in = true;
            for (const auto& g : gens)
                if (sign(g.evaluate(p)) != 0) zero_in = false;
            bool zero_gb = !gb.is_unit_ideal();
            for (const auto& g : gb.elements)
                if (sign(g.evaluate(p)) != 0) zero_gb = false;
            CHECK(zero_in == zero_gb);
        }
    }
}

TEST_CASE("saturation", "[groebner]") {
    Ring R({"x", "y"});
    auto lex = Order::lex(R);

    SECTION("saturating x*y by x leaves y") {
        IdealGens I({parse_poly("x*y", R)}, R);
        auto gb = saturate(I, parse_poly("x", R), lex);
        REQUIRE(gb.elements.size() == 1);
        CHECK(gb.elements[0] == parse_poly("y", R));
    }
    SECTION("saturating x^2 by x gives the unit ideal") {
        IdealGens I({parse_poly("x^2", R)}, R);
        auto gb = saturate(I, parse_poly("x", R), lex);
        CHECK(gb.is_unit_ideal());
    }
    SECTION("saturating by a nonzero constant is the identity") {
        IdealGens I({parse_poly("x^2-y", R), parse_poly("y^2-1", R)}, R);
        auto direct = buchberger(I, lex);
        auto gb = saturate(I, Poly::constant(R, -8), lex);
        CHECK(gb.elements == direct.elements);
    }
}

TEST_CASE("standard monomials", "[groebner]") {
    SECTION("boolean ideal in four variables has the sixteen squarefree monomials") {
        Ring R({"y1", "y2", "y3", "y4"});
        std::vector<Poly> gens;
        for (std::size_t i = 0; i < 4; ++i) {
            Poly v = Poly::variable(R, i);
            gens.push_back(v * v - v);
        }
        auto gb = buchberger(gens, Order::lex(R));
        auto qb = standard_monomials(gb);
        REQUIRE(qb.standard_monomials.size() == 16);
        for (const auto& m : qb.standard_monomials)
            for (auto e : m.exps) CHECK(e <= 1);
        // ascending under lex: 1 first, then the last variable
        CHECK(qb.standard_monomials[0].is_one());
        CHECK(qb.standard_monomials[1] == Mono({0, 0, 0, 1}));
    }
    SECTION("one-variable ideal") {
        Ring R({"x"});
        auto gb = buchberger({parse_poly("x", R)}, Order::lex(R));
        auto qb = standard_monomials(gb);
        REQUIRE(qb.standard_monomials.size() == 1);
        CHECK(qb.standard_monomials[0].is_one());
    }
    SECTION("missing pure power is reported as an infinite quotient") {
        Ring R({"x", "y"});
        auto gb = buchberger({parse_poly("x^2-x", R)}, Order::lex(R));
        try {
            standard_monomials(gb);
            FAIL("expected infinite quotient");
        } catch (const error& e) {
            CHECK(e.code() == errc::infinite);
        }
    }
}

TEST_CASE("multiplication matrices", "[groebner]") {
    Ring R({"y1", "y2"});
    std::vector<Poly> gens;
    for (std::size_t i = 0; i < 2; ++i) {
        Poly v = Poly::variable(R, i);
        gens.push_back(v * v - v);
    }
    auto gb = buchberger(gens, Order::lex(R));
    auto qb = standard_monomials(gb);

    SECTION("multiplication by one is the identity") {
        CHECK(multiplication_matrix(Poly::constant(R, 1), qb) ==
              RatMatrix::identity(qb.standard_monomials.size()));
    }
    SECTION("homomorphism and commutation on random elements") {
        oracle::Rng rng(0xc0ffee);
        for (int iter = 0; iter < 15; ++iter) {
            Poly f = oracle::random_multilinear(R, rng);
            Poly g = oracle::random_multilinear(R, rng);
            auto mf = multiplication_matrix(f, qb);
            auto mg = multiplication_matrix(g, qb);
            CHECK(mf * mg == multiplication_matrix(f * g, qb));
            CHECK(mf * mg == mg * mf);
        }
    }
}

TEST_CASE("ideal membership", "[groebner]") {
    auto R = fixtures::quadric_ring();
    auto gb = buchberger(fixtures::quadric_system(), Order::lex(R));
    for (const auto& g : fixtures::quadric_system()) CHECK(ideal_membership(g, gb));
    CHECK_FALSE(ideal_membership(Poly::constant(R, 1), gb));
}

TEST_CASE("reference basis elements belong to the closure ideal", "[groebner]") {
    auto R = fixtures::hij_ring();
    std::vector<Poly> gens = {fixtures::hij()};
    for (std::size_t i = 0; i < R.arity(); ++i) {
        Poly v = Poly::variable(R, i);
        gens.push_back(v * v - v);
    }
    auto gb = buchberger(gens, Order::lex(R));
    for (const auto& t : fixtures::hij_basis_elements()) CHECK(ideal_membership(t, gb));
}
