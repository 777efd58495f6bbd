#include <catch_amalgamated.hpp>

#include "lame/cohn.hpp"
#include "support.hpp"

using namespace lame;
using lame::testing::P;

namespace {

// Independent oracle for a cubic: disc(x^3 + p x + q) = -4p^3 - 27q^2.
MPoly cubic_disc(const MPoly& p, const MPoly& q) { return -4 * p.pow(3) - 27 * q.pow(2); }

SpectralPolynomial wrap(int m, Component K, const char* text) {
    SpectralPolynomial F;
    F.m = m;
    F.component = K;
    F.poly = UPoly::from_mpoly(P(text), Var::lambda);
    F.primitive = P(text);
    return F;
}

}  // namespace

TEST_CASE("cohn examples", "[cohn]") {
    auto c2 = cohn_polynomial(2, Component::I);
    CHECK(c2.disc == P("12g2"));
    CHECK(c2.alpha == 1);
    CHECK(c2.c == 0);
    CHECK(c2.C_primitive == P("J"));
    CHECK(c2.degree == 1);

    auto c2b = cohn_polynomial(2, Component::II);
    CHECK(c2b.disc == P("729/16 g2^3 - 19683/16 g3^2"));
    CHECK(c2b.c == 1);
    CHECK(c2b.R == MPoly(BigRat(729, 16)));
    CHECK(c2b.degree == 0);

    auto c4 = cohn_polynomial(4, Component::I);
    CHECK(c4.disc == P("4*52^3 g2^3 - 27*560^2 g3^2"));
    CHECK(c4.degree == 1);
    CHECK(c4.C_primitive == P("972J + 1225"));
    CHECK(rational_roots(c4.C) == std::vector<BigRat>{BigRat(-1225, 972)});
}

TEST_CASE("discriminant agrees with the cubic formula", "[cohn]") {
    // F_4^I = lambda^3 - 52 g2 lambda + 560 g3
    auto F = spectral_F(4, Component::I);
    CHECK(discriminant(F.poly) == cubic_disc(P("-52g2"), P("560g3")));
    auto F2 = spectral_F(2, Component::II);
    auto mon = F2.poly.monic();
    CHECK(discriminant(mon) == cubic_disc(mon.coeff(1), mon.coeff(0)));
}

TEST_CASE("cohn hat map", "[cohn]") {
    // h(u) = u - u0 has J-root u0 / (u0 - 27)
    BigRat u0(33075, 2197);
    auto hat = cohn_hat(RatPoly(std::vector<BigRat>{-u0, BigRat(1)}));
    REQUIRE(hat.degree() == 1);
    CHECK(hat(u0 / (u0 - 27)) == 0);
    // constant h maps to a constant
    CHECK(cohn_hat(RatPoly{5}).degree() == 0);
}

TEST_CASE("cohn pipeline on synthetic input", "[cohn]") {
    // lambda^2 - g2 has disc 4 g2 -> C = J, same as m = 2
    auto r = cohn_polynomial(wrap(2, Component::I, "lambda^2 - g2"));
    CHECK(r.C_primitive == P("J"));
    // a pure-g3 disc means a J = 1 zero, reported through beta
    auto s = cohn_polynomial(wrap(2, Component::I, "lambda^3 - g3"));
    CHECK(s.beta == 2);
    CHECK(s.beta_nonzero());
}

TEST_CASE("cohn degrees", "[cohn][slow]") {
    for (int m = 2; m <= 8; ++m) {
        auto r = cohn_polynomial(m, Component::I);
        INFO("I m=" << m << " C=" << to_string(r.C_primitive));
        if (r.d >= 2) CHECK(r.weight == long(r.d) * (r.d - 1));
        CHECK(r.degree == r.expected_degree);
        CHECK(r.beta == 0);
        CHECK((r.alpha >= 1) == (r.d % 3 == 2));
        if (m <= 6) CHECK(r.C(BigRat(1)) != 0);
    }
    for (int m = 1; m <= 6; ++m) {
        auto r = cohn_polynomial(m, Component::II);
        INFO("II m=" << m << " C=" << to_string(r.C_primitive));
        CHECK(r.weight == long(r.d) * (r.d - 1));
        CHECK(r.degree == r.expected_degree);
        CHECK(r.beta == 0);
        if (m >= 2) CHECK(r.degree != r.expected_degree_literal);
    }
}

TEST_CASE("special fibres of the spectral polynomials", "[cohn]") {
    const MPoly zero;
    for (int m = 2; m <= 10; ++m) {
        for (Component K : {Component::I, Component::II}) {
            auto F = spectral_F(m, K);
            const int d = F.poly.degree();
            INFO("m=" << m << " K=" << to_string(K));
            // g2 = 0: lambda^k P(lambda^3) with k = d mod 3
            auto at0 = F.poly.to_mpoly().substitute({{Var::g2, zero}});
            for (const auto& t : at0.terms()) CHECK(int(t.mono[Var::lambda]) % 3 == d % 3);
            // g3 = 0: lambda^k P(lambda^2) with k = d mod 2
            auto at1 = F.poly.to_mpoly().substitute({{Var::g3, zero}});
            for (const auto& t : at1.terms()) CHECK(int(t.mono[Var::lambda]) % 2 == d % 2);
        }
    }
}
