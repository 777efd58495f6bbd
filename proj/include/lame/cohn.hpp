#pragma once

// Cohn polynomials: the lambda-discriminant of a spectral polynomial, written
// as a polynomial in the absolute invariant J = g2^3 / (g2^3 - 27 g3^2).

#include <string>
#include <utility>
#include <vector>

#include "lame/algebra.hpp"
#include "lame/component.hpp"
#include "lame/spectral.hpp"
#include "lame/topology.hpp"

namespace lame {

struct CohnFactor {
    RatPoly h;     ///< squarefree factor of R(u, 1)
    int multiplicity = 0;
    RatPoly hat;   ///< image in J
};

struct CohnResult {
    int m = 0;
    Component K = Component::I;
    int d = 0;
    MPoly disc;              ///< disc of the monic spectral polynomial, in g2, g3
    long weight = 0;         ///< weighted degree of disc
    int alpha = 0, beta = 0, c = 0;
    MPoly R;                 ///< reduced part in u = g2^3, v = g3^2
    int T = 0;               ///< degree of R in (u, v)
    std::vector<CohnFactor> factors;
    RatPoly C;               ///< monic, in J
    MPoly C_primitive;       ///< integer-primitive form of C
    int degree = 0;
    int expected_degree = 0;          ///< formula value (proof version for II)
    int expected_degree_literal = 0;  ///< d(d-1)/2 for II
    bool beta_nonzero() const { return beta > 0; }
    bool ok() const { return degree == expected_degree; }
};

inline MPoly delta_poly() { return parse_mpoly("g2^3 - 27g3^2"); }

/// (J - 1)^t h(27 J / (J - 1)) / 27^t for h of degree t.
inline RatPoly cohn_hat(const RatPoly& h) {
    const int t = h.degree();
    const RatPoly J{0, 1}, Jm1{-1, 1};
    std::vector<RatPoly> jm1_pow{RatPoly{1}};
    for (int k = 1; k <= t; ++k) jm1_pow.push_back(jm1_pow.back() * Jm1);
    RatPoly out;
    RatPoly jk{1};
    BigRat scale(1);
    for (int k = 0; k <= t; ++k) {
        out = out + RatPoly::constant(h.coeff(k) * scale) * jk * jm1_pow[std::size_t(t - k)];
        jk = jk * J;
        scale *= 27;
    }
    BigRat norm(1);
    for (int k = 0; k < t; ++k) norm *= 27;
    return out * RatPoly::constant(1 / norm);
}

/// Runs the pipeline on a monic spectral polynomial of lambda-degree d >= 2.
inline CohnResult cohn_polynomial(const SpectralPolynomial& F) {
    CohnResult r;
    r.m = F.m;
    r.K = F.component;
    r.d = F.poly.degree();
    const auto t = invariants(F.m, F.component);
    r.expected_degree = t.cohn_degree;
    r.expected_degree_literal = t.cohn_degree_literal;
    if (r.d < 2) {
        // a linear factor has no discriminant; its Cohn polynomial is 1
        r.C = RatPoly{1};
        r.C_primitive = MPoly(1);
        return r;
    }
    const UPoly f = F.poly.is_monic() ? F.poly : F.poly.monic();
    r.disc = discriminant(f);
    auto w = weighted_degree(r.disc, standard_weights());
    if (!w || *w != long(r.d) * (r.d - 1)) {
        throw StructureViolation("discriminant is not quasi-homogeneous of weight d(d-1)");
    }
    r.weight = *w;

    MPoly rest = r.disc;
    r.alpha = int(rest.terms().front().mono[Var::g2]);
    r.beta = int(rest.terms().front().mono[Var::g3]);
    for (const auto& term : rest.terms()) {
        r.alpha = std::min(r.alpha, int(term.mono[Var::g2]));
        r.beta = std::min(r.beta, int(term.mono[Var::g3]));
    }
    rest = rest.exact_div(X(Var::g2).pow(unsigned(r.alpha)) * X(Var::g3).pow(unsigned(r.beta)));
    const MPoly delta = delta_poly();
    while (auto q = rest.try_exact_div(delta)) {
        rest = *q;
        ++r.c;
    }

    std::vector<BigRat> ru;
    std::vector<Term> rt;
    for (const auto& term : rest.terms()) {
        const unsigned a = term.mono[Var::g2], b = term.mono[Var::g3];
        if (a % 3 != 0 || b % 2 != 0) throw StructureViolation("reduced discriminant is not a polynomial in g2^3, g3^2");
        const unsigned i = a / 3, j = b / 2;
        if (ru.size() <= i) ru.resize(i + 1, BigRat(0));
        ru[i] += term.coef;
        rt.push_back({Monomial::of(Var::u, i) * Monomial::of(Var::v, j), term.coef});
        if (r.T == 0) r.T = int(i + j);
        if (int(i + j) != r.T) throw StructureViolation("reduced discriminant is not homogeneous in u, v");
    }
    r.R = MPoly::from_terms(std::move(rt));
    const RatPoly R1(std::move(ru));
    if (R1.degree() != r.T) throw StructureViolation("reduced discriminant has a factor of v");

    RatPoly C{1};
    for (int k = 0; k < (r.alpha + 2) / 3; ++k) C = C * RatPoly{0, 1};
    if (R1.degree() > 0) {
        for (auto& [h, mult] : yun_squarefree(R1)) {
            if (h.degree() == 0) continue;
            CohnFactor fac{h, mult, cohn_hat(h)};
            for (int k = 0; k < mult; ++k) C = C * fac.hat;
            r.factors.push_back(std::move(fac));
        }
    }
    r.C = C.monic();
    r.degree = r.C.degree();
    r.C_primitive = primitive_normalize(r.C.to_mpoly(Var::J), Var::J);
    return r;
}

inline CohnResult cohn_polynomial(int m, Component K) { return cohn_polynomial(spectral_F(m, K)); }

}  // namespace lame
