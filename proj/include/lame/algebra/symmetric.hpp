#pragma once

// Reduction of symmetric polynomials in the roots e1, e2, e3 of
// 4x^3 - g2 x - g3 to polynomials in g2, g3.

#include <vector>

#include "lame/algebra/mpoly.hpp"

namespace lame {

namespace detail {

inline bool invariant_under(const MPoly& f, Var p, Var q) {
    return f.substitute({{p, X(q)}, {q, X(p)}}) == f;
}

inline MPoly reduce_on_plane(MPoly rem) {
    const MPoly e1 = X(Var::e1), e2 = X(Var::e2);
    // On the plane e1 + e2 + e3 = 0 the symmetric functions are generated by
    // s2 = -(e1^2 + e1 e2 + e2^2) and s3 = -e1 e2 (e1 + e2).
    const MPoly s2 = -(e1 * e1 + e1 * e2 + e2 * e2);
    const MPoly s3 = -(e1 * e2 * (e1 + e2));
    const MPoly sigma2 = MPoly(BigRat(-1, 4)) * X(Var::g2);
    const MPoly sigma3 = MPoly(BigRat(1, 4)) * X(Var::g3);
    std::vector<MPoly> s2p{MPoly(1)}, s3p{MPoly(1)}, g2p{MPoly(1)}, g3p{MPoly(1)};
    auto power = [](std::vector<MPoly>& cache, const MPoly& base, unsigned k) -> const MPoly& {
        while (cache.size() <= k) cache.push_back(cache.back() * base);
        return cache[k];
    };

    std::vector<Term> out;
    while (!rem.is_zero()) {
        // Leading term in e1, e2 only; the remaining variables ride along.
        const Term& lt = rem.leading_term();
        unsigned p = lt.mono[Var::e1], q = lt.mono[Var::e2];
        if (p < 2 * q || (p - 2 * q) % 2 != 0) {
            throw NotSymmetric("leading term is not that of a symmetric function");
        }
        unsigned b = (p - 2 * q) / 2, c = q;
        Monomial rest = lt.mono;
        rest.set(Var::e1, 0);
        rest.set(Var::e2, 0);
        // leading coefficient of s2^b s3^c is (-1)^(b+c)
        BigRat coef = ((b + c) % 2 == 0) ? BigRat(lt.coef) : BigRat(-lt.coef);
        MPoly basis = power(s2p, s2, b) * power(s3p, s3, c);
        rem = rem - basis.mul_term(coef, rest);
        MPoly image = (power(g2p, sigma2, b) * power(g3p, sigma3, c)).mul_term(coef, rest);
        for (const auto& t : image.terms()) out.push_back(t);
    }
    return MPoly::from_terms(std::move(out));
}

}  // namespace detail

/// Rewrites a symmetric polynomial in e1, e2, e3 (other variables are carried
/// along as coefficients) in terms of g2, g3, using e1 + e2 + e3 = 0,
/// e1e2 + e1e3 + e2e3 = -g2/4 and e1e2e3 = g3/4.
inline MPoly symmetric_reduce(const MPoly& f) {
    if (!detail::invariant_under(f, Var::e1, Var::e2) || !detail::invariant_under(f, Var::e2, Var::e3)) {
        throw NotSymmetric("polynomial is not invariant under permutations of e1, e2, e3");
    }
    return detail::reduce_on_plane(f.substitute(Var::e3, -X(Var::e1) - X(Var::e2)));
}

/// Same reduction for a polynomial already written in e1, e2 with
/// e3 = -e1 - e2 eliminated. Invariance is checked on the plane.
inline MPoly symmetric_reduce_traceless(const MPoly& f) {
    if (f.contains(Var::e3)) throw InvalidArgument("e3 must be eliminated");
    MPoly swapped13 = f.substitute(Var::e1, -X(Var::e1) - X(Var::e2));
    if (!detail::invariant_under(f, Var::e1, Var::e2) || !(swapped13 == f)) {
        throw NotSymmetric("polynomial is not invariant under permutations of e1, e2, -e1-e2");
    }
    return detail::reduce_on_plane(f);
}

}  // namespace lame
