#pragma once

#include <random>
#include <vector>

#include "lame/algebra.hpp"

namespace lame::testing {

/// Small random polynomial in the given variables.
inline MPoly random_poly(std::mt19937_64& rng, const std::vector<Var>& vars, int max_terms = 4,
                         int max_exp = 2, int max_coef = 5) {
    std::uniform_int_distribution<int> nterms(0, max_terms), exp(0, max_exp), coef(-max_coef, max_coef),
        den(1, 3);
    std::vector<Term> ts;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Monomial m;
        for (Var v : vars) m.set(v, unsigned(exp(rng)));
        BigRat c(coef(rng), den(rng));
        c.canonicalize();
        ts.push_back({m, c});
    }
    return MPoly::from_terms(std::move(ts));
}

/// Determinant by cofactor expansion along the first row.
inline MPoly cofactor_det(const PolyMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return MPoly(1);
    if (n == 1) return m(0, 0);
    MPoly acc;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c).is_zero()) continue;
        PolyMatrix minor(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            for (std::size_t j = 0, jj = 0; j < n; ++j) {
                if (j == c) continue;
                minor(i - 1, jj++) = m(i, j);
            }
        }
        MPoly term = m(0, c) * cofactor_det(minor);
        acc = (c % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

/// det(var I - M) by cofactor expansion.
inline MPoly cofactor_charpoly(const PolyMatrix& m, Var var) {
    PolyMatrix a(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) a(i, j) = (i == j ? X(var) : MPoly()) - m(i, j);
    }
    return cofactor_det(a);
}

inline MPoly P(const char* s) { return parse_mpoly(s); }

}  // namespace lame::testing
