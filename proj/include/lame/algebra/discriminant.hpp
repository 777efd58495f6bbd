#pragma once

#include "lame/algebra/matrix.hpp"
#include "lame/algebra/upoly.hpp"

namespace lame {

/// Sylvester matrix of f (degree p) and g (degree q), size p + q.
inline PolyMatrix sylvester_matrix(const UPoly& f, const UPoly& g) {
    const int p = f.degree(), q = g.degree();
    const std::size_t n = std::size_t(p + q);
    PolyMatrix s(n);
    for (int r = 0; r < q; ++r) {
        for (int k = 0; k <= p; ++k) s(std::size_t(r), std::size_t(r + k)) = f.coeff(p - k);
    }
    for (int r = 0; r < p; ++r) {
        for (int k = 0; k <= q; ++k) s(std::size_t(q + r), std::size_t(r + k)) = g.coeff(q - k);
    }
    return s;
}

inline MPoly resultant(const UPoly& f, const UPoly& g) {
    if (f.var() != g.var()) throw InvalidArgument("resultant of polynomials in different variables");
    if (f.is_zero() || g.is_zero()) return MPoly();
    return bareiss_det(sylvester_matrix(f, g));
}

/// disc(f) = (-1)^{d(d-1)/2} Res(f, f') / lc(f).
inline MPoly discriminant(const UPoly& f) {
    const int d = f.degree();
    if (d < 2) throw DegreeTooSmall("discriminant needs degree >= 2, got " + std::to_string(d));
    MPoly res = resultant(f, f.derivative());
    if ((d * (d - 1) / 2) % 2 != 0) res = -res;
    return res.exact_div(f.lc());
}

}  // namespace lame
