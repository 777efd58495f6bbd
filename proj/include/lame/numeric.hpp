#pragma once

// Floating-point helpers shared by the numeric checks. `Real` is double or a
// Boost.Multiprecision float, `Cplx` the matching complex type.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <type_traits>
#include <vector>

#include "lame/algebra/mpoly.hpp"

namespace lame {

using Extended = boost::multiprecision::cpp_bin_float_50;
using ExtendedComplex = boost::multiprecision::cpp_complex_50;

template <class Real>
Real to_real(const BigRat& r) {
    if constexpr (std::is_same_v<Real, double>) {
        return r.get_d();
    } else {
        return Real(r.get_num().get_str()) / Real(r.get_den().get_str());
    }
}

template <class Real>
Real machine_epsilon() {
    return std::numeric_limits<Real>::epsilon();
}

/// All complex roots of sum coeffs[k] z^k by Laguerre's method with
/// deflation, each polished by Newton steps on the undeflated polynomial.
template <class Cplx>
std::vector<Cplx> polynomial_roots(const std::vector<Cplx>& coeffs) {
    using std::abs;
    using std::sqrt;
    using Real = decltype(abs(coeffs[0]));
    std::vector<Cplx> a = coeffs;
    while (!a.empty() && abs(a.back()) == Real(0)) a.pop_back();
    std::vector<Cplx> roots;
    if (a.size() < 2) return roots;
    const Real eps = machine_epsilon<Real>();
    auto laguerre = [&](const std::vector<Cplx>& p, Cplx x) {
        const int n = int(p.size()) - 1;
        const Real frac[] = {Real(0.5), Real(0.25), Real(0.75), Real(0.13), Real(0.38), Real(0.62), Real(0.88), Real(1)};
        for (int iter = 1; iter <= 400; ++iter) {
            Cplx b = p[std::size_t(n)], d(0), f(0);
            Real err = abs(b), abx = abs(x);
            for (int j = n - 1; j >= 0; --j) {
                f = x * f + d;
                d = x * d + b;
                b = x * b + p[std::size_t(j)];
                err = abs(b) + abx * err;
            }
            if (abs(b) <= err * eps) return x;
            Cplx g = d / b;
            Cplx g2 = g * g;
            Cplx h = g2 - Real(2) * f / b;
            Cplx sq = sqrt(Cplx(Real(n - 1)) * (Cplx(Real(n)) * h - g2));
            Cplx gp = g + sq, gm = g - sq;
            if (abs(gp) < abs(gm)) gp = gm;
            Cplx dx = abs(gp) > Real(0) ? Cplx(Real(n)) / gp : Cplx(Real(1) + abx);
            Cplx x1 = x - dx;
            if (x1 == x) return x;
            if (iter % 10 != 0) {
                x = x1;
            } else {
                x = x - frac[(iter / 10) % 8] * dx;
            }
        }
        return x;
    };
    std::vector<Cplx> work = a;
    for (std::size_t deg = a.size() - 1; deg >= 1; --deg) {
        Cplx x = laguerre(work, Cplx(Real(0)));
        roots.push_back(x);
        // synthetic division by (z - x)
        Cplx carry = work[deg];
        std::vector<Cplx> q(deg);
        for (std::size_t j = deg; j-- > 0;) {
            q[j] = carry;
            carry = work[j] + carry * x;
        }
        work = std::move(q);
        if (deg == 1) break;
    }
    for (auto& r : roots) {
        for (int k = 0; k < 8; ++k) {
            Cplx pv(0), dv(0);
            for (std::size_t j = a.size(); j-- > 0;) {
                dv = dv * r + pv;
                pv = pv * r + a[j];
            }
            if (abs(dv) == Real(0)) break;
            Cplx step = pv / dv;
            r -= step;
            if (abs(step) <= eps * abs(r)) break;
        }
    }
    return roots;
}

}  // namespace lame
