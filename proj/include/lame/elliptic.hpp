#pragma once

// Lattice data for the lattice Z + tau Z from q-series: invariants g2, g3,
// the roots e_j, quasi-periods and J. Also slow verification paths for the
// Weierstrass functions by summation over lattice rows.

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "lame/errors.hpp"
#include "lame/numeric.hpp"

namespace lame {

template <class Cplx>
using RealOf = decltype(abs(std::declval<Cplx>()));

template <class Real>
Real pi_of() {
    return boost::math::constants::pi<Real>();
}

template <class Cplx>
Cplx imag_unit() {
    using Real = RealOf<Cplx>;
    return Cplx(Real(0), Real(1));
}

template <class Cplx>
struct LatticeData {
    Cplx tau, q;
    Cplx g2, g3;
    /// e1 = P(1/2), e2 = P(tau/2), e3 = P((1+tau)/2), continuous in tau.
    std::array<Cplx, 3> e;
    Cplx eta1;     ///< zeta(z + 1) - zeta(z)
    Cplx eta_tau;  ///< zeta(z + tau) - zeta(z)
    Cplx J;

    /// Roots sorted by real part, then imaginary part.
    std::array<Cplx, 3> e_sorted() const {
        auto s = e;
        std::sort(s.begin(), s.end(), [](const Cplx& a, const Cplx& b) {
            return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
        });
        return s;
    }
};

/// Normalized Eisenstein series E2, E4, E6 from the Lambert series
/// sum n^{k-1} q^n / (1 - q^n), summed until terms fall below the working epsilon.
template <class Cplx>
std::array<Cplx, 3> eisenstein_E246(const Cplx& q) {
    using Real = RealOf<Cplx>;
    const Real eps = machine_epsilon<Real>() / 16;
    Cplx s1(Real(0)), s3(Real(0)), s5(Real(0));
    Cplx qn = q;
    const Real aq = abs(q);
    Real mag = aq;
    for (int n = 1; n < 100000; ++n) {
        const Cplx lam = qn / (Cplx(Real(1)) - qn);
        const Real rn(n);
        s1 += rn * lam;
        s3 += rn * rn * rn * lam;
        s5 += rn * rn * rn * rn * rn * lam;
        if (rn * rn * rn * rn * rn * mag < eps && n > 2) break;
        qn *= q;
        mag *= aq;
    }
    return {Cplx(Real(1)) - Real(24) * s1, Cplx(Real(1)) + Real(240) * s3, Cplx(Real(1)) - Real(504) * s5};
}

/// Theta constants theta2, theta3, theta4 at nome exp(i pi tau).
template <class Cplx>
std::array<Cplx, 3> theta_constants(const Cplx& tau) {
    using Real = RealOf<Cplx>;
    const Real pi = pi_of<Real>();
    const Cplx I = imag_unit<Cplx>();
    const Real eps = machine_epsilon<Real>() / 16;
    Cplx t2(Real(0)), t3(Real(1)), t4(Real(1));
    for (int n = 0; n < 100000; ++n) {
        // p^{n(n+1)} and p^{n^2}
        const Cplx a = exp(I * pi * tau * Real(n * (n + 1)));
        t2 += a;
        if (n >= 1) {
            const Cplx b = exp(I * pi * tau * Real(n * n));
            t3 += Real(2) * b;
            t4 += (n % 2 ? Real(-2) : Real(2)) * b;
            if (abs(b) < eps && abs(a) < eps) break;
        }
    }
    t2 *= Real(2) * exp(I * pi * tau / Real(4));
    return {t2, t3, t4};
}

/// g2^3 - 27 g3^2 = (2 pi)^12 q prod (1 - q^n)^24.
template <class Cplx>
Cplx discriminant_product(const Cplx& q) {
    using Real = RealOf<Cplx>;
    const Real eps = machine_epsilon<Real>() / 16;
    Cplx prod(Real(1)), qn = q;
    for (int n = 1; n < 100000 && abs(qn) >= eps; ++n) {
        prod *= Cplx(Real(1)) - qn;
        qn *= q;
    }
    const Cplx p2 = prod * prod, p4 = p2 * p2, p8 = p4 * p4;
    const Real tp = Real(2) * pi_of<Real>(), tp2 = tp * tp, tp4 = tp2 * tp2;
    return tp4 * tp4 * tp4 * q * p8 * p8 * p8;
}

/// Sign s in eta1 * tau - eta_tau = 2 pi i s, fixed once from the row-summed zeta.
int legendre_sign();

template <class Cplx>
LatticeData<Cplx> lattice_from_tau(const Cplx& tau) {
    using Real = RealOf<Cplx>;
    if (!(tau.imag() > Real(0.05))) throw ImTooSmall("Im tau must exceed 0.05");
    const Real pi = pi_of<Real>();
    const Cplx I = imag_unit<Cplx>();
    LatticeData<Cplx> L;
    L.tau = tau;
    L.q = exp(Real(2) * pi * I * tau);
    const auto E = eisenstein_E246(L.q);
    const Real pi2 = pi * pi;
    L.g2 = Real(4) * pi2 * pi2 / Real(3) * E[1];
    L.g3 = Real(8) * pi2 * pi2 * pi2 / Real(27) * E[2];
    L.eta1 = pi2 / Real(3) * E[0];
    L.eta_tau = tau * L.eta1 - Real(2) * pi * I * Real(legendre_sign());
    const auto th = theta_constants(tau);
    const Cplx a2 = th[0] * th[0] * th[0] * th[0];
    const Cplx a3 = th[1] * th[1] * th[1] * th[1];
    const Cplx a4 = th[2] * th[2] * th[2] * th[2];
    L.e = {pi2 / Real(3) * (a3 + a4), -pi2 / Real(3) * (a2 + a3), pi2 / Real(3) * (a2 - a4)};
    // g2^3 - 27 g3^2 from the product formula, free of cancellation near the cusp
    L.J = L.g2 * L.g2 * L.g2 / discriminant_product(L.q);
    return L;
}

// ---------------------------------------------------------------------------
// Verification paths: Weierstrass functions by summing lattice rows. Each row
// n contributes pi^2 csc^2(pi (z + n tau)); the rows converge geometrically.

template <class Cplx>
Cplx wp_rows(const Cplx& z, const LatticeData<Cplx>& L, int rows = 40) {
    using Real = RealOf<Cplx>;
    const Real pi = pi_of<Real>();
    Cplx s(Real(0));
    for (int n = -rows; n <= rows; ++n) {
        const Cplx sn = sin(pi * (z + Real(n) * L.tau));
        s += pi * pi / (sn * sn);
    }
    return s - L.eta1;
}

template <class Cplx>
Cplx wp_prime_rows(const Cplx& z, const LatticeData<Cplx>& L, int rows = 40) {
    using Real = RealOf<Cplx>;
    const Real pi = pi_of<Real>();
    Cplx s(Real(0));
    for (int n = -rows; n <= rows; ++n) {
        const Cplx w = pi * (z + Real(n) * L.tau);
        const Cplx sn = sin(w);
        s += Real(-2) * pi * pi * pi * cos(w) / (sn * sn * sn);
    }
    return s;
}

/// zeta(z) = eta1 z + pi sum_n cot(pi (z + n tau)), rows -rows..rows.
template <class Cplx>
Cplx zeta_rows(const Cplx& z, const Cplx& tau, const Cplx& eta1, int rows = 40) {
    using Real = RealOf<Cplx>;
    const Real pi = pi_of<Real>();
    Cplx s(Real(0));
    for (int n = -rows; n <= rows; ++n) {
        const Cplx w = pi * (z + Real(n) * tau);
        s += cos(w) / sin(w);
    }
    return eta1 * z + pi * s;
}

/// Brute symmetric sum over |m|, |n| <= R of the lattice Z + tau Z.
template <class Cplx>
Cplx wp_brute(const Cplx& z, const Cplx& tau, int R = 40) {
    using Real = RealOf<Cplx>;
    Cplx s = Cplx(Real(1)) / (z * z);
    for (int m = -R; m <= R; ++m) {
        for (int n = -R; n <= R; ++n) {
            if (m == 0 && n == 0) continue;
            const Cplx w = Real(m) + Real(n) * tau;
            s += Cplx(Real(1)) / ((z - w) * (z - w)) - Cplx(Real(1)) / (w * w);
        }
    }
    return s;
}

inline int legendre_sign() {
    static const int sign = [] {
        using C = std::complex<double>;
        const C tau(0.1, 1.1), z(0.23, 0.17);
        const auto E = eisenstein_E246(std::exp(2.0 * std::numbers::pi * C(0, 1) * tau));
        const C eta1 = std::numbers::pi * std::numbers::pi / 3.0 * E[0];
        // truncated row sums keep the boundary rows, which carry the 2 pi i
        const C eta_tau = zeta_rows(z + tau, tau, eta1, 30) - zeta_rows(z, tau, eta1, 30);
        const C s = (eta1 * tau - eta_tau) / (2.0 * std::numbers::pi * C(0, 1));
        return s.real() > 0 ? 1 : -1;
    }();
    return sign;
}

template <class Cplx>
struct IdentityReport {
    RealOf<Cplx> max_wp_residual = 0;  ///< max |P'^2 - 4P^3 + g2 P + g3|
    RealOf<Cplx> legendre_residual = 0;  ///< |eta1 tau - eta_tau(direct) - 2 pi i s|
};

/// Checks the differential equation of P at sample points and the Legendre
/// relation with eta_tau computed directly from zeta.
template <class Cplx>
IdentityReport<Cplx> identity_residuals(const LatticeData<Cplx>& L, const std::vector<Cplx>& zs) {
    using Real = RealOf<Cplx>;
    IdentityReport<Cplx> r;
    for (const auto& z : zs) {
        const Cplx p = wp_rows(z, L), dp = wp_prime_rows(z, L);
        const Real res = abs(dp * dp - Real(4) * p * p * p + L.g2 * p + L.g3);
        if (res > r.max_wp_residual) r.max_wp_residual = res;
    }
    const Cplx z0 = zs.empty() ? Cplx(Real(0.23), Real(0.17)) : zs.front();
    const Cplx direct = zeta_rows(z0 + L.tau, L.tau, L.eta1) - zeta_rows(z0, L.tau, L.eta1);
    const Real pi = pi_of<Real>();
    r.legendre_residual = abs(L.eta1 * L.tau - direct - Real(2) * pi * imag_unit<Cplx>() * Real(legendre_sign()));
    return r;
}

}  // namespace lame
