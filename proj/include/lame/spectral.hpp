#pragma once

// Spectral polynomials F_m^K(lambda, g2, g3) and their Legendre-frame
// counterparts H_m^j(B, a).

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lame/algebra.hpp"
#include "lame/component.hpp"
#include "lame/numeric.hpp"
#include "lame/operators.hpp"

namespace lame {

struct SpectralPolynomial {
    int m = 0;
    Component component = Component::I;
    UPoly poly;       ///< monic in lambda over Q[g2, g3]
    MPoly primitive;  ///< integer-primitive form
};

struct LegendrePolynomial {
    int m = 0;
    int j = 0;
    RootSubset subset;
    UPoly poly;  ///< monic in B over Q[a]
    MPoly primitive;
};

/// Root subsets (of e1, e2, e3) whose Lamé functions make up component II.
inline std::vector<RootSubset> component_II_subsets(int m) {
    if (m % 2 == 1) return {RootSubset::of({0}), RootSubset::of({1}), RootSubset::of({2})};
    return {RootSubset::of({0, 1}), RootSubset::of({0, 2}), RootSubset::of({1, 2})};
}

inline SpectralPolynomial spectral_F(int m, Component k) {
    require_component(m, k);
    SpectralPolynomial out;
    out.m = m;
    out.component = k;
    if (k == Component::I) {
        RootSubset s = m % 2 == 0 ? RootSubset::none() : RootSubset::all();
        auto op = build_operator(CubicFrame::weierstrass_g(), s, m);
        out.poly = char_poly(op.matrix, Var::lambda);
    } else {
        const CubicFrame frame = CubicFrame::weierstrass_e();
        MPoly product(1);
        for (RootSubset s : component_II_subsets(m)) {
            product *= char_poly(build_operator(frame, s, m).matrix, Var::lambda).to_mpoly();
        }
        out.poly = UPoly::from_mpoly(symmetric_reduce_traceless(product), Var::lambda);
    }
    out.primitive = primitive_normalize(out.poly.to_mpoly(), Var::lambda);
    return out;
}

inline LegendrePolynomial spectral_H(int m, int j, LegendreLabeling labeling = LegendreLabeling::tables) {
    auto subsets = legendre_component_subsets(m, labeling);
    auto it = subsets.find(j);
    if (it == subsets.end() || it->second.size() > m) {
        throw ComponentAbsent("no Legendre component j = " + std::to_string(j) + " for m = " + std::to_string(m));
    }
    LegendrePolynomial out;
    out.m = m;
    out.j = j;
    out.subset = it->second;
    auto op = build_operator(CubicFrame::legendre(), out.subset, m);
    out.poly = char_poly(op.matrix, Var::B);
    out.primitive = primitive_normalize(out.poly.to_mpoly(), Var::B);
    return out;
}

/// Maps (B, a) to (lambda, g2, g3) by moving the roots 0, 1, a to a traceless triple.
struct CoverMaps {
    MPoly R1, R2, R3;
    MPoly psi_num, psi_den;  ///< J = psi_num / psi_den

    std::vector<std::pair<Var, MPoly>> substitution() const {
        return {{Var::lambda, R1}, {Var::g2, R2}, {Var::g3, R3}};
    }
};

inline CoverMaps cover_maps(int m) {
    CoverMaps c;
    c.R1 = X(Var::B) + MPoly(BigRat(long(m) * (m + 1), 3)) * (X(Var::a) + 1);
    c.R2 = parse_mpoly("4/3 (a^2 - a + 1)");
    c.R3 = parse_mpoly("8/27 (a^3 - 3/2 a^2 - 3/2 a + 1)");
    c.psi_num = parse_mpoly("4 (a^2 - a + 1)^3");
    c.psi_den = parse_mpoly("27 a^2 (1 - a)^2");
    return c;
}

struct CoverReport {
    int m = 0;
    bool has_I = false, has_II = false;
    MPoly diff_I, diff_II;  ///< F o R minus the Legendre side; zero when the identity holds
    bool ok() const { return diff_I.is_zero() && diff_II.is_zero(); }
};

/// Checks F^I o R = H^0 and F^II o R = H^1 H^2 H^3 exactly.
inline CoverReport verify_cover_identity(int m) {
    CoverReport rep;
    rep.m = m;
    auto subs = cover_maps(m).substitution();
    if (component_exists(m, Component::I)) {
        rep.has_I = true;
        MPoly lhs = spectral_F(m, Component::I).poly.to_mpoly().substitute(subs);
        rep.diff_I = lhs - spectral_H(m, 0).poly.to_mpoly();
    }
    if (component_exists(m, Component::II)) {
        rep.has_II = true;
        MPoly lhs = spectral_F(m, Component::II).poly.to_mpoly().substitute(subs);
        MPoly rhs(1);
        for (int j = 1; j <= 3; ++j) rhs *= spectral_H(m, j).poly.to_mpoly();
        rep.diff_II = lhs - rhs;
    }
    return rep;
}

inline void require_cover_identity(int m) {
    auto rep = verify_cover_identity(m);
    if (!rep.diff_I.is_zero()) throw IdentityFailed("component I difference: " + to_string(rep.diff_I));
    if (!rep.diff_II.is_zero()) throw IdentityFailed("component II difference: " + to_string(rep.diff_II));
}

/// Component II recovered from F o R = H^1 H^2 H^3 by solving for the
/// coefficients of a monic quasi-homogeneous F of weight d.
inline UPoly spectral_F_II_by_pullback(int m) {
    const int d = degree_d(m, Component::II);
    const CoverMaps c = cover_maps(m);
    MPoly target(1);
    for (int j = 1; j <= 3; ++j) target *= spectral_H(m, j).poly.to_mpoly();

    std::vector<MPoly> p1{MPoly(1)}, p2{MPoly(1)}, p3{MPoly(1)};
    auto pw = [](std::vector<MPoly>& cache, const MPoly& base, int k) -> const MPoly& {
        while (int(cache.size()) <= k) cache.push_back(cache.back() * base);
        return cache[std::size_t(k)];
    };
    struct Unknown {
        int i, b, c;
    };
    std::vector<Unknown> unknowns;
    std::vector<MPoly> images;
    for (int cc = 0; 3 * cc <= d; ++cc) {
        for (int b = 0; 2 * b + 3 * cc <= d; ++b) {
            int i = d - 2 * b - 3 * cc;
            if (i == d) continue;
            unknowns.push_back({i, b, cc});
            images.push_back(pw(p1, c.R1, i) * pw(p2, c.R2, b) * pw(p3, c.R3, cc));
        }
    }
    MPoly rhs = target - pw(p1, c.R1, d);
    // One equation per (B, a) monomial.
    std::map<std::vector<unsigned>, std::size_t> row_of;
    auto key = [](const Monomial& mono) { return std::vector<unsigned>{mono[Var::B], mono[Var::a]}; };
    auto collect = [&](const MPoly& p) {
        for (const auto& t : p.terms()) row_of.emplace(key(t.mono), row_of.size());
    };
    for (const auto& im : images) collect(im);
    collect(rhs);
    RatMatrix A(row_of.size(), std::vector<BigRat>(unknowns.size(), BigRat(0)));
    std::vector<BigRat> b(row_of.size(), BigRat(0));
    for (std::size_t u = 0; u < images.size(); ++u) {
        for (const auto& t : images[u].terms()) A[row_of[key(t.mono)]][u] = t.coef;
    }
    for (const auto& t : rhs.terms()) b[row_of[key(t.mono)]] = t.coef;
    auto sol = solve_unique(A, b);
    if (!sol) throw IdentityFailed("no unique quasi-homogeneous pullback solution for m = " + std::to_string(m));
    MPoly F = X(Var::lambda).pow(unsigned(d));
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
        Monomial mono;
        mono.set(Var::lambda, unsigned(unknowns[u].i));
        mono.set(Var::g2, unsigned(unknowns[u].b));
        mono.set(Var::g3, unsigned(unknowns[u].c));
        F += MPoly::term((*sol)[u], mono);
    }
    return UPoly::from_mpoly(F, Var::lambda);
}

struct S3Report {
    int m = 0, j = 0;
    /// Component index of the image under (B, a) -> (-B - m(m+1), 1 - a), or -1 if none matches.
    int image_flip = -1;
    /// Component index of the image under (B, a) -> (B/a, 1/a) after clearing a^D, or -1.
    int image_inversion = -1;
    int sign_flip = 0, sign_inversion = 0;  ///< image = sign * H^image
    bool ok() const { return image_flip >= 0 && image_inversion >= 0; }
};

/// Applies the two generators of the S3 action on the Legendre family to H^j.
inline S3Report s3_invariance_check(int m, int j) {
    S3Report rep;
    rep.m = m;
    rep.j = j;
    std::map<int, MPoly> family;
    for (auto [idx, subset] : legendre_component_subsets(m)) {
        if (subset.size() <= m) family[idx] = spectral_H(m, idx).poly.to_mpoly();
    }
    if (!family.count(j)) throw ComponentAbsent("no Legendre component j = " + std::to_string(j));
    const MPoly& h = family[j];
    const int D = h.degree_in(Var::B);

    MPoly flipped = h.substitute({{Var::B, -X(Var::B) - MPoly(long(m) * (m + 1))}, {Var::a, MPoly(1) - X(Var::a)}});
    std::vector<Term> inv_terms;
    bool homogeneous_ok = true;
    for (const auto& t : h.terms()) {
        int i = int(t.mono[Var::B]), k = int(t.mono[Var::a]);
        if (i + k > D) {
            homogeneous_ok = false;
            break;
        }
        Monomial mono = t.mono;
        mono.set(Var::a, unsigned(D - i - k));
        inv_terms.push_back({mono, t.coef});
    }
    MPoly inverted = MPoly::from_terms(std::move(inv_terms));

    auto identify = [&](const MPoly& img, int& index, int& sign) {
        for (const auto& [idx, p] : family) {
            if (img == p) {
                index = idx;
                sign = 1;
                return;
            }
            if (img == -p) {
                index = idx;
                sign = -1;
                return;
            }
        }
    };
    identify(flipped, rep.image_flip, rep.sign_flip);
    if (homogeneous_ok) identify(inverted, rep.image_inversion, rep.sign_inversion);
    return rep;
}

// ---------------------------------------------------------------------------
// Residual checks

namespace detail {

inline std::vector<std::vector<BigRat>> numeric_matrix(const PolyMatrix& m) {
    std::vector<std::vector<BigRat>> out(m.size(), std::vector<BigRat>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = m(i, j).constant_value();
    }
    return out;
}

inline RatPoly numeric_charpoly(const OperatorMatrix& op) {
    UPoly cp = char_poly(op.matrix, op.frame.eigen);
    std::vector<BigRat> cs;
    for (const auto& c : cp.coeffs()) cs.push_back(c.constant_value());
    return RatPoly(std::move(cs));
}

inline CubicFrame numeric_g_frame(const BigRat& g2, const BigRat& g3) {
    CubicFrame f = CubicFrame::weierstrass_g();
    f.P = f.P.substitute({{Var::g2, MPoly(g2)}, {Var::g3, MPoly(g3)}});
    return f;
}

inline void require_nonsingular(const BigRat& g2, const BigRat& g3) {
    if (sgn(BigRat(g2 * g2 * g2 - 27 * g3 * g3)) == 0) throw InvalidArgument("singular cubic: g2^3 - 27 g3^2 = 0");
}

}  // namespace detail

struct ResidualReport {
    int m = 0;
    RootSubset subset;
    std::vector<BigRat> eigenvalues;  ///< rational eigenvalues found
    std::vector<MPoly> eigenvectors;  ///< Q for each eigenvalue
    std::vector<MPoly> residuals;     ///< remainder of the Lamé equation for w = sqrt(W)
    bool has_rational_eigenvalue() const { return !eigenvalues.empty(); }
    bool all_zero() const {
        return std::all_of(residuals.begin(), residuals.end(), [](const MPoly& r) { return r.is_zero(); });
    }
};

/// For each rational eigenvalue of an operator with rational entries, rebuilds
/// w = Q * prod sqrt(x - t) and checks P w'' + P'/2 w' - (m(m+1)x + eigenvalue) w = 0
/// in the squared form P(2WW'' - W'^2) + P'WW' - 4(m(m+1)x + eigenvalue)W^2 with W = w^2.
inline ResidualReport lame_residual(const OperatorMatrix& op) {
    ResidualReport rep;
    rep.m = op.m;
    rep.subset = op.subset;
    const Var x = op.frame.var;
    auto M = detail::numeric_matrix(op.matrix);
    const std::size_t dim = M.size();

    MPoly root_part(1);
    if (op.frame.roots) {
        for (int i : op.subset.indices()) root_part *= X(x) - (*op.frame.roots)[std::size_t(i)];
    } else if (op.subset.size() == 3) {
        root_part = op.frame.P.scaled(BigRat(1, 4));
    }
    const MPoly& P = op.frame.P;
    const MPoly dP = P.derivative(x);
    const MPoly mx = MPoly(long(op.m) * (op.m + 1)) * X(x);

    for (const BigRat& lam : rational_roots(detail::numeric_charpoly(op))) {
        RatMatrix shifted = M;
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) shifted[i][j] = (i == j ? lam : BigRat(0)) - M[i][j];
        }
        auto kernel = nullspace(shifted, dim);
        if (kernel.empty()) throw IdentityFailed("eigenvalue without kernel vector");
        MPoly Q;
        for (std::size_t k = 0; k < dim; ++k) Q += MPoly::term(kernel[0][k], Monomial::of(x, unsigned(k)));
        MPoly W = Q * Q * root_part;
        MPoly dW = W.derivative(x), d2W = dW.derivative(x);
        MPoly res = P * (MPoly(2) * W * d2W - dW * dW) + dP * W * dW - MPoly(4) * (mx + MPoly(lam)) * W * W;
        rep.eigenvalues.push_back(lam);
        rep.eigenvectors.push_back(Q);
        rep.residuals.push_back(res);
    }
    return rep;
}

/// Weierstrass frame at rational (g2, g3); S must be empty or all roots.
inline ResidualReport lame_residual(int m, RootSubset s, const BigRat& g2, const BigRat& g3) {
    detail::require_nonsingular(g2, g3);
    return lame_residual(build_operator(detail::numeric_g_frame(g2, g3), s, m));
}

/// Frame with explicit rational roots e1, e2, e3.
inline ResidualReport lame_residual(int m, RootSubset s, const std::array<BigRat, 3>& e) {
    if (e[0] == e[1] || e[1] == e[2] || e[0] == e[2]) throw InvalidArgument("roots must be distinct");
    return lame_residual(build_operator(CubicFrame::from_roots({MPoly(e[0]), MPoly(e[1]), MPoly(e[2])}), s, m));
}

template <class Real>
struct BetheReport {
    int n = 0;
    int eigenvalues = 0;    ///< number of real eigenvalues processed
    Real max_residual = 0;  ///< over all eigenvalues and all zeros
    Real min_gap = 0;       ///< smallest distance between zeros of one Q (0 if n < 2)
};

/// Numerically extracts the zeros of Q for every eigenvalue at real distinct
/// rational roots e, and evaluates
/// 2 sum_{j != k} 1/(z_k - z_j) + sum_j (k_j + 1/2)/(z_k - e_j) at each zero.
template <class Real, class Cplx>
BetheReport<Real> bethe_residual(int m, RootSubset s, const std::array<BigRat, 3>& e) {
    using std::abs;
    using std::sqrt;
    if (e[0] == e[1] || e[1] == e[2] || e[0] == e[2]) throw InvalidArgument("roots must be distinct");
    auto op = build_operator(CubicFrame::from_roots({MPoly(e[0]), MPoly(e[1]), MPoly(e[2])}), s, m);
    BetheReport<Real> rep;
    rep.n = op.n;
    const std::size_t dim = std::size_t(op.n) + 1;
    const int bits = std::numeric_limits<Real>::digits + 16;
    BigRat width(1);
    width /= BigRat(BigInt(1) << bits);
    auto intervals = isolate_real_roots(detail::numeric_charpoly(op), width);
    auto Mq = detail::numeric_matrix(op.matrix);
    std::vector<std::vector<Real>> M(dim, std::vector<Real>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) M[i][j] = to_real<Real>(Mq[i][j]);
    }
    std::array<Real, 3> ev{to_real<Real>(e[0]), to_real<Real>(e[1]), to_real<Real>(e[2])};
    const Real gap_floor = sqrt(machine_epsilon<Real>());
    rep.min_gap = Real(-1);
    for (const auto& iv : intervals) {
        ++rep.eigenvalues;
        if (op.n == 0) continue;
        Real lam = to_real<Real>(BigRat((iv.lo + iv.hi) / 2));
        // Back-substitution through the Hessenberg rows, with q_n = 1.
        std::vector<Real> q(dim, Real(0));
        q[dim - 1] = Real(1);
        for (std::size_t r = dim - 1; r >= 1; --r) {
            Real acc = 0;
            for (std::size_t k = r; k < dim; ++k) acc += ((r == k ? lam : Real(0)) - M[r][k]) * q[k];
            q[r - 1] = acc / M[r][r - 1];
        }
        std::vector<Cplx> coeffs;
        for (const auto& v : q) coeffs.push_back(Cplx(v));
        auto zs = polynomial_roots(coeffs);
        std::vector<Real> zeta;
        for (const auto& z : zs) zeta.push_back(real(z));
        for (std::size_t k = 0; k < zeta.size(); ++k) {
            Real sum = 0;
            for (std::size_t j = 0; j < zeta.size(); ++j) {
                if (j == k) continue;
                Real gap = abs(zeta[k] - zeta[j]);
                if (gap < gap_floor) throw RootIsolationFailed("zeros of Q collide");
                if (rep.min_gap < Real(0) || gap < rep.min_gap) rep.min_gap = gap;
                sum += Real(2) / (zeta[k] - zeta[j]);
            }
            for (int j = 0; j < 3; ++j) {
                Real kj = s.contains(j) ? Real(1) : Real(0);
                sum += (kj + Real(0.5)) / (zeta[k] - ev[std::size_t(j)]);
            }
            Real r = abs(sum);
            // imaginary parts of the zeros count against the residual too
            Real im = abs(imag(zs[k]));
            if (im > r) r = im;
            if (r > rep.max_residual) rep.max_residual = r;
        }
    }
    if (rep.min_gap < Real(0)) rep.min_gap = 0;
    return rep;
}

struct SpectrumReport {
    int m = 0;
    int expected = 0;       ///< 2m + 1
    int real_distinct = 0;  ///< distinct real roots of F^I F^II
    int degree = 0;
    bool squarefree = false;
    double min_gap = 0;
    bool ok(double gap_tol = 1e-8) const {
        return real_distinct == expected && degree == expected && squarefree && min_gap > gap_tol;
    }
};

/// Counts the real roots of F^I F^II at rational (g2, g3) with positive discriminant.
inline SpectrumReport real_spectrum_check(int m, const BigRat& g2, const BigRat& g3) {
    detail::require_nonsingular(g2, g3);
    SpectrumReport rep;
    rep.m = m;
    rep.expected = 2 * m + 1;
    MPoly product(1);
    for (Component k : {Component::I, Component::II}) {
        if (component_exists(m, k)) product *= spectral_F(m, k).poly.to_mpoly();
    }
    MPoly at = product.substitute({{Var::g2, MPoly(g2)}, {Var::g3, MPoly(g3)}});
    RatPoly f = RatPoly::from_mpoly(at, Var::lambda);
    rep.degree = f.degree();
    rep.squarefree = gcd(f, f.derivative()).degree() == 0;
    auto roots = isolate_real_roots(f, BigRat(1, 1000000000) / 1000);
    rep.real_distinct = int(roots.size());
    rep.min_gap = roots.size() < 2 ? INFINITY : 1e300;
    for (std::size_t i = 1; i < roots.size(); ++i) {
        rep.min_gap = std::min(rep.min_gap, roots[i].approx() - roots[i - 1].approx());
    }
    return rep;
}

}  // namespace lame
