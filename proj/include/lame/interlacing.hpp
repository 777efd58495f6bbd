#pragma once

// Three-term recurrences with interlacing roots, and the matrix shapes whose
// characteristic polynomials they describe: tridiagonal with zero diagonal
// (char poly lambda^k P(lambda^2)) and cyclic-three-band (lambda^k P(lambda^3)).

#include <algorithm>
#include <complex>
#include <string>
#include <vector>

#include "lame/algebra.hpp"
#include "lame/component.hpp"
#include "lame/numeric.hpp"
#include "lame/operators.hpp"

namespace lame {

/// P_j, Q_j, R_j in the reduced variable x = s^3.
struct PQRTriple {
    int j = 0;
    RatPoly P, Q, R;
};

inline std::vector<PQRTriple> pqr_recurrence(const std::vector<BigRat>& A, const std::vector<BigRat>& B,
                                             const std::vector<BigRat>& C, int steps) {
    if (steps < 0 || std::size_t(steps) > A.size() || std::size_t(steps) > B.size() || std::size_t(steps) > C.size()) {
        throw InvalidArgument("recurrence needs one coefficient of each kind per step");
    }
    for (int j = 0; j < steps; ++j) {
        const std::size_t k = std::size_t(j);
        if (sgn(A[k]) <= 0 || sgn(B[k]) <= 0 || sgn(C[k]) <= 0) {
            throw NonPositiveCoefficient("coefficients at step " + std::to_string(j) + " must be positive");
        }
    }
    const RatPoly x{0, 1};
    std::vector<PQRTriple> out{{0, RatPoly{1}, RatPoly{1}, RatPoly{1}}};
    for (int j = 0; j < steps; ++j) {
        const auto& t = out.back();
        const std::size_t k = std::size_t(j);
        PQRTriple n;
        n.j = j + 1;
        n.P = x * t.R + RatPoly::constant(A[k]) * t.P;
        n.Q = n.P + RatPoly::constant(B[k]) * t.Q;
        n.R = n.Q + RatPoly::constant(C[k]) * t.R;
        out.push_back(std::move(n));
    }
    return out;
}

struct InterlacingReport {
    int checked = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

namespace detail {

/// Fast path: floating roots suggest the order, then exact sign changes of
/// each polynomial across rational separators prove it. Returns false when
/// the floating estimate is not good enough to certify.
inline bool interlacing_by_separators(const RatPoly* const polys[3], int j) {
    std::vector<std::pair<double, int>> approx;
    for (int i = 0; i < 3; ++i) {
        std::vector<std::complex<double>> c;
        for (const auto& v : polys[i]->coeffs()) c.emplace_back(v.get_d(), 0.0);
        for (const auto& z : polynomial_roots(c)) {
            if (std::abs(z.imag()) > 1e-9 * (1 + std::abs(z.real()))) return false;
            approx.push_back({z.real(), i});
        }
    }
    if (int(approx.size()) != 3 * j) return false;
    std::sort(approx.begin(), approx.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<BigRat> sep{BigRat(0)};
    for (std::size_t k = 0; k + 1 < approx.size(); ++k) {
        if (approx[k].second != int(k % 3) || !(approx[k].first > approx[k + 1].first)) return false;
        sep.push_back(BigRat((approx[k].first + approx[k + 1].first) / 2));
    }
    if (approx.back().second != int((approx.size() - 1) % 3)) return false;
    sep.push_back(-root_bound(*polys[2]) - root_bound(*polys[0]) - root_bound(*polys[1]));
    for (std::size_t k = 0; k < approx.size(); ++k) {
        const RatPoly& f = *polys[approx[k].second];
        if (sgn(f(sep[k])) * sgn(f(sep[k + 1])) >= 0) return false;
    }
    return true;
}

}  // namespace detail

/// Exact check that P_j, Q_j, R_j are monic of degree j with positive
/// coefficients and negative simple roots ordered p1 > q1 > r1 > p2 > ... > rj.
/// `fast` lets a floating estimate propose separators that are then verified exactly.
inline InterlacingReport interlacing_check(const std::vector<PQRTriple>& triples, bool fast = true) {
    InterlacingReport rep;
    for (const auto& t : triples) {
        if (t.j == 0) continue;
        ++rep.checked;
        const std::string tag = "j=" + std::to_string(t.j) + ": ";
        const RatPoly* polys[3] = {&t.P, &t.Q, &t.R};
        const char* names = "PQR";
        for (int i = 0; i < 3; ++i) {
            const RatPoly& f = *polys[i];
            if (f.degree() != t.j || f.lc() != 1) rep.violations.push_back(tag + names[i] + " not monic of degree j");
            for (const auto& c : f.coeffs()) {
                if (sgn(c) <= 0) {
                    rep.violations.push_back(tag + names[i] + " has a non-positive coefficient");
                    break;
                }
            }
        }
        if (fast && detail::interlacing_by_separators(polys, t.j)) continue;
        bool shared = false;
        for (int i = 0; i < 3; ++i) {
            const RatPoly& f = *polys[i];
            if (gcd(f, f.derivative()).degree() > 0) shared = true;
            if (gcd(f, *polys[(i + 1) % 3]).degree() > 0) shared = true;
        }
        if (shared) {
            rep.violations.push_back(tag + "repeated or shared root");
            continue;
        }
        // isolate each polynomial separately, then refine until all intervals are disjoint
        struct Slot {
            RootInterval iv;
            int owner;
        };
        std::vector<Slot> slots;
        std::vector<std::vector<RatPoly>> seqs;
        for (int i = 0; i < 3; ++i) {
            seqs.push_back(sturm_sequence(*polys[i]));
            for (const auto& iv : isolate_real_roots(*polys[i], BigRat(1))) slots.push_back({iv, i});
        }
        if (int(slots.size()) != 3 * t.j) {
            rep.violations.push_back(tag + "non-real roots");
            continue;
        }
        auto bisect = [&](Slot& sl) {
            if (sl.iv.lo == sl.iv.hi) return;
            const BigRat mid = (sl.iv.lo + sl.iv.hi) / 2;
            if (sgn((*polys[sl.owner])(mid)) == 0) {
                sl.iv = {mid, mid};
            } else if (count_roots(seqs[std::size_t(sl.owner)], sl.iv.lo, mid) == 1) {
                sl.iv.hi = mid;
            } else {
                sl.iv.lo = mid;
            }
        };
        for (auto& sl : slots) {
            while (sgn(sl.iv.hi) >= 0 && sgn(sl.iv.lo) < 0) bisect(sl);
        }
        auto by_hi = [](const Slot& a, const Slot& b) { return a.iv.hi < b.iv.hi; };
        for (bool overlap = true; overlap;) {
            std::sort(slots.begin(), slots.end(), by_hi);
            overlap = false;
            for (std::size_t k = 0; k + 1 < slots.size(); ++k) {
                const auto &a = slots[k].iv, &b = slots[k + 1].iv;
                // (lo, hi] intervals, or single points when lo == hi
                if (a.hi < b.lo || (a.hi == b.lo && b.lo != b.hi)) continue;
                overlap = true;
                bisect(slots[k]);
                bisect(slots[k + 1]);
                break;
            }
        }
        // walk roots from the largest down; owners must cycle P, Q, R
        int expect = 0;
        for (std::size_t k = slots.size(); k-- > 0;) {
            if (sgn(slots[k].iv.hi) >= 0) rep.violations.push_back(tag + "non-negative root");
            if (slots[k].owner != expect) {
                rep.violations.push_back(tag + "interlacing order broken at root " + std::to_string(slots.size() - k));
                break;
            }
            expect = (expect + 1) % 3;
        }
    }
    return rep;
}

/// Leading principal minors D_0..D_n of the matrix with s on the diagonal,
/// a_i on the superdiagonal and b_i on the second subdiagonal, through
/// D_{k+3} = s D_{k+2} + c_k D_k with c_k = a_{k+1} a_{k+2} b_{k+3}.
/// Index conventions: a[i] is a_{i+1}, b[i] is b_{i+1} (b[0], b[1] unused).
inline std::vector<RatPoly> d_recurrence(const std::vector<BigRat>& a, const std::vector<BigRat>& b, int n) {
    const RatPoly s{0, 1};
    std::vector<RatPoly> D{RatPoly{1}, s, s * s};
    for (int k = 0; k + 3 <= n; ++k) {
        const BigRat c = a[std::size_t(k)] * a[std::size_t(k + 1)] * b[std::size_t(k + 2)];
        D.push_back(s * D[std::size_t(k + 2)] + RatPoly::constant(c) * D[std::size_t(k)]);
    }
    D.resize(std::size_t(n) + 1);
    return D;
}

/// Constant-entry PolyMatrix from rationals.
inline PolyMatrix to_poly_matrix(const RatMatrix& M) {
    PolyMatrix out(M.size());
    for (std::size_t i = 0; i < M.size(); ++i) {
        for (std::size_t j = 0; j < M.size(); ++j) out(i, j) = MPoly(M[i][j]);
    }
    return out;
}

inline RatPoly rat_charpoly(const RatMatrix& M) {
    UPoly cp = char_poly_berkowitz(to_poly_matrix(M), Var::lambda);
    std::vector<BigRat> cs;
    for (const auto& c : cp.coeffs()) cs.push_back(c.constant_value());
    return RatPoly(std::move(cs));
}

struct StructureReport {
    int n = 0;
    int stride = 0;  ///< 2 for the tridiagonal shape, 3 for the cyclic shape
    int k = 0;
    RatPoly charpoly;
    RatPoly P;       ///< charpoly = lambda^k P(lambda^stride)
    bool form_ok = false;
    bool roots_ok = false;  ///< P squarefree with all roots real and positive
    bool ok() const { return form_ok && roots_ok; }
};

namespace detail {

inline StructureReport power_form(const RatPoly& cp, int stride, int n) {
    StructureReport r;
    r.n = n;
    r.stride = stride;
    r.charpoly = cp;
    r.k = n % stride;
    r.form_ok = true;
    std::vector<BigRat> pc;
    for (int e = 0; e <= cp.degree(); ++e) {
        const BigRat& c = cp.coeff(e);
        if (sgn(c) == 0) continue;
        if ((e - r.k) % stride != 0 || e < r.k) {
            r.form_ok = false;
            continue;
        }
        const std::size_t idx = std::size_t((e - r.k) / stride);
        if (pc.size() <= idx) pc.resize(idx + 1, BigRat(0));
        pc[idx] = c;
    }
    r.P = RatPoly(std::move(pc));
    if (r.P.degree() < 1) {
        r.roots_ok = r.P.degree() == 0;
        return r;
    }
    const bool squarefree = gcd(r.P, r.P.derivative()).degree() == 0;
    const auto seq = sturm_sequence(r.P);
    const int positive = count_roots(seq, BigRat(0), root_bound(r.P));
    r.roots_ok = squarefree && sgn(r.P(BigRat(0))) != 0 && positive == r.P.degree();
    return r;
}

}  // namespace detail

/// Zero diagonal, positive entries on the super- and subdiagonal only.
inline StructureReport jacobi_structure_check(const RatMatrix& M) {
    const std::size_t n = M.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const int s = sgn(M[i][j]);
            const bool band = i + 1 == j || j + 1 == i;
            if ((band && s <= 0) || (!band && s != 0)) throw ShapeViolation("matrix is not positive tridiagonal with zero diagonal");
        }
    }
    return detail::power_form(rat_charpoly(M), 2, int(n));
}

/// Positive entries exactly on the first superdiagonal and the second subdiagonal.
inline StructureReport cyclic3_structure_check(const RatMatrix& M) {
    const std::size_t n = M.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const int s = sgn(M[i][j]);
            const bool band = i + 1 == j || i == j + 2;
            if ((band && s <= 0) || (!band && s != 0)) throw ShapeViolation("matrix is not of cyclic three-band shape");
        }
    }
    return detail::power_form(rat_charpoly(M), 3, int(n));
}

/// Operator matrix of component I at numeric (g2, g3).
inline RatMatrix component_I_matrix(int m, const BigRat& g2, const BigRat& g3) {
    require_component(m, Component::I);
    const RootSubset s = m % 2 == 0 ? RootSubset::none() : RootSubset::all();
    auto op = build_operator(CubicFrame::weierstrass_g(), s, m);
    PolyMatrix num = op.matrix.substitute({{Var::g2, MPoly(g2)}, {Var::g3, MPoly(g3)}});
    RatMatrix out(num.size(), std::vector<BigRat>(num.size()));
    for (std::size_t i = 0; i < num.size(); ++i) {
        for (std::size_t j = 0; j < num.size(); ++j) out[i][j] = num(i, j).constant_value();
    }
    return out;
}

/// Brings a band matrix to the positive form the structure checks expect:
/// negates when every nonzero entry is negative and transposes when the
/// first subdiagonal is occupied but the first superdiagonal is not.
inline RatMatrix positive_band_form(RatMatrix M) {
    const std::size_t n = M.size();
    bool any_pos = false, any_neg = false;
    bool sub = false, super = false;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const int s = sgn(M[i][j]);
            if (s > 0) any_pos = true;
            if (s < 0) any_neg = true;
            if (s != 0 && i == j + 1) sub = true;
            if (s != 0 && j == i + 1) super = true;
        }
    }
    if (any_neg && !any_pos) {
        for (auto& row : M) {
            for (auto& v : row) v = -v;
        }
    }
    if (sub && !super) {
        RatMatrix t(n, std::vector<BigRat>(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) t[j][i] = M[i][j];
        }
        M = std::move(t);
    }
    return M;
}

}  // namespace lame
