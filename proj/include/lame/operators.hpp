#pragma once

// Lamé operators on polynomials of bounded degree.
//
// For a root subset S of the cubic P, a Lamé function has the form
// Q(x) * prod_{t in S} sqrt(x - t). Conjugating the Lamé operator by that
// product gives Q -> A Q'' + Bc Q' + C0 Q, which preserves polynomials of
// degree <= n = (m - |S|) / 2. Its matrix in the monomial basis has the
// accessory parameter as eigenvalue.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lame/algebra.hpp"

namespace lame {

enum class FrameKind { weierstrass_g, weierstrass_e, legendre, explicit_roots };

struct CubicFrame {
    FrameKind kind = FrameKind::weierstrass_g;
    Var var = Var::x;         ///< independent variable
    Var eigen = Var::lambda;  ///< accessory parameter
    MPoly P;                  ///< the cubic
    std::optional<std::array<MPoly, 3>> roots;

    /// 4x^3 - g2 x - g3; roots are not available.
    static CubicFrame weierstrass_g() {
        return {FrameKind::weierstrass_g, Var::x, Var::lambda, parse_mpoly("4x^3 - g2 x - g3"), std::nullopt};
    }

    /// 4(x - e1)(x - e2)(x - e3). By default e3 is written as -e1 - e2 so that
    /// the cubic has no x^2 term; pass `traceless = false` to keep e3 free.
    static CubicFrame weierstrass_e(bool traceless = true) {
        MPoly e3 = traceless ? -X(Var::e1) - X(Var::e2) : X(Var::e3);
        auto f = from_roots({X(Var::e1), X(Var::e2), e3}, Var::x, Var::lambda);
        f.kind = FrameKind::weierstrass_e;
        return f;
    }

    /// 4z(z - 1)(z - a) with eigenvalue B.
    static CubicFrame legendre() {
        auto f = from_roots({MPoly(0), MPoly(1), X(Var::a)}, Var::z, Var::B);
        f.kind = FrameKind::legendre;
        return f;
    }

    static CubicFrame from_roots(const std::array<MPoly, 3>& r, Var var = Var::x, Var eigen = Var::lambda) {
        MPoly p(4);
        for (const auto& t : r) p *= X(var) - t;
        return {FrameKind::explicit_roots, var, eigen, p, r};
    }
};

/// Subset of the three roots, as a bit mask over root indices 0, 1, 2.
struct RootSubset {
    unsigned mask = 0;

    static RootSubset none() { return {0}; }
    static RootSubset all() { return {7}; }
    static RootSubset of(std::initializer_list<int> idx) {
        RootSubset s;
        for (int i : idx) s.mask |= 1u << unsigned(i);
        return s;
    }

    int size() const { return __builtin_popcount(mask); }
    bool contains(int i) const { return (mask >> unsigned(i)) & 1u; }
    std::vector<int> indices() const {
        std::vector<int> out;
        for (int i = 0; i < 3; ++i) {
            if (contains(i)) out.push_back(i);
        }
        return out;
    }
    friend bool operator==(RootSubset l, RootSubset r) { return l.mask == r.mask; }
    friend bool operator<(RootSubset l, RootSubset r) { return l.mask < r.mask; }
};

/// Text label such as "{0,1}" using the frame's root expressions.
inline std::string subset_label(const CubicFrame& f, RootSubset s) {
    std::string out = "{";
    bool first = true;
    for (int i : s.indices()) {
        if (!first) out += ',';
        first = false;
        out += f.roots ? to_string((*f.roots)[std::size_t(i)]) : std::to_string(i);
    }
    return out + "}";
}

struct OperatorMatrix {
    CubicFrame frame;
    int m = 0;
    RootSubset subset;
    int n = 0;
    MPoly A, Bc, C0;
    PolyMatrix matrix;

    /// Applies the operator to a polynomial in the frame variable.
    MPoly apply(const MPoly& q) const {
        return A * q.derivative(frame.var).derivative(frame.var) + Bc * q.derivative(frame.var) + C0 * q;
    }
};

/// Builds the operator and its (n+1) x (n+1) matrix; entry (i, k) is the
/// coefficient of var^i in L(var^k).
inline OperatorMatrix build_operator(const CubicFrame& frame, RootSubset s, int m) {
    if (m < 0) throw InvalidArgument("m must be non-negative");
    if (m < s.size() || (m - s.size()) % 2 != 0) {
        throw ParityMismatch("m = " + std::to_string(m) + " incompatible with |S| = " + std::to_string(s.size()));
    }
    const Var x = frame.var;
    const MPoly& P = frame.P;
    const MPoly dP = P.derivative(x);
    OperatorMatrix op;
    op.frame = frame;
    op.m = m;
    op.subset = s;
    op.n = (m - s.size()) / 2;
    op.A = P;
    const MPoly mm1 = MPoly(long(m) * (m + 1)) * X(x);

    if (!frame.roots) {
        if (s.size() == 1 || s.size() == 2) {
            throw UnsupportedKind("frame without explicit roots supports only S = {} or all roots");
        }
        // Sum over all roots: sum P_t = P', sum P_t' = P'', ordered pair sum = P''.
        if (s.size() == 3) {
            const MPoly d2P = dP.derivative(x);
            op.Bc = dP + dP.scaled(BigRat(1, 2));
            op.C0 = d2P.scaled(BigRat(1, 4)) + d2P.scaled(BigRat(1, 4)) - mm1;
        } else {
            op.Bc = dP.scaled(BigRat(1, 2));
            op.C0 = -mm1;
        }
    } else {
        const auto& r = *frame.roots;
        std::vector<MPoly> Pt;
        for (int i : s.indices()) Pt.push_back(P.exact_div(X(x) - r[std::size_t(i)]));
        op.Bc = dP.scaled(BigRat(1, 2));
        op.C0 = -mm1;
        for (const auto& pt : Pt) {
            op.Bc += pt;
            op.C0 += pt.derivative(x).scaled(BigRat(1, 4));
        }
        auto idx = s.indices();
        for (int i : idx) {
            for (int j : idx) {
                if (i == j) continue;
                MPoly pair = P.exact_div((X(x) - r[std::size_t(i)]) * (X(x) - r[std::size_t(j)]));
                op.C0 += pair.scaled(BigRat(1, 4));
            }
        }
    }

    const std::size_t dim = std::size_t(op.n) + 1;
    op.matrix = PolyMatrix(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        MPoly image = op.apply(X(x).pow(unsigned(k)));
        if (int(image.degree_in(x)) > op.n) {
            throw StructureViolation("operator does not preserve degree <= " + std::to_string(op.n));
        }
        for (std::size_t i = 0; i < dim; ++i) op.matrix(i, k) = image.coefficient(x, unsigned(i));
    }
    return op;
}

/// Two conventions for numbering the Legendre-frame components.
enum class LegendreLabeling {
    /// Even-m pairs {0,1}, {0,a}, {1,a} for j = 1, 2, 3 (matches the H^1 table).
    tables,
    /// Even-m pairs {1,a}, {0,a}, {0,1} for j = 1, 2, 3 (complement of the odd-m singleton).
    complement,
};

/// Root subsets (indices into 0, 1, a) of the four Legendre-frame components.
inline std::map<int, RootSubset> legendre_component_subsets(int m, LegendreLabeling labeling = LegendreLabeling::tables) {
    if (m < 0) throw InvalidArgument("m must be non-negative");
    std::map<int, RootSubset> out;
    if (m % 2 == 1) {
        out[0] = RootSubset::all();
        out[1] = RootSubset::of({0});
        out[2] = RootSubset::of({1});
        out[3] = RootSubset::of({2});
    } else {
        out[0] = RootSubset::none();
        if (m >= 2) {
            if (labeling == LegendreLabeling::tables) {
                out[1] = RootSubset::of({0, 1});
                out[3] = RootSubset::of({1, 2});
            } else {
                out[1] = RootSubset::of({1, 2});
                out[3] = RootSubset::of({0, 1});
            }
            out[2] = RootSubset::of({0, 2});
        }
    }
    return out;
}

}  // namespace lame
