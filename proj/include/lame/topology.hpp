#pragma once

// Closed-form topology of the two components L^I, L^II of the moduli space
// of Lamé functions, and the derived quantities for the Legendre covers.

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lame/algebra/mpoly.hpp"
#include "lame/component.hpp"
#include "lame/golden.hpp"

namespace lame {

inline int epsilon0(int m) { return m % 3 == 1 ? 0 : 1; }
inline int epsilon1(int m) { return (m % 4 == 1 || m % 4 == 2) ? 0 : 1; }
inline int epsilon2(int m) { return m % 2 == 0 ? 1 : 0; }

/// Local degrees over one special value of J.
struct Ramification {
    std::vector<int> over_0, over_1, over_inf;
};

inline int sum_of(const std::vector<int>& v) {
    int s = 0;
    for (int x : v) s += x;
    return s;
}

inline int excess_of(const std::vector<int>& v) {
    int s = 0;
    for (int x : v) s += x - 1;
    return s;
}

struct TopologyReport {
    int m = 0;
    Component K = Component::I;
    int d = 0;
    int e0 = 0, e1 = 0, e2 = 0;
    BigRat chi, chi_orbifold, orbifold_correction, genus;
    int h = 0;
    int cohn_degree = 0;
    /// Literal d(d-1)/2 value stated for component II; equals cohn_degree for I.
    int cohn_degree_literal = 0;
    Ramification ramification;
};

inline Ramification ramification_profile(int d, Component K) {
    Ramification r;
    r.over_0.assign(std::size_t(d / 3), 3);
    if (d % 3) r.over_0.push_back(d % 3);
    r.over_1.assign(std::size_t(d / 2), 2);
    if (d % 2) r.over_1.push_back(1);
    if (K == Component::I) {
        r.over_inf.assign(std::size_t(d), 1);
    } else {
        r.over_inf.assign(std::size_t(d / 3), 2);
        r.over_inf.insert(r.over_inf.end(), std::size_t(d / 3), 1);
    }
    return r;
}

inline TopologyReport invariants(int m, Component K) {
    require_component(m, K);
    TopologyReport t;
    t.m = m;
    t.K = K;
    t.d = degree_d(m, K);
    t.e0 = epsilon0(m);
    t.e1 = epsilon1(m);
    t.e2 = epsilon2(m);
    if (K == Component::I) {
        const long base = m % 2 == 0 ? long(m + 2) * (m + 2) : long(m - 1) * (m - 1);
        t.orbifold_correction = BigRat(4 * t.e0 + 3 * t.e1, 6);
        t.chi = BigRat(-base, 24) + t.orbifold_correction;
        t.chi_orbifold = BigRat(-t.d * t.d, 6);
        t.genus = BigRat(1) + BigRat(t.d * t.d, 12) - BigRat(t.d, 2) - BigRat(4 * t.e0 + 3 * t.e1, 12);
        t.h = t.d;
        t.cohn_degree = (t.d * t.d - t.d + 4) / 6;
        t.cohn_degree_literal = t.cohn_degree;
    } else {
        const long base = m % 2 == 0 ? long(m) * m : long(m + 1) * (m + 1);
        t.orbifold_correction = BigRat(1 - t.e1, 2);
        t.chi = BigRat(-base, 8) + t.orbifold_correction;
        t.chi_orbifold = BigRat(-t.d * t.d, 18);
        t.genus = BigRat(1) + BigRat(t.d * t.d, 36) - BigRat(t.d, 3) - BigRat(1 - t.e1, 4);
        t.h = 2 * t.d / 3;
        const int D = t.d / 3;
        t.cohn_degree = D * (D - 1) / 2;
        t.cohn_degree_literal = t.d * (t.d - 1) / 2;
    }
    for (BigRat* q : {&t.chi, &t.chi_orbifold, &t.orbifold_correction, &t.genus}) q->canonicalize();
    t.ramification = ramification_profile(t.d, K);
    return t;
}

/// Genus in terms of m, written independently of the d-form.
inline BigRat genus_in_m(int m, Component K) {
    require_component(m, K);
    BigRat g;
    if (K == Component::I) {
        const long num = m % 2 == 0 ? long(m) * m - 8L * m + 28 : long(m) * m - 14L * m + 61;
        g = BigRat(num, 48) - BigRat(4 * epsilon0(m) + 3 * epsilon1(m), 12);
    } else {
        const long num = m % 2 == 0 ? long(m) * m - 8L * m + 16 : long(m) * m - 6L * m + 9;
        g = BigRat(num, 16) - BigRat(1 - epsilon1(m), 4);
    }
    g.canonicalize();
    return g;
}

struct Mismatch {
    int m = 0;
    Component K = Component::I;
    std::string field;
    std::string expected, actual;
};

struct CrosscheckReport {
    int rows_checked = 0;
    std::vector<Mismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};

/// Compares the closed forms against the reference table rows and checks the
/// internal identities of every report up to `max_m`.
inline CrosscheckReport table_crosscheck(int max_m = 13) {
    CrosscheckReport rep;
    auto note = [&](int m, Component K, const std::string& field, const auto& want, const auto& got) {
        std::ostringstream a, b;
        a << want;
        b << got;
        if (a.str() != b.str()) rep.mismatches.push_back({m, K, field, a.str(), b.str()});
    };
    for (const auto& row : golden::topology_tables()) {
        if (row.m > max_m) continue;
        const Component K = parse_component(row.component);
        const auto t = invariants(row.m, K);
        ++rep.rows_checked;
        if (K == Component::I) note(row.m, K, "e0", row.e0, t.e0);
        note(row.m, K, "e1", row.e1, t.e1);
        note(row.m, K, "e2", row.e2, t.e2);
        note(row.m, K, "chi", BigRat(row.chi), t.chi);
        note(row.m, K, "h", row.h, t.h);
        note(row.m, K, "g", BigRat(row.g), t.genus);
        note(row.m, K, "d", row.d, t.d);
    }
    for (int m = 0; m <= max_m; ++m) {
        for (Component K : {Component::I, Component::II}) {
            if (!component_exists(m, K)) continue;
            const auto t = invariants(m, K);
            note(m, K, "chi=2-2g-h", t.chi, BigRat(BigRat(2) - 2 * t.genus - t.h));
            note(m, K, "chi=chiO+E", t.chi, BigRat(t.chi_orbifold + t.orbifold_correction));
            note(m, K, "genus(m)", genus_in_m(m, K), t.genus);
            note(m, K, "ram0", t.d, sum_of(t.ramification.over_0));
            note(m, K, "ram1", t.d, sum_of(t.ramification.over_1));
            note(m, K, "raminf", t.d, sum_of(t.ramification.over_inf));
        }
    }
    return rep;
}

struct GenusDegreeReport {
    int m = 0;
    int j = 0;
    int D = 0;
    BigRat chi, genus;
    int expected_genus = 0;
    bool ok() const { return genus == expected_genus; }
};

/// Genus of the compactified Legendre cover for j = 0 (over L^I) and
/// j >= 1 (over L^II), compared with the plane-curve genus of degree D.
inline GenusDegreeReport genus_degree_check_H(int m, int j) {
    if (j < 0 || j > 3) throw InvalidArgument("j must be 0..3");
    const Component K = j == 0 ? Component::I : Component::II;
    const auto t = invariants(m, K);
    GenusDegreeReport r;
    r.m = m;
    r.j = j;
    if (j == 0) {
        r.chi = 6 * (t.chi_orbifold + BigRat(t.d, 2));
        r.D = t.d;
    } else {
        r.chi = 2 * (t.chi_orbifold + BigRat(t.d, 2));
        r.D = t.d / 3;
    }
    r.chi.canonicalize();
    r.genus = (BigRat(2) - r.chi) / 2;
    r.genus.canonicalize();
    r.expected_genus = (r.D - 1) * (r.D - 2) / 2;
    return r;
}

/// Riemann-Hurwitz bookkeeping for the forgetful map of degree d.
struct RiemannHurwitzAudit {
    int m = 0;
    Component K = Component::I;
    BigRat total;        ///< 2d - (chi + h)
    int special = 0;     ///< sum of (e - 1) over J = 0, 1, infinity
    BigRat leftover;     ///< total - special
    int expected_leftover = 0;
    /// Total as given by the shortcut d + d^2/18 - (1 - e1)/2 (component II only).
    BigRat shortcut_total;
    bool ok() const { return leftover == expected_leftover; }
    bool shortcut_consistent() const { return K == Component::I || shortcut_total == total; }
};

inline RiemannHurwitzAudit riemann_hurwitz_audit(int m, Component K) {
    const auto t = invariants(m, K);
    RiemannHurwitzAudit a;
    a.m = m;
    a.K = K;
    a.total = BigRat(2 * t.d) - t.chi - t.h;
    a.total.canonicalize();
    a.special = excess_of(t.ramification.over_0) + excess_of(t.ramification.over_1) + excess_of(t.ramification.over_inf);
    a.leftover = a.total - a.special;
    a.leftover.canonicalize();
    if (K == Component::I) {
        a.expected_leftover = t.cohn_degree - (t.d % 3 == 2 ? 1 : 0);
    } else {
        a.expected_leftover = t.cohn_degree;
        a.shortcut_total = BigRat(t.d) + BigRat(t.d * t.d, 18) - BigRat(1 - t.e1, 2);
        a.shortcut_total.canonicalize();
    }
    return a;
}

}  // namespace lame
