#pragma once

// The angle triangle of balanced triples with sum 2m+1, cut by the integer
// lines into up and down triangular faces, and the nerve graph joining faces
// that meet at vertical angles.
//
// A face is stored by orientation and floors p: the open face is
// {p_j < alpha_j < p_j + 1}. Up faces have floor sum 2m, down faces 2m - 1.
// A face meets the balanced region iff every floor is at most m.

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lame/algebra/mpoly.hpp"
#include "lame/component.hpp"
#include "lame/topology.hpp"

namespace lame {

struct Face {
    bool up = true;
    std::array<int, 3> p{};

    friend bool operator==(const Face& a, const Face& b) { return a.up == b.up && a.p == b.p; }
    friend bool operator<(const Face& a, const Face& b) {
        if (a.up != b.up) return a.up;
        return a.p < b.p;
    }
    /// Cyclic coordinate shift (p1, p2, p3) -> (p3, p1, p2).
    Face rotated() const { return {up, {p[2], p[0], p[1]}}; }
};

inline std::string to_string(const Face& f) {
    std::ostringstream out;
    out << (f.up ? 'U' : 'D') << '(' << f.p[0] << ',' << f.p[1] << ',' << f.p[2] << ')';
    return out.str();
}

/// 0 for type I, j for type II_j (j = 1, 2, 3).
inline int face_type(const Face& f) {
    // up faces count even floors, down faces odd ones
    const int want = f.up ? 0 : 1;
    int matching = 0, last = -1;
    for (int j = 0; j < 3; ++j) {
        if (f.p[std::size_t(j)] % 2 == want) {
            ++matching;
            last = j;
        }
    }
    if (matching == 3) return 0;
    if (matching == 1) return last + 1;
    throw StructureViolation("face " + to_string(f) + " has no type");
}

inline std::string type_label(int t) { return t == 0 ? "I" : "II" + std::to_string(t); }

struct AngleSpace {
    int m = 0;
    std::vector<Face> faces;  ///< sorted: up faces first, floors lexicographic
    std::vector<int> types;
    std::vector<std::array<int, 3>> vertices;  ///< balanced integer triples

    std::optional<std::size_t> index_of(const Face& f) const {
        auto it = std::lower_bound(faces.begin(), faces.end(), f);
        if (it == faces.end() || !(*it == f)) return std::nullopt;
        return std::size_t(it - faces.begin());
    }
};

inline AngleSpace build_angle_space(int m) {
    if (m < 0) throw InvalidArgument("m must be non-negative");
    AngleSpace a;
    a.m = m;
    for (bool up : {true, false}) {
        const int total = up ? 2 * m : 2 * m - 1;
        for (int p1 = 0; p1 <= m; ++p1) {
            for (int p2 = 0; p2 <= m; ++p2) {
                const int p3 = total - p1 - p2;
                if (p3 < 0 || p3 > m) continue;
                a.faces.push_back({up, {p1, p2, p3}});
            }
        }
    }
    std::sort(a.faces.begin(), a.faces.end());
    for (const auto& f : a.faces) a.types.push_back(face_type(f));
    for (int v1 = 1; v1 <= m; ++v1) {
        for (int v2 = 1; v2 <= m; ++v2) {
            const int v3 = 2 * m + 1 - v1 - v2;
            if (v3 >= 1 && v3 <= m) a.vertices.push_back({v1, v2, v3});
        }
    }
    return a;
}

struct GraphTally {
    int type = 0;  ///< 0 = I, j = II_j
    int V0 = 0, V1 = 0, V2 = 0, V3 = 0, E = 0, V = 0;
    std::vector<std::size_t> members;

    bool same_counts(const GraphTally& o) const {
        return V0 == o.V0 && V1 == o.V1 && V2 == o.V2 && V3 == o.V3 && E == o.E && V == o.V;
    }
};

struct NerveGraph {
    AngleSpace space;
    std::vector<std::vector<std::size_t>> adjacency;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  ///< (up, down)
    std::vector<int> component_of;
    std::vector<GraphTally> components;  ///< ordered by smallest member

    /// Component containing faces of the given type, if any.
    const GraphTally* component_of_type(int type) const {
        for (const auto& c : components) {
            if (c.type == type) return &c;
        }
        return nullptr;
    }

    /// One line per face: label, type and neighbours.
    std::string adjacency_dump() const {
        std::ostringstream out;
        for (std::size_t i = 0; i < space.faces.size(); ++i) {
            out << to_string(space.faces[i]) << ' ' << type_label(space.types[i]) << ':';
            for (std::size_t j : adjacency[i]) out << ' ' << to_string(space.faces[j]);
            out << '\n';
        }
        return out.str();
    }
};

inline NerveGraph build_nerve(int m) {
    NerveGraph g;
    g.space = build_angle_space(m);
    const auto& faces = g.space.faces;
    const std::size_t n = faces.size();
    g.adjacency.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
        if (!faces[i].up) continue;
        for (std::size_t j = 0; j < 3; ++j) {
            Face d{false, faces[i].p};
            for (std::size_t k = 0; k < 3; ++k) d.p[k] += k == j ? 1 : -1;
            if (auto idx = g.space.index_of(d)) {
                g.edges.push_back({i, *idx});
                g.adjacency[i].push_back(*idx);
                g.adjacency[*idx].push_back(i);
            }
        }
    }
    for (auto& adj : g.adjacency) std::sort(adj.begin(), adj.end());

    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t(0));
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : g.edges) parent[find(u)] = find(v);

    std::map<std::size_t, int> root_label;
    g.component_of.assign(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = find(i);
        auto [it, fresh] = root_label.try_emplace(r, int(g.components.size()));
        if (fresh) {
            g.components.push_back({});
            g.components.back().type = g.space.types[i];
        }
        auto& c = g.components[std::size_t(it->second)];
        g.component_of[i] = it->second;
        c.members.push_back(i);
        ++c.V;
        switch (g.adjacency[i].size()) {
            case 0: ++c.V0; break;
            case 1: ++c.V1; break;
            case 2: ++c.V2; break;
            case 3: ++c.V3; break;
            default: throw StructureViolation("nerve vertex of degree > 3");
        }
    }
    for (auto [u, v] : g.edges) ++g.components[std::size_t(g.component_of[u])].E;
    return g;
}

/// Tallies predicted by the closed-form counting formulas.
struct TallyFormula {
    int V1 = 0, V2 = 0, V = 0, E = 0;
    int V3() const { return V - V1 - V2; }
};

inline TallyFormula tally_formula(int m, Component K) {
    require_component(m, K);
    TallyFormula t;
    if (K == Component::I) {
        if (m % 2 == 1) {
            t = {3 * (m - 1) / 2, 0, (m * m + 4 * m - 5) / 4, 3 * (m * m - 1) / 8};
        } else if (m == 0) {
            t = {0, 0, 1, 0};
        } else {
            t = {3, 3 * (m - 2) / 2, (m / 2 + 1) * (m / 2 + 1), 3 * (m * m + 2 * m) / 8};
        }
    } else {
        if (m % 2 == 1) {
            t = {(m + 3) / 2, m - 1, (m * m + 4 * m + 3) / 4, (3 * m * m + 4 * m + 1) / 8};
        } else {
            t = {m, m / 2, (m / 2 + 1) * (m / 2 + 1) - 1, (3 * m * m + 2 * m) / 8};
        }
    }
    return t;
}

/// Epsilons read off the geometry: whether the centre, a side midpoint and
/// a corner of the triangle lie in faces of the rotation-invariant component.
struct GeometricEpsilons {
    int e0 = 0, e1 = 0, e2 = 0;
    std::optional<Face> center_face;
    Face midpoint_face, corner_face;
};

inline GeometricEpsilons geometric_epsilons(int m) {
    if (m < 0) throw InvalidArgument("m must be non-negative");
    GeometricEpsilons g;
    const int s = 2 * m + 1;
    if (s % 3 != 0) {
        const int q = s / 3;
        g.center_face = Face{3 * q == 2 * m, {q, q, q}};
        g.e0 = face_type(*g.center_face) == 0 ? 1 : 0;
    }
    const int q = s / 4;
    g.midpoint_face = Face{m + 2 * q == 2 * m, {m, q, q}};
    g.e1 = face_type(g.midpoint_face) == 0 ? 1 : 0;
    g.corner_face = Face{true, {m, m, 0}};
    g.e2 = face_type(g.corner_face) == 0 ? 1 : 0;
    return g;
}

struct ComponentReport {
    int m = 0;
    int count = 0;
    int expected_count = 0;
    bool types_pure = true;       ///< no edge joins faces of different type
    bool one_per_type = true;     ///< at most one component per type
    bool rotation_fixes_I = true;
    bool rotation_permutes_II = true;
    bool rotation_is_isomorphism = true;
    bool II_tallies_equal = true;
    std::vector<std::string> formula_mismatches;
    bool ok() const {
        return count == expected_count && types_pure && one_per_type && rotation_fixes_I && rotation_permutes_II &&
               rotation_is_isomorphism && II_tallies_equal && formula_mismatches.empty();
    }
};

inline int expected_component_count(int m) { return m == 0 ? 1 : m == 1 ? 3 : 4; }

inline ComponentReport component_analysis(const NerveGraph& g) {
    ComponentReport r;
    r.m = g.space.m;
    r.count = int(g.components.size());
    r.expected_count = expected_component_count(r.m);
    for (auto [u, v] : g.edges) {
        if (g.space.types[u] != g.space.types[v]) r.types_pure = false;
    }
    std::map<int, int> per_type;
    for (const auto& c : g.components) ++per_type[c.type];
    for (auto [t, n] : per_type) {
        if (n != 1) r.one_per_type = false;
    }
    // rotation: a bijection on faces preserving edges, I -> I, II_j -> II_{j+1}
    const auto& faces = g.space.faces;
    std::vector<std::size_t> image(faces.size());
    for (std::size_t i = 0; i < faces.size(); ++i) {
        auto idx = g.space.index_of(faces[i].rotated());
        if (!idx) {
            r.rotation_is_isomorphism = false;
            return r;
        }
        image[i] = *idx;
        const int t = g.space.types[i], ti = g.space.types[*idx];
        if (t == 0 && (ti != 0 || g.component_of[i] != g.component_of[*idx])) r.rotation_fixes_I = false;
        if (t != 0 && ti != t % 3 + 1) r.rotation_permutes_II = false;
    }
    for (std::size_t i = 0; i < faces.size(); ++i) {
        std::vector<std::size_t> mapped;
        for (std::size_t j : g.adjacency[i]) mapped.push_back(image[j]);
        std::sort(mapped.begin(), mapped.end());
        if (mapped != g.adjacency[image[i]]) r.rotation_is_isomorphism = false;
    }
    const GraphTally* c1 = g.component_of_type(1);
    for (int t = 2; t <= 3; ++t) {
        const GraphTally* ct = g.component_of_type(t);
        if ((c1 == nullptr) != (ct == nullptr) || (c1 && !c1->same_counts(*ct))) r.II_tallies_equal = false;
    }
    for (Component K : {Component::I, Component::II}) {
        if (!component_exists(r.m, K)) continue;
        const GraphTally* c = g.component_of_type(K == Component::I ? 0 : 1);
        if (!c) {
            r.formula_mismatches.push_back(to_string(K) + ": component missing");
            continue;
        }
        const auto f = tally_formula(r.m, K);
        auto check = [&](const char* name, int want, int got) {
            if (want != got) {
                r.formula_mismatches.push_back(to_string(K) + " " + name + ": formula " + std::to_string(want) +
                                               ", graph " + std::to_string(got));
            }
        };
        check("V1", f.V1, c->V1);
        check("V2", f.V2, c->V2);
        check("V3", f.V3(), c->V3 + c->V0);
        check("E", f.E, c->E);
        check("V", f.V, c->V);
    }
    return r;
}

inline ComponentReport component_analysis(int m) { return component_analysis(build_nerve(m)); }

/// Euler characteristic from the tallies of the nerve component and the
/// geometric epsilons.
inline BigRat euler_from_graph(const NerveGraph& g, Component K) {
    require_component(g.space.m, K);
    const auto eps = geometric_epsilons(g.space.m);
    const GraphTally* c = g.component_of_type(K == Component::I ? 0 : 1);
    if (!c) throw StructureViolation("nerve component missing");
    // an isolated vertex (m = 0) is the central cell and counts like V3
    const int v3 = c->V3 + c->V0;
    BigRat chi;
    if (K == Component::I) {
        chi = BigRat(v3, 3) + BigRat(c->V1, 6) + BigRat(c->V2, 6) - BigRat(c->E, 3) + BigRat(2 * eps.e0, 3) +
              BigRat(eps.e1 - eps.e2, 2);
    } else {
        chi = BigRat(v3) + BigRat(c->V1, 2) + BigRat(c->V2, 2) - BigRat(c->E) + BigRat(eps.e2 - eps.e1, 2);
    }
    chi.canonicalize();
    return chi;
}

inline BigRat euler_from_graph(int m, Component K) { return euler_from_graph(build_nerve(m), K); }

/// Number of Lin-Wang curves: one per rotation orbit of balanced integer
/// vertices, weighted 1 for the centre and 3 otherwise.
struct CurveCount {
    int m = 0;
    int vertices = 0;
    int rotation_orbits = 0;
    int permutation_orbits = 0;
    int count = 0;
    bool ok() const { return count == m * (m + 1) / 2; }
};

inline CurveCount lw_curve_count(int m) {
    if (m < 1) throw InvalidArgument("curve count needs m >= 1");
    const auto a = build_angle_space(m);
    CurveCount c;
    c.m = m;
    c.vertices = int(a.vertices.size());
    std::map<std::array<int, 3>, bool> seen_rot, seen_perm;
    for (const auto& v : a.vertices) {
        auto rot = v;
        std::array<int, 3> canon = v;
        for (int k = 0; k < 3; ++k) {
            rot = {rot[2], rot[0], rot[1]};
            canon = std::min(canon, rot);
        }
        if (!seen_rot[canon]) {
            seen_rot[canon] = true;
            ++c.rotation_orbits;
            const bool center = v[0] == v[1] && v[1] == v[2];
            c.count += center ? 1 : 3;
        }
        auto sorted = v;
        std::sort(sorted.begin(), sorted.end());
        if (!seen_perm[sorted]) {
            seen_perm[sorted] = true;
            ++c.permutation_orbits;
        }
    }
    return c;
}

struct OrbifoldPoints {
    int m = 0;
    GeometricEpsilons eps;
    bool order3_point = false;        ///< hexagonal point lies on component I
    Component order2_owner = Component::I;  ///< component carrying the square point
};

inline OrbifoldPoints orbifold_points(int m) {
    OrbifoldPoints o;
    o.m = m;
    o.eps = geometric_epsilons(m);
    o.order3_point = o.eps.e0 == 1;
    o.order2_owner = o.eps.e1 == 1 ? Component::I : Component::II;
    return o;
}

}  // namespace lame
