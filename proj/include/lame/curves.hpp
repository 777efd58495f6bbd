#pragma once

// Lin-Wang curves for m = 1, 2, 3: period conditions Im(N / D) = 0 evaluated
// division-free as Im(N conj D) / |N conj D|, traced over a tau grid by
// marching squares and mapped to the J-plane.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "lame/component.hpp"
#include "lame/elliptic.hpp"
#include "lame/errors.hpp"

namespace lame {

template <class Cplx>
struct LWValue {
    std::string label;
    Component K = Component::I;
    int field = 0;  ///< conditions differing only by a square-root branch share a field
    Cplx N, D;
    Cplx branch{};  ///< the square root chosen, zero when there is none
};

/// N and D of every condition for m in 1..3. Periods 1 and tau pair with
/// eta1 and eta_tau; the condition is invariant under rescaling the lattice.
template <class Cplx>
std::vector<LWValue<Cplx>> lw_values(int m, const LatticeData<Cplx>& L, RealOf<Cplx> scale = 1) {
    using Real = RealOf<Cplx>;
    if (m < 1 || m > 3) throw InvalidArgument("Lin-Wang conditions exist for m = 1, 2, 3");
    // data of the lattice scale * (Z + tau Z)
    const Real s = scale, s2 = s * s;
    const Cplx w1 = Cplx(s), w2 = s * L.tau;
    const Cplx eta1 = L.eta1 / s, eta2 = L.eta_tau / s;
    const Cplx g2 = L.g2 / (s2 * s2);
    std::array<Cplx, 3> e;
    for (int j = 0; j < 3; ++j) e[std::size_t(j)] = L.e[std::size_t(j)] / s2;
    auto pp = [&](const Cplx& x) { return Real(6) * x * x - g2 / Real(2); };  // P'' at a root
    auto name = [](const char* base, int j) { return std::string(base) + std::to_string(j); };

    std::vector<LWValue<Cplx>> out;
    if (m == 1) {
        for (int j = 0; j < 3; ++j) {
            out.push_back({name("e", j + 1), Component::I, j, eta1 + w1 * e[std::size_t(j)], eta2 + w2 * e[std::size_t(j)]});
        }
        return out;
    }
    if (m == 2) {
        const Cplx r = sqrt(g2 / Real(12));
        out.push_back({"I+", Component::I, 0, eta1 + w1 * r, eta2 + w2 * r, r});
        out.push_back({"I-", Component::I, 0, eta1 - w1 * r, eta2 - w2 * r, -r});
        int f = 1;
        for (int j = 0; j < 3; ++j) {
            for (int k = j + 1; k < 3; ++k) {
                const Cplx ej = e[std::size_t(j)], ek = e[std::size_t(k)];
                const Cplx a = ej * pp(ek) - ek * pp(ej), b = pp(ek) - pp(ej);
                out.push_back({"II" + std::to_string(j + 1) + std::to_string(k + 1), Component::II, f++,
                               w1 * a + eta1 * b, w2 * a + eta2 * b});
            }
        }
        return out;
    }
    // m = 3, component I: c_k = P''(w_{k+2}) P''(w_{k+1}) (e_{k+2} - e_{k+1})
    std::array<Cplx, 3> c;
    for (int k = 0; k < 3; ++k) {
        const Cplx a = e[std::size_t((k + 2) % 3)], b = e[std::size_t((k + 1) % 3)];
        c[std::size_t(k)] = pp(a) * pp(b) * (a - b);
    }
    const Cplx c0 = -(c[0] * e[0] + c[1] * e[1] + c[2] * e[2]);
    const Cplx B = c[0] + c[1] + c[2];
    out.push_back({"I", Component::I, 0, c0 * w1 - eta1 * B, c0 * w2 - eta2 * B});
    // component II: g = c0 + c1 P(z + w_k) + P(z + a) + P(z - a), P(a) a root of
    // 10 P^2 + 4 e_k P + 4 e_k^2 - 3 g2 / 2; everything scaled by P''(w_k)
    for (int k = 0; k < 3; ++k) {
        const Cplx ek = e[std::size_t(k)];
        const Cplx root = sqrt(Real(3) * (Real(5) * g2 / Real(4) - Real(3) * ek * ek));
        for (int sign : {1, -1}) {
            const Cplx P = (-ek + Real(sign) * root) / Real(5);
            const Cplx q = pp(ek);
            const Cplx c1 = Real(-2) * pp(P);
            const Cplx c0k = -c1 * ek - Real(2) * P * q;
            const Cplx b = c1 + Real(2) * q;
            out.push_back({name("II", k + 1) + (sign > 0 ? "+" : "-"), Component::II, 1 + k, c0k * w1 - b * eta1,
                           c0k * w2 - b * eta2, Real(sign) * root});
        }
    }
    return out;
}

/// Im(N conj D) / |N conj D|, or NaN where |N conj D| < 1e-8.
inline double lw_normalized(const std::complex<double>& N, const std::complex<double>& D) {
    const std::complex<double> w = N * std::conj(D);
    const double a = std::abs(w);
    if (!(a >= 1e-8)) return std::numeric_limits<double>::quiet_NaN();
    return w.imag() / a;
}

struct LWCondition {
    int m = 0;
    std::string label;
    Component K = Component::I;
    int field = 0;
    std::function<double(const LatticeData<std::complex<double>>&)> evaluate;
};

inline std::vector<LWCondition> lw_conditions(int m) {
    const auto probe = lw_values(m, lattice_from_tau(std::complex<double>(0.0, 1.3)));
    std::vector<LWCondition> out;
    for (std::size_t i = 0; i < probe.size(); ++i) {
        out.push_back({m, probe[i].label, probe[i].K, probe[i].field, [m, i](const LatticeData<std::complex<double>>& L) {
                           const auto v = lw_values(m, L);
                           return lw_normalized(v[i].N, v[i].D);
                       }});
    }
    return out;
}

struct Sheet {
    std::complex<double> branch;
    double value;
};

/// Double precision loses up to ~1e-7 of the normalized value near the cusp,
/// where e_k + eta1 and P''(e_k) both tend to zero; smaller values are
/// recomputed in extended precision before their sign is trusted.
inline constexpr double lw_refine_below = 1e-5;

/// Per field, the normalized conditions ordered by branch value. Tracing
/// follows each branch by continuity rather than by its global sign.
inline std::vector<std::vector<Sheet>> lw_sheets(int m, const LatticeData<std::complex<double>>& L) {
    const auto v = lw_values(m, L);
    std::vector<double> f;
    bool refine = false;
    for (const auto& x : v) {
        f.push_back(lw_normalized(x.N, x.D));
        if (std::abs(f.back()) < lw_refine_below) refine = true;
    }
    if (refine) {
        const ExtendedComplex t{Extended(L.tau.real()), Extended(L.tau.imag())};
        const auto w = lw_values(m, lattice_from_tau(t));
        for (std::size_t i = 0; i < w.size(); ++i) {
            const ExtendedComplex nd = w[i].N * boost::multiprecision::conj(w[i].D);
            const Extended a = abs(nd);
            f[i] = a >= Extended(1e-8) ? double(nd.imag() / a) : std::numeric_limits<double>::quiet_NaN();
        }
    }
    std::vector<std::vector<Sheet>> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& x = v[i];
        if (std::size_t(x.field) >= out.size()) out.resize(std::size_t(x.field) + 1);
        out[std::size_t(x.field)].push_back({x.branch, f[i]});
    }
    for (auto& fs : out) {
        std::sort(fs.begin(), fs.end(), [](const Sheet& a, const Sheet& b) {
            return a.branch.real() != b.branch.real() ? a.branch.real() < b.branch.real() : a.branch.imag() < b.branch.imag();
        });
    }
    return out;
}

inline std::vector<std::string> lw_field_labels(int m) {
    const auto v = lw_values(m, lattice_from_tau(std::complex<double>(0.0, 1.3)));
    std::vector<std::string> labels;
    for (const auto& x : v) {
        if (std::size_t(x.field) >= labels.size()) {
            std::string l = x.label;
            if (l.back() == '+') l += "-";
            labels.push_back(l);
        }
    }
    return labels;
}

// ---------------------------------------------------------------------------
// Tracing

struct GridSpec {
    double re_lo = -0.5, re_hi = 0.5;
    double im_lo = 0.5, im_hi = 3.0;
    int n = 800;  ///< samples per axis
    bool mask = true;  ///< clip to |tau| >= 1 after tracing
};

struct Polyline {
    std::string label;
    int field = 0;
    std::vector<std::complex<double>> pts;
    bool closed = false;
};

struct CurveSet {
    int m = 0;
    std::string plane;  ///< "tau" or "J"
    GridSpec grid;
    std::vector<Polyline> lines;
    int components = 0;
    double tolerance = 0;  ///< J-plane: tau-plane distance below which an arc duplicates an image of another
    std::vector<int> merged_of;  ///< J-plane: merged component of each line
    std::vector<std::pair<std::size_t, std::size_t>> joins;       ///< J-plane: continuations across the boundary
    std::vector<std::pair<std::size_t, std::size_t>> duplicates;  ///< J-plane: arcs merged as duplicates
};

namespace detail {

inline bool in_fundamental(const std::complex<double>& t) { return std::norm(t) >= 1.0; }

/// Parameter s in [0, 1] where p + s (q - p) meets the unit circle.
inline double circle_cut(const std::complex<double>& p, const std::complex<double>& q) {
    const std::complex<double> d = q - p;
    const double a = std::norm(d), b = 2 * (p.real() * d.real() + p.imag() * d.imag()), c = std::norm(p) - 1;
    const double disc = std::max(0.0, b * b - 4 * a * c);
    const double r = std::sqrt(disc);
    for (double s : {(-b - r) / (2 * a), (-b + r) / (2 * a)}) {
        if (s >= 0 && s <= 1) return s;
    }
    return std::clamp(-c / b, 0.0, 1.0);
}

}  // namespace detail

/// Samples the sign fields on the grid, extracts zero curves by marching
/// squares, clips them to |tau| >= 1 and joins segments into polylines.
inline CurveSet trace_curves(int m, const GridSpec& g = {}) {
    using C = std::complex<double>;
    const auto labels = lw_field_labels(m);
    const std::size_t nf = labels.size();
    const int n = g.n;
    const double hx = (g.re_hi - g.re_lo) / (n - 1), hy = (g.im_hi - g.im_lo) / (n - 1);
    auto node = [&](int i, int j) { return C(g.re_lo + i * hx, g.im_lo + j * hy); };

    const std::size_t ns = 2;  // sheets per field at most
    std::vector<Sheet> F(std::size_t(n) * std::size_t(n) * nf * ns, Sheet{{}, std::numeric_limits<double>::quiet_NaN()});
    std::vector<std::size_t> sheets(nf, 1);
    {
        const auto probe = lw_sheets(m, lattice_from_tau(C(0.0, 1.3)));
        for (std::size_t f = 0; f < nf; ++f) sheets[f] = probe[f].size();
    }
    const unsigned workers = std::max(1u, std::min(16u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int j = int(w); j < n; j += int(workers)) {
                for (int i = 0; i < n; ++i) {
                    const auto sh = lw_sheets(m, lattice_from_tau(node(i, j)));
                    for (std::size_t f = 0; f < nf; ++f) {
                        for (std::size_t k = 0; k < sh[f].size(); ++k) F[((std::size_t(j) * n + i) * nf + f) * ns + k] = sh[f][k];
                    }
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    auto at = [&](int i, int j, std::size_t f, std::size_t k) -> const Sheet& {
        return F[((std::size_t(j) * n + i) * nf + f) * ns + k];
    };

    CurveSet out;
    out.m = m;
    out.plane = "tau";
    out.grid = g;
    for (std::size_t f = 0; f < nf; ++f) {
        // sheet k at (i0, j0) continues as the returned sheet at (i1, j1)
        auto follow = [&](int i0, int j0, int i1, int j1, std::size_t k) -> std::size_t {
            if (sheets[f] == 1) return 0;
            const double keep = std::abs(at(i0, j0, f, 0).branch - at(i1, j1, f, 0).branch) +
                                std::abs(at(i0, j0, f, 1).branch - at(i1, j1, f, 1).branch);
            const double swap = std::abs(at(i0, j0, f, 0).branch - at(i1, j1, f, 1).branch) +
                                std::abs(at(i0, j0, f, 1).branch - at(i1, j1, f, 0).branch);
            return keep <= swap ? k : 1 - k;
        };
        // crossing points keyed by grid edge and by the sheet at the edge's first node;
        // edge 2 (j n + i) is (i,j)-(i+1,j), edge 2 (j n + i) + 1 is (i,j)-(i,j+1)
        std::map<long, C> point;
        std::map<long, std::vector<long>> adj;
        long fresh = -1;
        auto crossing = [&](int i0, int j0, std::size_t k0, int i1, int j1, std::size_t k1, long edge) {
            const long key = 2 * edge + long(k0);
            if (!point.count(key)) {
                const double a = at(i0, j0, f, k0).value, b = at(i1, j1, f, k1).value;
                point[key] = node(i0, j0) + (a / (a - b)) * (node(i1, j1) - node(i0, j0));
            }
            return key;
        };
        auto link = [&](long a, long b) {
            if (!g.mask) {
                adj[a].push_back(b);
                adj[b].push_back(a);
                return;
            }
            C p = point[a], q = point[b];
            const bool ip = detail::in_fundamental(p), iq = detail::in_fundamental(q);
            if (!ip && !iq) return;
            if (ip != iq) {
                const C cut = p + detail::circle_cut(p, q) * (q - p);
                const long k = fresh--;
                point[k] = cut;
                (ip ? b : a) = k;
            }
            adj[a].push_back(b);
            adj[b].push_back(a);
        };
        for (int j = 0; j + 1 < n; ++j) {
            for (int i = 0; i + 1 < n; ++i) {
                for (std::size_t k = 0; k < sheets[f]; ++k) {
                    // the same branch at all four corners; skip cells around a branch point
                    const std::size_t ka = k, kb = follow(i, j, i + 1, j, ka), kd = follow(i, j, i, j + 1, ka);
                    const std::size_t kc = follow(i + 1, j, i + 1, j + 1, kb);
                    if (follow(i, j + 1, i + 1, j + 1, kd) != kc) continue;
                    const double va = at(i, j, f, ka).value, vb = at(i + 1, j, f, kb).value;
                    const double vc = at(i + 1, j + 1, f, kc).value, vd = at(i, j + 1, f, kd).value;
                    if (std::isnan(va) || std::isnan(vb) || std::isnan(vc) || std::isnan(vd)) continue;
                    const bool sa = va > 0, sb = vb > 0, sc = vc > 0, sd = vd > 0;
                    const long bottom = 2L * (long(j) * n + i), left = bottom + 1;
                    const long top = 2L * (long(j + 1) * n + i), right = 2L * (long(j) * n + i + 1) + 1;
                    std::vector<long> e;
                    if (sa != sb) e.push_back(crossing(i, j, ka, i + 1, j, kb, bottom));
                    if (sb != sc) e.push_back(crossing(i + 1, j, kb, i + 1, j + 1, kc, right));
                    if (sd != sc) e.push_back(crossing(i, j + 1, kd, i + 1, j + 1, kc, top));
                    if (sa != sd) e.push_back(crossing(i, j, ka, i, j + 1, kd, left));
                    if (e.size() == 2) {
                        link(e[0], e[1]);
                    } else if (e.size() == 4) {
                        // saddle: the center value decides which pair of corners connects
                        const bool center = (va + vb + vc + vd) > 0;
                        if (center == sa) {
                            link(e[0], e[1]);  // bottom-right cuts off b
                            link(e[2], e[3]);  // top-left cuts off d
                        } else {
                            link(e[0], e[3]);  // bottom-left cuts off a
                            link(e[1], e[2]);  // right-top cuts off c
                        }
                    }
                }
            }
        }
        // walk chains: open ones from their ends first, then cycles
        std::map<long, bool> seen;
        auto walk = [&](long start) {
            Polyline pl;
            pl.label = labels[f];
            pl.field = int(f);
            long prev = std::numeric_limits<long>::min(), cur = start;
            while (true) {
                seen[cur] = true;
                pl.pts.push_back(point[cur]);
                long next = std::numeric_limits<long>::min();
                for (long nb : adj[cur]) {
                    if (nb != prev && !seen[nb]) {
                        next = nb;
                        break;
                    }
                }
                if (next == std::numeric_limits<long>::min()) {
                    for (long nb : adj[cur]) {
                        if (nb == start && nb != prev && pl.pts.size() > 2) {
                            pl.closed = true;
                            pl.pts.push_back(point[start]);
                        }
                    }
                    break;
                }
                prev = cur;
                cur = next;
            }
            out.lines.push_back(std::move(pl));
        };
        for (const auto& [k, nb] : adj) {
            if (nb.size() == 1 && !seen[k]) walk(k);
        }
        for (const auto& [k, nb] : adj) {
            if (!seen[k]) walk(k);
        }
    }
    out.components = int(out.lines.size());
    return out;
}

// ---------------------------------------------------------------------------
// J-plane

/// max over sampled points of A, mapped by f, of the distance to the nearest point of B.
template <class Map>
double directed_hausdorff(const std::vector<std::complex<double>>& A, const std::vector<std::complex<double>>& B, Map f,
                          std::size_t samples = 200) {
    double worst = 0;
    const std::size_t step = std::max<std::size_t>(1, A.size() / samples);
    for (std::size_t i = 0; i < A.size(); i += step) {
        const auto p = f(A[i]);
        double best = std::numeric_limits<double>::infinity();
        for (const auto& b : B) best = std::min(best, std::abs(p - b));
        worst = std::max(worst, best);
    }
    return worst;
}

struct MergeSpec {
    double position_cells = 2.0;  ///< identified endpoints on the circle agree to this many cells
    double edge_cells = 0.02;     ///< on the edges both columns are sampled, so crossings agree closely
    double tangent_cells = 3.0;   ///< tangent measured over this many cells
    double duplicate_cells = 0.5; ///< an arc this close (both ways) to the image of another under tau + 1 or -1/tau duplicates it
};

namespace detail {

/// Field label after relabeling the roots by perm (1-based): tau -> tau + 1
/// swaps e2 and e3, tau -> -1/tau swaps e1 and e2.
inline std::string relabel(std::string label, const std::array<char, 3>& perm) {
    std::vector<std::size_t> at;
    for (std::size_t i = 0; i < label.size(); ++i) {
        if (label[i] >= '1' && label[i] <= '3') {
            label[i] = perm[std::size_t(label[i] - '1')];
            at.push_back(i);
        }
    }
    if (at.size() == 2 && label[at[0]] > label[at[1]]) std::swap(label[at[0]], label[at[1]]);
    return label;
}

struct BoundaryEnd {
    std::size_t line;
    std::complex<double> at, inward;  ///< endpoint and unit tangent pointing into the arc
    int side;                         ///< -1 left edge, +1 right edge, -2 / +2 arc left / right of Re = 0
};

inline std::vector<BoundaryEnd> boundary_ends(const CurveSet& cs, double tangent_len) {
    const double eps = 1e-9;
    std::vector<BoundaryEnd> out;
    for (std::size_t i = 0; i < cs.lines.size(); ++i) {
        const auto& pts = cs.lines[i].pts;
        if (cs.lines[i].closed || pts.size() < 2) continue;
        for (int end = 0; end < 2; ++end) {
            const std::complex<double> p = end == 0 ? pts.front() : pts.back();
            int side = 0;
            if (std::abs(p.real() + 0.5) < eps) side = -1;
            else if (std::abs(p.real() - 0.5) < eps) side = 1;
            else if (std::abs(std::abs(p) - 1) < 1e-9) side = p.real() < 0 ? -2 : 2;
            if (side == 0) continue;
            std::complex<double> q = p;
            for (std::size_t k = 1; k < pts.size(); ++k) {
                q = end == 0 ? pts[k] : pts[pts.size() - 1 - k];
                if (std::abs(q - p) >= tangent_len) break;
            }
            if (q == p) continue;
            out.push_back({i, p, (q - p) / std::abs(q - p), side});
        }
    }
    return out;
}

inline std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

}  // namespace detail

/// Maps tau-plane polylines to J. Arcs are joined where they leave the
/// fundamental domain through one boundary point and re-enter through the
/// identified point (tau + 1 on the edges, -1/tau on the unit circle) under
/// the relabeled condition; each endpoint is joined at most once, and among
/// several candidates the best continued tangent wins. An arc lying on the
/// image of another under tau + 1, tau - 1 or -1/tau is a duplicate. Mirror
/// arcs tau and -conj(tau) have conjugate J and stay apart, even where both
/// images crowd together near J = 0 or along the real axis.
inline CurveSet map_to_J(const CurveSet& tau, const MergeSpec& merge = {}) {
    using C = std::complex<double>;
    CurveSet out;
    out.m = tau.m;
    out.plane = "J";
    out.grid = tau.grid;
    for (const auto& l : tau.lines) {
        Polyline j{l.label, l.field, {}, l.closed};
        for (const auto& t : l.pts) j.pts.push_back(lattice_from_tau(t).J);
        out.lines.push_back(std::move(j));
    }
    const std::size_t n = out.lines.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t(0));
    auto unite = [&](std::size_t a, std::size_t b) { parent[detail::find_root(parent, a)] = detail::find_root(parent, b); };

    const double cell = std::max((tau.grid.re_hi - tau.grid.re_lo), (tau.grid.im_hi - tau.grid.im_lo)) / (tau.grid.n - 1);
    out.tolerance = merge.duplicate_cells * cell;
    const auto ends = detail::boundary_ends(tau, merge.tangent_cells * cell);
    struct Candidate {
        double score;
        std::size_t a, b;
    };
    std::vector<Candidate> cand;
    for (std::size_t a = 0; a < ends.size(); ++a) {
        for (std::size_t b = 0; b < ends.size(); ++b) {
            const auto &x = ends[a], &y = ends[b];
            if (x.side >= 0 || y.side != -x.side) continue;  // each pair once, from the left
            // identified point and the tangent of x carried across the boundary
            const bool edge = x.side == -1;
            const C image = edge ? x.at + 1.0 : -1.0 / x.at;
            const C carried = edge ? -x.inward : -x.inward / (x.at * x.at);
            if (std::abs(image - y.at) > (edge ? merge.edge_cells : merge.position_cells) * cell) continue;
            const auto perm = edge ? std::array<char, 3>{'1', '3', '2'} : std::array<char, 3>{'2', '1', '3'};
            if (detail::relabel(tau.lines[x.line].label, perm) != tau.lines[y.line].label) continue;
            const double align = (std::conj(carried) * y.inward).real() / std::abs(carried);
            cand.push_back({align, a, b});
        }
    }
    std::sort(cand.begin(), cand.end(), [](const Candidate& u, const Candidate& v) {
        return u.score != v.score ? u.score > v.score : std::tie(u.a, u.b) < std::tie(v.a, v.b);
    });
    std::vector<bool> used(ends.size(), false);
    for (const auto& c : cand) {
        if (used[c.a] || used[c.b]) continue;
        used[c.a] = used[c.b] = true;
        unite(ends[c.a].line, ends[c.b].line);
        out.joins.emplace_back(ends[c.a].line, ends[c.b].line);
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b || detail::find_root(parent, a) == detail::find_root(parent, b)) continue;
            const auto &A = tau.lines[a].pts, &B = tau.lines[b].pts;
            auto near = [&](auto f, auto inv) {
                return directed_hausdorff(A, B, f) < out.tolerance && directed_hausdorff(B, A, inv) < out.tolerance;
            };
            auto T = [](C t) { return t + 1.0; };
            auto Ti = [](C t) { return t - 1.0; };
            auto S = [](C t) { return -1.0 / t; };
            const bool dup = near(T, Ti) || near(Ti, T) || near(S, S);
            if (dup) {
                unite(a, b);
                out.duplicates.emplace_back(a, b);
            }
        }
    }
    std::map<std::size_t, int> ids;
    for (std::size_t i = 0; i < n; ++i) {
        const auto r = detail::find_root(parent, i);
        if (!ids.count(r)) ids.emplace(r, int(ids.size()));
        out.merged_of.push_back(ids[r]);
    }
    out.components = int(ids.size());
    return out;
}

}  // namespace lame
