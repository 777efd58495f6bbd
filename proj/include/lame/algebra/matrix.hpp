#pragma once

#include <vector>

#include "lame/algebra/mpoly.hpp"
#include "lame/algebra/upoly.hpp"

namespace lame {

/// Square matrix of polynomials.
class PolyMatrix {
public:
    PolyMatrix() = default;
    explicit PolyMatrix(std::size_t n) : n_(n), a_(n * n) {}
    PolyMatrix(std::initializer_list<std::initializer_list<MPoly>> rows) {
        n_ = rows.size();
        for (const auto& r : rows) {
            if (r.size() != n_) throw InvalidArgument("matrix must be square");
            a_.insert(a_.end(), r.begin(), r.end());
        }
    }

    std::size_t size() const { return n_; }
    MPoly& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const MPoly& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    /// True when every entry below the first subdiagonal vanishes.
    bool is_upper_hessenberg() const {
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j + 1 < i; ++j) {
                if (!(*this)(i, j).is_zero()) return false;
            }
        }
        return true;
    }

    PolyMatrix transposed() const {
        PolyMatrix t(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
        }
        return t;
    }

    PolyMatrix substitute(const std::vector<std::pair<Var, MPoly>>& subs) const {
        PolyMatrix r(n_);
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k].substitute(subs);
        return r;
    }

private:
    std::size_t n_ = 0;
    std::vector<MPoly> a_;
};

namespace detail {

inline void require_free_of(const PolyMatrix& m, Var v) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (m(i, j).contains(v)) throw InvalidArgument("matrix entries contain the eigenvalue variable");
        }
    }
}

/// Coefficients of det(var I - M), constant term first, via Berkowitz.
inline std::vector<MPoly> berkowitz(const PolyMatrix& m) {
    const std::size_t n = m.size();
    // p holds the characteristic polynomial of the leading r x r block, highest power first.
    std::vector<MPoly> p{MPoly(1)};
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<MPoly> t;
        t.reserve(r + 2);
        t.push_back(MPoly(1));
        t.push_back(-m(r, r));
        // w = M_r^k C, starting from the column above the diagonal.
        std::vector<MPoly> w(r);
        for (std::size_t i = 0; i < r; ++i) w[i] = m(i, r);
        for (std::size_t k = 0; k < r; ++k) {
            MPoly dot;
            for (std::size_t i = 0; i < r; ++i) {
                if (!m(r, i).is_zero() && !w[i].is_zero()) dot += m(r, i) * w[i];
            }
            t.push_back(-dot);
            if (k + 1 < r) {
                std::vector<MPoly> nw(r);
                for (std::size_t i = 0; i < r; ++i) {
                    for (std::size_t j = 0; j < r; ++j) {
                        if (!m(i, j).is_zero() && !w[j].is_zero()) nw[i] += m(i, j) * w[j];
                    }
                }
                w = std::move(nw);
            }
        }
        std::vector<MPoly> np(r + 2);
        for (std::size_t i = 0; i < r + 2; ++i) {
            for (std::size_t j = 0; j <= std::min(i, r); ++j) {
                if (!t[i - j].is_zero() && !p[j].is_zero()) np[i] += t[i - j] * p[j];
            }
        }
        p = std::move(np);
    }
    return {p.rbegin(), p.rend()};
}

/// Coefficients of det(var I - H) for upper Hessenberg H, constant term first.
inline std::vector<MPoly> hessenberg_charpoly(const PolyMatrix& h) {
    const std::size_t n = h.size();
    // polys[k] = char poly of leading k x k block, constant term first.
    std::vector<std::vector<MPoly>> polys{{MPoly(1)}};
    for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t c = k - 1;
        // (var - h_cc) * polys[k-1]
        const auto& prev = polys[k - 1];
        std::vector<MPoly> cur(k + 1);
        for (std::size_t i = 0; i < prev.size(); ++i) {
            cur[i + 1] += prev[i];
            cur[i] -= h(c, c) * prev[i];
        }
        // - sum_i h_{i,c} * prod_{j=i+1..c} h_{j,j-1} * polys[i]
        MPoly prod(1);
        for (std::size_t i = c; i-- > 0;) {
            prod = prod * h(i + 1, i);
            if (prod.is_zero()) break;
            if (h(i, c).is_zero()) continue;
            MPoly f = h(i, c) * prod;
            for (std::size_t q = 0; q < polys[i].size(); ++q) cur[q] -= f * polys[i][q];
        }
        polys.push_back(std::move(cur));
    }
    return polys.back();
}

}  // namespace detail

/// det(var I - M) as a monic polynomial in `var`.
inline UPoly char_poly(const PolyMatrix& m, Var var) {
    detail::require_free_of(m, var);
    auto cs = m.is_upper_hessenberg() ? detail::hessenberg_charpoly(m) : detail::berkowitz(m);
    return UPoly(var, std::move(cs));
}

/// det(var I - M) by the general Berkowitz route, bypassing the Hessenberg shortcut.
inline UPoly char_poly_berkowitz(const PolyMatrix& m, Var var) {
    detail::require_free_of(m, var);
    return UPoly(var, detail::berkowitz(m));
}

/// Fraction-free determinant (Bareiss elimination with row pivoting).
inline MPoly bareiss_det(PolyMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return MPoly(1);
    MPoly prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && m(piv, k).is_zero()) ++piv;
            if (piv == n) return MPoly();
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MPoly num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = num.exact_div(prev);
            }
            m(i, k) = MPoly();
        }
        prev = m(k, k);
    }
    MPoly d = m(n - 1, n - 1);
    return negate ? -d : d;
}

}  // namespace lame
