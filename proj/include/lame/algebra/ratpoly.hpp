#pragma once

// Dense univariate polynomials over Q, Sturm sequences and exact real-root
// isolation.

#include <optional>
#include <utility>
#include <vector>

#include "lame/algebra/mpoly.hpp"

namespace lame {

class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }
    RatPoly(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }
    static RatPoly constant(const BigRat& v) { return RatPoly(std::vector<BigRat>{v}); }
    static RatPoly monomial(const BigRat& v, std::size_t k) {
        std::vector<BigRat> c(k + 1, BigRat(0));
        c[k] = v;
        return RatPoly(std::move(c));
    }

    /// From an MPoly that only involves `v`.
    static RatPoly from_mpoly(const MPoly& p, Var v) {
        std::vector<BigRat> c(std::size_t(std::max(p.degree_in(v), 0)) + 1, BigRat(0));
        for (const auto& t : p.terms()) {
            if (t.mono.degree() != t.mono[v]) throw InvalidArgument("polynomial is not univariate");
            c[t.mono[v]] += t.coef;
        }
        return RatPoly(std::move(c));
    }

    MPoly to_mpoly(Var v) const {
        std::vector<Term> ts;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (sgn(c_[k]) != 0) ts.push_back({Monomial::of(v, unsigned(k)), c_[k]});
        }
        return MPoly::from_terms(std::move(ts));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return int(c_.size()) - 1; }
    const std::vector<BigRat>& coeffs() const { return c_; }
    BigRat coeff(int k) const { return (k < 0 || k > degree()) ? BigRat(0) : c_[std::size_t(k)]; }
    const BigRat& lc() const { return c_.back(); }

    BigRat operator()(const BigRat& x) const {
        BigRat acc(0);
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
        return acc;
    }

    double eval(double x) const {
        double acc = 0;
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k].get_d();
        return acc;
    }

    RatPoly derivative() const {
        std::vector<BigRat> d;
        for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * long(k));
        return RatPoly(std::move(d));
    }

    RatPoly monic() const {
        if (is_zero()) return *this;
        RatPoly r = *this;
        BigRat inv = 1 / lc();
        for (auto& v : r.c_) v *= inv;
        return r;
    }

    friend RatPoly operator+(const RatPoly& l, const RatPoly& r) {
        std::vector<BigRat> c(std::max(l.c_.size(), r.c_.size()), BigRat(0));
        for (std::size_t k = 0; k < l.c_.size(); ++k) c[k] += l.c_[k];
        for (std::size_t k = 0; k < r.c_.size(); ++k) c[k] += r.c_[k];
        return RatPoly(std::move(c));
    }
    friend RatPoly operator-(const RatPoly& l, const RatPoly& r) { return l + r * BigRat(-1); }
    friend RatPoly operator*(const RatPoly& l, const BigRat& s) {
        std::vector<BigRat> c = l.c_;
        for (auto& v : c) v *= s;
        return RatPoly(std::move(c));
    }
    friend RatPoly operator*(const RatPoly& l, const RatPoly& r) {
        if (l.is_zero() || r.is_zero()) return {};
        std::vector<BigRat> c(l.c_.size() + r.c_.size() - 1, BigRat(0));
        for (std::size_t i = 0; i < l.c_.size(); ++i) {
            for (std::size_t j = 0; j < r.c_.size(); ++j) c[i + j] += l.c_[i] * r.c_[j];
        }
        return RatPoly(std::move(c));
    }
    friend bool operator==(const RatPoly& l, const RatPoly& r) { return l.c_ == r.c_; }

    /// Quotient and remainder.
    std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const {
        if (d.is_zero()) throw InvalidArgument("division by zero polynomial");
        std::vector<BigRat> rem = c_;
        int dd = d.degree();
        std::vector<BigRat> q(std::size_t(std::max(degree() - dd + 1, 0)), BigRat(0));
        for (int k = degree(); k >= dd; --k) {
            BigRat f = rem[std::size_t(k)] / d.lc();
            if (sgn(f) == 0) continue;
            q[std::size_t(k - dd)] = f;
            for (int i = 0; i <= dd; ++i) rem[std::size_t(k - dd + i)] -= f * d.c_[std::size_t(i)];
        }
        rem.resize(std::size_t(std::max(std::min(degree() + 1, dd), 0)));
        return {RatPoly(std::move(q)), RatPoly(std::move(rem))};
    }

    RatPoly exact_div(const RatPoly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw NonDivisible("nonzero remainder in univariate division");
        return q;
    }

    friend RatPoly gcd(RatPoly a, RatPoly b) {
        while (!b.is_zero()) {
            RatPoly r = a.divmod(b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

private:
    std::vector<BigRat> c_;

    void trim() {
        while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    }
};

/// Squarefree decomposition (Yun). Returns monic factors of positive degree
/// with their multiplicities, in increasing multiplicity.
inline std::vector<std::pair<RatPoly, int>> yun_squarefree(const RatPoly& f) {
    std::vector<std::pair<RatPoly, int>> out;
    if (f.degree() < 1) return out;
    RatPoly fp = f.derivative();
    RatPoly a0 = gcd(f, fp);
    RatPoly b = f.exact_div(a0);
    RatPoly c = fp.exact_div(a0);
    RatPoly d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        RatPoly a = gcd(b, d);
        if (a.degree() > 0) out.emplace_back(a, i);
        b = b.exact_div(a);
        c = d.exact_div(a);
        d = c - b.derivative();
    }
    return out;
}

/// Sturm sequence f, f', -rem(...), ...
inline std::vector<RatPoly> sturm_sequence(const RatPoly& f) {
    std::vector<RatPoly> seq{f, f.derivative()};
    while (!seq.back().is_zero()) {
        RatPoly r = seq[seq.size() - 2].divmod(seq.back()).second;
        if (r.is_zero()) break;
        // scaling by a positive constant keeps every sign, and the size down
        seq.push_back(r * BigRat(-1 / abs(r.lc())));
    }
    return seq;
}

inline int sign_changes_at(const std::vector<RatPoly>& seq, const BigRat& x) {
    int changes = 0, prev = 0;
    for (const auto& p : seq) {
        int s = sgn(p(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

/// Number of distinct real roots in (lo, hi].
inline int count_roots(const std::vector<RatPoly>& seq, const BigRat& lo, const BigRat& hi) {
    return sign_changes_at(seq, lo) - sign_changes_at(seq, hi);
}

/// Cauchy bound: every root has |x| < bound.
inline BigRat root_bound(const RatPoly& f) {
    BigRat m(0);
    for (int k = 0; k < f.degree(); ++k) {
        BigRat v = abs(f.coeff(k) / f.lc());
        if (v > m) m = v;
    }
    return m + 1;
}

struct RootInterval {
    BigRat lo, hi;  ///< exactly one root in (lo, hi]; lo == hi marks an exact rational root
    double approx() const { return (lo.get_d() + hi.get_d()) / 2; }
};

/// Isolates every distinct real root of `f` into disjoint intervals of width
/// at most `width`, sorted ascending.
inline std::vector<RootInterval> isolate_real_roots(const RatPoly& f, const BigRat& width = BigRat(1, 1000000)) {
    std::vector<RootInterval> out;
    if (f.degree() < 1) return out;
    RatPoly sf = f.exact_div(gcd(f, f.derivative()));
    auto seq = sturm_sequence(sf);
    BigRat b = root_bound(sf);
    std::vector<RootInterval> stack{{-b, b}};
    while (!stack.empty()) {
        RootInterval iv = stack.back();
        stack.pop_back();
        int n = count_roots(seq, iv.lo, iv.hi);
        if (n == 0) continue;
        if (n == 1 && iv.hi - iv.lo <= width) {
            out.push_back(iv);
            continue;
        }
        BigRat mid = (iv.lo + iv.hi) / 2;
        if (n == 1 && sgn(sf(mid)) == 0) {
            out.push_back({mid, mid});
            continue;
        }
        stack.push_back({iv.lo, mid});
        stack.push_back({mid, iv.hi});
    }
    std::sort(out.begin(), out.end(), [](const RootInterval& l, const RootInterval& r) { return l.hi < r.hi; });
    return out;
}

/// Rational roots of f, ascending. Uses the rational-root theorem on the
/// integer-scaled polynomial, confirmed by exact evaluation.
inline std::vector<BigRat> rational_roots(const RatPoly& f) {
    std::vector<BigRat> out;
    if (f.degree() < 1) return out;
    RatPoly sf = f.exact_div(gcd(f, f.derivative()));
    // Roots of sf; isolate then test the unique rational candidate of small height.
    for (const auto& iv : isolate_real_roots(sf, BigRat(1, 1) / BigRat(1 << 20))) {
        if (iv.lo == iv.hi) {
            out.push_back(iv.lo);
            continue;
        }
        // Clear denominators: integer poly a_n x^n + ... + a_0; a rational root p/q has q | a_n.
        BigInt den(1);
        for (const auto& c : sf.coeffs()) den = lcm(den, BigInt(c.get_den()));
        BigInt lead = BigInt(sf.lc() * den);
        lead = abs(lead);
        // Enumerate divisors q of the leading coefficient and test round(x*q)/q.
        std::vector<BigInt> divisors;
        for (BigInt q = 1; q * q <= lead; ++q) {
            if (lead % q == 0) {
                divisors.push_back(q);
                if (q * q != lead) divisors.push_back(lead / q);
            }
            if (divisors.size() > 4096) break;
        }
        for (const auto& q : divisors) {
            BigRat lo = iv.lo * q, hi = iv.hi * q;
            BigInt p;
            mpz_cdiv_q(p.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
            for (; BigRat(p) <= hi; ++p) {
                BigRat cand(p, q);
                cand.canonicalize();
                if (cand > iv.lo && cand <= iv.hi && sgn(sf(cand)) == 0) {
                    out.push_back(cand);
                    goto next_interval;
                }
            }
        }
    next_interval:;
    }
    return out;
}

}  // namespace lame
