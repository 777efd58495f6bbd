#pragma once

// Sparse multivariate polynomials with exact rational coefficients.
//
// Every polynomial lives over one fixed, global set of variables. Terms are
// kept sorted in descending graded-lexicographic order, where the lex
// tie-break follows the declaration order of `Var`. The zero polynomial has
// no terms.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "lame/errors.hpp"

namespace lame {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (GMP keeps `mpq_class` canonical after every operation).
using BigRat = mpq_class;
using BigInt = mpz_class;

inline BigRat make_rat(long num, long den = 1) {
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

/// Variables known to the algebra kernel, in monomial-order priority.
enum class Var : std::uint8_t {
    lambda, B, g2, g3, a, e1, e2, e3,
    x, z, J, u, v, t,
};

inline constexpr std::size_t kNumVars = 14;

inline constexpr std::array<std::string_view, kNumVars> kVarNames = {
    "lambda", "B", "g2", "g3", "a", "e1", "e2", "e3",
    "x", "z", "J", "u", "v", "t",
};

constexpr std::size_t index_of(Var v) { return static_cast<std::size_t>(v); }

inline std::string_view var_name(Var v) { return kVarNames[index_of(v)]; }

inline std::optional<Var> var_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kNumVars; ++i) {
        if (kVarNames[i] == name) return static_cast<Var>(i);
    }
    return std::nullopt;
}

/// Exponent vector over all `kNumVars` variables, with cached total degree.
class Monomial {
public:
    using Exponent = std::uint16_t;

    Monomial() { exps_.fill(0); }

    static Monomial of(Var v, unsigned power = 1) {
        Monomial m;
        m.exps_[index_of(v)] = static_cast<Exponent>(power);
        m.degree_ = power;
        return m;
    }

    unsigned operator[](Var v) const { return exps_[index_of(v)]; }
    unsigned at(std::size_t i) const { return exps_[i]; }
    unsigned degree() const { return degree_; }
    bool is_one() const { return degree_ == 0; }

    void set(Var v, unsigned power) {
        degree_ = degree_ - exps_[index_of(v)] + power;
        exps_[index_of(v)] = static_cast<Exponent>(power);
    }

    friend Monomial operator*(const Monomial& l, const Monomial& r) {
        Monomial m;
        for (std::size_t i = 0; i < kNumVars; ++i) {
            unsigned e = unsigned(l.exps_[i]) + r.exps_[i];
            if (e > 0xFFFFu) throw InvalidArgument("monomial exponent overflow");
            m.exps_[i] = static_cast<Exponent>(e);
        }
        m.degree_ = l.degree_ + r.degree_;
        return m;
    }

    bool divides(const Monomial& other) const {
        if (degree_ > other.degree_) return false;
        for (std::size_t i = 0; i < kNumVars; ++i) {
            if (exps_[i] > other.exps_[i]) return false;
        }
        return true;
    }

    /// other / *this; caller guarantees divisibility.
    Monomial cofactor_in(const Monomial& other) const {
        Monomial m;
        for (std::size_t i = 0; i < kNumVars; ++i) {
            m.exps_[i] = static_cast<Exponent>(other.exps_[i] - exps_[i]);
        }
        m.degree_ = other.degree_ - degree_;
        return m;
    }

    /// Graded lex comparison: negative if l < r, zero if equal, positive if l > r.
    friend int compare(const Monomial& l, const Monomial& r) {
        if (l.degree_ != r.degree_) return l.degree_ < r.degree_ ? -1 : 1;
        for (std::size_t i = 0; i < kNumVars; ++i) {
            if (l.exps_[i] != r.exps_[i]) return l.exps_[i] < r.exps_[i] ? -1 : 1;
        }
        return 0;
    }

    friend bool operator==(const Monomial& l, const Monomial& r) {
        return l.degree_ == r.degree_ && l.exps_ == r.exps_;
    }

private:
    std::array<Exponent, kNumVars> exps_{};
    unsigned degree_ = 0;
};

struct Term {
    Monomial mono;
    BigRat coef;
};

/// Sparse polynomial in the global variables with `BigRat` coefficients.
/// Immutable in spirit: all operators return new values.
class MPoly {
public:
    MPoly() = default;
    MPoly(long c) { if (c != 0) terms_.push_back({Monomial{}, BigRat(c)}); }
    MPoly(const BigRat& c) { if (sgn(c) != 0) terms_.push_back({Monomial{}, c}); }

    static MPoly var(Var v, unsigned power = 1) {
        MPoly p;
        p.terms_.push_back({Monomial::of(v, power), BigRat(1)});
        return p;
    }

    static MPoly term(const BigRat& c, const Monomial& m) {
        MPoly p;
        if (sgn(c) != 0) p.terms_.push_back({m, c});
        return p;
    }

    /// Builds from unsorted terms; combines duplicates and drops zeros.
    static MPoly from_terms(std::vector<Term> terms) {
        std::sort(terms.begin(), terms.end(), [](const Term& l, const Term& r) {
            return compare(l.mono, r.mono) > 0;
        });
        MPoly p;
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
                p.terms_.back().coef += t.coef;
            } else {
                if (!p.terms_.empty() && sgn(p.terms_.back().coef) == 0) p.terms_.pop_back();
                p.terms_.push_back(std::move(t));
            }
        }
        if (!p.terms_.empty() && sgn(p.terms_.back().coef) == 0) p.terms_.pop_back();
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    std::size_t size() const { return terms_.size(); }
    std::span<const Term> terms() const { return terms_; }

    /// Value of a constant polynomial (0 for the zero polynomial).
    BigRat constant_value() const {
        if (terms_.empty()) return BigRat(0);
        if (!is_constant()) throw InvalidArgument("polynomial is not constant");
        return terms_[0].coef;
    }

    /// Coefficient of the constant term.
    BigRat constant_term() const {
        if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
        return BigRat(0);
    }

    const Term& leading_term() const {
        if (terms_.empty()) throw InvalidArgument("leading term of zero polynomial");
        return terms_.front();
    }

    /// Total degree; -1 stands in for minus infinity on the zero polynomial.
    int total_degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, int(t.mono.degree()));
        return d;
    }

    /// Degree in one variable; -1 on the zero polynomial.
    int degree_in(Var v) const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, int(t.mono[v]));
        return d;
    }

    bool contains(Var v) const {
        return std::any_of(terms_.begin(), terms_.end(), [v](const Term& t) { return t.mono[v] > 0; });
    }

    /// Variables that occur, in global order.
    std::vector<Var> variables() const {
        std::vector<Var> out;
        for (std::size_t i = 0; i < kNumVars; ++i) {
            auto v = static_cast<Var>(i);
            if (contains(v)) out.push_back(v);
        }
        return out;
    }

    MPoly operator-() const {
        MPoly r = *this;
        for (auto& t : r.terms_) t.coef = -t.coef;
        return r;
    }

    friend MPoly operator+(const MPoly& l, const MPoly& r) { return merge(l, r, false); }
    friend MPoly operator-(const MPoly& l, const MPoly& r) { return merge(l, r, true); }

    friend MPoly operator*(const MPoly& l, const MPoly& r) {
        if (l.is_zero() || r.is_zero()) return {};
        const MPoly& big = l.size() >= r.size() ? l : r;
        const MPoly& small = l.size() >= r.size() ? r : l;
        std::vector<MPoly> rows;
        rows.reserve(small.size());
        for (const auto& t : small.terms_) rows.push_back(big.mul_term(t.coef, t.mono));
        return sum_tree(rows, 0, rows.size());
    }

    friend MPoly operator*(const MPoly& p, const BigRat& c) { return p.scaled(c); }
    friend MPoly operator*(const BigRat& c, const MPoly& p) { return p.scaled(c); }

    MPoly& operator+=(const MPoly& r) { return *this = *this + r; }
    MPoly& operator-=(const MPoly& r) { return *this = *this - r; }
    MPoly& operator*=(const MPoly& r) { return *this = *this * r; }

    friend bool operator==(const MPoly& l, const MPoly& r) {
        if (l.terms_.size() != r.terms_.size()) return false;
        for (std::size_t i = 0; i < l.terms_.size(); ++i) {
            if (!(l.terms_[i].mono == r.terms_[i].mono) || l.terms_[i].coef != r.terms_[i].coef) return false;
        }
        return true;
    }

    MPoly scaled(const BigRat& c) const {
        if (sgn(c) == 0) return {};
        MPoly r = *this;
        for (auto& t : r.terms_) t.coef *= c;
        return r;
    }

    MPoly mul_term(const BigRat& c, const Monomial& m) const {
        MPoly r;
        if (sgn(c) == 0) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
        return r;
    }

    MPoly pow(unsigned k) const {
        MPoly result(1), base = *this;
        while (k) {
            if (k & 1u) result *= base;
            k >>= 1u;
            if (k) base *= base;
        }
        return result;
    }

    /// Partial derivative.
    MPoly derivative(Var v) const {
        std::vector<Term> out;
        for (const auto& t : terms_) {
            unsigned e = t.mono[v];
            if (e == 0) continue;
            Monomial m = t.mono;
            m.set(v, e - 1);
            out.push_back({m, t.coef * e});
        }
        // Differentiation can reorder terms, so re-sort.
        return from_terms(std::move(out));
    }

    /// Simultaneous substitution of polynomials for variables.
    MPoly substitute(const std::vector<std::pair<Var, MPoly>>& subs) const {
        if (subs.empty()) return *this;
        std::vector<std::vector<MPoly>> powers(subs.size());
        for (std::size_t i = 0; i < subs.size(); ++i) {
            int d = degree_in(subs[i].first);
            powers[i].push_back(MPoly(1));
            for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * subs[i].second);
        }
        std::vector<MPoly> parts;
        parts.reserve(terms_.size());
        for (const auto& t : terms_) {
            Monomial rest = t.mono;
            MPoly factor(t.coef);
            for (std::size_t i = 0; i < subs.size(); ++i) {
                unsigned e = t.mono[subs[i].first];
                rest.set(subs[i].first, 0);
                if (e) factor = factor * powers[i][e];
            }
            parts.push_back(factor.mul_term(BigRat(1), rest));
        }
        return sum_tree(parts, 0, parts.size());
    }

    MPoly substitute(Var v, const MPoly& value) const { return substitute({{v, value}}); }

    /// Collects the coefficient of v^k, as a polynomial in the remaining variables.
    MPoly coefficient(Var v, unsigned k) const {
        std::vector<Term> out;
        for (const auto& t : terms_) {
            if (t.mono[v] != k) continue;
            Monomial m = t.mono;
            m.set(v, 0);
            out.push_back({m, t.coef});
        }
        return from_terms(std::move(out));
    }

    /// Exact quotient; throws `NonDivisible` if `d` does not divide `*this`.
    MPoly exact_div(const MPoly& d) const {
        if (d.is_zero()) throw InvalidArgument("division by the zero polynomial");
        if (d.is_constant()) return scaled(1 / d.terms_[0].coef);
        const Term& lead = d.terms_.front();
        std::vector<Term> quotient;
        MPoly rem = *this;
        while (!rem.is_zero()) {
            const Term& rt = rem.terms_.front();
            if (!lead.mono.divides(rt.mono)) throw NonDivisible("nonzero remainder");
            Term q{lead.mono.cofactor_in(rt.mono), rt.coef / lead.coef};
            rem = rem - d.mul_term(q.coef, q.mono);
            quotient.push_back(std::move(q));
        }
        // Quotient terms are produced in descending order already.
        MPoly out;
        out.terms_ = std::move(quotient);
        return out;
    }

    /// Division that returns nullopt instead of throwing.
    std::optional<MPoly> try_exact_div(const MPoly& d) const {
        try {
            return exact_div(d);
        } catch (const NonDivisible&) {
            return std::nullopt;
        }
    }

    /// Evaluation at rational values for every occurring variable.
    BigRat evaluate(const std::vector<std::pair<Var, BigRat>>& values) const {
        std::vector<std::pair<Var, MPoly>> subs;
        for (const auto& [v, c] : values) subs.emplace_back(v, MPoly(c));
        return substitute(subs).constant_value();
    }

private:
    std::vector<Term> terms_;

    static MPoly merge(const MPoly& l, const MPoly& r, bool subtract) {
        MPoly out;
        out.terms_.reserve(l.terms_.size() + r.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < l.terms_.size() || j < r.terms_.size()) {
            int c;
            if (i == l.terms_.size()) c = -1;
            else if (j == r.terms_.size()) c = 1;
            else c = compare(l.terms_[i].mono, r.terms_[j].mono);
            if (c > 0) {
                out.terms_.push_back(l.terms_[i++]);
            } else if (c < 0) {
                out.terms_.push_back(r.terms_[j++]);
                if (subtract) out.terms_.back().coef = -out.terms_.back().coef;
            } else {
                BigRat s = subtract ? BigRat(l.terms_[i].coef - r.terms_[j].coef)
                                    : BigRat(l.terms_[i].coef + r.terms_[j].coef);
                if (sgn(s) != 0) out.terms_.push_back({l.terms_[i].mono, std::move(s)});
                ++i;
                ++j;
            }
        }
        return out;
    }

    static MPoly sum_tree(std::vector<MPoly>& parts, std::size_t lo, std::size_t hi) {
        if (hi <= lo) return {};
        if (hi - lo == 1) return std::move(parts[lo]);
        std::size_t mid = lo + (hi - lo) / 2;
        return merge(sum_tree(parts, lo, mid), sum_tree(parts, mid, hi), false);
    }
};

inline MPoly operator+(const MPoly& p, long c) { return p + MPoly(c); }
inline MPoly operator-(const MPoly& p, long c) { return p - MPoly(c); }
inline MPoly operator*(const MPoly& p, long c) { return p.scaled(BigRat(c)); }
inline MPoly operator*(long c, const MPoly& p) { return p.scaled(BigRat(c)); }

/// Convenience: the polynomial consisting of one variable.
inline MPoly X(Var v) { return MPoly::var(v); }

}  // namespace lame
