#pragma once

#include <string>
#include <vector>

#include "lame/algebra/mpoly.hpp"
#include "lame/algebra/text.hpp"

namespace lame {

/// Polynomial in a main variable with coefficients in the remaining variables.
/// `coeffs[k]` multiplies `var^k`; trailing zero coefficients are trimmed.
class UPoly {
public:
    UPoly() = default;
    UPoly(Var main, std::vector<MPoly> coeffs) : var_(main), coeffs_(std::move(coeffs)) {
        for (const auto& c : coeffs_) {
            if (c.contains(var_)) throw InvalidArgument("coefficient contains the main variable");
        }
        trim();
    }

    static UPoly from_mpoly(const MPoly& p, Var main) {
        int d = p.degree_in(main);
        std::vector<MPoly> cs;
        for (int k = 0; k <= d; ++k) cs.push_back(p.coefficient(main, unsigned(k)));
        UPoly u;
        u.var_ = main;
        u.coeffs_ = std::move(cs);
        u.trim();
        return u;
    }

    MPoly to_mpoly() const {
        std::vector<Term> all;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            Monomial vk = Monomial::of(var_, unsigned(k));
            for (const auto& t : coeffs_[k].terms()) all.push_back({t.mono * vk, t.coef});
        }
        return MPoly::from_terms(std::move(all));
    }

    Var var() const { return var_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return int(coeffs_.size()) - 1; }
    const std::vector<MPoly>& coeffs() const { return coeffs_; }
    const MPoly& coeff(int k) const {
        static const MPoly zero;
        return (k < 0 || k > degree()) ? zero : coeffs_[std::size_t(k)];
    }
    const MPoly& lc() const {
        if (is_zero()) throw InvalidArgument("leading coefficient of zero polynomial");
        return coeffs_.back();
    }
    bool is_monic() const { return !is_zero() && lc() == MPoly(1); }

    UPoly derivative() const {
        std::vector<MPoly> cs;
        for (std::size_t k = 1; k < coeffs_.size(); ++k) cs.push_back(coeffs_[k] * long(k));
        return UPoly(var_, std::move(cs));
    }

    /// Divides through by a constant leading coefficient.
    UPoly monic() const {
        if (!lc().is_constant()) throw InvalidArgument("leading coefficient is not constant");
        BigRat inv = 1 / lc().constant_value();
        std::vector<MPoly> cs;
        for (const auto& c : coeffs_) cs.push_back(c.scaled(inv));
        return UPoly(var_, std::move(cs));
    }

    friend bool operator==(const UPoly& l, const UPoly& r) {
        return l.var_ == r.var_ && l.coeffs_ == r.coeffs_;
    }

private:
    Var var_ = Var::lambda;
    std::vector<MPoly> coeffs_;

    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
};

inline std::string to_string(const UPoly& p) { return to_string(p.to_mpoly()); }

}  // namespace lame
