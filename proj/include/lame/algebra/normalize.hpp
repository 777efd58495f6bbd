#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lame/algebra/ratpoly.hpp"
#include "lame/algebra/upoly.hpp"

namespace lame {

using Weights = std::map<Var, int>;

/// Weights of the C* action: lambda, B and a... have weight 1, g2 weight 2, g3 weight 3.
inline const Weights& standard_weights() {
    static const Weights w{{Var::lambda, 1}, {Var::g2, 2}, {Var::g3, 3}};
    return w;
}

inline long weight_of(const Monomial& m, const Weights& w) {
    long total = 0;
    for (std::size_t i = 0; i < kNumVars; ++i) {
        if (m.at(i) == 0) continue;
        auto it = w.find(static_cast<Var>(i));
        if (it == w.end()) throw InvalidArgument("no weight for variable " + std::string(kVarNames[i]));
        total += long(m.at(i)) * it->second;
    }
    return total;
}

/// Common weight of every term, or nullopt if terms disagree (or f is zero).
inline std::optional<long> weighted_degree(const MPoly& f, const Weights& w) {
    std::optional<long> out;
    for (const auto& t : f.terms()) {
        long wt = weight_of(t.mono, w);
        if (out && *out != wt) return std::nullopt;
        out = wt;
    }
    return out;
}

/// Scales by the positive rational that makes all coefficients coprime integers,
/// then fixes the sign so the leading term of the leading coefficient in
/// `main` is positive.
inline MPoly primitive_normalize(const MPoly& f, Var main) {
    if (f.is_zero()) throw InvalidArgument("primitive form of the zero polynomial");
    BigInt den(1), num(0);
    for (const auto& t : f.terms()) den = lcm(den, BigInt(t.coef.get_den()));
    for (const auto& t : f.terms()) num = gcd(num, BigInt(t.coef.get_num()));
    BigRat scale(den, num);
    scale.canonicalize();
    MPoly g = f.scaled(scale);
    MPoly lead = g.coefficient(main, unsigned(g.degree_in(main)));
    if (sgn(lead.leading_term().coef) < 0) g = -g;
    return g;
}

inline UPoly primitive_normalize(const UPoly& f) {
    return UPoly::from_mpoly(primitive_normalize(f.to_mpoly(), f.var()), f.var());
}

/// Squarefree decomposition of a polynomial whose coefficients are rational
/// constants. Factors are monic, ordered by increasing multiplicity.
inline std::vector<std::pair<UPoly, int>> squarefree_decompose(const UPoly& f) {
    if (f.is_zero()) throw InvalidArgument("squarefree decomposition of zero");
    std::vector<BigRat> cs;
    for (const auto& c : f.coeffs()) {
        if (!c.is_constant()) throw InvalidArgument("squarefree decomposition needs constant coefficients");
        cs.push_back(c.constant_value());
    }
    std::vector<std::pair<UPoly, int>> out;
    for (auto& [p, k] : yun_squarefree(RatPoly(std::move(cs)))) {
        out.emplace_back(UPoly::from_mpoly(p.to_mpoly(f.var()), f.var()), k);
    }
    return out;
}

}  // namespace lame
