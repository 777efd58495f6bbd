#pragma once

#include <string>

#include "lame/errors.hpp"

namespace lame {

/// The two components of the moduli space for a given m.
enum class Component { I, II };

inline std::string to_string(Component k) { return k == Component::I ? "I" : "II"; }

inline Component parse_component(const std::string& s) {
    if (s == "I" || s == "1") return Component::I;
    if (s == "II" || s == "2") return Component::II;
    throw InvalidArgument("unknown component '" + s + "'");
}

/// Whether (m, K) names an existing component.
inline bool component_exists(int m, Component k) {
    if (m < 0) return false;
    if (k == Component::I) return m != 1;
    return m >= 1;
}

inline void require_component(int m, Component k) {
    if (!component_exists(m, k)) {
        throw ComponentAbsent("no component " + to_string(k) + " for m = " + std::to_string(m));
    }
}

/// Degree of the forgetful map (= lambda-degree of the spectral polynomial).
inline int degree_d(int m, Component k) {
    require_component(m, k);
    if (k == Component::I) return m % 2 == 0 ? m / 2 + 1 : (m - 1) / 2;
    return 3 * ((m + 1) / 2);
}

}  // namespace lame
