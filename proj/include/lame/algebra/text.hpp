#pragma once

// Text form of polynomials.
//
// Printing: terms in monomial order, joined by " + " / " - ", coefficient
// written as "c*" unless it is 1, variables joined by "*", powers as "^k".
// Parsing accepts the printed form and a looser notation with implicit
// multiplication ("4(a+1)B", "12a", "g2 g3").

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>

#include "lame/algebra/mpoly.hpp"

namespace lame {

inline std::string to_string(const BigRat& c) { return c.get_str(); }

inline std::string monomial_string(const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < kNumVars; ++i) {
        unsigned e = m.at(i);
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += kVarNames[i];
        if (e > 1) out += '^' + std::to_string(e);
    }
    return out;
}

inline std::string to_string(const MPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        BigRat mag = abs(t.coef);
        bool negative = sgn(t.coef) < 0;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (t.mono.is_one()) {
            out += to_string(mag);
        } else {
            if (mag != 1) out += to_string(mag) + '*';
            out += monomial_string(t.mono);
        }
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << to_string(p); }

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    MPoly parse_all() {
        MPoly p = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected character");
        return p;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(src_) + "'");
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    bool starts_factor() {
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
    }

    MPoly expr() {
        MPoly acc;
        char c = peek();
        bool negate = false;
        if (c == '+' || c == '-') {
            negate = c == '-';
            ++pos_;
        }
        acc = term();
        if (negate) acc = -acc;
        for (;;) {
            c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            MPoly rhs = term();
            acc = c == '+' ? acc + rhs : acc - rhs;
        }
        return acc;
    }

    MPoly term() {
        MPoly acc = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * factor();
            } else if (c == '/') {
                ++pos_;
                MPoly d = factor();
                if (d.is_zero()) fail("division by zero");
                acc = acc.exact_div(d);
            } else if (starts_factor()) {
                acc = acc * factor();
            } else {
                break;
            }
        }
        return acc;
    }

    MPoly factor() {
        MPoly base = primary();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            base = base.pow(static_cast<unsigned>(std::stoul(std::string(src_.substr(start, pos_ - start)))));
        }
        return base;
    }

    MPoly primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            MPoly inner = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (c == '-') {
            ++pos_;
            return -primary();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            return MPoly(BigRat(BigInt(std::string(src_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                ++pos_;
            }
            auto name = src_.substr(start, pos_ - start);
            auto v = var_from_name(name);
            if (!v) {
                pos_ = start;
                fail("unknown variable '" + std::string(name) + "'");
            }
            return MPoly::var(*v);
        }
        fail(c == '\0' ? "unexpected end of input" : "unexpected character");
    }
};

}  // namespace detail

/// Parses a polynomial; throws `ParseError`.
inline MPoly parse_mpoly(std::string_view text) { return detail::Parser(text).parse_all(); }

}  // namespace lame
