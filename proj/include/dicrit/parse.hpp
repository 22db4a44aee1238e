// Copyright 2026 The dicrit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#ifndef DICRIT_PARSE_HPP
#define DICRIT_PARSE_HPP

#include <cctype>
#include <string>

#include "dicrit/pencilpoly.hpp"

namespace dicrit {

// Which single-letter names play the two exponent roles. The first variable
// is the one whose power divides the T part (local pencils conventionally
// use z there, polynomials at infinity use x).
struct ParseVars {
    char xvar = 'x';
    char yvar = 'y';
    bool allow_t = true;
};

// Recursive-descent parser for exact polynomial expressions: integers,
// rationals a/b, the two variables and T, + - * ^ and parentheses.
// Multiplication must be explicit; exponents are nonnegative integers.
template <class F>
class ExpressionParser {
   public:
    ExpressionParser(F f, std::string text, ParseVars vars)
        : f_(std::move(f)), s_(std::move(text)), vars_(vars) {}

    PencilPoly<F> parse() {
        PencilPoly<F> r = expression();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
        if (!r.is_t_free()) {
            // degree in T is at most one by construction; nothing to check here
        }
        return r;
    }

   private:
    using Poly = PencilPoly<F>;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    }

    Poly expression() {
        bool negate = accept('-');
        Poly acc = term();
        if (negate) acc = -acc;
        while (true) {
            if (accept('+'))
                acc = acc + term();
            else if (accept('-'))
                acc = acc - term();
            else
                break;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }

    Poly factor() {
        Poly base = atom();
        if (accept('^')) {
            long e = exponent();
            base = base.pow(e);
        }
        return base;
    }

    long exponent() {
        skip_ws();
        std::size_t at = pos_;
        bool parens = accept('(');
        skip_ws();
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) throw NonIntegerExponentError(at);
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw ParseError("expected an integer exponent", pos_);
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 100000) throw ParseError("exponent too large", pos_);
            ++pos_;
        }
        if (peek('/')) throw NonIntegerExponentError(at);
        if (parens) expect(')');
        return v;
    }

    Poly atom() {
        skip_ws();
        std::size_t at = pos_;
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly inner = expression();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            typename F::Elem v = number();
            return Poly::constant(f_, v);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            ++pos_;
            if (c == vars_.xvar) return Poly::monomial(f_, f_.one(), 1, 0);
            if (c == vars_.yvar) return Poly::monomial(f_, f_.one(), 0, 1);
            if (c == 'T' && vars_.allow_t) return Poly::t_monomial(f_);
            throw ParseError(std::string("unknown variable '") + c + "'", at);
        }
        throw ParseError("unexpected character", at);
    }

    typename F::Elem number() {
        std::string digits = integer_digits();
        if (peek('/')) {
            ++pos_;
            skip_ws();
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                throw ParseError("expected denominator digits", pos_);
            std::string den = integer_digits();
            typename F::Elem d = f_.from_decimal_string(den);
            if (f_.is_zero(d)) throw ParseError("zero denominator", pos_);
            return f_.div(f_.from_decimal_string(digits), d);
        }
        return f_.from_decimal_string(digits);
    }

    std::string integer_digits() {
        skip_ws();
        std::string out;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) out += s_[pos_++];
        if (out.empty()) throw ParseError("expected digits", pos_);
        return out;
    }

    F f_;
    std::string s_;
    ParseVars vars_;
    std::size_t pos_ = 0;
};

template <class F>
PencilPoly<F> parse_poly(F f, const std::string& text, ParseVars vars = {}) {
    return ExpressionParser<F>(std::move(f), text, vars).parse();
}

}  // namespace dicrit

#endif
