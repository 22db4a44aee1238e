// Copyright 2026 The dicrit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#ifndef DICRIT_FIELDS_HPP
#define DICRIT_FIELDS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "dicrit/errors.hpp"

namespace dicrit {

// The ground field K. Two models are provided: the rationals (exact,
// arbitrary precision) and a prime field F_p. All kernel code is templated
// on the field object, which travels with the values it creates.
//
// Field object interface (duck typed):
//   using Elem = ...;
//   Elem zero(), one(), from_long(long);
//   Elem add/sub/mul/div(a, b), neg(a), inv(a);
//   bool is_zero(a), eq(a, b);
//   int  cmp(a, b);                  // canonical total order, for determinism
//   unsigned long characteristic();
//   std::string str(a);              // exact decimal string, "-5/8" style
//   std::string name();

class RationalField {
   public:
    using Elem = mpq_class;

    Elem zero() const { return mpq_class(0); }
    Elem one() const { return mpq_class(1); }
    Elem from_long(long v) const { return mpq_class(v); }
    Elem from_ratio(long num, long den) const {
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }
    Elem from_decimal_string(const std::string& digits) const { return mpq_class(mpz_class(digits, 10)); }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem div(const Elem& a, const Elem& b) const {
        if (sgn(b) == 0) throw Error("division by zero");
        return a / b;
    }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const { return div(one(), a); }

    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool eq(const Elem& a, const Elem& b) const { return cmp(a, b) == 0; }
    int cmp(const Elem& a, const Elem& b) const { return ::cmp(a, b); }

    unsigned long characteristic() const { return 0; }
    std::string str(const Elem& a) const { return a.get_str(); }
    std::string name() const { return "q"; }

    bool operator==(const RationalField&) const { return true; }
};

// F_p with p prime. The modulus is carried by the field object; elements are
// plain residues. The root scan in the algebra layer enumerates all p
// elements, so the modulus is capped at construction time.
class PrimeField {
   public:
    using Elem = std::uint32_t;

    static constexpr std::uint32_t kMaxModulus = 1u << 20;

    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (p < 2 || p >= kMaxModulus) throw Error("prime modulus out of range: " + std::to_string(p));
        if (!is_prime(p)) throw Error("modulus is not prime: " + std::to_string(p));
    }

    std::uint32_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }
    Elem from_long(long v) const {
        long r = v % static_cast<long>(p_);
        if (r < 0) r += p_;
        return static_cast<Elem>(r);
    }
    Elem from_ratio(long num, long den) const { return div(from_long(num), from_long(den)); }
    Elem from_decimal_string(const std::string& digits) const {
        mpz_class z(digits, 10);
        return static_cast<Elem>(mpz_class(z % p_).get_ui());
    }

    Elem add(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t(a) + b) % p_); }
    Elem sub(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t(a) + p_ - b) % p_); }
    Elem mul(Elem a, Elem b) const { return static_cast<Elem>(std::uint64_t(a) * b % p_); }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw Error("division by zero");
        // extended Euclid on (a, p)
        std::int64_t t = 0, newt = 1, r = p_, newr = a;
        while (newr != 0) {
            std::int64_t q = r / newr;
            std::int64_t tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        if (t < 0) t += p_;
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    int cmp(Elem a, Elem b) const { return a < b ? -1 : (a > b ? 1 : 0); }

    unsigned long characteristic() const { return p_; }
    std::string str(Elem a) const { return std::to_string(a); }
    std::string name() const { return "fp:" + std::to_string(p_); }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

   private:
    std::uint32_t p_;
};

}  // namespace dicrit

#endif
