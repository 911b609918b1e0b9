#pragma once

#include <gmpxx.h>

#include <string>

#include "bmw2k/errors.hpp"

namespace bmw2k {

// Field of exact arbitrary-precision rationals. Elements are always kept in
// canonical form (reduced fraction, positive denominator), which gmp's mpq
// arithmetic maintains automatically.
class Rationals {
public:
    using Elem = mpq_class;

    Elem zero() const { return mpq_class(0); }
    Elem one() const { return mpq_class(1); }
    Elem from_int(long n) const { return mpq_class(n); }

    Elem add(const Elem& a, const Elem& b) const { return mpq_class(a + b); }
    Elem sub(const Elem& a, const Elem& b) const { return mpq_class(a - b); }
    Elem mul(const Elem& a, const Elem& b) const { return mpq_class(a * b); }
    Elem neg(const Elem& a) const { return mpq_class(-a); }

    Elem inv(const Elem& a) const {
        if (a == 0) throw non_invertible("division by zero in Q");
        return mpq_class(1 / a);
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool is_one(const Elem& a) const { return a == 1; }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }

    unsigned long characteristic() const { return 0; }

    std::string to_string(const Elem& a) const { return a.get_str(); }

    bool same_field(const Rationals&) const { return true; }
    bool operator==(const Rationals&) const { return true; }
};

}  // namespace bmw2k
