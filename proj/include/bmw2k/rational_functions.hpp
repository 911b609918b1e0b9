#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "bmw2k/errors.hpp"
#include "bmw2k/polynomial.hpp"

namespace bmw2k {

// A quotient of polynomials kept in canonical form: gcd(num, den) = 1, the
// denominator has leading coefficient 1 under the monomial order, and the
// zero element is 0/1. Canonical form makes equality a structural comparison.
class RatFun {
public:
    RatFun(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }

private:
    void normalize() {
        if (den_.is_zero()) throw non_invertible("zero denominator in rational function");
        if (num_.is_zero()) {
            den_ = Polynomial::constant(den_.vars(), 1);
            return;
        }
        Polynomial g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_.divide_exact(g);
            den_ = den_.divide_exact(g);
        }
        const mpq_class lc = den_.leading().second;
        if (lc != 1) {
            mpq_class s(1 / lc);
            num_ = num_.mul_scalar(s);
            den_ = den_.mul_scalar(s);
        }
    }

    Polynomial num_, den_;
};

// Field of rational functions over Q in a fixed ordered list of
// indeterminates.
class RationalFunctionField {
public:
    using Elem = RatFun;

    explicit RationalFunctionField(std::vector<std::string> names)
        : vars_(std::make_shared<const VarSet>(std::move(names))) {}

    explicit RationalFunctionField(std::shared_ptr<const VarSet> vars) : vars_(std::move(vars)) {}

    const std::shared_ptr<const VarSet>& vars() const { return vars_; }
    std::size_t num_vars() const { return vars_->size(); }

    Elem zero() const { return make(Polynomial::zero(vars_)); }
    Elem one() const { return make(Polynomial::constant(vars_, 1)); }
    Elem from_int(long n) const { return make(Polynomial::constant(vars_, mpq_class(n))); }
    Elem from_rational(const mpq_class& c) const { return make(Polynomial::constant(vars_, c)); }
    Elem from_polynomial(Polynomial p) const { return make(std::move(p)); }

    Elem var(std::size_t idx) const { return make(Polynomial::variable(vars_, idx)); }

    Elem var(std::string_view name) const {
        auto idx = vars_->index(name);
        if (!idx) throw error("unknown indeterminate '" + std::string(name) + "'");
        return var(*idx);
    }

    Elem add(const Elem& a, const Elem& b) const {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den() == b.den())
            return Elem(a.num().add(b.num()), a.den());
        // num = a.num*(b.den/g) + b.num*(a.den/g), den = a.den*(b.den/g)
        Polynomial g = gcd(a.den(), b.den());
        Polynomial bd = b.den().divide_exact(g);
        Polynomial ad = a.den().divide_exact(g);
        return Elem(a.num().mul(bd).add(b.num().mul(ad)), a.den().mul(bd));
    }

    Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

    Elem neg(const Elem& a) const { return Elem(a.num().neg(), a.den()); }

    Elem mul(const Elem& a, const Elem& b) const {
        if (a.is_zero() || b.is_zero()) return zero();
        // cross-reduce before multiplying to keep degrees down
        Polynomial g1 = gcd(a.num(), b.den());
        Polynomial g2 = gcd(b.num(), a.den());
        Polynomial n = a.num().divide_exact(g1).mul(b.num().divide_exact(g2));
        Polynomial d = a.den().divide_exact(g2).mul(b.den().divide_exact(g1));
        return Elem(std::move(n), std::move(d));
    }

    Elem inv(const Elem& a) const {
        if (a.is_zero()) throw non_invertible("division by zero rational function");
        return Elem(a.den(), a.num());
    }

    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool is_one(const Elem& a) const { return a.num().is_one() && a.den().is_one(); }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }

    // Independent equality route: cross-multiplied polynomial identity.
    bool equal_cross(const Elem& a, const Elem& b) const {
        return a.num().mul(b.den()).sub(b.num().mul(a.den())).is_zero();
    }

    unsigned long characteristic() const { return 0; }

    std::string to_string(const Elem& a) const {
        if (a.den().is_one()) return a.num().to_string();
        return "(" + a.num().to_string() + ")/(" + a.den().to_string() + ")";
    }

    bool same_field(const RationalFunctionField& o) const { return vars_ == o.vars_ || *vars_ == *o.vars_; }
    bool operator==(const RationalFunctionField& o) const { return same_field(o); }

private:
    Elem make(Polynomial p) const { return Elem(std::move(p), Polynomial::constant(vars_, 1)); }

    std::shared_ptr<const VarSet> vars_;
};

}  // namespace bmw2k
