#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bmw2k/errors.hpp"

namespace bmw2k {

// Ordered list of indeterminate names. Shared (immutably) by every polynomial
// and rational function over the same coefficient domain.
class VarSet {
public:
    explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i)
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j]) throw duplicate_indeterminate(names_[i]);
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> index(std::string_view n) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == n) return i;
        return std::nullopt;
    }

    bool operator==(const VarSet& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
};

// Exponent vector; size always equals the number of indeterminates. The map
// key order (lexicographic on the vector, first variable most significant)
// is the fixed monomial order used for canonical forms throughout.
using Exponents = std::vector<std::uint32_t>;

// Sparse multivariate polynomial over Q. Invariant: the term map holds no
// zero coefficients, so structural equality is semantic equality.
class Polynomial {
public:
    using Terms = std::map<Exponents, mpq_class>;

    static Polynomial zero(std::shared_ptr<const VarSet> vars) { return Polynomial(std::move(vars)); }

    static Polynomial constant(std::shared_ptr<const VarSet> vars, const mpq_class& c) {
        Polynomial p(std::move(vars));
        if (c != 0) p.terms_[Exponents(p.vars_->size(), 0)] = c;
        return p;
    }

    static Polynomial variable(std::shared_ptr<const VarSet> vars, std::size_t idx) {
        Polynomial p(std::move(vars));
        Exponents e(p.vars_->size(), 0);
        e.at(idx) = 1;
        p.terms_[std::move(e)] = 1;
        return p;
    }

    static Polynomial monomial(std::shared_ptr<const VarSet> vars, Exponents e, const mpq_class& c) {
        Polynomial p(std::move(vars));
        if (c != 0) p.terms_[std::move(e)] = c;
        return p;
    }

    const std::shared_ptr<const VarSet>& vars() const { return vars_; }
    const Terms& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() > 1) return false;
        const Exponents& e = terms_.begin()->first;
        return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
    }

    bool is_monomial() const { return terms_.size() == 1; }

    mpq_class constant_value() const {
        if (terms_.empty()) return mpq_class(0);
        return terms_.begin()->second;
    }

    bool is_one() const { return is_constant() && constant_value() == 1; }

    // Largest term under the monomial order.
    const std::pair<const Exponents, mpq_class>& leading() const { return *terms_.rbegin(); }

    std::int64_t degree_in(std::size_t v) const {
        std::int64_t d = -1;
        for (const auto& [e, c] : terms_) d = std::max<std::int64_t>(d, e[v]);
        return d;
    }

    std::int64_t total_degree() const {
        std::int64_t d = -1;
        for (const auto& [e, c] : terms_) {
            std::int64_t s = 0;
            for (auto x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    // Largest variable index that actually occurs; nullopt for constants.
    std::optional<std::size_t> highest_var() const {
        std::optional<std::size_t> best;
        for (const auto& [e, c] : terms_)
            for (std::size_t v = e.size(); v-- > 0;)
                if (e[v] > 0 && (!best || v > *best)) {
                    best = v;
                    break;
                }
        return best;
    }

    Polynomial add(const Polynomial& o) const {
        check_same_vars(o);
        Polynomial r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }

    Polynomial sub(const Polynomial& o) const {
        check_same_vars(o);
        Polynomial r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, mpq_class(-c));
        return r;
    }

    Polynomial neg() const {
        Polynomial r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    Polynomial mul(const Polynomial& o) const {
        check_same_vars(o);
        Polynomial r(vars_);
        if (terms_.empty() || o.terms_.empty()) return r;
        Exponents e(vars_->size());
        for (const auto& [ea, ca] : terms_) {
            for (const auto& [eb, cb] : o.terms_) {
                for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
                r.add_term(e, mpq_class(ca * cb));
            }
        }
        return r;
    }

    Polynomial mul_scalar(const mpq_class& c) const {
        Polynomial r(vars_);
        if (c == 0) return r;
        r.terms_ = terms_;
        for (auto& [e, t] : r.terms_) t = t * c;
        return r;
    }

    Polynomial pow(std::uint32_t n) const {
        Polynomial acc = constant(vars_, 1);
        Polynomial base = *this;
        while (n) {
            if (n & 1) acc = acc.mul(base);
            n >>= 1;
            if (n) base = base.mul(base);
        }
        return acc;
    }

    // Componentwise minimum of all exponent vectors (the monomial content).
    Exponents min_exponents() const {
        Exponents m = terms_.begin()->first;
        for (const auto& [e, c] : terms_)
            for (std::size_t v = 0; v < m.size(); ++v) m[v] = std::min(m[v], e[v]);
        return m;
    }

    Polynomial divide_by_monomial(const Exponents& m) const {
        Polynomial r(vars_);
        for (const auto& [e, c] : terms_) {
            Exponents q(e.size());
            for (std::size_t v = 0; v < e.size(); ++v) q[v] = e[v] - m[v];
            r.terms_[std::move(q)] = c;
        }
        return r;
    }

    // Exact polynomial division; the divisor must divide evenly.
    Polynomial divide_exact(const Polynomial& d) const {
        check_same_vars(d);
        if (d.is_zero()) throw non_invertible("polynomial division by zero");
        if (d.is_constant()) return mul_scalar(mpq_class(1 / d.constant_value()));
        Polynomial q(vars_);
        Polynomial r = *this;
        const auto& [de, dc] = d.leading();
        Exponents t(vars_->size());
        while (!r.is_zero()) {
            const auto& [re, rc] = r.leading();
            bool divisible = true;
            for (std::size_t v = 0; v < t.size(); ++v) {
                if (re[v] < de[v]) {
                    divisible = false;
                    break;
                }
                t[v] = re[v] - de[v];
            }
            if (!divisible) throw error("inexact polynomial division");
            Polynomial piece = monomial(vars_, t, mpq_class(rc / dc));
            q = q.add(piece);
            r = r.sub(piece.mul(d));
        }
        return q;
    }

    // Rational content carrying the sign of the leading coefficient, so that
    // primitive() has coprime integer coefficients and positive leading term.
    mpq_class content() const {
        if (terms_.empty()) return mpq_class(0);
        mpz_class g = 0, l = 1;
        for (const auto& [e, c] : terms_) {
            mpz_class n = abs(c.get_num());
            mpz_class d = c.get_den();
            mpz_class tmp;
            mpz_gcd(tmp.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
            g = tmp;
            mpz_lcm(tmp.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
            l = tmp;
        }
        mpq_class c(g, l);
        c.canonicalize();
        if (leading().second < 0) c = -c;
        return c;
    }

    Polynomial primitive() const {
        if (terms_.empty()) return *this;
        return mul_scalar(mpq_class(1 / content()));
    }

    bool equal(const Polynomial& o) const {
        check_same_vars(o);
        return terms_ == o.terms_;
    }

    bool operator==(const Polynomial& o) const { return equal(o); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            mpq_class a = c;
            if (out.empty()) {
                if (a < 0) {
                    out += "-";
                    a = -a;
                }
            } else {
                out += a < 0 ? " - " : " + ";
                if (a < 0) a = -a;
            }
            std::string vpart;
            for (std::size_t v = 0; v < e.size(); ++v) {
                if (e[v] == 0) continue;
                if (!vpart.empty()) vpart += "*";
                vpart += vars_->name(v);
                if (e[v] != 1) vpart += "^" + std::to_string(e[v]);
            }
            if (vpart.empty()) {
                out += a.get_str();
            } else {
                if (a != 1) out += a.get_str() + "*";
                out += vpart;
            }
        }
        return out;
    }

private:
    explicit Polynomial(std::shared_ptr<const VarSet> vars) : vars_(std::move(vars)) {}

    void check_same_vars(const Polynomial& o) const {
        if (vars_ != o.vars_ && !(*vars_ == *o.vars_)) throw domain_mismatch();
    }

    void add_term(const Exponents& e, const mpq_class& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::shared_ptr<const VarSet> vars_;
    Terms terms_;
};

namespace detail {

// Coefficient of x_v^d, as a polynomial with the v-exponent cleared.
inline Polynomial coeff_of_var_power(const Polynomial& p, std::size_t v, std::int64_t d) {
    Polynomial r = Polynomial::zero(p.vars());
    for (const auto& [e, c] : p.terms()) {
        if (e[v] != d) continue;
        Exponents q = e;
        q[v] = 0;
        r = r.add(Polynomial::monomial(p.vars(), std::move(q), c));
    }
    return r;
}

// Pseudo-remainder of f by g with respect to x_v (g nonzero in x_v).
inline Polynomial prem(const Polynomial& f, const Polynomial& g, std::size_t v) {
    const std::int64_t n = g.degree_in(v);
    const Polynomial lc_g = coeff_of_var_power(g, v, n);
    Polynomial r = f;
    while (!r.is_zero()) {
        const std::int64_t d = r.degree_in(v);
        if (d < n) break;
        Polynomial lc_r = coeff_of_var_power(r, v, d);
        Exponents shift(f.vars()->size(), 0);
        shift[v] = static_cast<std::uint32_t>(d - n);
        r = lc_g.mul(r).sub(lc_r.mul(Polynomial::monomial(f.vars(), shift, 1)).mul(g));
    }
    return r;
}

Polynomial gcd_primitive(const Polynomial& a, const Polynomial& b);

// gcd of the x_v-coefficients of p (p's content with respect to x_v).
inline Polynomial content_in_var(const Polynomial& p, std::size_t v) {
    Polynomial g = Polynomial::zero(p.vars());
    for (std::int64_t d = 0; d <= p.degree_in(v); ++d) {
        Polynomial c = coeff_of_var_power(p, v, d);
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.primitive() : gcd_primitive(g, c.primitive());
        if (g.is_constant()) break;
    }
    return g;
}

// gcd of two nonzero rational-primitive polynomials via the primitive
// pseudo-remainder sequence, recursing on the highest occurring variable.
inline Polynomial gcd_primitive(const Polynomial& a, const Polynomial& b) {
    auto one = Polynomial::constant(a.vars(), 1);
    if (a.is_constant() || b.is_constant()) return one;
    if (a == b) return a;
    {
        Polynomial nb = b.neg();
        if (a == nb) return a.primitive();
    }
    auto ha = a.highest_var(), hb = b.highest_var();
    std::size_t v = std::max(*ha, *hb);
    std::int64_t da = a.degree_in(v), db = b.degree_in(v);
    if (da <= 0) {
        Polynomial cb = content_in_var(b, v);
        return cb.is_constant() ? one : gcd_primitive(a, cb);
    }
    if (db <= 0) {
        Polynomial ca = content_in_var(a, v);
        return ca.is_constant() ? one : gcd_primitive(ca, b);
    }
    Polynomial ca = content_in_var(a, v);
    Polynomial cb = content_in_var(b, v);
    Polynomial c = (ca.is_constant() || cb.is_constant()) ? one : gcd_primitive(ca, cb);
    Polynomial f = a.divide_exact(ca);
    Polynomial g = b.divide_exact(cb);
    if (f.degree_in(v) < g.degree_in(v)) std::swap(f, g);
    while (true) {
        Polynomial r = prem(f, g, v);
        if (r.is_zero()) break;
        if (r.degree_in(v) == 0) return c;
        f = std::move(g);
        Polynomial cr = content_in_var(r, v);
        g = r.divide_exact(cr).primitive();
    }
    return c.mul(g).primitive();
}

}  // namespace detail

// Greatest common divisor, normalized to integer-primitive form with a
// positive leading coefficient. gcd(0, 0) = 0.
inline Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.primitive();
    if (b.is_zero()) return a.primitive();
    const Exponents ma = a.min_exponents();
    const Exponents mb = b.min_exponents();
    Exponents m(ma.size());
    for (std::size_t v = 0; v < m.size(); ++v) m[v] = std::min(ma[v], mb[v]);
    Polynomial a1 = a.divide_by_monomial(ma).primitive();
    Polynomial b1 = b.divide_by_monomial(mb).primitive();
    Polynomial g = detail::gcd_primitive(a1, b1);
    return g.mul(Polynomial::monomial(a.vars(), m, 1));
}

}  // namespace bmw2k
