#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "bmw2k/errors.hpp"
#include "bmw2k/prime_field.hpp"
#include "bmw2k/rational_functions.hpp"
#include "bmw2k/rationals.hpp"

namespace bmw2k {

namespace detail {

inline std::optional<Rationals::Elem> named_element(const Rationals&, std::string_view) { return std::nullopt; }
inline std::optional<PrimeField::Elem> named_element(const PrimeField&, std::string_view) { return std::nullopt; }
inline std::optional<RationalFunctionField::Elem> named_element(const RationalFunctionField& f,
                                                                std::string_view name) {
    auto idx = f.vars()->index(name);
    if (!idx) return std::nullopt;
    return f.var(*idx);
}

inline Rationals::Elem decimal_element(const Rationals&, const std::string& digits) { return mpq_class(digits); }
inline PrimeField::Elem decimal_element(const PrimeField& f, const std::string& digits) {
    PrimeField::Elem r = 0;
    for (char c : digits) r = f.add(f.mul(r, f.from_int(10)), f.from_int(c - '0'));
    return r;
}
inline RationalFunctionField::Elem decimal_element(const RationalFunctionField& f, const std::string& digits) {
    return f.from_rational(mpq_class(digits));
}

template <class F>
typename F::Elem field_pow(const F& f, typename F::Elem base, long e) {
    if (e < 0) {
        base = f.inv(base);
        e = -e;
    }
    typename F::Elem acc = f.one();
    while (e) {
        if (e & 1) acc = f.mul(acc, base);
        e >>= 1;
        if (e) base = f.mul(base, base);
    }
    return acc;
}

// Recursive-descent parser for the scalar literal grammar: integer and
// fraction literals, indeterminate names, + - * / ^ with integer exponents,
// and parentheses.
template <class F>
class ScalarParser {
public:
    ScalarParser(const F& field, std::string_view text) : f_(field), s_(text) {}

    typename F::Elem parse() {
        auto v = expr();
        skip_ws();
        if (pos_ != s_.size()) throw parse_error("unexpected trailing input", pos_);
        return v;
    }

private:
    typename F::Elem expr() {
        auto v = term();
        while (true) {
            skip_ws();
            if (accept('+'))
                v = f_.add(v, term());
            else if (accept('-'))
                v = f_.sub(v, term());
            else
                return v;
        }
    }

    typename F::Elem term() {
        auto v = factor();
        while (true) {
            skip_ws();
            if (accept('*'))
                v = f_.mul(v, factor());
            else if (accept('/'))
                v = f_.div(v, factor());
            else
                return v;
        }
    }

    typename F::Elem factor() {
        skip_ws();
        if (accept('-')) return f_.neg(factor());
        auto v = primary();
        skip_ws();
        if (accept('^')) return field_pow(f_, v, int_literal());
        return v;
    }

    typename F::Elem primary() {
        skip_ws();
        if (pos_ >= s_.size()) throw parse_error("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            auto v = expr();
            skip_ws();
            if (!accept(')')) throw parse_error("expected ')'", pos_);
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
            return decimal_element(f_, digits);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            std::string name;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                name += s_[pos_++];
            auto v = named_element(f_, name);
            if (!v) throw parse_error("unknown symbol '" + name + "'", start);
            return *v;
        }
        throw parse_error(std::string("unexpected character '") + c + "'", pos_);
    }

    long int_literal() {
        skip_ws();
        bool negative = accept('-');
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw parse_error("expected integer exponent", pos_);
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_++] - '0');
            if (v > 1'000'000) throw parse_error("exponent too large", pos_);
        }
        return negative ? -v : v;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    const F& f_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

template <class F>
typename F::Elem parse_scalar(const F& field, std::string_view text) {
    return detail::ScalarParser<F>(field, text).parse();
}

}  // namespace bmw2k
