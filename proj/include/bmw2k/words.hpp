#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "bmw2k/errors.hpp"

namespace bmw2k {

enum class Gen { X, Y, E };

inline char gen_char(Gen g) {
    switch (g) {
        case Gen::X: return 'X';
        case Gen::Y: return 'Y';
        case Gen::E: return 'e';
    }
    return '?';
}

// One generator with a nonzero integer exponent; e never carries a negative
// exponent. Adjacent tokens over the same generator are not merged.
struct Token {
    Gen gen;
    long exp;

    bool operator==(const Token&) const = default;
};

// The empty word is legal and denotes the identity.
struct Word {
    std::vector<Token> tokens;

    bool operator==(const Word&) const = default;
};

// Grammar: word := term* ; term := gen exp? ; gen := 'X'|'Y'|'e' ;
// exp := '^' '-'? digits. Terms may be whitespace-separated or adjacent;
// a missing exponent means 1.
inline Word parse_word(std::string_view text) {
    Word w;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    while (true) {
        skip_ws();
        if (pos >= text.size()) return w;
        const char c = text[pos];
        Gen g;
        if (c == 'X')
            g = Gen::X;
        else if (c == 'Y')
            g = Gen::Y;
        else if (c == 'e')
            g = Gen::E;
        else
            throw parse_error(std::string("expected generator X, Y or e, got '") + c + "'", pos);
        ++pos;
        long exp = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            const std::size_t exp_pos = pos;
            bool negative = false;
            if (pos < text.size() && text[pos] == '-') {
                negative = true;
                ++pos;
            }
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                throw parse_error("expected integer exponent after '^'", pos);
            exp = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                exp = exp * 10 + (text[pos] - '0');
                if (exp > 1'000'000) throw parse_error("exponent too large", pos);
                ++pos;
            }
            if (exp == 0) throw zero_exponent(exp_pos);
            if (negative) exp = -exp;
        }
        if (g == Gen::E && exp < 0) throw non_invertible_generator();
        w.tokens.push_back(Token{g, exp});
    }
}

// Canonical text form; parse_word(format_word(w)) == w.
inline std::string format_word(const Word& w) {
    std::string out;
    for (const Token& t : w.tokens) {
        if (!out.empty()) out += ' ';
        out += gen_char(t.gen);
        if (t.exp != 1) out += "^" + std::to_string(t.exp);
    }
    return out;
}

}  // namespace bmw2k
