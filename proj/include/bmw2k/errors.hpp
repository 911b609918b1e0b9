#pragma once

#include <stdexcept>
#include <string>

namespace bmw2k {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Domain construction
struct non_prime_modulus : error {
    explicit non_prime_modulus(unsigned long long p)
        : error("modulus " + std::to_string(p) + " is not prime") {}
};

struct duplicate_indeterminate : error {
    explicit duplicate_indeterminate(const std::string& name)
        : error("duplicate indeterminate '" + name + "'") {}
};

// Arithmetic
struct domain_mismatch : error {
    domain_mismatch() : error("operands belong to different domains") {}
    explicit domain_mismatch(const std::string& what) : error(what) {}
};

struct non_invertible : error {
    explicit non_invertible(const std::string& what) : error(what) {}
};

// Parsing (scalar literals and generator words); pos is a 0-based byte offset.
struct parse_error : error {
    std::size_t pos;
    parse_error(const std::string& what, std::size_t position)
        : error(what + " (at position " + std::to_string(position) + ")"), pos(position) {}
};

struct zero_exponent : parse_error {
    explicit zero_exponent(std::size_t position) : parse_error("exponent must be nonzero", position) {}
};

struct non_invertible_generator : error {
    non_invertible_generator() : error("generator 'e' admits no negative exponents") {}
};

// Parameter construction
struct invalid_param_set : error {
    using error::error;
};

struct exhausted_resampling : error {
    explicit exhausted_resampling(unsigned long long p)
        : error("could not sample a valid parameter set over F_" + std::to_string(p) +
                " within the retry budget") {}
};

// Linear algebra / representations
struct index_out_of_range : error {
    using error::error;
};

struct rep_mismatch : error {
    rep_mismatch() : error("algebra elements belong to different representations") {}
};

struct singular_matrix : error {
    singular_matrix() : error("matrix is singular over its domain") {}
};

}  // namespace bmw2k
