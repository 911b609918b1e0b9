#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "bmw2k/errors.hpp"
#include "bmw2k/prime_field.hpp"
#include "bmw2k/rational_functions.hpp"
#include "bmw2k/rationals.hpp"

namespace bmw2k {

enum class DomainKind { rationals, prime_field, rational_functions };

// Runtime description of a coefficient domain, as found in parameter files.
struct DomainSpec {
    DomainKind kind = DomainKind::rationals;
    std::uint64_t p = 0;                        // prime-field only
    std::vector<std::string> indeterminates;    // rational-functions only

    static DomainSpec rationals() { return DomainSpec{DomainKind::rationals, 0, {}}; }
    static DomainSpec prime_field(std::uint64_t p) { return DomainSpec{DomainKind::prime_field, p, {}}; }
    static DomainSpec rational_functions(std::vector<std::string> names) {
        return DomainSpec{DomainKind::rational_functions, 0, std::move(names)};
    }
};

using AnyField = std::variant<Rationals, PrimeField, RationalFunctionField>;

// Instantiates a usable domain from its descriptor. Throws non_prime_modulus
// and duplicate_indeterminate for invalid descriptors.
inline AnyField domain_create(const DomainSpec& spec) {
    switch (spec.kind) {
        case DomainKind::rationals:
            return Rationals{};
        case DomainKind::prime_field:
            return PrimeField(spec.p);
        case DomainKind::rational_functions:
            return RationalFunctionField(spec.indeterminates);
    }
    throw error("unknown domain kind");
}

inline DomainSpec describe(const Rationals&) { return DomainSpec::rationals(); }
inline DomainSpec describe(const PrimeField& f) { return DomainSpec::prime_field(f.modulus()); }
inline DomainSpec describe(const RationalFunctionField& f) {
    return DomainSpec::rational_functions(f.vars()->names());
}

}  // namespace bmw2k
