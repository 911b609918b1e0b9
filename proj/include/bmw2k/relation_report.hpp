#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bmw2k/matrix.hpp"

namespace bmw2k {

// Outcome of one defining-relation check: the residual matrix (lhs - rhs)
// and whether it vanished exactly. Failures are entries, not errors.
template <class F>
struct RelationCheck {
    std::string name;
    Matrix<F> residual;
    bool zero;
};

template <class F>
struct RelationReport {
    std::vector<RelationCheck<F>> checks;

    void add(std::string name, Matrix<F> residual) {
        bool zero = residual.is_zero_matrix();
        checks.push_back(RelationCheck<F>{std::move(name), std::move(residual), zero});
    }

    bool all_zero() const {
        for (const auto& c : checks)
            if (!c.zero) return false;
        return true;
    }

    const RelationCheck<F>* find(std::string_view name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

}  // namespace bmw2k
