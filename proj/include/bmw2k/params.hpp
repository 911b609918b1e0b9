#pragma once

#include <random>
#include <string>
#include <vector>

#include "bmw2k/errors.hpp"
#include "bmw2k/prime_field.hpp"
#include "bmw2k/rational_functions.hpp"

namespace bmw2k {

enum class Sign { plus, minus };

// Ground parameters: q, lambda, q_0..q_{k-1}, A_0..A_{k-1} over an exact
// coefficient field, with the conventions q_k = -1, delta = q - q^{-1},
// epsilon = k mod 2 and z = ceil(k/2) used by every formula downstream.
//
// Admissibility is *not* an invariant here: non-admissible parameter sets are
// constructible on purpose, so that the representation checks can observe
// exactly which relations break.
template <class F>
struct ParamSet {
    using Elem = typename F::Elem;

    int k;
    F field;
    Elem q;
    Elem lambda;
    std::vector<Elem> qi;  // q_0 .. q_{k-1}
    std::vector<Elem> Ai;  // A_0 .. A_{k-1}

    Elem delta() const { return field.sub(q, field.inv(q)); }

    // Coefficient q_l of the order-k relation, extended by q_k = -1.
    Elem q_coeff(int l) const {
        if (l < 0 || l > k) throw index_out_of_range("q_" + std::to_string(l) + " with k=" + std::to_string(k));
        if (l == k) return field.neg(field.one());
        return qi[static_cast<std::size_t>(l)];
    }

    int epsilon() const { return k % 2; }
    int z() const { return (k + 1) / 2; }

    void validate() const {
        if (k < 1) throw invalid_param_set("k must be positive");
        if (qi.size() != static_cast<std::size_t>(k) || Ai.size() != static_cast<std::size_t>(k))
            throw invalid_param_set("expected k entries in q_i and A_i");
        if (field.is_zero(q)) throw invalid_param_set("q must be invertible");
        if (field.is_zero(lambda)) throw invalid_param_set("lambda must be invertible");
        if (field.is_zero(qi[0])) throw invalid_param_set("q_0 must be invertible");
        if (field.is_zero(delta())) throw invalid_param_set("delta = q - q^-1 must be nonzero");
    }
};

template <class F>
struct AdmissibilityReport {
    using Elem = typename F::Elem;

    Elem residual_a;       // lambda - lambda^-1 - delta*(1 - A_0)
    Elem beta;
    std::vector<Elem> h;   // h_1 .. h_{k-1}
    bool admissible;
};

template <class F>
typename F::Elem beta_closed_form(const ParamSet<F>& ps) {
    const F& f = ps.field;
    auto q0 = ps.qi[0];
    // beta = q_0*lambda - q_0^-1*lambda^-1 + (1 - epsilon)*delta
    auto b = f.sub(f.mul(q0, ps.lambda), f.mul(f.inv(q0), f.inv(ps.lambda)));
    if (ps.epsilon() == 0) b = f.add(b, ps.delta());
    return b;
}

// h_l = lambda^-1 (q_l + q_0^-1 q_{k-l})
//     + delta [ sum_{r=1}^{k-l} q_{r+l} A_r
//             - sum_{i=max(l+1,z)}^{floor((l+k)/2)} q_{2i-l}
//             + sum_{i=ceil(l/2)}^{min(l,z-1)} q_{2i-l} ]
// with q_k = -1 and empty sums equal to zero.
template <class F>
typename F::Elem h_closed_form(const ParamSet<F>& ps, int l) {
    if (l < 1 || l >= ps.k) throw index_out_of_range("h_" + std::to_string(l));
    const F& f = ps.field;
    const int k = ps.k;
    const int z = ps.z();

    auto acc = f.mul(f.inv(ps.lambda), f.add(ps.q_coeff(l), f.mul(f.inv(ps.qi[0]), ps.q_coeff(k - l))));

    auto bracket = f.zero();
    for (int r = 1; r <= k - l; ++r)
        bracket = f.add(bracket, f.mul(ps.q_coeff(r + l), ps.Ai[static_cast<std::size_t>(r)]));
    for (int i = std::max(l + 1, z); i <= (l + k) / 2; ++i)
        bracket = f.sub(bracket, ps.q_coeff(2 * i - l));
    for (int i = (l + 1) / 2; i <= std::min(l, z - 1); ++i)
        bracket = f.add(bracket, ps.q_coeff(2 * i - l));

    return f.add(acc, f.mul(ps.delta(), bracket));
}

template <class F>
AdmissibilityReport<F> admissibility_report(const ParamSet<F>& ps) {
    ps.validate();
    const F& f = ps.field;
    AdmissibilityReport<F> rep{
        f.sub(f.sub(ps.lambda, f.inv(ps.lambda)), f.mul(ps.delta(), f.sub(f.one(), ps.Ai[0]))),
        beta_closed_form(ps),
        {},
        false,
    };
    for (int l = 1; l < ps.k; ++l) rep.h.push_back(h_closed_form(ps, l));
    rep.admissible = f.is_zero(rep.residual_a) && f.is_zero(rep.beta);
    for (const auto& hl : rep.h)
        if (!f.is_zero(hl)) rep.admissible = false;
    return rep;
}

namespace detail {

// Given k, q, lambda, q_1..q_{k-1}, completes q_0 and A_0..A_{k-1} so that
// relation (a), beta = 0 and every h_l = 0 hold. q_0 is the chosen root of
// beta = 0; the h_l = 0 system is triangular with pivot coefficient
// delta*q_k = -delta, solved for l = k-1 down to 1.
template <class F>
void fill_admissible(ParamSet<F>& ps, Sign sign) {
    const F& f = ps.field;
    const auto delta = ps.delta();
    const auto linv = f.inv(ps.lambda);

    if (ps.k % 2 == 1) {
        ps.qi[0] = sign == Sign::plus ? linv : f.neg(linv);
    } else {
        ps.qi[0] = sign == Sign::plus ? f.mul(linv, f.inv(ps.q)) : f.neg(f.mul(linv, ps.q));
    }
    ps.Ai[0] = f.sub(f.one(), f.div(f.sub(ps.lambda, linv), delta));

    for (int l = ps.k - 1; l >= 1; --l) {
        ps.Ai[static_cast<std::size_t>(ps.k - l)] = f.zero();
        auto h0 = h_closed_form(ps, l);
        ps.Ai[static_cast<std::size_t>(ps.k - l)] = f.div(h0, delta);
    }
}

}  // namespace detail

// Generic admissible parameter set over the rational function field
// Q(q, lambda, q_1, ..., q_{k-1}).
inline ParamSet<RationalFunctionField> generic_admissible(int k, Sign sign) {
    if (k < 1) throw invalid_param_set("k must be positive");
    std::vector<std::string> names = {"q", "lambda"};
    for (int i = 1; i < k; ++i) names.push_back("q" + std::to_string(i));
    RationalFunctionField f(std::move(names));

    ParamSet<RationalFunctionField> ps{k, f, f.var("q"), f.var("lambda"), {}, {}};
    ps.qi.assign(static_cast<std::size_t>(k), f.zero());
    ps.Ai.assign(static_cast<std::size_t>(k), f.zero());
    for (int i = 1; i < k; ++i) ps.qi[static_cast<std::size_t>(i)] = f.var("q" + std::to_string(i));

    detail::fill_admissible(ps, sign);
    ps.validate();
    return ps;
}

// Seeded admissible parameter set over F_p: q, lambda, q_1..q_{k-1} and the
// beta-root sign are sampled until q, lambda and delta are all nonzero, then
// q_0 and the A_i are completed as in generic_admissible. Deterministic for
// fixed (k, p, seed); throws exhausted_resampling after 1000 rejected draws.
inline ParamSet<PrimeField> random_admissible_finite_field(int k, std::uint64_t p, std::uint64_t seed) {
    if (k < 1) throw invalid_param_set("k must be positive");
    PrimeField f(p);
    std::seed_seq sq{seed, static_cast<std::uint64_t>(k), p};
    std::mt19937_64 rng(sq);
    auto draw = [&]() -> PrimeField::Elem { return rng() % p; };

    constexpr int kRetryBudget = 1000;
    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        ParamSet<PrimeField> ps{k, f, draw(), draw(), {}, {}};
        ps.qi.assign(static_cast<std::size_t>(k), f.zero());
        ps.Ai.assign(static_cast<std::size_t>(k), f.zero());
        for (int i = 1; i < k; ++i) ps.qi[static_cast<std::size_t>(i)] = draw();
        const Sign sign = (rng() & 1) ? Sign::plus : Sign::minus;
        if (f.is_zero(ps.q) || f.is_zero(ps.lambda) || f.is_zero(ps.delta())) continue;
        detail::fill_admissible(ps, sign);
        ps.validate();
        return ps;
    }
    throw exhausted_resampling(p);
}

}  // namespace bmw2k
