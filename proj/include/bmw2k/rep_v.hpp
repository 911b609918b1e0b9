#pragma once

#include <string>
#include <vector>

#include "bmw2k/matrix.hpp"
#include "bmw2k/params.hpp"
#include "bmw2k/relation_report.hpp"

namespace bmw2k {

// The rank-k module V with basis v_0..v_{k-1} and explicit generator
// matrices (columns indexed by the basis).
//
//   Y v_i     = v_{i+1}                       (i < k-1)
//   Y v_{k-1} = sum_i q_i v_i
//   X v_0     = lambda v_0
//   X v_1     = lambda^-1 Y^-1 v_0
//   X v_i     = Y^-1 X v_{i-1} - delta v_{i-2} + delta A_{i-1} Y^-1 v_0
//   E v_i     = A_i v_0
//   W         = X - delta + delta E
template <class F>
struct VRep {
    ParamSet<F> params;
    Matrix<F> Y, Yinv, X, E, W;
};

template <class F>
VRep<F> build_v(const ParamSet<F>& ps) {
    ps.validate();
    const F& f = ps.field;
    const std::size_t k = static_cast<std::size_t>(ps.k);
    const auto delta = ps.delta();

    Matrix<F> Y(f, k, k);
    for (std::size_t i = 0; i + 1 < k; ++i) Y.at(i + 1, i) = f.one();
    for (std::size_t i = 0; i < k; ++i) Y.at(i, k - 1) = ps.qi[i];

    Matrix<F> Yinv(f, k, k);
    for (std::size_t i = 1; i < k; ++i) Yinv.at(i - 1, i) = f.one();
    const auto neg_q0inv = f.neg(f.inv(ps.qi[0]));
    for (std::size_t i = 0; i < k; ++i) Yinv.at(i, 0) = f.mul(neg_q0inv, ps.q_coeff(static_cast<int>(i) + 1));

    Matrix<F> X(f, k, k);
    X.at(0, 0) = ps.lambda;
    if (k >= 2) {
        const auto yinv_v0 = Yinv.column(0);
        const auto linv = f.inv(ps.lambda);
        for (std::size_t r = 0; r < k; ++r) X.at(r, 1) = f.mul(linv, yinv_v0[r]);
        for (std::size_t i = 2; i < k; ++i) {
            auto col = Yinv.apply(X.column(i - 1));
            col[i - 2] = f.sub(col[i - 2], delta);
            const auto scale = f.mul(delta, ps.Ai[i - 1]);
            for (std::size_t r = 0; r < k; ++r) col[r] = f.add(col[r], f.mul(scale, yinv_v0[r]));
            X.set_column(i, col);
        }
    }

    Matrix<F> E(f, k, k);
    for (std::size_t i = 0; i < k; ++i) E.at(0, i) = ps.Ai[i];

    Matrix<F> W = X.sub(Matrix<F>::identity(f, k).scale(delta)).add(E.scale(delta));

    return VRep<F>{ps, std::move(Y), std::move(Yinv), std::move(X), std::move(E), std::move(W)};
}

// Coordinates of v_s = Y^s v_0 in the basis v_0..v_{k-1}, for any integer s.
// Computed by iterated application of Y or Y^-1.
template <class F>
std::vector<typename F::Elem> v_extended(const VRep<F>& rep, long s) {
    const F& f = rep.params.field;
    const long k = rep.params.k;
    std::vector<typename F::Elem> v(static_cast<std::size_t>(k), f.zero());
    if (s >= 0 && s < k) {
        v[static_cast<std::size_t>(s)] = f.one();
        return v;
    }
    if (s >= k) {
        v[static_cast<std::size_t>(k - 1)] = f.one();
        for (long t = k - 1; t < s; ++t) v = rep.Y.apply(v);
        return v;
    }
    v[0] = f.one();
    for (long t = 0; t > s; --t) v = rep.Yinv.apply(v);
    return v;
}

// Right-hand side of the closed-form action of W on the basis:
//   W v_l = lambda^-1 v_{-l} + delta sum_{i=1}^{l} (A_{l+1-i} v_{1-i} - v_{l-2i+2})
// expanded through v_extended. For admissible parameters this equals the
// matrix column W e_l.
template <class F>
std::vector<typename F::Elem> w_closed_form(const VRep<F>& rep, int l) {
    if (l < 0 || l >= rep.params.k) throw index_out_of_range("w_closed_form: l=" + std::to_string(l));
    const F& f = rep.params.field;
    const auto delta = rep.params.delta();
    const std::size_t k = static_cast<std::size_t>(rep.params.k);

    auto acc = v_extended(rep, -static_cast<long>(l));
    const auto linv = f.inv(rep.params.lambda);
    for (std::size_t r = 0; r < k; ++r) acc[r] = f.mul(linv, acc[r]);

    for (int i = 1; i <= l; ++i) {
        const auto a = f.mul(delta, rep.params.Ai[static_cast<std::size_t>(l + 1 - i)]);
        auto va = v_extended(rep, 1 - i);
        auto vb = v_extended(rep, l - 2 * i + 2);
        for (std::size_t r = 0; r < k; ++r)
            acc[r] = f.sub(f.add(acc[r], f.mul(a, va[r])), f.mul(delta, vb[r]));
    }
    return acc;
}

namespace detail {

// Residual checks shared by the rank-k and rank-3k^2 representations:
// the defining relations, written for the maps (Y, Yinv, X, E, W).
template <class F>
RelationReport<F> verify_generator_matrices(const ParamSet<F>& ps, const Matrix<F>& Y, const Matrix<F>& Yinv,
                                            const Matrix<F>& X, const Matrix<F>& E, const Matrix<F>& W) {
    const F& f = ps.field;
    const std::size_t n = Y.rows();
    const Matrix<F> I = Matrix<F>::identity(f, n);
    RelationReport<F> rep;

    {
        Matrix<F> acc(f, n, n);
        Matrix<F> p = I;
        for (int l = 0; l <= ps.k; ++l) {
            acc = acc.add(p.scale(ps.q_coeff(l)));
            if (l < ps.k) p = Y.mul(p);
        }
        rep.add("kth_order", std::move(acc));
    }

    rep.add("y_yinv_one", Y.mul(Yinv).sub(I));
    rep.add("xw_one", X.mul(W).sub(I));
    rep.add("wx_one", W.mul(X).sub(I));
    rep.add("xe_lambda_e", X.mul(E).sub(E.scale(ps.lambda)));
    rep.add("ex_lambda_e", E.mul(X).sub(E.scale(ps.lambda)));

    const Matrix<F> yxyx = Y.mul(X).mul(Y).mul(X);
    const Matrix<F> xyxy = X.mul(Y).mul(X).mul(Y);
    rep.add("braid", yxyx.sub(xyxy));

    {
        Matrix<F> p = I;
        for (int m = 0; m < ps.k; ++m) {
            rep.add("e_y" + std::to_string(m) + "_e", E.mul(p).mul(E).sub(E.scale(ps.Ai[static_cast<std::size_t>(m)])));
            p = Y.mul(p);
        }
    }

    const auto linv = f.inv(ps.lambda);
    const Matrix<F> yxy = Y.mul(X).mul(Y);
    rep.add("e_yxy", E.mul(yxy).sub(E.scale(linv)));
    rep.add("yxy_e", yxy.mul(E).sub(E.scale(linv)));

    return rep;
}

}  // namespace detail

// One residual entry per defining relation, plus the stronger
// N = YXYX - 1 = 0 annihilation check.
template <class F>
RelationReport<F> verify_v(const VRep<F>& rep) {
    RelationReport<F> r =
        detail::verify_generator_matrices(rep.params, rep.Y, rep.Yinv, rep.X, rep.E, rep.W);
    const F& f = rep.params.field;
    const std::size_t k = static_cast<std::size_t>(rep.params.k);
    r.add("n_zero", rep.Y.mul(rep.X).mul(rep.Y).mul(rep.X).sub(Matrix<F>::identity(f, k)));
    return r;
}

// Independent derivation of beta and the h_l: over the generic coefficient
// field, build V symbolically and expand q_0 (X - Y^-1 W Y^-1) v_0 in the
// basis {v_0, v_{-1}, ..., v_{1-k}}. The coefficient of v_0 is beta and the
// coefficient of v_{-l} is h_l. Serves as the oracle for the closed forms
// in admissibility_report.
struct SymbolicAdmissibility {
    ParamSet<RationalFunctionField> params;
    RationalFunctionField::Elem beta;
    std::vector<RationalFunctionField::Elem> h;  // h_1 .. h_{k-1}
};

inline SymbolicAdmissibility symbolic_derive_h(int k) {
    if (k < 1) throw invalid_param_set("k must be positive");
    std::vector<std::string> names = {"q", "lambda"};
    for (int i = 0; i < k; ++i) names.push_back("q" + std::to_string(i));
    for (int i = 0; i < k; ++i) names.push_back("A" + std::to_string(i));
    RationalFunctionField f(std::move(names));

    ParamSet<RationalFunctionField> ps{k, f, f.var("q"), f.var("lambda"), {}, {}};
    for (int i = 0; i < k; ++i) ps.qi.push_back(f.var("q" + std::to_string(i)));
    for (int i = 0; i < k; ++i) ps.Ai.push_back(f.var("A" + std::to_string(i)));
    // The ground ring carries lambda - lambda^-1 = delta (1 - A_0) by
    // definition, so A_0 is the function determined by that relation rather
    // than a free symbol.
    ps.Ai[0] = f.sub(f.one(), f.div(f.sub(ps.lambda, f.inv(ps.lambda)), ps.delta()));

    VRep<RationalFunctionField> rep = build_v(ps);
    const std::size_t n = static_cast<std::size_t>(k);

    auto x = rep.X.column(0);
    {
        auto y = rep.Yinv.apply(rep.W.apply(rep.Yinv.column(0)));
        for (std::size_t r = 0; r < n; ++r) x[r] = f.mul(ps.qi[0], f.sub(x[r], y[r]));
    }

    Matrix<RationalFunctionField> basis(f, n, n);
    for (std::size_t c = 0; c < n; ++c) basis.set_column(c, v_extended(rep, -static_cast<long>(c)));
    auto coeffs = basis.solve(x);

    SymbolicAdmissibility out{std::move(ps), coeffs[0], {}};
    for (std::size_t l = 1; l < n; ++l) out.h.push_back(coeffs[l]);
    return out;
}

}  // namespace bmw2k
