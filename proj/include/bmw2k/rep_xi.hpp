#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bmw2k/matrix.hpp"
#include "bmw2k/params.hpp"
#include "bmw2k/relation_report.hpp"
#include "bmw2k/rep_v.hpp"

namespace bmw2k {

// Index into the rank-3k^2 module: three classes of k x k symbols
// (v_ij, u_ij, w_ij), flattened as class*k^2 + i*k + j.
struct BasisIndex {
    enum class Cls : int { V = 0, U = 1, W = 2 };

    Cls cls;
    int i;
    int j;

    std::size_t flat(int k) const {
        return static_cast<std::size_t>(static_cast<int>(cls) * k * k + i * k + j);
    }

    static BasisIndex from_flat(int k, std::size_t t) {
        const int kk = k * k;
        const int c = static_cast<int>(t) / kk;
        const int rem = static_cast<int>(t) % kk;
        return BasisIndex{static_cast<Cls>(c), rem / k, rem % k};
    }

    std::string label() const {
        static const char* names[] = {"v", "u", "w"};
        return std::string(names[static_cast<int>(cls)]) + "[" + std::to_string(i) + "][" +
               std::to_string(j) + "]";
    }

    bool operator==(const BasisIndex& o) const = default;
};

// The module Xi with its five generator matrices. Columns and rows are
// indexed by BasisIndex::flat. The V-class carries the two-sided ideal;
// yinv_consistent records whether the matrix polynomial for Y^-1 actually
// inverted Y (it always does for admissible parameters).
template <class F>
struct XiRep {
    ParamSet<F> params;
    VRep<F> vrep;
    Matrix<F> Y, Yinv, X, E, W;
    bool yinv_consistent;

    std::size_t dim() const { return static_cast<std::size_t>(3 * params.k * params.k); }
};

// Expands the symbol x_{ij} (x in {v,u,w}, any integers i and j) in the
// 3k^2 basis by applying the order-k recurrence independently in each index.
template <class F>
std::vector<typename F::Elem> index_normalize(const VRep<F>& vrep, typename BasisIndex::Cls cls, long i,
                                              long j) {
    const F& f = vrep.params.field;
    const int k = vrep.params.k;
    const auto a = v_extended(vrep, i);
    const auto b = v_extended(vrep, j);
    std::vector<typename F::Elem> out(static_cast<std::size_t>(3 * k * k), f.zero());
    for (int r = 0; r < k; ++r) {
        if (f.is_zero(a[static_cast<std::size_t>(r)])) continue;
        for (int c = 0; c < k; ++c) {
            if (f.is_zero(b[static_cast<std::size_t>(c)])) continue;
            out[BasisIndex{cls, r, c}.flat(k)] =
                f.mul(a[static_cast<std::size_t>(r)], b[static_cast<std::size_t>(c)]);
        }
    }
    return out;
}

template <class F>
std::vector<typename F::Elem> index_normalize(const XiRep<F>& rep, typename BasisIndex::Cls cls, long i,
                                              long j) {
    return index_normalize(rep.vrep, cls, i, j);
}

// Builds the generator matrices on Xi. Construction order matters: the
// V-class block comes from V acting on the left tensor factor, E on the
// U/W-classes uses the right action through the anti-involution
// (Y^i X Y^j)* = Y^j X Y^i, X on U/W follows, and only then the Y action on
// the W-class, whose defining combination W u_{i,j+1} + delta u_{1,i+j}
// - delta YX v_{ij} reads the already-built columns.
template <class F>
XiRep<F> build_xi(const ParamSet<F>& ps) {
    ps.validate();
    VRep<F> vrep = build_v(ps);
    const F& f = ps.field;
    const int k = ps.k;
    const std::size_t n = static_cast<std::size_t>(3 * k * k);
    const auto delta = ps.delta();
    using Cls = BasisIndex::Cls;

    Matrix<F> Y(f, n, n), X(f, n, n), E(f, n, n);

    // V-class block: each of Y, X, E acts through the rank-k matrices on the
    // first index, leaving the second index alone.
    auto fill_v_block = [&](Matrix<F>& target, const Matrix<F>& src) {
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                const std::size_t col = BasisIndex{Cls::V, i, j}.flat(k);
                for (int r = 0; r < k; ++r) {
                    const auto& x = src.at(static_cast<std::size_t>(r), static_cast<std::size_t>(i));
                    if (!f.is_zero(x)) target.at(BasisIndex{Cls::V, r, j}.flat(k), col) = x;
                }
            }
    };
    fill_v_block(Y, vrep.Y);
    fill_v_block(X, vrep.X);
    fill_v_block(E, vrep.E);

    // E u_{ij} = v_0 (x) (Y^j X Y^i v_0), the right action of Y^i X Y^j on v_00.
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            std::vector<typename F::Elem> t(static_cast<std::size_t>(k), f.zero());
            t[0] = f.one();
            for (int s = 0; s < i; ++s) t = vrep.Y.apply(t);
            t = vrep.X.apply(t);
            for (int s = 0; s < j; ++s) t = vrep.Y.apply(t);
            const std::size_t col = BasisIndex{Cls::U, i, j}.flat(k);
            for (int c = 0; c < k; ++c)
                E.at(BasisIndex{Cls::V, 0, c}.flat(k), col) = t[static_cast<std::size_t>(c)];
        }

    // E w_{ij} = lambda E u_{ij}
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const std::size_t ucol = BasisIndex{Cls::U, i, j}.flat(k);
            const std::size_t wcol = BasisIndex{Cls::W, i, j}.flat(k);
            for (std::size_t r = 0; r < n; ++r) {
                const auto& x = E.at(r, ucol);
                if (!f.is_zero(x)) E.at(r, wcol) = f.mul(ps.lambda, x);
            }
        }

    // X u_{ij} = w_{ij};  X w_{ij} = u_{ij} + delta w_{ij} - delta lambda E u_{ij}
    const auto neg_dl = f.neg(f.mul(delta, ps.lambda));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const std::size_t ucol = BasisIndex{Cls::U, i, j}.flat(k);
            const std::size_t wcol = BasisIndex{Cls::W, i, j}.flat(k);
            X.at(wcol, ucol) = f.one();
            X.at(ucol, wcol) = f.one();
            X.at(wcol, wcol) = delta;
            for (std::size_t r = 0; r < n; ++r) {
                const auto& x = E.at(r, ucol);
                if (!f.is_zero(x)) X.at(r, wcol) = f.add(X.at(r, wcol), f.mul(neg_dl, x));
            }
        }

    // Y u_{ij} = u_{i+1,j}
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            Y.set_column(BasisIndex{Cls::U, i, j}.flat(k), index_normalize(vrep, Cls::U, i + 1, j));

    // Y w_{ij} = W u_{i,j+1} + delta u_{1,i+j} - delta YX v_{ij}
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            auto s1 = index_normalize(vrep, Cls::U, i, j + 1);
            auto col = X.apply(s1);
            auto es1 = E.apply(s1);
            for (std::size_t r = 0; r < n; ++r)
                col[r] = f.add(col[r], f.mul(delta, f.sub(es1[r], s1[r])));
            const auto s2 = index_normalize(vrep, Cls::U, 1, i + j);
            for (std::size_t r = 0; r < n; ++r) col[r] = f.add(col[r], f.mul(delta, s2[r]));
            const auto yx = vrep.Y.apply(vrep.X.column(static_cast<std::size_t>(i)));
            for (int r = 0; r < k; ++r) {
                auto& slot = col[BasisIndex{Cls::V, r, j}.flat(k)];
                slot = f.sub(slot, f.mul(delta, yx[static_cast<std::size_t>(r)]));
            }
            Y.set_column(BasisIndex{Cls::W, i, j}.flat(k), col);
        }

    // Y^-1 as the matrix polynomial -q_0^-1 sum_{i=0}^{k-1} q_{i+1} Y^i,
    // then checked against Y. The check can only fail for non-admissible
    // parameters, where the order-k relation need not hold on the W-class.
    Matrix<F> Yinv(f, n, n);
    {
        Matrix<F> p = Matrix<F>::identity(f, n);
        for (int i = 0; i < k; ++i) {
            Yinv = Yinv.add(p.scale(ps.q_coeff(i + 1)));
            if (i + 1 < k) p = Y.mul(p);
        }
        Yinv = Yinv.scale(f.neg(f.inv(ps.qi[0])));
    }
    const Matrix<F> I = Matrix<F>::identity(f, n);
    const bool yinv_ok = Y.mul(Yinv).equal(I) && Yinv.mul(Y).equal(I);

    Matrix<F> W = X.sub(I.scale(delta)).add(E.scale(delta));

    return XiRep<F>{ps,          std::move(vrep), std::move(Y), std::move(Yinv),
                    std::move(X), std::move(E),   std::move(W), yinv_ok};
}

template <class F>
RelationReport<F> verify_xi(const XiRep<F>& rep) {
    return detail::verify_generator_matrices(rep.params, rep.Y, rep.Yinv, rep.X, rep.E, rep.W);
}

// The 3x3 identities behind XW = WX = 1 and XE = EX = lambda E on the
// submodule spanned by {u_ij, w_ij, E u_ij}:
//
//       ( 0    1      0   )        ( 0    0    0  )
//  X' = ( 1  delta    0   )   E' = ( 0    0    0  )
//       ( 0 -dl*la  lambda)        ( 1  lambda A_0)
//
// Both hold exactly when lambda - delta + delta A_0 = lambda^-1.
template <class F>
bool three_by_three_check(const ParamSet<F>& ps) {
    ps.validate();
    const F& f = ps.field;
    const auto delta = ps.delta();

    Matrix<F> X(f, 3, 3), E(f, 3, 3);
    X.at(0, 1) = f.one();
    X.at(1, 0) = f.one();
    X.at(1, 1) = delta;
    X.at(2, 1) = f.neg(f.mul(delta, ps.lambda));
    X.at(2, 2) = ps.lambda;
    E.at(2, 0) = f.one();
    E.at(2, 1) = ps.lambda;
    E.at(2, 2) = ps.Ai[0];

    const Matrix<F> I = Matrix<F>::identity(f, 3);
    const Matrix<F> W = X.sub(I.scale(delta)).add(E.scale(delta));
    const Matrix<F> lE = E.scale(ps.lambda);
    return X.mul(W).equal(I) && W.mul(X).equal(I) && X.mul(E).equal(lE) && E.mul(X).equal(lE);
}

}  // namespace bmw2k
