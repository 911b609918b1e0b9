#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bmw2k/matrix.hpp"
#include "bmw2k/relation_report.hpp"
#include "bmw2k/rep_xi.hpp"
#include "bmw2k/words.hpp"

namespace bmw2k {

template <class F>
class Algebra;

// An element written over the basis {Y^i e Y^j, Y^i X Y^j, X Y^i X Y^j},
// i.e. a coefficient vector of length 3k^2 indexed by BasisIndex.
template <class F>
struct AlgebraElement {
    const Algebra<F>* owner;
    std::vector<typename F::Elem> coeffs;
};

// One nonzero entry of the structure-constant tensor:
// basis_s * basis_t = sum_r coeff * basis_r.
template <class F>
struct StructureEntry {
    std::size_t s, t, r;
    typename F::Elem coeff;
};

struct IdealReport {
    bool left_closed;
    bool right_closed;
    bool copies_match;
    bool e_generates;
    bool involution_stable;

    bool pass() const { return left_closed && right_closed && copies_match && e_generates && involution_stable; }
};

template <class F>
struct HeckeReport {
    std::size_t quotient_dim;
    std::size_t expected_dim;
    RelationReport<F> relations;

    bool pass() const { return quotient_dim == expected_dim && relations.all_zero(); }
};

// Spelling of a basis element as a generator word, evaluated left to right:
// v_ij = Y^i e Y^j, u_ij = Y^i X Y^j, w_ij = X Y^i X Y^j.
inline Word basis_word(const BasisIndex& b) {
    Word w;
    if (b.cls == BasisIndex::Cls::W) w.tokens.push_back(Token{Gen::X, 1});
    if (b.i != 0) w.tokens.push_back(Token{Gen::Y, b.i});
    w.tokens.push_back(Token{b.cls == BasisIndex::Cls::V ? Gen::E : Gen::X, 1});
    if (b.j != 0) w.tokens.push_back(Token{Gen::Y, b.j});
    return w;
}

// The realized algebra: word reduction, multiplication through cached
// left-multiplication matrices of basis words, the anti-involution, and the
// structural checks. All mutation is the lazily filled cache, guarded by a
// mutex; elements and reports are values.
template <class F>
class Algebra {
public:
    explicit Algebra(XiRep<F> rep)
        : rep_(std::move(rep)), lmul_(rep_.dim()), ypow_(static_cast<std::size_t>(rep_.params.k)) {}

    Algebra(const Algebra&) = delete;
    Algebra& operator=(const Algebra&) = delete;

    const XiRep<F>& rep() const { return rep_; }
    const ParamSet<F>& params() const { return rep_.params; }
    const F& field() const { return rep_.params.field; }
    std::size_t dim() const { return rep_.dim(); }

    AlgebraElement<F> zero_element() const {
        return AlgebraElement<F>{this, std::vector<typename F::Elem>(dim(), field().zero())};
    }

    AlgebraElement<F> basis_element(std::size_t t) const {
        auto e = zero_element();
        e.coeffs[t] = field().one();
        return e;
    }

    // 1 = X^-1 (Y^0 X Y^0); the coordinate vector is the W-column of u_00.
    AlgebraElement<F> one() const {
        const std::size_t u00 = BasisIndex{BasisIndex::Cls::U, 0, 0}.flat(rep_.params.k);
        return AlgebraElement<F>{this, rep_.W.column(u00)};
    }

    // Applies the word g_1 ... g_m to the coordinates of 1, mapping
    // X -> X, X^-1 -> W, Y -> Y, Y^-1 -> Yinv, e -> E. The result is the
    // basis expansion of the word as an element of the algebra.
    AlgebraElement<F> reduce(const Word& w) const {
        auto v = one().coeffs;
        for (auto it = w.tokens.rbegin(); it != w.tokens.rend(); ++it) {
            if (it->gen == Gen::E && it->exp < 0) throw non_invertible_generator();
            const Matrix<F>& m = generator_matrix(it->gen, it->exp < 0);
            long reps = it->exp < 0 ? -it->exp : it->exp;
            for (long r = 0; r < reps; ++r) v = m.apply(v);
        }
        return AlgebraElement<F>{this, std::move(v)};
    }

    AlgebraElement<F> reduce(std::string_view text) const { return reduce(parse_word(text)); }

    AlgebraElement<F> multiply(const AlgebraElement<F>& a, const AlgebraElement<F>& b) const {
        if (a.owner != this || b.owner != this) throw rep_mismatch();
        const F& f = field();
        auto out = std::vector<typename F::Elem>(dim(), f.zero());
        for (std::size_t s = 0; s < dim(); ++s) {
            if (f.is_zero(a.coeffs[s])) continue;
            const auto col = left_mul(s).apply(b.coeffs);
            for (std::size_t r = 0; r < dim(); ++r)
                out[r] = f.add(out[r], f.mul(a.coeffs[s], col[r]));
        }
        return AlgebraElement<F>{this, std::move(out)};
    }

    AlgebraElement<F> add(const AlgebraElement<F>& a, const AlgebraElement<F>& b) const {
        if (a.owner != this || b.owner != this) throw rep_mismatch();
        const F& f = field();
        auto out = a.coeffs;
        for (std::size_t r = 0; r < dim(); ++r) out[r] = f.add(out[r], b.coeffs[r]);
        return AlgebraElement<F>{this, std::move(out)};
    }

    bool equal(const AlgebraElement<F>& a, const AlgebraElement<F>& b) const {
        if (a.owner != this || b.owner != this) throw rep_mismatch();
        const F& f = field();
        for (std::size_t r = 0; r < dim(); ++r)
            if (!f.equal(a.coeffs[r], b.coeffs[r])) return false;
        return true;
    }

    AlgebraElement<F> involution(const AlgebraElement<F>& a) const {
        if (a.owner != this) throw rep_mismatch();
        return AlgebraElement<F>{this, involution_matrix().apply(a.coeffs)};
    }

    // Left-multiplication matrix of the s-th basis word, built by spelling
    // the word as a product of generator matrices. Cached; safe to fill
    // concurrently.
    const Matrix<F>& left_mul(std::size_t s) const {
        std::lock_guard<std::mutex> lock(mu_);
        if (!lmul_[s]) {
            const BasisIndex b = BasisIndex::from_flat(rep_.params.k, s);
            Matrix<F> m = ypow_locked(b.j);
            m = (b.cls == BasisIndex::Cls::V ? rep_.E : rep_.X).mul(m);
            if (b.i != 0) m = ypow_locked(b.i).mul(m);
            if (b.cls == BasisIndex::Cls::W) m = rep_.X.mul(m);
            lmul_[s] = std::make_unique<Matrix<F>>(std::move(m));
        }
        return *lmul_[s];
    }

    // Matrix of the anti-involution fixing X, Y and e and reversing words:
    // column s is the reduction of the reversed spelling of basis word s.
    const Matrix<F>& involution_matrix() const {
        {
            std::lock_guard<std::mutex> lock(mu_);
            if (invol_) return *invol_;
        }
        Matrix<F> m(field(), dim(), dim());
        for (std::size_t s = 0; s < dim(); ++s) {
            Word w = basis_word(BasisIndex::from_flat(rep_.params.k, s));
            std::reverse(w.tokens.begin(), w.tokens.end());
            m.set_column(s, reduce(w).coeffs);
        }
        std::lock_guard<std::mutex> lock(mu_);
        if (!invol_) invol_ = std::make_unique<Matrix<F>>(std::move(m));
        return *invol_;
    }

    // Every basis word must reduce to its own unit vector; this certifies
    // that the spanning set is linearly independent, i.e. the algebra is
    // free of rank 3k^2 over its coefficient domain.
    bool verify_phi() const {
        const F& f = field();
        for (std::size_t s = 0; s < dim(); ++s) {
            const auto v = reduce(basis_word(BasisIndex::from_flat(rep_.params.k, s))).coeffs;
            for (std::size_t r = 0; r < dim(); ++r) {
                const bool want_one = r == s;
                if (want_one ? !f.is_one(v[r]) : !f.is_zero(v[r])) return false;
            }
        }
        return true;
    }

    std::vector<StructureEntry<F>> structure_constants() const {
        const F& f = field();
        std::vector<StructureEntry<F>> out;
        for (std::size_t s = 0; s < dim(); ++s) {
            const Matrix<F>& l = left_mul(s);
            for (std::size_t t = 0; t < dim(); ++t)
                for (std::size_t r = 0; r < dim(); ++r)
                    if (!f.is_zero(l.at(r, t))) out.push_back(StructureEntry<F>{s, t, r, l.at(r, t)});
        }
        return out;
    }

    // Checks that the V-class coordinate subspace behaves as the two-sided
    // ideal generated by e: closed under the generators on both sides,
    // isomorphic to k copies of the rank-k module (one per fixed second
    // index), generated by v_00, and stable under the anti-involution.
    IdealReport ideal_check() const {
        const F& f = field();
        const int k = rep_.params.k;
        const std::size_t vdim = static_cast<std::size_t>(k * k);
        using Cls = BasisIndex::Cls;

        bool left_closed = true;
        for (const Matrix<F>* m : {&rep_.Y, &rep_.Yinv, &rep_.X, &rep_.E, &rep_.W})
            for (std::size_t c = 0; c < vdim && left_closed; ++c)
                for (std::size_t r = vdim; r < dim(); ++r)
                    if (!f.is_zero(m->at(r, c))) {
                        left_closed = false;
                        break;
                    }

        bool right_closed = true;
        {
            const AlgebraElement<F> gens[] = {reduce("Y"), reduce("Y^-1"), reduce("X"),
                                              reduce("X^-1"), reduce("e")};
            for (std::size_t c = 0; c < vdim && right_closed; ++c)
                for (const auto& g : gens) {
                    const auto prod = multiply(basis_element(c), g);
                    for (std::size_t r = vdim; r < dim(); ++r)
                        if (!f.is_zero(prod.coeffs[r])) {
                            right_closed = false;
                            break;
                        }
                    if (!right_closed) break;
                }
        }

        bool copies_match = true;
        {
            const std::pair<const Matrix<F>*, const Matrix<F>*> pairs[] = {
                {&rep_.Y, &rep_.vrep.Y}, {&rep_.X, &rep_.vrep.X}, {&rep_.E, &rep_.vrep.E}};
            for (int j = 0; j < k && copies_match; ++j)
                for (const auto& [big, small] : pairs) {
                    for (int i = 0; i < k && copies_match; ++i)
                        for (int r = 0; r < k; ++r) {
                            const auto& got = big->at(BasisIndex{Cls::V, r, j}.flat(k),
                                                      BasisIndex{Cls::V, i, j}.flat(k));
                            if (!f.equal(got, small->at(static_cast<std::size_t>(r),
                                                        static_cast<std::size_t>(i)))) {
                                copies_match = false;
                                break;
                            }
                        }
                    if (!copies_match) break;
                }
        }

        bool e_generates = true;
        {
            const auto v00 = basis_element(BasisIndex{Cls::V, 0, 0}.flat(k));
            for (int i = 0; i < k && e_generates; ++i)
                for (int j = 0; j < k; ++j) {
                    Word left, right;
                    if (i != 0) left.tokens.push_back(Token{Gen::Y, i});
                    if (j != 0) right.tokens.push_back(Token{Gen::Y, j});
                    const auto got = multiply(reduce(left), multiply(v00, reduce(right)));
                    if (!equal(got, basis_element(BasisIndex{Cls::V, i, j}.flat(k)))) {
                        e_generates = false;
                        break;
                    }
                }
        }

        bool involution_stable = true;
        for (std::size_t c = 0; c < vdim && involution_stable; ++c) {
            const auto img = involution(basis_element(c));
            for (std::size_t r = vdim; r < dim(); ++r)
                if (!f.is_zero(img.coeffs[r])) {
                    involution_stable = false;
                    break;
                }
        }

        return IdealReport{left_closed, right_closed, copies_match, e_generates, involution_stable};
    }

    // Quotient by the V-class subspace (the ideal generated by e): the
    // induced actions of Y and X must satisfy the braid relation, the
    // order-k relation and the quadratic relation T1^2 = delta T1 + 1, on a
    // quotient of dimension exactly 2k^2.
    HeckeReport<F> hecke_quotient_check() const {
        const F& f = field();
        const int k = rep_.params.k;
        const std::size_t vdim = static_cast<std::size_t>(k * k);
        const std::size_t qdim = dim() - vdim;

        auto project = [&](const Matrix<F>& m) {
            Matrix<F> q(f, qdim, qdim);
            for (std::size_t r = 0; r < qdim; ++r)
                for (std::size_t c = 0; c < qdim; ++c) q.at(r, c) = m.at(r + vdim, c + vdim);
            return q;
        };
        const Matrix<F> t0 = project(rep_.Y);
        const Matrix<F> t1 = project(rep_.X);
        const Matrix<F> I = Matrix<F>::identity(f, qdim);

        RelationReport<F> rel;
        rel.add("t0_t1_braid", t0.mul(t1).mul(t0).mul(t1).sub(t1.mul(t0).mul(t1).mul(t0)));
        {
            Matrix<F> acc(f, qdim, qdim);
            Matrix<F> p = I;
            for (int l = 0; l <= k; ++l) {
                acc = acc.add(p.scale(rep_.params.q_coeff(l)));
                if (l < k) p = t0.mul(p);
            }
            rel.add("t0_kth_order", std::move(acc));
        }
        rel.add("t1_quadratic", t1.mul(t1).sub(t1.scale(rep_.params.delta())).sub(I));

        return HeckeReport<F>{qdim, 2 * static_cast<std::size_t>(k) * static_cast<std::size_t>(k),
                              std::move(rel)};
    }

private:
    const Matrix<F>& generator_matrix(Gen g, bool inverse) const {
        switch (g) {
            case Gen::X: return inverse ? rep_.W : rep_.X;
            case Gen::Y: return inverse ? rep_.Yinv : rep_.Y;
            case Gen::E: return rep_.E;
        }
        throw error("unknown generator");
    }

    // Y^j for 0 <= j < k; callers hold mu_.
    const Matrix<F>& ypow_locked(int j) const {
        auto& slot = ypow_[static_cast<std::size_t>(j)];
        if (!slot) {
            if (j == 0)
                slot = std::make_unique<Matrix<F>>(Matrix<F>::identity(field(), dim()));
            else
                slot = std::make_unique<Matrix<F>>(rep_.Y.mul(ypow_locked(j - 1)));
        }
        return *slot;
    }

    XiRep<F> rep_;
    mutable std::mutex mu_;
    mutable std::vector<std::unique_ptr<Matrix<F>>> lmul_;
    mutable std::vector<std::unique_ptr<Matrix<F>>> ypow_;
    mutable std::unique_ptr<Matrix<F>> invol_;
};

}  // namespace bmw2k
