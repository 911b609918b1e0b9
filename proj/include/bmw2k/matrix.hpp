#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bmw2k/errors.hpp"

namespace bmw2k {

// Dense matrix over an exact coefficient field. Sized for desk scale; the
// multiply skips zero entries, which is what makes the sparse generator
// matrices cheap.
template <class F>
class Matrix {
public:
    using Elem = typename F::Elem;

    Matrix(const F& f, std::size_t rows, std::size_t cols)
        : f_(f), rows_(rows), cols_(cols), a_(rows * cols, f.zero()) {}

    static Matrix identity(const F& f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }

    const F& field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Elem& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    std::vector<Elem> column(std::size_t c) const {
        std::vector<Elem> v;
        v.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
        return v;
    }

    void set_column(std::size_t c, const std::vector<Elem>& v) {
        for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
    }

    Matrix add(const Matrix& o) const {
        Matrix r(f_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.add(a_[i], o.a_[i]);
        return r;
    }

    Matrix sub(const Matrix& o) const {
        Matrix r(f_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.sub(a_[i], o.a_[i]);
        return r;
    }

    Matrix neg() const {
        Matrix r(f_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.neg(a_[i]);
        return r;
    }

    Matrix scale(const Elem& s) const {
        Matrix r(f_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.mul(a_[i], s);
        return r;
    }

    Matrix mul(const Matrix& o) const {
        Matrix r(f_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t m = 0; m < cols_; ++m) {
                const Elem& x = at(i, m);
                if (f_.is_zero(x)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const Elem& y = o.at(m, j);
                    if (f_.is_zero(y)) continue;
                    r.at(i, j) = f_.add(r.at(i, j), f_.mul(x, y));
                }
            }
        }
        return r;
    }

    std::vector<Elem> apply(const std::vector<Elem>& v) const {
        std::vector<Elem> r(rows_, f_.zero());
        for (std::size_t c = 0; c < cols_; ++c) {
            if (f_.is_zero(v[c])) continue;
            for (std::size_t i = 0; i < rows_; ++i) {
                const Elem& x = at(i, c);
                if (f_.is_zero(x)) continue;
                r[i] = f_.add(r[i], f_.mul(x, v[c]));
            }
        }
        return r;
    }

    Matrix pow(unsigned n) const {
        Matrix acc = identity(f_, rows_);
        Matrix base = *this;
        while (n) {
            if (n & 1) acc = acc.mul(base);
            n >>= 1;
            if (n) base = base.mul(base);
        }
        return acc;
    }

    bool is_zero_matrix() const {
        for (const Elem& x : a_)
            if (!f_.is_zero(x)) return false;
        return true;
    }

    bool equal(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (!f_.equal(a_[i], o.a_[i])) return false;
        return true;
    }

    bool operator==(const Matrix& o) const { return equal(o); }

    // Solves this * x = rhs by Gauss-Jordan elimination with exact pivoting.
    // Requires a square nonsingular matrix.
    std::vector<Elem> solve(std::vector<Elem> rhs) const {
        Matrix m = *this;
        const std::size_t n = rows_;
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t pivot = col;
            while (pivot < n && f_.is_zero(m.at(pivot, col))) ++pivot;
            if (pivot == n) throw singular_matrix();
            if (pivot != col) {
                for (std::size_t j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
                std::swap(rhs[pivot], rhs[col]);
            }
            const Elem piv_inv = f_.inv(m.at(col, col));
            for (std::size_t j = 0; j < n; ++j) m.at(col, j) = f_.mul(m.at(col, j), piv_inv);
            rhs[col] = f_.mul(rhs[col], piv_inv);
            for (std::size_t r = 0; r < n; ++r) {
                if (r == col || f_.is_zero(m.at(r, col))) continue;
                const Elem factor = m.at(r, col);
                for (std::size_t j = 0; j < n; ++j)
                    m.at(r, j) = f_.sub(m.at(r, j), f_.mul(factor, m.at(col, j)));
                rhs[r] = f_.sub(rhs[r], f_.mul(factor, rhs[col]));
            }
        }
        return rhs;
    }

    bool is_invertible() const {
        Matrix m = *this;
        const std::size_t n = rows_;
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t pivot = col;
            while (pivot < n && f_.is_zero(m.at(pivot, col))) ++pivot;
            if (pivot == n) return false;
            if (pivot != col)
                for (std::size_t j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            const Elem piv_inv = f_.inv(m.at(col, col));
            for (std::size_t r = col + 1; r < n; ++r) {
                if (f_.is_zero(m.at(r, col))) continue;
                const Elem factor = f_.mul(m.at(r, col), piv_inv);
                for (std::size_t j = col; j < n; ++j)
                    m.at(r, j) = f_.sub(m.at(r, j), f_.mul(factor, m.at(col, j)));
            }
        }
        return true;
    }

private:
    F f_;
    std::size_t rows_, cols_;
    std::vector<Elem> a_;
};

}  // namespace bmw2k
