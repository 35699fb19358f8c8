#ifndef MINIFOLD_LINALG_HPP
#define MINIFOLD_LINALG_HPP

#include <vector>

#include "minifold/ratfunc.hpp"
#include "minifold/series.hpp"

namespace minifold {

template <class T>
struct field_ops;

template <>
struct field_ops<Rational> {
    static Rational zero(const Rational&) { return Rational(0); }
    static Rational one(const Rational&) { return Rational(1); }
    static bool is_zero(const Rational& a) { return a.is_zero(); }
    static Rational div(const Rational& a, const Rational& b) { return a / b; }
};

template <>
struct field_ops<RationalFunction> {
    static RationalFunction zero(const RationalFunction& proto) {
        return RationalFunction::constant(proto.vars(), Rational(0));
    }
    static RationalFunction one(const RationalFunction& proto) {
        return RationalFunction::constant(proto.vars(), Rational(1));
    }
    static bool is_zero(const RationalFunction& a) { return a.is_zero(); }
    static RationalFunction div(const RationalFunction& a, const RationalFunction& b) {
        return a / b;
    }
};

// Dense matrix over an exact field.
template <class T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n, const T& proto) {
        Matrix m(n, n, field_ops<T>::zero(proto));
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field_ops<T>::one(proto);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw algebra_error("Matrix: shape mismatch in *");
        const T& pr = a.data_.empty() ? b.data_.front() : a.data_.front();
        Matrix r(a.rows_, b.cols_, field_ops<T>::zero(pr));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (field_ops<T>::is_zero(a.at(i, k))) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
            }
        return r;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw algebra_error("Matrix: shape mismatch in +");
        Matrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = r.data_[i] + b.data_[i];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw algebra_error("Matrix: shape mismatch in -");
        Matrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = r.data_[i] - b.data_[i];
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            if (!(a.data_[i] == b.data_[i])) return false;
        return true;
    }

    Matrix transposed() const {
        if (data_.empty()) return Matrix(cols_, rows_, T{});
        Matrix r(cols_, rows_, data_.front());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != cols_) throw algebra_error("Matrix: apply shape");
        std::vector<T> r(rows_, field_ops<T>::zero(data_.front()));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!field_ops<T>::is_zero(at(i, j))) r[i] = r[i] + at(i, j) * v[j];
        return r;
    }

    T trace() const {
        T t = field_ops<T>::zero(data_.front());
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t = t + at(i, i);
        return t;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

// Gaussian elimination over the field; returns (echelon matrix, pivot column
// per row used, rank, det-if-square).
template <class T>
struct Echelon {
    Matrix<T> mat;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    T det;  // meaningful only for square input
};

template <class T>
Echelon<T> echelonize(Matrix<T> a) {
    const T proto = a.rows() && a.cols() ? a.at(0, 0) : T{};
    Echelon<T> e{a, {}, 0, field_ops<T>::one(proto)};
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && field_ops<T>::is_zero(e.mat.at(piv, c))) ++piv;
        if (piv == a.rows()) continue;
        if (piv != r) {
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(e.mat.at(piv, j), e.mat.at(r, j));
            e.det = -e.det;
        }
        e.det = e.det * e.mat.at(r, c);
        T inv = field_ops<T>::div(field_ops<T>::one(proto), e.mat.at(r, c));
        for (std::size_t j = c; j < a.cols(); ++j) e.mat.at(r, j) = e.mat.at(r, j) * inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || field_ops<T>::is_zero(e.mat.at(i, c))) continue;
            T f = e.mat.at(i, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                e.mat.at(i, j) = e.mat.at(i, j) - f * e.mat.at(r, j);
        }
        e.pivot_cols.push_back(c);
        ++r;
    }
    e.rank = r;
    if (a.rows() == a.cols() && r < a.rows()) e.det = field_ops<T>::zero(proto);
    return e;
}

template <class T>
T determinant(const Matrix<T>& a) {
    if (a.rows() != a.cols()) throw algebra_error("determinant: not square");
    if (a.rows() == 0) throw algebra_error("determinant: empty");
    return echelonize(a).det;
}

// Exact solve A x = b; throws on singular A.
template <class T>
std::vector<T> mat_solve(const Matrix<T>& a, const std::vector<T>& b) {
    if (a.rows() != a.cols() || a.rows() != b.size()) throw algebra_error("mat_solve: shape");
    const std::size_t n = a.rows();
    const T proto = a.at(0, 0);
    Matrix<T> aug(n, n + 1, field_ops<T>::zero(proto));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n) = b[i];
    }
    Echelon<T> e = echelonize(aug);
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k)
        if (e.pivot_cols[k] >= n) throw algebra_error("mat_solve: singular matrix");
    if (e.rank < n) throw algebra_error("mat_solve: singular matrix");
    std::vector<T> x(n, field_ops<T>::zero(proto));
    for (std::size_t i = 0; i < n; ++i) x[e.pivot_cols[i]] = e.mat.at(i, n);
    return x;
}

template <class T>
Matrix<T> mat_inverse(const Matrix<T>& a) {
    if (a.rows() != a.cols()) throw algebra_error("mat_inverse: not square");
    const std::size_t n = a.rows();
    const T proto = a.at(0, 0);
    Matrix<T> aug(n, 2 * n, field_ops<T>::zero(proto));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = field_ops<T>::one(proto);
    }
    Echelon<T> e = echelonize(aug);
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
        if (e.pivot_cols[i] != i) throw algebra_error("mat_inverse: singular matrix");
    if (e.rank < n) throw algebra_error("mat_inverse: singular matrix");
    Matrix<T> inv(n, n, field_ops<T>::zero(proto));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = e.mat.at(i, n + j);
    return inv;
}

// Kernel basis vectors of A (columns ordered as in A).
template <class T>
std::vector<std::vector<T>> nullspace(const Matrix<T>& a) {
    const T proto = a.rows() && a.cols() ? a.at(0, 0) : T{};
    Echelon<T> e = echelonize(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t free_c = 0; free_c < a.cols(); ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<T> v(a.cols(), field_ops<T>::zero(proto));
        v[free_c] = field_ops<T>::one(proto);
        for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
            v[e.pivot_cols[r]] = -e.mat.at(r, free_c);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Characteristic polynomial det(tI - A) by the Faddeev-LeVerrier recurrence;
// returns coefficients c[0..n] with c[n] = 1 (c[k] multiplies t^k).
std::vector<Rational> char_poly(const Matrix<Rational>& a);

}  // namespace minifold

#endif
