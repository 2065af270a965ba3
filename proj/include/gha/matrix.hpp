#pragma once

#include "gha/errors.hpp"
#include "gha/scalar.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace gha {

template <class T>
using Vec = std::vector<T>;

using QVec = Vec<Rational>;
using CVec = Vec<Scalar>;

/// Dense row-major matrix over an exact field.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t r, size_t c) : r_(r), c_(c), a_(r * c, T(0)) {}

    static Matrix identity(size_t n)
    {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }

    T& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
    const T& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

    Vec<T> row(size_t i) const { return Vec<T>(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }
    Vec<T> col(size_t j) const
    {
        Vec<T> v(r_);
        for (size_t i = 0; i < r_; ++i)
            v[i] = (*this)(i, j);
        return v;
    }
    void set_col(size_t j, const Vec<T>& v)
    {
        for (size_t i = 0; i < r_; ++i)
            (*this)(i, j) = v[i];
    }

    bool is_zero() const
    {
        for (const auto& x : a_)
            if (!gha::is_zero(x))
                return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix& operator+=(const Matrix& o)
    {
        check_same(o);
        for (size_t k = 0; k < a_.size(); ++k)
            a_[k] += o.a_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o)
    {
        check_same(o);
        for (size_t k = 0; k < a_.size(); ++k)
            a_[k] -= o.a_[k];
        return *this;
    }
    Matrix& operator*=(const T& s)
    {
        for (auto& x : a_)
            x *= s;
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
    friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.c_ != b.r_)
            throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch in product");
        Matrix m(a.r_, b.c_);
        for (size_t i = 0; i < a.r_; ++i)
            for (size_t k = 0; k < a.c_; ++k) {
                const T& x = a(i, k);
                if (gha::is_zero(x))
                    continue;
                for (size_t j = 0; j < b.c_; ++j)
                    if (!gha::is_zero(b(k, j)))
                        m(i, j) += x * b(k, j);
            }
        return m;
    }

    friend Vec<T> operator*(const Matrix& a, const Vec<T>& v)
    {
        if (a.c_ != v.size())
            throw Error(ErrorCode::InvalidArgument, "matrix/vector shape mismatch");
        Vec<T> out(a.r_, T(0));
        for (size_t i = 0; i < a.r_; ++i)
            for (size_t k = 0; k < a.c_; ++k)
                if (!gha::is_zero(a(i, k)) && !gha::is_zero(v[k]))
                    out[i] += a(i, k) * v[k];
        return out;
    }

    Matrix transpose() const
    {
        Matrix m(c_, r_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j)
                m(j, i) = (*this)(i, j);
        return m;
    }

    bool is_scalar_multiple_of_identity() const
    {
        if (r_ != c_)
            return false;
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) {
                if (i != j && !gha::is_zero((*this)(i, j)))
                    return false;
                if (i == j && (*this)(i, j) != (*this)(0, 0))
                    return false;
            }
        return true;
    }

    const Vec<T>& data() const { return a_; }

private:
    void check_same(const Matrix& o) const
    {
        if (r_ != o.r_ || c_ != o.c_)
            throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
    }

    size_t r_ = 0, c_ = 0;
    Vec<T> a_;
};

using QMat = Matrix<Rational>;
using CMat = Matrix<Scalar>;

inline CMat conj_transpose(const CMat& m)
{
    CMat t(m.cols(), m.rows());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            t(j, i) = m(i, j).conj();
    return t;
}

inline CMat to_complex(const QMat& m)
{
    CMat c(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            c(i, j) = Scalar(m(i, j));
    return c;
}

template <class T>
struct Echelon {
    Matrix<T> r;              // reduced row echelon form
    std::vector<size_t> pivots; // pivot column per nonzero row
};

/// Reduced row echelon form by Gauss-Jordan elimination.
template <class T>
Echelon<T> rref(Matrix<T> m)
{
    Echelon<T> e;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t p = row;
        while (p < m.rows() && is_zero(m(p, col)))
            ++p;
        if (p == m.rows())
            continue;
        if (p != row)
            for (size_t j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(row, j));
        T inv = T(1) / m(row, col);
        for (size_t j = col; j < m.cols(); ++j)
            m(row, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || is_zero(m(i, col)))
                continue;
            T f = m(i, col);
            for (size_t j = col; j < m.cols(); ++j)
                if (!is_zero(m(row, j)))
                    m(i, j) -= f * m(row, j);
        }
        e.pivots.push_back(col);
        ++row;
    }
    e.r = std::move(m);
    return e;
}

template <class T>
size_t rank(const Matrix<T>& m)
{
    return rref(m).pivots.size();
}

/// Basis of the right nullspace, as columns of the returned matrix.
template <class T>
Matrix<T> nullspace(const Matrix<T>& m)
{
    auto e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<size_t> free;
    for (size_t j = 0; j < m.cols(); ++j)
        if (!is_pivot[j])
            free.push_back(j);
    Matrix<T> n(m.cols(), free.size());
    for (size_t k = 0; k < free.size(); ++k) {
        n(free[k], k) = T(1);
        for (size_t i = 0; i < e.pivots.size(); ++i)
            n(e.pivots[i], k) = -e.r(i, free[k]);
    }
    return n;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m)
{
    if (m.rows() != m.cols())
        throw Error(ErrorCode::InvalidArgument, "inverse of non-square matrix");
    size_t n = m.rows();
    Matrix<T> aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = T(1);
    }
    auto e = rref(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
        throw Error(ErrorCode::SingularParameter, "matrix is singular");
    Matrix<T> inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            inv(i, j) = e.r(i, n + j);
    return inv;
}

template <class T>
T determinant(Matrix<T> m)
{
    size_t n = m.rows();
    T det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t p = col;
        while (p < n && is_zero(m(p, col)))
            ++p;
        if (p == n)
            return T(0);
        if (p != col) {
            for (size_t j = 0; j < n; ++j)
                std::swap(m(p, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        for (size_t i = col + 1; i < n; ++i) {
            if (is_zero(m(i, col)))
                continue;
            T f = m(i, col) / m(col, col);
            for (size_t j = col; j < n; ++j)
                m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

/// Basis (as rows) of the row space spanned by the given vectors.
template <class T>
std::vector<Vec<T>> row_basis(const std::vector<Vec<T>>& vs, size_t dim)
{
    if (vs.empty())
        return {};
    Matrix<T> m(vs.size(), dim);
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = 0; j < dim; ++j)
            m(i, j) = vs[i][j];
    auto e = rref(m);
    std::vector<Vec<T>> out;
    for (size_t i = 0; i < e.pivots.size(); ++i)
        out.push_back(e.r.row(i));
    return out;
}

/// Columns of m as a list of vectors.
template <class T>
std::vector<Vec<T>> columns(const Matrix<T>& m)
{
    std::vector<Vec<T>> out;
    for (size_t j = 0; j < m.cols(); ++j)
        out.push_back(m.col(j));
    return out;
}

template <class T>
Matrix<T> from_columns(const std::vector<Vec<T>>& cols, size_t n)
{
    Matrix<T> m(n, cols.size());
    for (size_t j = 0; j < cols.size(); ++j)
        m.set_col(j, cols[j]);
    return m;
}

template <class T>
bool is_zero_vec(const Vec<T>& v)
{
    for (const auto& x : v)
        if (!is_zero(x))
            return false;
    return true;
}

template <class T>
T dot(const Vec<T>& a, const Vec<T>& b)
{
    T s(0);
    for (size_t i = 0; i < a.size(); ++i)
        if (!is_zero(a[i]) && !is_zero(b[i]))
            s += a[i] * b[i];
    return s;
}

inline CVec to_complex(const QVec& v)
{
    CVec c;
    c.reserve(v.size());
    for (const auto& x : v)
        c.emplace_back(x);
    return c;
}

inline Scalar cdot(const QVec& a, const CVec& b)
{
    Scalar s;
    for (size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && !b[i].is_zero())
            s += Scalar(a[i]) * b[i];
    return s;
}

} // namespace gha
