#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "actm/errors.hpp"
#include "actm/rational.hpp"

namespace actm {

template <typename S>
using Vector = std::vector<S>;

/// Dense row-major matrix over an exact or floating scalar.
template <typename S>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}

    Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, S(0)) {
        if (rows < 0 || cols < 0) throw DimensionMismatch("Matrix: negative dimension");
    }

    Matrix(std::initializer_list<std::initializer_list<S>> rows) {
        rows_ = static_cast<int>(rows.size());
        cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
        e_.reserve(static_cast<size_t>(rows_) * cols_);
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != cols_) throw DimensionMismatch("Matrix: ragged rows");
            for (const auto& v : r) e_.push_back(v);
        }
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }

    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    S& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const S& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    S trace() const {
        if (!is_square()) throw DimensionMismatch("trace: non-square matrix");
        S t(0);
        for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o);
        for (size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o);
        for (size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
        return *this;
    }
    Matrix& operator*=(const S& s) {
        for (auto& v : e_) v *= s;
        return *this;
    }

    Matrix operator-() const {
        Matrix m = *this;
        for (auto& v : m.e_) v = -v;
        return m;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const S& s) { return a *= s; }
    friend Matrix operator*(const S& s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("Matrix product: inner dimensions differ");
        Matrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const S& aik = a(i, k);
                if (scalar_is_zero(aik)) continue;
                for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("Matrix: shape mismatch");
    }

    int rows_, cols_;
    std::vector<S> e_;
};

template <typename S>
Vector<S> operator*(const Matrix<S>& m, const Vector<S>& v) {
    if (m.cols() != static_cast<int>(v.size())) throw DimensionMismatch("Matrix*Vector: size mismatch");
    Vector<S> out(static_cast<size_t>(m.rows()), S(0));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
    return out;
}

template <typename S>
Matrix<S> from_columns(const std::vector<Vector<S>>& cols) {
    if (cols.empty()) return Matrix<S>();
    Matrix<S> m(static_cast<int>(cols.front().size()), static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols(); ++j) {
        if (static_cast<int>(cols[j].size()) != m.rows()) throw DimensionMismatch("from_columns: ragged columns");
        for (int i = 0; i < m.rows(); ++i) m(i, j) = cols[j][i];
    }
    return m;
}

template <typename S>
Vector<S> column(const Matrix<S>& m, int j) {
    Vector<S> v(static_cast<size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) v[i] = m(i, j);
    return v;
}

template <typename S>
Vector<S> basis_vector(int dim, int i) {
    Vector<S> v(static_cast<size_t>(dim), S(0));
    v[i] = S(1);
    return v;
}

/// Gauss-Jordan inverse with max-|pivot| column selection. Exact over Rational.
template <typename S>
Matrix<S> inverse(const Matrix<S>& m) {
    if (!m.is_square()) throw DimensionMismatch("inverse: non-square matrix");
    const int n = m.rows();
    Matrix<S> a = m;
    Matrix<S> inv = Matrix<S>::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        auto best = scalar_abs(S(0));
        for (int r = col; r < n; ++r) {
            auto mag = scalar_abs(a(r, col));
            if (!scalar_is_zero(a(r, col)) && (pivot < 0 || best < mag)) {
                pivot = r;
                best = mag;
            }
        }
        if (pivot < 0) throw SingularMatrix("inverse: matrix is singular");
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        const S d = a(col, col);
        for (int j = 0; j < n; ++j) {
            a(col, j) /= d;
            inv(col, j) /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || scalar_is_zero(a(r, col))) continue;
            const S f = a(r, col);
            for (int j = 0; j < n; ++j) {
                a(r, j) -= f * a(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

template <typename S>
S max_abs(const Matrix<S>& m) {
    S best(0);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            S v = scalar_abs(m(i, j));
            if (best < v) best = v;
        }
    return best;
}

inline Matrix<double> to_double(const Matrix<Rational>& m) {
    Matrix<double> out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_double();
    return out;
}

inline Vector<double> to_double(const Vector<Rational>& v) {
    Vector<double> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i].to_double();
    return out;
}

} // namespace actm
