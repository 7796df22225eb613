#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperbandit {

using Vector = std::vector<double>;

/// Dense row-major matrix of doubles. Sized for desk-scale problems
/// (preference matrices, arm statistics, MLP layers); no views, no
/// expression templates.
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {
        assert(rows >= 0 && cols >= 0);
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    size_t size() const { return data_.size(); }

    double& operator()(int r, int c) {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return data_[static_cast<size_t>(r) * cols_ + c];
    }
    double operator()(int r, int c) const {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return data_[static_cast<size_t>(r) * cols_ + c];
    }

    double* row(int r) { return data_.data() + static_cast<size_t>(r) * cols_; }
    const double* row(int r) const { return data_.data() + static_cast<size_t>(r) * cols_; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

namespace detail {
inline void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Vector kernels. Inner loops are unit-stride so the compiler can vectorize.
// ---------------------------------------------------------------------------

inline double dot(const double* a, const double* b, size_t n) {
    double s = 0.0;
    for (size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

inline double dot(const Vector& a, const Vector& b) {
    detail::require(a.size() == b.size(), "dot: length mismatch");
    return dot(a.data(), b.data(), a.size());
}

/// y += alpha * x
inline void axpy(double alpha, const double* x, double* y, size_t n) {
    for (size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

inline double norm2(const Vector& v) { return std::sqrt(dot(v.data(), v.data(), v.size())); }

// ---------------------------------------------------------------------------
// Matrix kernels.
// ---------------------------------------------------------------------------

/// C = A * B
inline Matrix matmul(const Matrix& a, const Matrix& b) {
    detail::require(a.cols() == b.rows(), "matmul: inner dimension mismatch");
    Matrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        const double* arow = a.row(i);
        double* crow = c.row(i);
        for (int k = 0; k < a.cols(); ++k) {
            axpy(arow[k], b.row(k), crow, static_cast<size_t>(b.cols()));
        }
    }
    return c;
}

/// C = A * B^T  (rows of both operands are contiguous dot products)
inline Matrix matmul_abt(const Matrix& a, const Matrix& b) {
    detail::require(a.cols() == b.cols(), "matmul_abt: inner dimension mismatch");
    Matrix c(a.rows(), b.rows());
    for (int i = 0; i < a.rows(); ++i) {
        const double* arow = a.row(i);
        double* crow = c.row(i);
        for (int j = 0; j < b.rows(); ++j) {
            crow[j] = dot(arow, b.row(j), static_cast<size_t>(a.cols()));
        }
    }
    return c;
}

/// C = A^T * B  (accumulated as rank-1 row updates; unit stride throughout)
inline Matrix matmul_atb(const Matrix& a, const Matrix& b) {
    detail::require(a.rows() == b.rows(), "matmul_atb: inner dimension mismatch");
    Matrix c(a.cols(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        const double* arow = a.row(i);
        const double* brow = b.row(i);
        for (int k = 0; k < a.cols(); ++k) {
            axpy(arow[k], brow, c.row(k), static_cast<size_t>(b.cols()));
        }
    }
    return c;
}

/// y = A * x
inline Vector matvec(const Matrix& a, const Vector& x) {
    detail::require(a.cols() == static_cast<int>(x.size()), "matvec: dimension mismatch");
    Vector y(static_cast<size_t>(a.rows()));
    for (int i = 0; i < a.rows(); ++i) y[i] = dot(a.row(i), x.data(), x.size());
    return y;
}

inline Matrix transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

/// u v^T
inline Matrix outer(const Vector& u, const Vector& v) {
    Matrix m(static_cast<int>(u.size()), static_cast<int>(v.size()));
    for (size_t i = 0; i < u.size(); ++i) axpy(u[i], v.data(), m.row(static_cast<int>(i)), v.size());
    return m;
}

inline double frobenius_norm(const Matrix& m) {
    return std::sqrt(dot(m.data(), m.data(), m.size()));
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
    detail::require(a.rows() == b.rows() && a.cols() == b.cols(), "max_abs_diff: shape mismatch");
    double d = 0.0;
    for (size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a.data()[i] - b.data()[i]));
    return d;
}

}  // namespace hyperbandit
