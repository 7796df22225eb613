#pragma once

#include <algorithm>
#include <cmath>

#include "hyperbandit/errors.hpp"
#include "hyperbandit/matrix.hpp"

namespace hyperbandit {

/// Max-entry asymmetry tolerated before a matrix is rejected as non-SPD input.
inline constexpr double kSymmetryTol = 1e-10;

/// Symmetric positive definite system with a cached Cholesky factor.
/// Factorization happens at construction; solves reuse the factor.
class SpdSystem {
  public:
    explicit SpdSystem(Matrix a) : a_(std::move(a)) {
        if (a_.rows() != a_.cols()) throw NumericalError("SpdSystem: matrix is not square");
        double asym = 0.0;
        for (int i = 0; i < a_.rows(); ++i)
            for (int j = i + 1; j < a_.cols(); ++j)
                asym = std::max(asym, std::abs(a_(i, j) - a_(j, i)));
        if (asym > kSymmetryTol) throw NumericalError("SpdSystem: matrix is not symmetric");
        factorize();
    }

    int dim() const { return a_.rows(); }
    const Matrix& matrix() const { return a_; }

    /// Solve A x = b via the cached Cholesky factor.
    Vector solve(const Vector& b) const {
        detail::require(static_cast<int>(b.size()) == dim(), "SpdSystem::solve: dimension mismatch");
        const int n = dim();
        Vector y(b);
        // L y = b
        for (int i = 0; i < n; ++i) {
            double s = y[i];
            const double* lrow = chol_.row(i);
            for (int k = 0; k < i; ++k) s -= lrow[k] * y[k];
            y[i] = s / lrow[i];
        }
        // L^T x = y
        for (int i = n - 1; i >= 0; --i) {
            double s = y[i];
            for (int k = i + 1; k < n; ++k) s -= chol_(k, i) * y[k];
            y[i] = s / chol_(i, i);
        }
        return y;
    }

    /// A^{-1}, solved column by column.
    Matrix inverse() const {
        const int n = dim();
        Matrix inv(n, n);
        Vector e(static_cast<size_t>(n), 0.0);
        for (int j = 0; j < n; ++j) {
            e[j] = 1.0;
            Vector col = solve(e);
            for (int i = 0; i < n; ++i) inv(i, j) = col[i];
            e[j] = 0.0;
        }
        return inv;
    }

    const Matrix& cholesky_factor() const { return chol_; }

  private:
    void factorize() {
        const int n = a_.rows();
        chol_ = Matrix(n, n);
        for (int j = 0; j < n; ++j) {
            double d = a_(j, j) - dot(chol_.row(j), chol_.row(j), static_cast<size_t>(j));
            if (!(d > 0.0)) throw NumericalError("SpdSystem: matrix is not positive definite");
            const double ljj = std::sqrt(d);
            chol_(j, j) = ljj;
            for (int i = j + 1; i < n; ++i) {
                const double s = a_(i, j) - dot(chol_.row(i), chol_.row(j), static_cast<size_t>(j));
                chol_(i, j) = s / ljj;
            }
        }
    }

    Matrix a_;
    Matrix chol_;  // lower triangular, A = L L^T
};

inline Vector spd_solve(const SpdSystem& a, const Vector& b) { return a.solve(b); }

inline Vector spd_solve(const Matrix& a, const Vector& b) { return SpdSystem(a).solve(b); }

inline Matrix spd_inverse(const Matrix& a) { return SpdSystem(a).inverse(); }

/// Rank-1 inverse update: given A^{-1}, returns (A + v v^T)^{-1}.
/// For SPD A the denominator 1 + v^T A^{-1} v is >= 1.
inline Matrix sherman_morrison(const Matrix& ainv, const Vector& v) {
    detail::require(ainv.rows() == ainv.cols(), "sherman_morrison: matrix not square");
    detail::require(ainv.rows() == static_cast<int>(v.size()),
                    "sherman_morrison: dimension mismatch");
    const int n = ainv.rows();
    Vector w = matvec(ainv, v);  // A^{-1} v
    Vector u(static_cast<size_t>(n), 0.0);  // v^T A^{-1}
    for (int i = 0; i < n; ++i) axpy(v[i], ainv.row(i), u.data(), static_cast<size_t>(n));
    const double denom = 1.0 + dot(v, w);
    Matrix out = ainv;
    for (int i = 0; i < n; ++i) axpy(-w[i] / denom, u.data(), out.row(i), static_cast<size_t>(n));
    return out;
}

namespace detail {

/// Cyclic Jacobi eigensolver for a symmetric matrix; eigenvectors accumulate
/// into `vecs` (as columns). `s` is destroyed (diagonalized in place).
inline void jacobi_eigen(Matrix& s, Matrix& vecs) {
    const int n = s.rows();
    vecs = Matrix::identity(n);
    if (n <= 1) return;
    const double scale = frobenius_norm(s);
    if (scale == 0.0) return;
    const double tol = 1e-15 * scale;
    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(s(p, q)));
        if (off <= tol) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = s(p, q);
                if (std::abs(apq) <= tol * 1e-2) continue;
                const double theta = (s(q, q) - s(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * c;
                // S <- J^T S J on rows/cols p, q
                for (int k = 0; k < n; ++k) {
                    const double skp = s(k, p), skq = s(k, q);
                    s(k, p) = c * skp - sn * skq;
                    s(k, q) = sn * skp + c * skq;
                }
                for (int k = 0; k < n; ++k) {
                    const double spk = s(p, k), sqk = s(q, k);
                    s(p, k) = c * spk - sn * sqk;
                    s(q, k) = sn * spk + c * sqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = vecs(k, p), vkq = vecs(k, q);
                    vecs(k, p) = c * vkp - sn * vkq;
                    vecs(k, q) = sn * vkp + c * vkq;
                }
            }
        }
    }
}

}  // namespace detail

/// Singular values of M in descending order, length min(rows, cols).
/// Diagonalizes the Gram matrix of the smaller side with cyclic Jacobi, then
/// recovers each value as the norm of M applied to the eigenvector; the extra
/// multiply keeps tiny singular values accurate instead of sqrt-amplifying
/// Gram roundoff.
inline std::vector<double> singular_values(const Matrix& m) {
    const int nsv = std::min(m.rows(), m.cols());
    if (nsv == 0) return {};
    const bool use_right = m.rows() >= m.cols();  // Gram over the smaller dimension
    const int n = use_right ? m.cols() : m.rows();
    Matrix gram(n, n);
    if (use_right) {
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                double s = 0.0;
                for (int k = 0; k < m.rows(); ++k) s += m(k, i) * m(k, j);
                gram(i, j) = gram(j, i) = s;
            }
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                const double s = dot(m.row(i), m.row(j), static_cast<size_t>(m.cols()));
                gram(i, j) = gram(j, i) = s;
            }
    }
    Matrix vecs;
    detail::jacobi_eigen(gram, vecs);

    std::vector<double> sv(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double ss = 0.0;
        if (use_right) {
            // sigma_i = || M v_i ||
            for (int r = 0; r < m.rows(); ++r) {
                double acc = 0.0;
                const double* mrow = m.row(r);
                for (int k = 0; k < n; ++k) acc += mrow[k] * vecs(k, i);
                ss += acc * acc;
            }
        } else {
            // sigma_i = || M^T u_i ||
            for (int c = 0; c < m.cols(); ++c) {
                double acc = 0.0;
                for (int k = 0; k < n; ++k) acc += m(k, c) * vecs(k, i);
                ss += acc * acc;
            }
        }
        sv[static_cast<size_t>(i)] = std::sqrt(ss);
    }
    std::sort(sv.begin(), sv.end(), std::greater<double>());
    sv.resize(static_cast<size_t>(nsv));
    return sv;
}

}  // namespace hyperbandit
