#include "qinfo/complex_matrix.hpp"

#include <algorithm>
#include <cmath>

namespace qinfo {

cplx ComplexMatrix::trace() const {
    if (!is_square()) {
        throw DimensionMismatch("trace requires a square matrix");
    }
    cplx sum{0.0, 0.0};
    for (std::size_t i = 0; i < rows_; ++i) sum += (*this)(i, i);
    return sum;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    if (cols_ != rhs.rows_) {
        throw DimensionMismatch("matrix product shape mismatch");
    }
    ComplexMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const cplx aik = (*this)(i, k);
            if (aik == cplx{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                out(i, j) += aik * rhs(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw DimensionMismatch("matrix difference shape mismatch");
    }
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        out.entries_[i] = entries_[i] - rhs.entries_[i];
    }
    return out;
}

ComplexMatrix ComplexMatrix::kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t ia = 0; ia < a.rows_; ++ia) {
        for (std::size_t ja = 0; ja < a.cols_; ++ja) {
            const cplx av = a(ia, ja);
            for (std::size_t ib = 0; ib < b.rows_; ++ib) {
                for (std::size_t jb = 0; jb < b.cols_; ++jb) {
                    out(ia * b.rows_ + ib, ja * b.cols_ + jb) = av * b(ib, jb);
                }
            }
        }
    }
    return out;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw DimensionMismatch("matrix comparison shape mismatch");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        worst = std::max(worst, std::abs(entries_[i] - rhs.entries_[i]));
    }
    return worst;
}

bool ComplexMatrix::all_finite() const {
    for (const cplx& z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

namespace {

// Cyclic Jacobi for a real symmetric matrix, in place.
std::vector<double> jacobi_eigenvalues(std::vector<double>& a, std::size_t n) {
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                off += a[p * n + q] * a[p * n + q];
            }
        }
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (std::abs(apq) < 1e-300) continue;
                const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k * n + p];
                    const double akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p * n + k];
                    const double aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a[i * n + i];
    std::sort(eig.begin(), eig.end());
    return eig;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    if (!m.is_square()) {
        throw DimensionMismatch("eigenvalues require a square matrix");
    }
    const std::size_t n = m.rows();
    // Embed X + iY as [[X, -Y], [Y, X]]; each eigenvalue appears twice.
    const std::size_t d = 2 * n;
    std::vector<double> a(d * d, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const cplx z = m(i, j);
            a[i * d + j] = z.real();
            a[(i + n) * d + (j + n)] = z.real();
            a[i * d + (j + n)] = -z.imag();
            a[(i + n) * d + j] = z.imag();
        }
    }
    std::vector<double> doubled = jacobi_eigenvalues(a, d);
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = doubled[2 * i];
    return eig;
}

}  // namespace qinfo
