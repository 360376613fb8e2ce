#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qinfo/errors.hpp"

namespace qinfo {

using cplx = std::complex<double>;

// Dense row-major complex matrix. Every state handled here is tiny (N <= 64),
// so there is no sparse path and no blocking.
class ComplexMatrix {
public:
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, cplx{0.0, 0.0}) {
        if (rows == 0 || cols == 0) {
            throw DimensionMismatch("matrix dimensions must be positive");
        }
    }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = cplx{1.0, 0.0};
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<cplx>& entries() const { return entries_; }

    cplx trace() const;
    ComplexMatrix adjoint() const;
    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    ComplexMatrix operator-(const ComplexMatrix& rhs) const;

    static ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

    // Largest |entry| of this - rhs; throws on shape mismatch.
    double max_abs_diff(const ComplexMatrix& rhs) const;

    bool all_finite() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<cplx> entries_;
};

// Eigenvalues of a Hermitian matrix, ascending. Cyclic Jacobi on the real
// symmetric embedding [[X, -Y], [Y, X]]; adequate for the N <= 8 PSD check.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

}  // namespace qinfo
