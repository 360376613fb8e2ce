#pragma once

#include "qinfo/complex_matrix.hpp"
#include "qinfo/pure_state.hpp"

namespace qinfo {

// Hermitian, unit-trace, positive semidefinite matrix. Construction goes
// through validate(); instances are immutable afterwards.
class DensityMatrix {
public:
    static constexpr double kDefaultTolerance = 1e-10;
    // Full eigenvalue PSD verification only up to this dimension; larger
    // matrices are checked by Hermiticity, trace and diagonal sign.
    static constexpr std::size_t kEigenCheckMaxDim = 8;

    // Checks all invariants and wraps m. Throws NotHermitian, TraceNotOne or
    // NegativeEigenvalue naming the violated invariant and the worst
    // offending magnitude.
    static DensityMatrix validate(const ComplexMatrix& m,
                                  double tolerance = kDefaultTolerance);

    std::size_t dim() const { return matrix_.rows(); }
    const ComplexMatrix& matrix() const { return matrix_; }
    double tolerance() const { return tolerance_; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return matrix_(i, j); }

    // tr rho^2; real by Hermiticity (computed as sum of |rho_ij|^2).
    double purity() const;

private:
    DensityMatrix(ComplexMatrix m, double tolerance)
        : matrix_(std::move(m)), tolerance_(tolerance) {}

    ComplexMatrix matrix_;
    double tolerance_;
};

class UnitaryMatrix {
public:
    static constexpr double kDefaultTolerance = 1e-10;

    // Requires U U^dagger = I entrywise within tolerance.
    static UnitaryMatrix validate(const ComplexMatrix& m,
                                  double tolerance = kDefaultTolerance);

    std::size_t dim() const { return matrix_.rows(); }
    const ComplexMatrix& matrix() const { return matrix_; }

private:
    explicit UnitaryMatrix(ComplexMatrix m) : matrix_(std::move(m)) {}

    ComplexMatrix matrix_;
};

DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b);

// U rho U^dagger; preserves purity.
DensityMatrix unitary_conjugate(const DensityMatrix& rho, const UnitaryMatrix& u);

// Same diagonal, zero off-diagonals.
DensityMatrix diagonal_part(const DensityMatrix& rho);

enum class Subsystem { First, Second };

// Reduced state of the kept factor of a dim_first x dim_second bipartition.
DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t dim_first,
                            std::size_t dim_second, Subsystem keep);

// Deterministic Householder reflection U with U rho_psi U^dagger =
// diag(1, 0, ..., 0); the first column of U^dagger is psi itself.
UnitaryMatrix diagonalizing_unitary_for_pure(const PureState& psi);

}  // namespace qinfo
