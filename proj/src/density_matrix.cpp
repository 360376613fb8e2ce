#include "qinfo/density_matrix.hpp"

#include <cmath>
#include <sstream>

namespace qinfo {

namespace {

std::string describe(const char* what, double magnitude) {
    std::ostringstream os;
    os << what << " (worst offending magnitude " << magnitude << ")";
    return os.str();
}

}  // namespace

DensityMatrix DensityMatrix::validate(const ComplexMatrix& m, double tolerance) {
    if (!m.is_square()) {
        throw DimensionMismatch("density matrix must be square");
    }
    if (!m.all_finite()) {
        throw NotFinite("density matrix has non-finite entries");
    }
    const std::size_t n = m.rows();

    double worst_herm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            worst_herm = std::max(worst_herm, std::abs(m(i, j) - std::conj(m(j, i))));
        }
    }
    if (worst_herm > tolerance) {
        throw NotHermitian(describe("matrix is not Hermitian", worst_herm));
    }

    const double trace_err = std::abs(m.trace() - cplx{1.0, 0.0});
    if (trace_err > tolerance) {
        throw TraceNotOne(describe("trace differs from 1", trace_err));
    }

    for (std::size_t i = 0; i < n; ++i) {
        if (m(i, i).real() < -tolerance) {
            throw NegativeEigenvalue(
                describe("negative diagonal entry", -m(i, i).real()));
        }
    }

    if (n <= kEigenCheckMaxDim) {
        const std::vector<double> eig = hermitian_eigenvalues(m);
        if (eig.front() < -1e-8) {
            throw NegativeEigenvalue(
                describe("negative eigenvalue", -eig.front()));
        }
    }

    return DensityMatrix(m, tolerance);
}

double DensityMatrix::purity() const {
    double sum = 0.0;
    for (const cplx& z : matrix_.entries()) sum += std::norm(z);
    return sum;
}

UnitaryMatrix UnitaryMatrix::validate(const ComplexMatrix& m, double tolerance) {
    if (!m.is_square()) {
        throw DimensionMismatch("unitary matrix must be square");
    }
    if (!m.all_finite()) {
        throw NotFinite("unitary matrix has non-finite entries");
    }
    const ComplexMatrix gram = m * m.adjoint();
    const double worst = gram.max_abs_diff(ComplexMatrix::identity(m.rows()));
    if (worst > tolerance) {
        throw NotUnitary("U U^dagger differs from identity by " + std::to_string(worst));
    }
    return UnitaryMatrix(m);
}

DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b) {
    return DensityMatrix::validate(ComplexMatrix::kron(a.matrix(), b.matrix()),
                                   std::max(a.tolerance(), b.tolerance()));
}

DensityMatrix unitary_conjugate(const DensityMatrix& rho, const UnitaryMatrix& u) {
    if (rho.dim() != u.dim()) {
        throw DimensionMismatch("state and unitary dimensions differ");
    }
    return DensityMatrix::validate(u.matrix() * rho.matrix() * u.matrix().adjoint(),
                                   rho.tolerance());
}

DensityMatrix diagonal_part(const DensityMatrix& rho) {
    ComplexMatrix out(rho.dim(), rho.dim());
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        out(i, i) = cplx{rho(i, i).real(), 0.0};
    }
    return DensityMatrix::validate(out, rho.tolerance());
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t dim_first,
                            std::size_t dim_second, Subsystem keep) {
    if (dim_first * dim_second != rho.dim()) {
        throw DimensionMismatch("subsystem dimensions do not factor the state");
    }
    if (keep == Subsystem::First) {
        ComplexMatrix out(dim_first, dim_first);
        for (std::size_t i = 0; i < dim_first; ++i) {
            for (std::size_t j = 0; j < dim_first; ++j) {
                for (std::size_t k = 0; k < dim_second; ++k) {
                    out(i, j) += rho(i * dim_second + k, j * dim_second + k);
                }
            }
        }
        return DensityMatrix::validate(out, rho.tolerance());
    }
    ComplexMatrix out(dim_second, dim_second);
    for (std::size_t i = 0; i < dim_second; ++i) {
        for (std::size_t j = 0; j < dim_second; ++j) {
            for (std::size_t k = 0; k < dim_first; ++k) {
                out(i, j) += rho(k * dim_second + i, k * dim_second + j);
            }
        }
    }
    return DensityMatrix::validate(out, rho.tolerance());
}

UnitaryMatrix diagonalizing_unitary_for_pure(const PureState& psi) {
    const std::size_t n = psi.dim();
    double norm_sq = 0.0;
    for (const cplx& a : psi.amplitudes()) norm_sq += std::norm(a);
    if (norm_sq < 1e-24) {
        throw ZeroVector("cannot diagonalize the zero vector");
    }

    // Householder reflection H = I - 2 v v^dagger / (v^dagger v) with
    // v = psi - mu e_0 and mu = -phase(psi_0) to avoid cancellation; the
    // global phase conj(mu) makes U psi = e_0 and U^dagger e_0 = psi.
    const cplx psi0 = psi[0];
    const cplx mu = std::abs(psi0) > 0.0 ? cplx{-psi0 / std::abs(psi0)} : cplx{-1.0, 0.0};

    std::vector<cplx> v(psi.amplitudes());
    v[0] -= mu;
    double vv = 0.0;
    for (const cplx& z : v) vv += std::norm(z);

    ComplexMatrix u = ComplexMatrix::identity(n);
    if (vv > 0.0) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                u(i, j) -= 2.0 * v[i] * std::conj(v[j]) / vv;
            }
        }
    }
    const cplx phase = std::conj(mu);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            u(i, j) *= phase;
        }
    }
    return UnitaryMatrix::validate(u);
}

}  // namespace qinfo
