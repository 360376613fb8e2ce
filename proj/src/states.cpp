#include "qinfo/states.hpp"

#include <cmath>
#include <sstream>

namespace qinfo {

EnsembleSpec::EnsembleSpec(double a1_in, double a2_in, std::vector<double> phases_in)
    : a1(a1_in), a2(a2_in), phases(std::move(phases_in)) {
    if (a1 < 0.0 || a2 < 0.0) {
        throw NegativeProbability("ensemble amplitudes must be nonnegative");
    }
    const double norm_sq = a1 * a1 + a2 * a2;
    if (std::abs(norm_sq - 1.0) > 1e-10) {
        std::ostringstream os;
        os << "ensemble amplitude norm^2 = " << norm_sq << " differs from 1";
        throw NotNormalized(os.str());
    }
    if (phases.empty()) {
        throw EmptyPhaseList("ensemble needs at least one phase");
    }
}

DensityMatrix pure_density(const PureState& psi) {
    const std::size_t n = psi.dim();
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = psi[i] * std::conj(psi[j]);
        }
    }
    return DensityMatrix::validate(m);
}

DensityMatrix diagonal_mixture(const std::vector<double>& probabilities) {
    if (probabilities.empty()) {
        throw DimensionMismatch("mixture needs at least one probability");
    }
    double sum = 0.0;
    for (double p : probabilities) {
        if (p < 0.0) {
            throw NegativeProbability("mixture probability below zero");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-10) {
        std::ostringstream os;
        os << "probabilities sum to " << sum;
        throw NotNormalized(os.str());
    }
    ComplexMatrix m(probabilities.size(), probabilities.size());
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        m(i, i) = cplx{probabilities[i], 0.0};
    }
    return DensityMatrix::validate(m);
}

DensityMatrix rebasis_x(const DensityMatrix& rho_z) {
    if (rho_z.dim() != 2) {
        throw DimensionMismatch("x-basis change is defined for qubits only");
    }
    const double s = 1.0 / std::sqrt(2.0);
    ComplexMatrix h(2, 2);
    h(0, 0) = cplx{s, 0.0};
    h(0, 1) = cplx{s, 0.0};
    h(1, 0) = cplx{s, 0.0};
    h(1, 1) = cplx{-s, 0.0};
    return unitary_conjugate(rho_z, UnitaryMatrix::validate(h));
}

DensityMatrix epr_singlet() {
    ComplexMatrix m(4, 4);
    m(1, 1) = cplx{0.5, 0.0};
    m(2, 2) = cplx{0.5, 0.0};
    m(1, 2) = cplx{-0.5, 0.0};
    m(2, 1) = cplx{-0.5, 0.0};
    return DensityMatrix::validate(m);
}

DensityMatrix ghz(std::size_t n_qubits) {
    if (n_qubits < 2 || n_qubits > 6) {
        throw OutOfRange("GHZ constructor supports 2 to 6 qubits");
    }
    const std::size_t dim = std::size_t{1} << n_qubits;
    ComplexMatrix m(dim, dim);
    const std::size_t last = dim - 1;
    m(0, 0) = m(0, last) = m(last, 0) = m(last, last) = cplx{0.5, 0.0};
    return DensityMatrix::validate(m);
}

DensityMatrix ensemble_density(const EnsembleSpec& spec) {
    const double n = static_cast<double>(spec.phases.size());
    // Kahan-compensated phase sum: keeps the all-equal-phase case exact even
    // for large member counts.
    double sum_re = 0.0, sum_im = 0.0, c_re = 0.0, c_im = 0.0;
    for (double phi : spec.phases) {
        const double y_re = std::cos(phi) - c_re;
        const double t_re = sum_re + y_re;
        c_re = (t_re - sum_re) - y_re;
        sum_re = t_re;
        const double y_im = std::sin(phi) - c_im;
        const double t_im = sum_im + y_im;
        c_im = (t_im - sum_im) - y_im;
        sum_im = t_im;
    }
    const cplx off = spec.a1 * spec.a2 * cplx{sum_re, sum_im} / n;
    ComplexMatrix m(2, 2);
    m(0, 0) = cplx{spec.a1 * spec.a1, 0.0};
    m(1, 1) = cplx{spec.a2 * spec.a2, 0.0};
    m(0, 1) = off;
    m(1, 0) = std::conj(off);
    return DensityMatrix::validate(m);
}

DensityMatrix product(const DensityMatrix& rho_a, const DensityMatrix& rho_b) {
    return kron(rho_a, rho_b);
}

}  // namespace qinfo
