#pragma once

#include <vector>

#include "qinfo/density_matrix.hpp"
#include "qinfo/pure_state.hpp"

namespace qinfo {

// Ensemble of n identical photons with common real amplitudes (a1, a2) and
// one relative phase per member.
struct EnsembleSpec {
    EnsembleSpec(double a1, double a2, std::vector<double> phases);

    double a1;
    double a2;
    std::vector<double> phases;
};

// rho_ij = a_i * conj(a_j).
DensityMatrix pure_density(const PureState& psi);

// diag(p_1, ..., p_N). Throws NegativeProbability / NotNormalized.
DensityMatrix diagonal_mixture(const std::vector<double>& probabilities);

// Re-expresses a qubit state in the sigma_x eigenbasis: U rho U^dagger with
// rows (1,1)/sqrt2 and (1,-1)/sqrt2.
DensityMatrix rebasis_x(const DensityMatrix& rho_z);

// (|01> - |10>)/sqrt2 as a 4x4 density matrix: central block
// [[1,-1],[-1,1]]/2, zeros elsewhere.
DensityMatrix epr_singlet();

// (|0...0> + |1...1>)/sqrt2 for 2 <= n_qubits <= 6: four corner entries 1/2.
DensityMatrix ghz(std::size_t n_qubits);

// 2x2 matrix with diagonal (a1^2, a2^2) and off-diagonal
// (a1 a2 / n) * sum_i exp(i phi_i).
DensityMatrix ensemble_density(const EnsembleSpec& spec);

// Product of two subsystem states; alias of kron with the first factor major.
DensityMatrix product(const DensityMatrix& rho_a, const DensityMatrix& rho_b);

}  // namespace qinfo
