#pragma once

#include <cstddef>
#include <string>

#include "qinfo/density_matrix.hpp"

namespace qinfo {

enum class StateType { Type1Pure, Type2Diagonal, Intermediate };

std::string to_string(StateType t);

// All computed quantities for one state. k_q = i_q - i_tilde by the trace
// identity tr(rho - diag(rho))^2 = tr rho^2 - tr diag(rho)^2.
struct InformationReport {
    double capacity_c = 0.0;  // log2(N) bits
    double i_q = 0.0;         // C * tr rho^2
    double i_tilde = 0.0;     // C * tr diag(rho)^2
    double k_q = 0.0;         // C * tr(rho - diag(rho))^2
    double purity = 0.0;      // tr rho^2
    StateType classification = StateType::Intermediate;
    bool is_classical = false;  // k_q < 1 bit, strict
};

// log2(n_dim): the whole available information in bits.
double total_capacity(std::size_t n_dim);

// I_Q = log2(N) * tr rho^2.
double quantum_information(const DensityMatrix& rho);

// I~_Q = log2(N) * sum_i rho_ii^2, the diagonal (measurement-basis) share.
double classical_information(const DensityMatrix& rho);

// K_Q = log2(N) * sum_{i != j} |rho_ij|^2, the off-diagonal surplus.
double surplus_knowledge(const DensityMatrix& rho);

// I^I_Q = (C_S + C_M) * tr(rho_S (x) rho_M)^2 = (C_S + C_M) tr(rho_S^2) tr(rho_M^2).
double interaction_information(const DensityMatrix& rho_s, const DensityMatrix& rho_m);

// Type1Pure if rho^2 = rho within tolerance (takes precedence when both
// hold); Type2Diagonal if all off-diagonals are below tolerance.
StateType classify(const DensityMatrix& rho, double tolerance = 1e-9);

// Classicality criterion: surplus_knowledge(rho) < 1 bit, strict. The
// boundary K_Q = 1 (e.g. the EPR singlet) therefore counts as non-classical.
bool is_classical(const DensityMatrix& rho);

// n * (1 - 2^-n): surplus knowledge of the equal-amplitude n-qubit state.
double max_surplus(std::size_t n_qubits);

InformationReport make_report(const DensityMatrix& rho);

}  // namespace qinfo
