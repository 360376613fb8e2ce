#include "qinfo/info_measures.hpp"

#include <cmath>

namespace qinfo {

std::string to_string(StateType t) {
    switch (t) {
        case StateType::Type1Pure: return "Type1Pure";
        case StateType::Type2Diagonal: return "Type2Diagonal";
        case StateType::Intermediate: return "Intermediate";
    }
    return "Intermediate";
}

double total_capacity(std::size_t n_dim) {
    if (n_dim < 1) {
        throw OutOfRange("dimension must be at least 1");
    }
    return std::log2(static_cast<double>(n_dim));
}

double quantum_information(const DensityMatrix& rho) {
    return total_capacity(rho.dim()) * rho.purity();
}

double classical_information(const DensityMatrix& rho) {
    double diag_sq = 0.0;
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        const double p = rho(i, i).real();
        diag_sq += p * p;
    }
    return total_capacity(rho.dim()) * diag_sq;
}

double surplus_knowledge(const DensityMatrix& rho) {
    double off_sq = 0.0;
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        for (std::size_t j = 0; j < rho.dim(); ++j) {
            if (i != j) off_sq += std::norm(rho(i, j));
        }
    }
    return total_capacity(rho.dim()) * off_sq;
}

double interaction_information(const DensityMatrix& rho_s, const DensityMatrix& rho_m) {
    const double capacity = total_capacity(rho_s.dim()) + total_capacity(rho_m.dim());
    return capacity * rho_s.purity() * rho_m.purity();
}

StateType classify(const DensityMatrix& rho, double tolerance) {
    const ComplexMatrix& m = rho.matrix();
    const double idempotency_gap = (m * m).max_abs_diff(m);
    if (idempotency_gap <= tolerance) return StateType::Type1Pure;

    double worst_off = 0.0;
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        for (std::size_t j = 0; j < rho.dim(); ++j) {
            if (i != j) worst_off = std::max(worst_off, std::abs(m(i, j)));
        }
    }
    if (worst_off <= tolerance) return StateType::Type2Diagonal;
    return StateType::Intermediate;
}

bool is_classical(const DensityMatrix& rho) {
    return surplus_knowledge(rho) < 1.0;
}

double max_surplus(std::size_t n_qubits) {
    if (n_qubits < 1) {
        throw OutOfRange("need at least one qubit");
    }
    const double n = static_cast<double>(n_qubits);
    return n * (1.0 - std::exp2(-n));
}

InformationReport make_report(const DensityMatrix& rho) {
    InformationReport r;
    r.capacity_c = total_capacity(rho.dim());
    r.purity = rho.purity();
    r.i_q = quantum_information(rho);
    r.i_tilde = classical_information(rho);
    r.k_q = surplus_knowledge(rho);
    r.classification = classify(rho);
    r.is_classical = is_classical(rho);
    return r;
}

}  // namespace qinfo
