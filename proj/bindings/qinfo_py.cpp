#include <cmath>
#include <cstdint>
#include <map>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qinfo/info_measures.hpp"
#include "qinfo/measurement.hpp"
#include "qinfo/report.hpp"
#include "qinfo/scenarios.hpp"
#include "qinfo/state_spec.hpp"
#include "qinfo/states.hpp"
#include "qinfo/sweep.hpp"

namespace py = pybind11;
using namespace qinfo;

namespace {

using Rows = std::vector<std::vector<cplx>>;

ComplexMatrix matrix_from_rows(const Rows& rows) {
    if (rows.empty()) throw DimensionMismatch("matrix needs at least one row");
    ComplexMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) {
            throw DimensionMismatch("rows have inconsistent lengths");
        }
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Rows rows_from_matrix(const ComplexMatrix& m) {
    Rows rows(m.rows(), std::vector<cplx>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
    }
    return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quantum information (I_Q) and surplus knowledge (K_Q) over "
              "finite-dimensional density matrices";

    py::register_exception<Error>(m, "QinfoError");

    py::enum_<StateType>(m, "StateType")
        .value("Type1Pure", StateType::Type1Pure)
        .value("Type2Diagonal", StateType::Type2Diagonal)
        .value("Intermediate", StateType::Intermediate);

    py::class_<PureState>(m, "PureState")
        .def(py::init<std::vector<cplx>>(), py::arg("amplitudes"))
        .def_property_readonly("dim", &PureState::dim)
        .def_property_readonly("amplitudes", &PureState::amplitudes);

    py::class_<DensityMatrix>(m, "DensityMatrix")
        .def_static(
            "validate",
            [](const Rows& rows, double tolerance) {
                return DensityMatrix::validate(matrix_from_rows(rows), tolerance);
            },
            py::arg("entries"), py::arg("tolerance") = DensityMatrix::kDefaultTolerance)
        .def_property_readonly("dim", &DensityMatrix::dim)
        .def_property_readonly("purity", &DensityMatrix::purity)
        .def("entries", [](const DensityMatrix& rho) { return rows_from_matrix(rho.matrix()); });

    py::class_<EnsembleSpec>(m, "EnsembleSpec")
        .def(py::init<double, double, std::vector<double>>(), py::arg("a1"),
             py::arg("a2"), py::arg("phases"))
        .def_readonly("a1", &EnsembleSpec::a1)
        .def_readonly("a2", &EnsembleSpec::a2)
        .def_readonly("phases", &EnsembleSpec::phases);

    py::class_<InformationReport>(m, "InformationReport")
        .def_readonly("capacity_c", &InformationReport::capacity_c)
        .def_readonly("i_q", &InformationReport::i_q)
        .def_readonly("i_tilde", &InformationReport::i_tilde)
        .def_readonly("k_q", &InformationReport::k_q)
        .def_readonly("purity", &InformationReport::purity)
        .def_readonly("classification", &InformationReport::classification)
        .def_readonly("is_classical", &InformationReport::is_classical);

    // matrix core
    m.def("kron", [](const DensityMatrix& a, const DensityMatrix& b) { return kron(a, b); });
    m.def("diagonal_part", &diagonal_part);
    m.def(
        "partial_trace",
        [](const DensityMatrix& rho, std::size_t dim_first, std::size_t dim_second,
           bool keep_first) {
            return partial_trace(rho, dim_first, dim_second,
                                 keep_first ? Subsystem::First : Subsystem::Second);
        },
        py::arg("rho"), py::arg("dim_first"), py::arg("dim_second"),
        py::arg("keep_first") = true);

    // information measures
    m.def("total_capacity", &total_capacity);
    m.def("quantum_information", &quantum_information);
    m.def("classical_information", &classical_information);
    m.def("surplus_knowledge", &surplus_knowledge);
    m.def("interaction_information", &interaction_information);
    m.def("classify", &classify, py::arg("rho"), py::arg("tolerance") = 1e-9);
    m.def("is_classical", &is_classical);
    m.def("max_surplus", &max_surplus);
    m.def("make_report", &make_report);

    // state catalog
    m.def("pure_density", &pure_density);
    m.def("diagonal_mixture", &diagonal_mixture);
    m.def("rebasis_x", &rebasis_x);
    m.def("epr_singlet", &epr_singlet);
    m.def("ghz", &ghz);
    m.def("ensemble_density", &ensemble_density);
    m.def("product", &product);

    // measurement
    m.def(
        "measure_which_way",
        [](double a1_sq, double alpha_sq, bool eraser, std::uint64_t seed) {
            const PureState photon({cplx{std::sqrt(a1_sq), 0.0},
                                    cplx{std::sqrt(1.0 - a1_sq), 0.0}});
            RngStream rng(seed);
            const MeasurementRecord record = measure_which_way(
                InterferometerScenario(photon, alpha_sq, 1.0 - alpha_sq, eraser), rng);
            py::dict out;
            out["outcome"] = record.outcome_index;
            out["pre_report"] = record.pre_report;
            out["post_report"] = record.post_report;
            out["assumption2_satisfied"] = record.assumption2_satisfied;
            out["measurement_complete"] = is_measurement_complete(record);
            return out;
        },
        py::arg("a1_sq"), py::arg("alpha_sq"), py::arg("eraser") = false,
        py::arg("seed") = 0);

    // harness
    m.def("list_scenarios", &list_scenarios);
    m.def(
        "run_scenario",
        [](const std::string& name, const std::map<std::string, double>& params,
           std::uint64_t seed, const std::string& format) {
            return render_report(run_scenario(name, params, seed), parse_format(format));
        },
        py::arg("name"), py::arg("params") = std::map<std::string, double>{},
        py::arg("seed") = 0, py::arg("format") = "json");
    m.def(
        "decoherence_sweep",
        [](double a1_sq, std::size_t n_members, std::size_t trials, std::uint64_t seed,
           double spread) {
            const SweepStatistics s =
                decoherence_sweep(a1_sq, n_members, trials, seed, spread);
            py::dict out;
            out["n_members"] = s.n_members;
            out["trials"] = s.trials;
            out["seed"] = s.seed;
            out["spread"] = s.spread;
            out["mean_i_q"] = s.mean_i_q;
            out["mean_k_q"] = s.mean_k_q;
            out["std_i_q"] = s.std_i_q;
            out["std_k_q"] = s.std_k_q;
            out["theoretical_mean_excess"] = s.theoretical_mean_excess;
            return out;
        },
        py::arg("a1_sq"), py::arg("n_members"), py::arg("trials"), py::arg("seed") = 0,
        py::arg("spread") = 1.0);
    m.def("analyze_state_spec", [](const std::string& text) {
        return make_report(state_density(parse_state_spec(text)));
    });
}
