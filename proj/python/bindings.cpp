#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nsbounds/cloning.hpp"
#include "nsbounds/map_prepare.hpp"
#include "nsbounds/metrology.hpp"
#include "nsbounds/replication.hpp"
#include "nsbounds/signaling.hpp"
#include "nsbounds/symmetric.hpp"

namespace py = pybind11;
using namespace nsb;

PYBIND11_MODULE(_core, m) {
  m.doc() = "No-signaling bounds for phase-covariant cloning, unitary replication, "
            "and Bayesian phase estimation";

  py::class_<PhaseAmplitudes>(m, "PhaseAmplitudes")
      .def(py::init<Eigen::VectorXcd>(), py::arg("amps"))
      .def_property_readonly("dim", &PhaseAmplitudes::dim)
      .def_property_readonly("amps", [](const PhaseAmplitudes& s) { return s.amps(); })
      .def_property_readonly("pre_norm", &PhaseAmplitudes::pre_norm)
      .def("overlap_magnitude", &PhaseAmplitudes::overlap_magnitude)
      .def("__repr__", [](const PhaseAmplitudes& s) {
        return "PhaseAmplitudes(dim=" + std::to_string(s.dim()) + ")";
      });

  py::class_<SymmetricBlockDensity>(m, "SymmetricBlockDensity")
      .def(py::init<Eigen::MatrixXcd>(), py::arg("rho"))
      .def_static("pure", &SymmetricBlockDensity::pure)
      .def_static("diagonal", &SymmetricBlockDensity::diagonal)
      .def_property_readonly("dim", &SymmetricBlockDensity::dim)
      .def_property_readonly("matrix", [](const SymmetricBlockDensity& d) { return d.matrix(); })
      .def("min_eigenvalue", &SymmetricBlockDensity::min_eigenvalue)
      .def("frobenius_distance", &SymmetricBlockDensity::frobenius_distance);

  py::class_<Ensemble>(m, "Ensemble")
      .def(py::init<std::vector<Ensemble::Member>>(), py::arg("members"))
      .def_property_readonly("members", &Ensemble::members)
      .def("density", &Ensemble::density)
      .def("__len__", &Ensemble::size);

  py::class_<CircularDistribution> dist(m, "CircularDistribution");
  dist.def_static("uniform", &CircularDistribution::uniform)
      .def_static("from_fourier", &CircularDistribution::from_fourier)
      .def_static("step", &CircularDistribution::step, py::arg("n_probes"))
      .def_static("diffusion", &CircularDistribution::diffusion, py::arg("t"),
                  py::arg("max_terms") = 1 << 20)
      .def_static("raised_cosine", &CircularDistribution::raised_cosine)
      .def("fourier", &CircularDistribution::fourier)
      .def("density", &CircularDistribution::density)
      .def_property_readonly("truncation", &CircularDistribution::truncation);

  // symmetric-subspace core
  m.def("apply_phase", &apply_phase, py::arg("state"), py::arg("theta"));
  m.def("twirl_u1", &twirl_u1);
  m.def("twirl_zn", &twirl_zn, py::arg("rho"), py::arg("n_sites"));
  m.def("uhlmann_fidelity", &uhlmann_fidelity);
  m.def("remote_prepare", &remote_prepare, py::arg("seed"), py::arg("theta"));

  // cloning
  m.def("ns_global_bound", &ns_global_bound, py::arg("n"), py::arg("m"));
  m.def("ns_bound_erf", &ns_bound_erf, py::arg("n"), py::arg("m"));
  m.def("optimal_input_state", &optimal_input_state, py::arg("n"), py::arg("m"));
  m.def("clone_map", &clone_map, py::arg("input"), py::arg("n"), py::arg("m"));
  m.def("global_clone_fidelity", &global_clone_fidelity, py::arg("output"), py::arg("theta"));
  m.def("filter_success_prob", &filter_success_prob, py::arg("n"), py::arg("m"));
  m.def("det_1toM", &det_1toM, py::arg("m"));
  m.def("det_NtoM_asymptotic", &det_NtoM_asymptotic, py::arg("n"), py::arg("m"));
  m.def("verify_ns_mixture", &verify_ns_mixture, py::arg("n"), py::arg("m"),
        py::arg("theta_a"), py::arg("theta_b"));

  // replication
  py::class_<ChoiPhaseState>(m, "ChoiPhaseState")
      .def_readonly("m_qubits", &ChoiPhaseState::m_qubits)
      .def_readonly("theta", &ChoiPhaseState::theta)
      .def_readonly("amps", &ChoiPhaseState::amps);
  m.def("choi_state", &choi_state, py::arg("m"), py::arg("theta"));
  m.def("process_fidelity", &process_fidelity, py::arg("candidate"), py::arg("theta"));
  m.def("ns_replication_bound", &ns_replication_bound, py::arg("n"), py::arg("m"));

  // metrology
  m.def("covariant_likelihood", &covariant_likelihood, py::arg("probe"), py::arg("delta"));
  m.def("max_likelihood_ratio", &max_likelihood_ratio, py::arg("probe"));
  m.def("ml_state", &ml_state, py::arg("n"));
  m.def("ns_step_distribution", &ns_step_distribution, py::arg("n"));
  m.def("alignment_fidelity", &alignment_fidelity, py::arg("dist"));
  m.def("ns_alignment_fidelity_exact", &ns_alignment_fidelity_exact, py::arg("n"));
  m.def("berry_wiseman_state", &berry_wiseman_state, py::arg("n"));
  m.def("quantum_alignment_fidelity", &quantum_alignment_fidelity, py::arg("probe"));
  m.def("diffusion_prior", &diffusion_prior, py::arg("t"), py::arg("max_terms") = 1 << 20);
  m.def("prior_error", &prior_error, py::arg("t"));
  m.def("jacobi_theta4", &jacobi_theta4, py::arg("t"));
  m.def("ns_diffused_bound", &ns_diffused_bound, py::arg("n"), py::arg("t"));

  py::class_<StationarityWindow>(m, "StationarityWindow")
      .def_readonly("delta", &StationarityWindow::delta)
      .def_readonly("min_density", &StationarityWindow::min_density)
      .def_readonly("max_slope", &StationarityWindow::max_slope)
      .def_readonly("threshold", &StationarityWindow::threshold)
      .def_readonly("min_probes", &StationarityWindow::min_probes);
  m.def("stationarity_window", &stationarity_window, py::arg("t"));

  // measure-and-prepare
  m.def("coherence_decay", &coherence_decay, py::arg("n"), py::arg("spacing"));
  py::class_<MpOperator>(m, "MpOperator")
      .def(py::init<int, int>(), py::arg("n"), py::arg("m"))
      .def_property_readonly("n_inputs", &MpOperator::n_inputs)
      .def_property_readonly("m_outputs", &MpOperator::m_outputs)
      .def_property_readonly("bandwidth", &MpOperator::bandwidth)
      .def("entry", &MpOperator::entry)
      .def("dense", &MpOperator::dense);
  m.def("mp_operator", &mp_operator, py::arg("n"), py::arg("m"));
  m.def("mp_fidelity", &mp_fidelity, py::arg("output"), py::arg("op"));
  m.def("gaussian_state", &gaussian_state, py::arg("m"), py::arg("sigma"));
  m.def("mp_asymptotic", &mp_asymptotic, py::arg("n"), py::arg("m"));
  m.def("naive_mp_fidelity", &naive_mp_fidelity, py::arg("n"), py::arg("m"));
  m.def("mp_fidelity_general", &mp_fidelity_general, py::arg("probe"), py::arg("output"));

  // signaling
  py::class_<SignalVerdict>(m, "SignalVerdict")
      .def_readonly("compatible", &SignalVerdict::compatible)
      .def_readonly("worst_k", &SignalVerdict::worst_k)
      .def_readonly("worst_component", &SignalVerdict::worst_component)
      .def_readonly("magnitude", &SignalVerdict::magnitude)
      .def("__repr__", [](const SignalVerdict& v) {
        return std::string("SignalVerdict(compatible=") + (v.compatible ? "True" : "False") +
               ", worst_k=" + std::to_string(v.worst_k) + ")";
      });
  m.def("fourier_component", &fourier_component, py::arg("dist"), py::arg("k"));
  m.def("ns_compatible", &ns_compatible, py::arg("dist"), py::arg("n"), py::arg("tol"));
  m.def("ensemble_density",
        py::overload_cast<const CircularDistribution&, const PhaseAmplitudes&>(&ensemble_density),
        py::arg("dist"), py::arg("seed"));
  m.def("sinc_signal", &sinc_signal, py::arg("n"), py::arg("harmonic"));
  m.def("mixture_outcome_density", &mixture_outcome_density, py::arg("prior"), py::arg("rule"),
        py::arg("theta_out"));

  py::class_<SteeringProbabilities>(m, "SteeringProbabilities")
      .def_readonly("p_basis", &SteeringProbabilities::p_basis)
      .def_readonly("p_x", &SteeringProbabilities::p_x);
  m.def("qubit_steering",
        py::overload_cast<double, const CircularDistribution&>(&qubit_steering),
        py::arg("epsilon"), py::arg("rule"));
  m.def("qubit_steering",
        py::overload_cast<double, const CircularDistribution&, double>(&qubit_steering),
        py::arg("epsilon"), py::arg("rule"), py::arg("readout_angle"));
  m.def("default_steering_readout", &default_steering_readout, py::arg("epsilon"));
}
