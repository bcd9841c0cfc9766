#include "nsbounds/replication.hpp"

#include <cmath>
#include <stdexcept>

#include "nsbounds/cloning.hpp"
#include "nsbounds/numeric.hpp"

namespace nsb {

ChoiPhaseState choi_state(int m_qubits, double theta) {
  if (m_qubits < 1) throw std::invalid_argument("choi_state: M must be positive");
  Eigen::VectorXcd amps(m_qubits + 1);
  for (int m = 0; m <= m_qubits; ++m) {
    amps(m) = std::exp(0.5 * log_binomial_weight(m_qubits, m)) * std::polar(1.0, theta * m);
  }
  return ChoiPhaseState{m_qubits, theta, PhaseAmplitudes(std::move(amps))};
}

double process_fidelity(const PhaseAmplitudes& candidate, double theta) {
  // Identical overlap structure to the cloning target; the Choi sector
  // weights are the same binomial amplitudes.
  return global_clone_fidelity(candidate, theta);
}

double ns_replication_bound(int n_uses, int m_outputs) {
  return ns_global_bound(n_uses, m_outputs);
}

}  // namespace nsb
