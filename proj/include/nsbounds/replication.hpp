#ifndef NSBOUNDS_REPLICATION_HPP
#define NSBOUNDS_REPLICATION_HPP

#include "nsbounds/states.hpp"

namespace nsb {

/// Phase-sector reduction of the Choi state of a parallel phase rotation:
/// the full 2^{2M}-dimensional Choi state projects onto binomial amplitudes
/// sqrt(C(M,m)/2^M) e^{i m theta}, so an (M+1)-vector carries everything the
/// process fidelity can see.
struct ChoiPhaseState {
  int m_qubits = 0;
  double theta = 0.0;
  PhaseAmplitudes amps;
};

ChoiPhaseState choi_state(int m_qubits, double theta);

/// Process (Jamiolkowski) fidelity |<choi(M,theta)|candidate>|^2.
double process_fidelity(const PhaseAmplitudes& candidate, double theta);

/// The replication bound coincides with the cloning bound; kept as a named
/// entry point and regression-guarded against ns_global_bound.
double ns_replication_bound(int n_uses, int m_outputs);

}  // namespace nsb

#endif
