#ifndef NSBOUNDS_CLONING_HPP
#define NSBOUNDS_CLONING_HPP

#include "nsbounds/states.hpp"

namespace nsb {

struct CloneBound {
  enum class Method { exact_sum, erf_approx };
  int n_inputs = 0;
  int m_outputs = 0;
  double value = 0.0;
  Method method = Method::exact_sum;
};

/// Largest-window binomial sum: (1/2^M) sum_{lambda=0..N} C(M, floor((M-N)/2) + lambda).
/// Log-space terms with compensated summation.
double ns_global_bound(int n_inputs, int m_outputs);

/// Gaussian tail approximation erf((N+1)/sqrt(2M)), accurate for M >> N.
double ns_bound_erf(int n_inputs, int m_outputs);

CloneBound clone_bound(int n_inputs, int m_outputs,
                       CloneBound::Method method = CloneBound::Method::exact_sum);

/// Entangled input whose amplitudes follow the square roots of the window
/// binomials; feeding it through clone_map attains ns_global_bound.
PhaseAmplitudes optimal_input_state(int n_inputs, int m_outputs);

/// Isometric embedding lambda -> floor((M-N)/2) + lambda of the (N+1)-dim
/// input block into the (M+1)-dim output block.
PhaseAmplitudes clone_map(const PhaseAmplitudes& input, int n_inputs, int m_outputs);

/// |<psi(theta)^{(x)M}|output>|^2 against the M-copy equatorial target.
double global_clone_fidelity(const PhaseAmplitudes& output, double theta);

/// Success probability of the filter projecting N product copies onto the
/// optimal entangled input.
double filter_success_prob(int n_inputs, int m_outputs);

/// Deterministic 1 -> M reference value (odd/even closed forms).
double det_1toM(int m_outputs);

/// Deterministic N -> M global fidelity, valid only as an M -> infinity
/// asymptotic; exceeds the physical value at small M.
double det_NtoM_asymptotic(int n_inputs, int m_outputs);

/// Frobenius distance between the discretely mixed cloner outputs at two
/// sender phases; zero means the mixture carries no phase information.
double verify_ns_mixture(int n_inputs, int m_outputs, double theta_a, double theta_b);

}  // namespace nsb

#endif
