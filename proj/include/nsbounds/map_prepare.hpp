#ifndef NSBOUNDS_MAP_PREPARE_HPP
#define NSBOUNDS_MAP_PREPARE_HPP

#include "nsbounds/states.hpp"

namespace nsb {

/// Triangular kernel max{1 - |d|/(N+1), 0}: the surviving fraction of an
/// output coherence at spacing d after estimate-and-prepare with a flat probe.
double coherence_decay(int n_inputs, int spacing);

/// Banded symmetric operator O[m,mbar] = (1/2^M) sqrt(C(M,m) C(M,mbar))
/// Delta_N(m - mbar). Stored factorized: binomial weights b_m plus the
/// kernel, so quadratic forms cost O(M N).
class MpOperator {
 public:
  MpOperator(int n_inputs, int m_outputs);

  int n_inputs() const { return n_inputs_; }
  int m_outputs() const { return m_outputs_; }
  int bandwidth() const { return n_inputs_; }

  double entry(int m, int mbar) const;

  /// Binomial weight b_m = sqrt(C(M,m)/2^M).
  double weight(int m) const { return weights_(m); }

  /// Dense materialization, only for M <= 4096.
  Eigen::MatrixXd dense() const;

 private:
  int n_inputs_ = 0;
  int m_outputs_ = 0;
  Eigen::VectorXd weights_;
};

MpOperator mp_operator(int n_inputs, int m_outputs);

/// Quadratic form <output|O|output>, evaluated band by band.
double mp_fidelity(const PhaseAmplitudes& output, const MpOperator& op);

/// Real positive amplitudes with |c_m|^2 proportional to
/// exp(-(m - M/2)^2 / (2 sigma^2)), normalized by the discrete sum.
PhaseAmplitudes gaussian_state(int m_outputs, double sigma);

/// Leading term (N+1) sqrt(2) / sqrt(pi M) of the optimal
/// estimate-and-prepare fidelity.
double mp_asymptotic(int n_inputs, int m_outputs);

/// (N+1)/sqrt(pi M): the M-copy output strategy at the optimal likelihood.
double naive_mp_fidelity(int n_inputs, int m_outputs);

/// Estimate-and-prepare fidelity for an arbitrary probe: the kernel becomes
/// the probe's amplitude autocorrelation sum_n conj(c_n) c_{n+d}.
double mp_fidelity_general(const PhaseAmplitudes& probe, const PhaseAmplitudes& output);

}  // namespace nsb

#endif
