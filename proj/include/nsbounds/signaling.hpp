#ifndef NSBOUNDS_SIGNALING_HPP
#define NSBOUNDS_SIGNALING_HPP

#include "nsbounds/circular.hpp"
#include "nsbounds/states.hpp"

namespace nsb {

/// Verdict of the Fourier nullity test: an outcome rule for N-probe states
/// is consistent with no-signaling only if its cosine components vanish
/// beyond harmonic N.
struct SignalVerdict {
  bool compatible = false;
  int worst_k = 0;
  double worst_component = 0.0;
  // Largest distinguishing outcome-probability difference between two
  // ensembles with identical density matrices, as a ratio to uniform.
  double magnitude = 0.0;
};

/// Cosine component p_k of a circular density.
double fourier_component(const CircularDistribution& dist, int k);

/// Scans harmonics k in (N, K], K = max(4N, 64) or the stored truncation
/// if larger; compatible iff every |p_k| <= tol.
SignalVerdict ns_compatible(const CircularDistribution& dist, int n_probes, double tol);

/// Density of the continuous phase ensemble weighted by dist:
/// rho[n,m] = c_n conj(c_m) p_{|n-m|}. Only harmonics 1..N enter.
SymmetricBlockDensity ensemble_density(const CircularDistribution& dist,
                                       const PhaseAmplitudes& seed);

/// |sinc(M pi / (N+1))|: the outcome difference the sharp window produces
/// between the uniform prior and the single-harmonic prior at M > N, even
/// though both priors give the same density matrix.
double sinc_signal(int n_probes, int harmonic);

/// Outcome density of a rule applied to a circular ensemble: harmonic-wise
/// product of prior and rule components, evaluated at theta_out.
double mixture_outcome_density(const CircularDistribution& prior,
                               const CircularDistribution& rule, double theta_out);

struct SteeringProbabilities {
  double p_basis = 0.0;  // ensemble {cos^2(eps) |0>, sin^2(eps) |1>}
  double p_x = 0.0;      // ensemble {1/2 |eps>, 1/2 |-eps>}
};

/// Outcome densities of a rule on the two steering decompositions of the
/// same qubit state. States sit on a great circle at angles {0, pi} and
/// {+-2 eps}; the readout angle defaults to the one that puts |0> and
/// |-eps> exactly outside the sharp window for every eps in (0, pi/2).
SteeringProbabilities qubit_steering(double epsilon, const CircularDistribution& rule);
SteeringProbabilities qubit_steering(double epsilon, const CircularDistribution& rule,
                                     double readout_angle);

/// Readout angle used by the two-argument overload.
double default_steering_readout(double epsilon);

}  // namespace nsb

#endif
