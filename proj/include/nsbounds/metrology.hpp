#ifndef NSBOUNDS_METROLOGY_HPP
#define NSBOUNDS_METROLOGY_HPP

#include "nsbounds/circular.hpp"
#include "nsbounds/states.hpp"

namespace nsb {

/// Outcome density (1/2pi)|sum_n c_n e^{-i n delta}|^2 of the covariant
/// phase measurement; depends on the offset delta = theta' - theta only.
double covariant_likelihood(const PhaseAmplitudes& probe, double delta);

/// Covariant-measurement density wrapper; integrates to one over a period.
struct LikelihoodKernel {
  PhaseAmplitudes probe;
  double density(double delta) const { return covariant_likelihood(probe, delta); }
  double operator()(double delta) const { return density(delta); }
};

/// Peak outcome density as a ratio to the uniform density: |sum_n c_n|^2.
/// Never exceeds the probe dimension.
double max_likelihood_ratio(const PhaseAmplitudes& probe);

/// Flat superposition 1/sqrt(N+1); saturates the likelihood ratio at N+1.
PhaseAmplitudes ml_state(int n_probes);

/// Sharp window density (N+1)/2pi on |delta| <= pi/(N+1): the estimate
/// distribution that maximizes alignment fidelity subject to the discrete
/// mixing constraint.
CircularDistribution ns_step_distribution(int n_probes);

/// Mean payoff 1 - int p(phi) sin^2(phi/2) dphi = 1/2 + p_1/2.
double alignment_fidelity(const CircularDistribution& dist);

/// Closed form 1 - (N+1)(a - sin a)/(2pi), a = pi/(N+1): the alignment
/// fidelity of the sharp window.
double ns_alignment_fidelity_exact(int n_probes);

/// Sine-profile probe c_n proportional to sin(pi (n+1)/(N+2)); the optimal
/// quantum probe for alignment fidelity.
PhaseAmplitudes berry_wiseman_state(int n_probes);

/// Alignment fidelity of the covariant strategy on a probe:
/// 1/2 + (1/2) Re sum_n conj(c_n) c_{n+1}.
double quantum_alignment_fidelity(const PhaseAmplitudes& probe);

/// Heat-kernel prior with cosine coefficients e^{-k^2 t}.
CircularDistribution diffusion_prior(double t, int max_terms);

/// Error of the prior itself: int p(theta;t) sin^2(theta/2) dtheta = (1 - e^{-t})/2.
double prior_error(double t);

/// theta_4(0, e^{-t}) = 1 + 2 sum (-1)^n e^{-n^2 t}. Below t = 0.5 the
/// alternating series cancels catastrophically, so the modular-transformed
/// series sqrt(pi/t) * 2 sum exp(-pi^2 (n+1/2)^2 / t) is used instead.
double jacobi_theta4(double t);

/// Diffused-prior fidelity bound 1 - (pi^2 / 12 N^2) theta_4(0, e^{-t}).
double ns_diffused_bound(int n_probes, double t);

/// Stationarity window of the diffused prior: the payoff-weighted density
/// stays monotone within |theta - theta'| < delta, delta = 2 atan(m / s)
/// with m the density minimum and s the slope maximum.
struct StationarityWindow {
  double delta = 0.0;        // window half-width, radians
  double min_density = 0.0;  // m
  double max_slope = 0.0;    // s
  double threshold = 0.0;    // sin^2 bound m^3 / (s^2 + m^2)
  int min_probes = 0;        // smallest N whose window fits: ceil(pi/delta) - 1
};

StationarityWindow stationarity_window(double t);

}  // namespace nsb

#endif
