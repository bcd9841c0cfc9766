#include "nsbounds/signaling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nsbounds/numeric.hpp"

namespace nsb {

double fourier_component(const CircularDistribution& dist, int k) { return dist.fourier(k); }

SignalVerdict ns_compatible(const CircularDistribution& dist, int n_probes, double tol) {
  if (n_probes < 0) throw std::invalid_argument("ns_compatible: N must be nonnegative");
  if (!(tol > 0.0)) throw std::invalid_argument("ns_compatible: tol must be positive");
  const int scan_top = std::max({4 * n_probes, 64, dist.truncation()});
  SignalVerdict verdict;
  verdict.worst_k = n_probes + 1;
  for (int k = n_probes + 1; k <= scan_top; ++k) {
    const double component = std::abs(dist.fourier(k));
    if (component > verdict.worst_component) {
      verdict.worst_component = component;
      verdict.worst_k = k;
    }
  }
  verdict.magnitude = verdict.worst_component;
  verdict.compatible = verdict.worst_component <= tol;
  return verdict;
}

SymmetricBlockDensity ensemble_density(const CircularDistribution& dist,
                                       const PhaseAmplitudes& seed) {
  const int d = seed.dim();
  Eigen::MatrixXcd rho(d, d);
  for (int n = 0; n < d; ++n) {
    for (int m = 0; m < d; ++m) {
      rho(n, m) = seed.amp(n) * std::conj(seed.amp(m)) * dist.fourier(std::abs(n - m));
    }
  }
  return SymmetricBlockDensity(std::move(rho));
}

double sinc_signal(int n_probes, int harmonic) {
  if (n_probes < 0) throw std::invalid_argument("sinc_signal: N must be nonnegative");
  if (harmonic <= n_probes) throw std::invalid_argument("sinc_signal: need M > N");
  return std::abs(sinc(harmonic * kPi / (n_probes + 1)));
}

double mixture_outcome_density(const CircularDistribution& prior,
                               const CircularDistribution& rule, double theta_out) {
  // Circular convolution multiplies cosine coefficients.
  const int top = std::max(prior.truncation(), rule.truncation());
  KahanSum sum;
  for (int k = 1; k <= top; ++k) {
    sum.add(prior.fourier(k) * rule.fourier(k) * std::cos(k * theta_out));
  }
  return (1.0 + 2.0 * sum.value()) / kTwoPi;
}

double default_steering_readout(double epsilon) {
  // Window edge placed strictly between the {0, -2 eps} pair and the
  // {pi, 2 eps} pair on the circle.
  const double edge = 0.5 * std::min(2.0 * epsilon, kPi - 2.0 * epsilon);
  return edge + kPi / 2.0;
}

SteeringProbabilities qubit_steering(double epsilon, const CircularDistribution& rule) {
  return qubit_steering(epsilon, rule, default_steering_readout(epsilon));
}

SteeringProbabilities qubit_steering(double epsilon, const CircularDistribution& rule,
                                     double readout_angle) {
  if (!(epsilon > 0.0) || !(epsilon < kPi / 2.0)) {
    throw std::invalid_argument("qubit_steering: need 0 < epsilon < pi/2");
  }
  const double cos2 = std::cos(epsilon) * std::cos(epsilon);
  const double sin2 = std::sin(epsilon) * std::sin(epsilon);
  // Great-circle angles: |0> at 0, |1> at pi, |+-eps> at +-2 eps.
  SteeringProbabilities out;
  out.p_basis = cos2 * rule.density(readout_angle) + sin2 * rule.density(readout_angle - kPi);
  out.p_x = 0.5 * rule.density(readout_angle - 2.0 * epsilon) +
            0.5 * rule.density(readout_angle + 2.0 * epsilon);
  return out;
}

}  // namespace nsb
