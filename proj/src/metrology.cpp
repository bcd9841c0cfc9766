#include "nsbounds/metrology.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "nsbounds/numeric.hpp"

namespace nsb {

double covariant_likelihood(const PhaseAmplitudes& probe, double delta) {
  Complex sum(0.0, 0.0);
  for (int n = 0; n < probe.dim(); ++n) {
    sum += probe.amp(n) * std::polar(1.0, -delta * n);
  }
  return std::norm(sum) / kTwoPi;
}

double max_likelihood_ratio(const PhaseAmplitudes& probe) {
  KahanSum re, im;
  for (int n = 0; n < probe.dim(); ++n) {
    re.add(probe.amp(n).real());
    im.add(probe.amp(n).imag());
  }
  return re.value() * re.value() + im.value() * im.value();
}

PhaseAmplitudes ml_state(int n_probes) {
  if (n_probes < 0) throw std::invalid_argument("ml_state: N must be nonnegative");
  return PhaseAmplitudes(Eigen::VectorXcd::Ones(n_probes + 1));
}

CircularDistribution ns_step_distribution(int n_probes) {
  return CircularDistribution::step(n_probes);
}

double alignment_fidelity(const CircularDistribution& dist) {
  return 0.5 + 0.5 * dist.fourier(1);
}

double ns_alignment_fidelity_exact(int n_probes) {
  if (n_probes < 0) throw std::invalid_argument("ns_alignment_fidelity_exact: N must be nonnegative");
  const double a = kPi / (n_probes + 1);
  return 1.0 - (n_probes + 1) * (a - std::sin(a)) / kTwoPi;
}

PhaseAmplitudes berry_wiseman_state(int n_probes) {
  if (n_probes < 0) throw std::invalid_argument("berry_wiseman_state: N must be nonnegative");
  Eigen::VectorXcd amps(n_probes + 1);
  for (int n = 0; n <= n_probes; ++n) {
    amps(n) = std::sin(kPi * (n + 1) / (n_probes + 2));
  }
  return PhaseAmplitudes(std::move(amps));
}

double quantum_alignment_fidelity(const PhaseAmplitudes& probe) {
  KahanSum corr;
  for (int n = 0; n + 1 < probe.dim(); ++n) {
    corr.add((std::conj(probe.amp(n)) * probe.amp(n + 1)).real());
  }
  return 0.5 + 0.5 * corr.value();
}

CircularDistribution diffusion_prior(double t, int max_terms) {
  return CircularDistribution::diffusion(t, max_terms);
}

double prior_error(double t) {
  if (!(t > 0.0)) throw std::domain_error("prior_error: t must be positive");
  return 0.5 * (1.0 - std::exp(-t));
}

double jacobi_theta4(double t) {
  if (!(t > 0.0)) throw std::domain_error("jacobi_theta4: t must be positive");
  if (t < 0.5) {
    // Modular transform; every term is positive, so no cancellation.
    KahanSum sum;
    for (int n = 0;; ++n) {
      const double term = std::exp(-kPi * kPi * (n + 0.5) * (n + 0.5) / t);
      if (term < 1e-300) break;
      sum.add(term);
    }
    return std::sqrt(kPi / t) * 2.0 * sum.value();
  }
  KahanSum sum;
  for (int n = 1;; ++n) {
    const double term = std::exp(-static_cast<double>(n) * n * t);
    if (term < 1e-18) break;
    sum.add((n % 2 == 0 ? 2.0 : -2.0) * term);
  }
  return 1.0 + sum.value();
}

double ns_diffused_bound(int n_probes, double t) {
  if (n_probes < 1) throw std::invalid_argument("ns_diffused_bound: N must be positive");
  return 1.0 - kPi * kPi / (12.0 * n_probes * n_probes) * jacobi_theta4(t);
}

namespace {

// Golden-section minimization on [lo, hi] to absolute x-tolerance.
double golden_minimize(const std::function<double(double)>& f, double lo, double hi, double tol) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    } else {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    }
  }
  return 0.5 * (a + b);
}

// Grid scan over [0, pi] followed by golden-section refinement around the
// best bracket.
double refine_minimum(const std::function<double(double)>& f, int grid_points) {
  int best = 0;
  double best_value = f(0.0);
  for (int i = 1; i <= grid_points; ++i) {
    const double value = f(kPi * i / grid_points);
    if (value < best_value) {
      best_value = value;
      best = i;
    }
  }
  const double lo = kPi * std::max(0, best - 1) / grid_points;
  const double hi = kPi * std::min(grid_points, best + 1) / grid_points;
  const double x = golden_minimize(f, lo, hi, 1e-10);
  return std::min(f(x), best_value);
}

double prior_slope(double theta, double t) {
  KahanSum sum;
  for (int k = 1;; ++k) {
    const double term = k * std::exp(-static_cast<double>(k) * k * t);
    if (term < 1e-18) break;
    sum.add(term * std::sin(k * theta));
  }
  return -sum.value() / kPi;
}

}  // namespace

StationarityWindow stationarity_window(double t) {
  if (!(t > 0.0)) throw std::domain_error("stationarity_window: t must be positive");
  const CircularDistribution prior = CircularDistribution::diffusion(t);
  constexpr int kGrid = 8192;

  StationarityWindow w;
  w.min_density = refine_minimum([&](double th) { return prior.density(th); }, kGrid);
  w.max_slope = -refine_minimum([&](double th) { return -std::abs(prior_slope(th, t)); }, kGrid);
  w.delta = w.max_slope > 0.0 ? 2.0 * std::atan(w.min_density / w.max_slope) : kPi;
  const double m2 = w.min_density * w.min_density;
  w.threshold = w.min_density * m2 / (w.max_slope * w.max_slope + m2);
  w.min_probes = std::max(0, static_cast<int>(std::ceil(kPi / w.delta)) - 1);
  return w;
}

}  // namespace nsb
