#include "nsbounds/circular.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nsbounds/numeric.hpp"

namespace nsb {

CircularDistribution CircularDistribution::uniform() { return CircularDistribution(); }

CircularDistribution CircularDistribution::from_fourier(std::vector<double> coefficients) {
  CircularDistribution d;
  d.coefficients_ = std::move(coefficients);
  return d;
}

CircularDistribution CircularDistribution::step(int n_probes) {
  if (n_probes < 0) throw std::invalid_argument("step: N must be nonnegative");
  CircularDistribution d;
  d.tag_ = Tag::step;
  d.step_probes_ = n_probes;
  const int truncation = std::max(4 * n_probes, 64);
  d.coefficients_.resize(truncation);
  for (int k = 1; k <= truncation; ++k) {
    d.coefficients_[k - 1] = sinc(k * kPi / (n_probes + 1));
  }
  return d;
}

CircularDistribution CircularDistribution::diffusion(double t, int max_terms) {
  if (!(t > 0.0)) throw std::domain_error("diffusion: t must be positive");
  if (max_terms < 1) throw std::invalid_argument("diffusion: need at least one term");
  CircularDistribution d;
  d.tag_ = Tag::diffusion;
  d.diffusion_time_ = t;
  for (int k = 1; k <= max_terms; ++k) {
    const double coeff = std::exp(-static_cast<double>(k) * k * t);
    if (coeff < 1e-16) break;
    d.coefficients_.push_back(coeff);
  }
  return d;
}

CircularDistribution CircularDistribution::raised_cosine(int harmonic) {
  if (harmonic < 1) throw std::invalid_argument("raised_cosine: harmonic must be positive");
  CircularDistribution d;
  d.coefficients_.assign(harmonic, 0.0);
  d.coefficients_[harmonic - 1] = 0.5;
  return d;
}

double CircularDistribution::fourier(int k) const {
  if (k < 0) throw std::invalid_argument("fourier: k must be nonnegative");
  if (k == 0) return 1.0;
  switch (tag_) {
    case Tag::step:
      return sinc(k * kPi / (step_probes_ + 1));
    case Tag::diffusion:
      return std::exp(-static_cast<double>(k) * k * diffusion_time_);
    case Tag::generic:
      break;
  }
  if (k <= truncation()) return coefficients_[k - 1];
  return 0.0;
}

double CircularDistribution::density(double theta) const {
  if (tag_ == Tag::step) {
    double wrapped = std::remainder(theta, kTwoPi);
    return std::abs(wrapped) <= kPi / (step_probes_ + 1) ? (step_probes_ + 1) / kTwoPi : 0.0;
  }
  KahanSum sum;
  if (tag_ == Tag::diffusion) {
    for (int k = 1;; ++k) {
      const double term = std::exp(-static_cast<double>(k) * k * diffusion_time_);
      if (term < 1e-18) break;
      sum.add(term * std::cos(k * theta));
    }
  } else {
    for (int k = 1; k <= truncation(); ++k) {
      sum.add(coefficients_[k - 1] * std::cos(k * theta));
    }
  }
  return (1.0 + 2.0 * sum.value()) / kTwoPi;
}

}  // namespace nsb
