#ifndef NSBOUNDS_CIRCULAR_HPP
#define NSBOUNDS_CIRCULAR_HPP

#include <vector>

namespace nsb {

/// 2*pi-periodic even probability density held as a cosine-Fourier series
///   p(theta) = (1/2pi) (1 + 2 sum_{k>=1} p_k cos(k theta)),
/// optionally tagged with a closed form (sharp window or diffusion kernel)
/// so components beyond the stored truncation stay exact.
class CircularDistribution {
 public:
  enum class Tag { generic, step, diffusion };

  static CircularDistribution uniform();
  static CircularDistribution from_fourier(std::vector<double> coefficients);

  /// Window density (N+1)/2pi on |theta| <= pi/(N+1), zero elsewhere.
  static CircularDistribution step(int n_probes);

  /// Heat kernel p_k = exp(-k^2 t); series truncated once terms drop
  /// below 1e-16, capped at max_terms.
  static CircularDistribution diffusion(double t, int max_terms = 1 << 20);

  /// (1 + cos(k theta)) / 2pi: a single-harmonic test density.
  static CircularDistribution raised_cosine(int harmonic);

  Tag tag() const { return tag_; }
  int step_probes() const { return step_probes_; }
  double diffusion_time() const { return diffusion_time_; }

  /// Cosine coefficient p_k (p_0 = 1). Closed form for tagged densities,
  /// series lookup otherwise (zero beyond the truncation).
  double fourier(int k) const;

  /// Number of stored coefficients p_1..p_K.
  int truncation() const { return static_cast<int>(coefficients_.size()); }

  /// Density value at theta; exact window for the step tag, series otherwise.
  double density(double theta) const;

 private:
  CircularDistribution() = default;

  Tag tag_ = Tag::generic;
  int step_probes_ = 0;
  double diffusion_time_ = 0.0;
  std::vector<double> coefficients_;  // p_1..p_K
};

}  // namespace nsb

#endif
