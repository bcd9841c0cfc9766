#ifndef NSBOUNDS_STATES_HPP
#define NSBOUNDS_STATES_HPP

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

namespace nsb {

using Complex = std::complex<double>;

/// Amplitude vector c_0..c_D over the number basis of a phase-covariant
/// subspace. Normalized on construction; the pre-normalization norm is kept
/// so callers can build states given only up to proportionality.
class PhaseAmplitudes {
 public:
  explicit PhaseAmplitudes(Eigen::VectorXcd amps);
  PhaseAmplitudes(std::initializer_list<Complex> amps);

  int dim() const { return static_cast<int>(amps_.size()); }  // D + 1
  int max_index() const { return dim() - 1; }                 // D
  const Eigen::VectorXcd& amps() const { return amps_; }
  Complex amp(int n) const { return amps_(n); }
  double pre_norm() const { return pre_norm_; }

  /// |<this|other>|, insensitive to global phase.
  double overlap_magnitude(const PhaseAmplitudes& other) const;

  Eigen::MatrixXcd projector() const { return amps_ * amps_.adjoint(); }

 private:
  Eigen::VectorXcd amps_;
  double pre_norm_ = 1.0;
};

/// Density operator on an (M+1)-dimensional symmetric block, stored dense
/// Hermitian. Hermiticity and unit trace are enforced on construction.
class SymmetricBlockDensity {
 public:
  explicit SymmetricBlockDensity(Eigen::MatrixXcd rho);

  static SymmetricBlockDensity pure(const PhaseAmplitudes& psi);
  static SymmetricBlockDensity diagonal(const Eigen::VectorXd& populations);

  int dim() const { return static_cast<int>(rho_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return rho_; }
  Eigen::VectorXd diagonal_populations() const { return rho_.diagonal().real(); }

  /// Smallest eigenvalue (for positivity checks).
  double min_eigenvalue() const;

  double frobenius_distance(const SymmetricBlockDensity& other) const;

 private:
  Eigen::MatrixXcd rho_;
};

/// Weighted list of pure states; probabilities must sum to one.
class Ensemble {
 public:
  using Member = std::pair<double, PhaseAmplitudes>;

  explicit Ensemble(std::vector<Member> members);

  const std::vector<Member>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  SymmetricBlockDensity density() const;

 private:
  std::vector<Member> members_;
};

}  // namespace nsb

#endif
