#include "nsbounds/states.hpp"

#include <cmath>
#include <stdexcept>

#include "nsbounds/numeric.hpp"

namespace nsb {

namespace {

double compensated_norm(const Eigen::VectorXcd& v) {
  KahanSum s;
  for (Eigen::Index i = 0; i < v.size(); ++i) s.add(std::norm(v(i)));
  return std::sqrt(s.value());
}

}  // namespace

PhaseAmplitudes::PhaseAmplitudes(Eigen::VectorXcd amps) : amps_(std::move(amps)) {
  if (amps_.size() < 1) throw std::invalid_argument("PhaseAmplitudes: empty amplitude vector");
  pre_norm_ = compensated_norm(amps_);
  if (!(pre_norm_ > 0.0) || !std::isfinite(pre_norm_)) {
    throw std::invalid_argument("PhaseAmplitudes: amplitudes not normalizable");
  }
  amps_ /= pre_norm_;
}

PhaseAmplitudes::PhaseAmplitudes(std::initializer_list<Complex> amps)
    : PhaseAmplitudes(Eigen::Map<const Eigen::VectorXcd>(amps.begin(),
                                                         static_cast<Eigen::Index>(amps.size()))) {}

double PhaseAmplitudes::overlap_magnitude(const PhaseAmplitudes& other) const {
  if (other.dim() != dim()) throw std::invalid_argument("overlap: dimension mismatch");
  return std::abs(amps_.dot(other.amps_));
}

SymmetricBlockDensity::SymmetricBlockDensity(Eigen::MatrixXcd rho) : rho_(std::move(rho)) {
  if (rho_.rows() != rho_.cols() || rho_.rows() < 1) {
    throw std::invalid_argument("SymmetricBlockDensity: matrix must be square");
  }
  if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument("SymmetricBlockDensity: matrix not Hermitian");
  }
  const double trace = rho_.trace().real();
  if (std::abs(trace - 1.0) > 1e-12) {
    throw std::invalid_argument("SymmetricBlockDensity: trace must be one");
  }
  rho_ = 0.5 * (rho_ + rho_.adjoint().eval());
}

SymmetricBlockDensity SymmetricBlockDensity::pure(const PhaseAmplitudes& psi) {
  return SymmetricBlockDensity(psi.projector());
}

SymmetricBlockDensity SymmetricBlockDensity::diagonal(const Eigen::VectorXd& populations) {
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(populations.size(), populations.size());
  rho.diagonal() = populations.cast<Complex>();
  return SymmetricBlockDensity(std::move(rho));
}

double SymmetricBlockDensity::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho_, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double SymmetricBlockDensity::frobenius_distance(const SymmetricBlockDensity& other) const {
  if (other.dim() != dim()) throw std::invalid_argument("frobenius_distance: dimension mismatch");
  return (rho_ - other.rho_).norm();
}

Ensemble::Ensemble(std::vector<Member> members) : members_(std::move(members)) {
  if (members_.empty()) throw std::invalid_argument("Ensemble: no members");
  KahanSum total;
  const int d = members_.front().second.dim();
  for (const auto& [p, state] : members_) {
    if (p < 0.0) throw std::invalid_argument("Ensemble: negative probability");
    if (state.dim() != d) throw std::invalid_argument("Ensemble: dimension mismatch");
    total.add(p);
  }
  if (std::abs(total.value() - 1.0) > 1e-12) {
    throw std::invalid_argument("Ensemble: probabilities must sum to one");
  }
}

SymmetricBlockDensity Ensemble::density() const {
  const int d = members_.front().second.dim();
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& [p, state] : members_) rho += p * state.projector();
  return SymmetricBlockDensity(std::move(rho));
}

}  // namespace nsb
