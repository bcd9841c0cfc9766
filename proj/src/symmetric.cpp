#include "nsbounds/symmetric.hpp"

#include <cmath>
#include <stdexcept>

#include "nsbounds/numeric.hpp"

namespace nsb {

PhaseAmplitudes apply_phase(const PhaseAmplitudes& state, double theta) {
  Eigen::VectorXcd out(state.dim());
  for (int n = 0; n < state.dim(); ++n) {
    out(n) = std::polar(1.0, theta * n) * state.amp(n);
  }
  return PhaseAmplitudes(std::move(out));
}

SymmetricBlockDensity twirl_u1(const SymmetricBlockDensity& rho) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rho.dim(), rho.dim());
  out.diagonal() = rho.matrix().diagonal();
  return SymmetricBlockDensity(std::move(out));
}

SymmetricBlockDensity twirl_zn(const SymmetricBlockDensity& rho, int n_sites) {
  if (n_sites < 0) throw std::invalid_argument("twirl_zn: n_sites must be nonnegative");
  const int period = n_sites + 1;
  Eigen::MatrixXcd out = rho.matrix();
  for (int m = 0; m < rho.dim(); ++m) {
    for (int mbar = 0; mbar < rho.dim(); ++mbar) {
      if ((m - mbar) % period != 0) out(m, mbar) = Complex(0.0, 0.0);
    }
  }
  return SymmetricBlockDensity(std::move(out));
}

namespace {

Eigen::MatrixXcd hermitian_sqrt(const Eigen::MatrixXcd& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a);
  const Eigen::VectorXd evals = es.eigenvalues().cwiseMax(0.0);
  return es.eigenvectors() * evals.cwiseSqrt().asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

double uhlmann_fidelity(const SymmetricBlockDensity& rho, const SymmetricBlockDensity& sigma) {
  if (rho.dim() != sigma.dim()) throw std::invalid_argument("uhlmann_fidelity: dimension mismatch");
  // tr sqrt(sqrt(sigma) rho sqrt(sigma)) equals the trace norm of
  // sqrt(rho) sqrt(sigma); the singular-value route avoids taking square
  // roots of eigenvalue noise near zero.
  const Eigen::MatrixXcd product = hermitian_sqrt(rho.matrix()) * hermitian_sqrt(sigma.matrix());
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(product);
  KahanSum fid;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    fid.add(svd.singularValues()(i));
  }
  return std::min(1.0, fid.value());
}

Ensemble remote_prepare(const PhaseAmplitudes& seed, double theta) {
  const int n = seed.max_index();
  std::vector<Ensemble::Member> members;
  members.reserve(n + 1);
  const double p = 1.0 / (n + 1);
  for (int k = 0; k <= n; ++k) {
    members.emplace_back(p, apply_phase(seed, theta + kTwoPi * k / (n + 1)));
  }
  return Ensemble(std::move(members));
}

}  // namespace nsb
