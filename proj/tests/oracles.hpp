// Test-only reference implementations, kept independent of the library's
// numerics: Pascal-triangle binomials, Simpson quadrature, explicit
// group-average sums, and a power-series erf.
#ifndef NSBOUNDS_TESTS_ORACLES_HPP
#define NSBOUNDS_TESTS_ORACLES_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

namespace oracles {

inline constexpr double kPi = 3.14159265358979323846;

/// Binomial table built by Pascal's rule in long double.
inline long double pascal_binomial(int n, int k) {
  std::vector<std::vector<long double>> row(n + 1);
  for (int i = 0; i <= n; ++i) {
    row[i].assign(i + 1, 1.0L);
    for (int j = 1; j < i; ++j) row[i][j] = row[i - 1][j - 1] + row[i - 1][j];
  }
  return row[n][k];
}

/// Direct window sum evaluated in long double.
inline double window_bound(int n, int m) {
  const int offset = (m - n) / 2;
  long double sum = 0.0L;
  for (int lambda = 0; lambda <= n; ++lambda) sum += pascal_binomial(m, offset + lambda);
  return static_cast<double>(sum / std::pow(2.0L, m));
}

/// Composite Simpson rule on [a, b].
inline double simpson(const std::function<double(double)>& f, double a, double b, int intervals) {
  if (intervals % 2 != 0) ++intervals;
  const double h = (b - a) / intervals;
  double sum = f(a) + f(b);
  for (int i = 1; i < intervals; ++i) sum += f(a + i * h) * (i % 2 == 0 ? 2.0 : 4.0);
  return sum * h / 3.0;
}

/// Maclaurin-series erf, adequate for |x| < 4.
inline double erf_series(double x) {
  double term = x;
  double sum = x;
  for (int n = 1; n < 120; ++n) {
    term *= -x * x / n;
    sum += term / (2 * n + 1);
    if (std::abs(term) < 1e-18) break;
  }
  return sum * 2.0 / std::sqrt(kPi);
}

/// Discrete phase average of a density matrix, written as the explicit
/// k-sum over conjugations by diag(e^{i theta_k n}).
inline Eigen::MatrixXcd discrete_phase_average(const Eigen::MatrixXcd& rho, int n_sites) {
  const int dim = static_cast<int>(rho.rows());
  Eigen::MatrixXcd avg = Eigen::MatrixXcd::Zero(dim, dim);
  for (int k = 0; k <= n_sites; ++k) {
    const double theta = 2.0 * kPi * k / (n_sites + 1);
    Eigen::VectorXcd phases(dim);
    for (int n = 0; n < dim; ++n) phases(n) = std::polar(1.0, theta * n);
    avg += phases.asDiagonal() * rho * phases.conjugate().asDiagonal();
  }
  return avg / (n_sites + 1.0);
}

/// Random normalized complex amplitude vector.
inline Eigen::VectorXcd random_amplitudes(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i) v(i) = std::complex<double>(gauss(rng), gauss(rng));
  return v / v.norm();
}

/// Random density matrix as a mixture of a few random pure states.
inline Eigen::MatrixXcd random_density(int dim, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(0.1, 1.0);
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  double total = 0.0;
  for (int r = 0; r < 4; ++r) {
    const double w = uni(rng);
    const Eigen::VectorXcd psi = random_amplitudes(dim, rng);
    rho += w * (psi * psi.adjoint());
    total += w;
  }
  rho /= total;
  return 0.5 * (rho + rho.adjoint().eval());
}

}  // namespace oracles

#endif
