#include "nsbounds/map_prepare.hpp"

#include <cmath>
#include <stdexcept>

#include "nsbounds/numeric.hpp"

namespace nsb {

double coherence_decay(int n_inputs, int spacing) {
  if (n_inputs < 0) throw std::invalid_argument("coherence_decay: N must be nonnegative");
  return std::max(0.0, 1.0 - std::abs(spacing) / (n_inputs + 1.0));
}

MpOperator::MpOperator(int n_inputs, int m_outputs)
    : n_inputs_(n_inputs), m_outputs_(m_outputs) {
  if (n_inputs < 0 || m_outputs < 1) throw std::invalid_argument("MpOperator: bad dimensions");
  weights_.resize(m_outputs + 1);
  for (int m = 0; m <= m_outputs; ++m) {
    weights_(m) = std::exp(0.5 * log_binomial_weight(m_outputs, m));
  }
}

double MpOperator::entry(int m, int mbar) const {
  if (m < 0 || m > m_outputs_ || mbar < 0 || mbar > m_outputs_) {
    throw std::invalid_argument("MpOperator::entry: index out of range");
  }
  return weights_(m) * weights_(mbar) * coherence_decay(n_inputs_, m - mbar);
}

Eigen::MatrixXd MpOperator::dense() const {
  if (m_outputs_ > 4096) {
    throw std::length_error("MpOperator::dense: M > 4096; use the banded form");
  }
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(m_outputs_ + 1, m_outputs_ + 1);
  for (int m = 0; m <= m_outputs_; ++m) {
    const int hi = std::min(m_outputs_, m + n_inputs_);
    for (int mbar = std::max(0, m - n_inputs_); mbar <= hi; ++mbar) {
      out(m, mbar) = entry(m, mbar);
    }
  }
  return out;
}

MpOperator mp_operator(int n_inputs, int m_outputs) { return MpOperator(n_inputs, m_outputs); }

double mp_fidelity(const PhaseAmplitudes& output, const MpOperator& op) {
  if (output.dim() != op.m_outputs() + 1) {
    throw std::invalid_argument("mp_fidelity: dimension mismatch");
  }
  const int m_top = op.m_outputs();
  // Weighted amplitudes w_m = c_m b_m; the form is sum_d Delta(d) <w|shift_d w>.
  Eigen::VectorXcd w(m_top + 1);
  for (int m = 0; m <= m_top; ++m) w(m) = output.amp(m) * op.weight(m);

  KahanSum total;
  for (int d = 0; d <= op.bandwidth(); ++d) {
    const double decay = coherence_decay(op.n_inputs(), d);
    if (decay == 0.0) break;
    KahanSum band;
    for (int m = 0; m + d <= m_top; ++m) {
      band.add((std::conj(w(m)) * w(m + d)).real());
    }
    total.add((d == 0 ? 1.0 : 2.0) * decay * band.value());
  }
  return total.value();
}

PhaseAmplitudes gaussian_state(int m_outputs, double sigma) {
  if (m_outputs < 1 || !(sigma > 0.0) || !(sigma < m_outputs)) {
    throw std::invalid_argument("gaussian_state: need 0 < sigma < M");
  }
  const double center = 0.5 * m_outputs;
  Eigen::VectorXcd amps(m_outputs + 1);
  for (int m = 0; m <= m_outputs; ++m) {
    const double z = (m - center) / sigma;
    amps(m) = std::exp(-0.25 * z * z);
  }
  return PhaseAmplitudes(std::move(amps));
}

double mp_asymptotic(int n_inputs, int m_outputs) {
  if (n_inputs < 0 || m_outputs < 1) throw std::invalid_argument("mp_asymptotic: bad range");
  return naive_mp_fidelity(n_inputs, m_outputs) * std::numbers::sqrt2;
}

double naive_mp_fidelity(int n_inputs, int m_outputs) {
  if (n_inputs < 0 || m_outputs < 1) throw std::invalid_argument("naive_mp_fidelity: bad range");
  return (n_inputs + 1) / std::sqrt(kPi * m_outputs);
}

double mp_fidelity_general(const PhaseAmplitudes& probe, const PhaseAmplitudes& output) {
  const int n_top = probe.max_index();
  const int m_top = output.max_index();
  MpOperator op(n_top, m_top);

  Eigen::VectorXcd w(m_top + 1);
  for (int m = 0; m <= m_top; ++m) w(m) = output.amp(m) * op.weight(m);

  KahanSum total;
  for (int d = 0; d <= n_top; ++d) {
    // Probe autocorrelation replaces the triangular kernel.
    Complex kernel(0.0, 0.0);
    for (int n = 0; n + d <= n_top; ++n) {
      kernel += std::conj(probe.amp(n)) * probe.amp(n + d);
    }
    Complex band(0.0, 0.0);
    for (int m = 0; m + d <= m_top; ++m) {
      band += std::conj(w(m)) * w(m + d);
    }
    total.add((d == 0 ? 1.0 : 2.0) * (std::conj(kernel) * band).real());
  }
  return total.value();
}

}  // namespace nsb
