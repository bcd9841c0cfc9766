#include "nsbounds/cloning.hpp"

#include <cmath>
#include <stdexcept>

#include "nsbounds/numeric.hpp"
#include "nsbounds/symmetric.hpp"

namespace nsb {

namespace {

void check_range(int n_inputs, int m_outputs, const char* who) {
  if (n_inputs < 0 || m_outputs < n_inputs) {
    throw std::invalid_argument(std::string(who) + ": need 0 <= N <= M");
  }
}

int window_offset(int n_inputs, int m_outputs) { return (m_outputs - n_inputs) / 2; }

}  // namespace

double ns_global_bound(int n_inputs, int m_outputs) {
  check_range(n_inputs, m_outputs, "ns_global_bound");
  const int offset = window_offset(n_inputs, m_outputs);
  KahanSum sum;
  for (int lambda = 0; lambda <= n_inputs; ++lambda) {
    sum.add(std::exp(log_binomial_weight(m_outputs, offset + lambda)));
  }
  return std::min(1.0, sum.value());
}

double ns_bound_erf(int n_inputs, int m_outputs) {
  if (m_outputs < 1) throw std::invalid_argument("ns_bound_erf: M must be positive");
  return std::erf((n_inputs + 1) / std::sqrt(2.0 * m_outputs));
}

CloneBound clone_bound(int n_inputs, int m_outputs, CloneBound::Method method) {
  CloneBound b;
  b.n_inputs = n_inputs;
  b.m_outputs = m_outputs;
  b.method = method;
  b.value = method == CloneBound::Method::exact_sum ? ns_global_bound(n_inputs, m_outputs)
                                                    : ns_bound_erf(n_inputs, m_outputs);
  return b;
}

PhaseAmplitudes optimal_input_state(int n_inputs, int m_outputs) {
  check_range(n_inputs, m_outputs, "optimal_input_state");
  const int offset = window_offset(n_inputs, m_outputs);
  // Work relative to the largest log term so huge binomials never overflow.
  Eigen::VectorXd logs(n_inputs + 1);
  for (int lambda = 0; lambda <= n_inputs; ++lambda) {
    logs(lambda) = 0.5 * log_binomial(m_outputs, offset + lambda);
  }
  const double top = logs.maxCoeff();
  Eigen::VectorXcd amps(n_inputs + 1);
  for (int lambda = 0; lambda <= n_inputs; ++lambda) {
    amps(lambda) = std::exp(logs(lambda) - top);
  }
  return PhaseAmplitudes(std::move(amps));
}

PhaseAmplitudes clone_map(const PhaseAmplitudes& input, int n_inputs, int m_outputs) {
  check_range(n_inputs, m_outputs, "clone_map");
  if (input.dim() != n_inputs + 1) throw std::invalid_argument("clone_map: input dimension mismatch");
  const int offset = window_offset(n_inputs, m_outputs);
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(m_outputs + 1);
  for (int lambda = 0; lambda <= n_inputs; ++lambda) {
    out(offset + lambda) = input.amp(lambda);
  }
  return PhaseAmplitudes(std::move(out));
}

double global_clone_fidelity(const PhaseAmplitudes& output, double theta) {
  const int m_outputs = output.max_index();
  Complex overlap(0.0, 0.0);
  for (int m = 0; m <= m_outputs; ++m) {
    const double weight = std::exp(0.5 * log_binomial_weight(m_outputs, m));
    overlap += weight * std::polar(1.0, -theta * m) * output.amp(m);
  }
  return std::norm(overlap);
}

double filter_success_prob(int n_inputs, int m_outputs) {
  check_range(n_inputs, m_outputs, "filter_success_prob");
  const PhaseAmplitudes target = optimal_input_state(n_inputs, m_outputs);
  KahanSum overlap;
  for (int lambda = 0; lambda <= n_inputs; ++lambda) {
    overlap.add(std::exp(0.5 * log_binomial_weight(n_inputs, lambda)) *
                target.amp(lambda).real());
  }
  return overlap.value() * overlap.value();
}

double det_1toM(int m_outputs) {
  if (m_outputs < 1) throw std::invalid_argument("det_1toM: M must be positive");
  if (m_outputs % 2 == 1) {
    return std::exp(log_binomial(m_outputs, (m_outputs - 1) / 2) -
                    (m_outputs - 1) * std::numbers::ln2);
  }
  return std::exp(log_binomial(m_outputs + 1, m_outputs / 2 + 1) -
                  m_outputs * std::numbers::ln2);
}

double det_NtoM_asymptotic(int n_inputs, int m_outputs) {
  if (n_inputs < 0 || m_outputs < 1) throw std::invalid_argument("det_NtoM_asymptotic: bad range");
  KahanSum root_sum;
  for (int j = 0; j <= n_inputs; ++j) {
    root_sum.add(std::exp(0.5 * log_binomial(n_inputs, j)));
  }
  const double log_central = log_binomial(m_outputs, m_outputs / 2) -
                             (n_inputs + m_outputs) * std::numbers::ln2;
  return std::exp(log_central) * root_sum.value() * root_sum.value();
}

double verify_ns_mixture(int n_inputs, int m_outputs, double theta_a, double theta_b) {
  check_range(n_inputs, m_outputs, "verify_ns_mixture");
  const PhaseAmplitudes input = optimal_input_state(n_inputs, m_outputs);
  const auto mixed_output = [&](double theta) {
    const Ensemble prepared = remote_prepare(input, theta);
    std::vector<Ensemble::Member> members;
    for (const auto& [p, state] : prepared.members()) {
      members.emplace_back(p, clone_map(state, n_inputs, m_outputs));
    }
    return Ensemble(std::move(members)).density();
  };
  return mixed_output(theta_a).frobenius_distance(mixed_output(theta_b));
}

}  // namespace nsb
