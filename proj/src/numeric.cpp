#include "nsbounds/numeric.hpp"

#include <stdexcept>

namespace nsb {

double log_binomial(long long n, long long k) {
  if (k < 0 || k > n) throw std::invalid_argument("log_binomial: k out of range");
  return std::lgamma(static_cast<double>(n) + 1.0) -
         std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

double binomial(long long n, long long k) {
  if (k < 0 || k > n) throw std::invalid_argument("binomial: k out of range");
  if (k > n - k) k = n - k;
  if (n <= 62) {
    // C(62,31) < 2^63; the running product stays integral at every step.
    unsigned long long c = 1;
    for (long long i = 1; i <= k; ++i) {
      c = c * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
    }
    return static_cast<double>(c);
  }
  return std::exp(log_binomial(n, k));
}

double log_binomial_weight(long long m_total, long long m) {
  return log_binomial(m_total, m) -
         static_cast<double>(m_total) * std::numbers::ln2;
}

double sinc(double x) {
  if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

}  // namespace nsb
