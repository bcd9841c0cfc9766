#ifndef NSBOUNDS_NUMERIC_HPP
#define NSBOUNDS_NUMERIC_HPP

#include <cmath>
#include <numbers>

namespace nsb {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Compensated (Kahan) accumulator for long sums of small terms.
class KahanSum {
 public:
  void add(double x) {
    const double y = x - comp_;
    const double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// log C(n, k); requires 0 <= k <= n.
double log_binomial(long long n, long long k);

/// C(n, k) as a double. Exact (integer arithmetic) for n <= 62,
/// exp(log_binomial) beyond that.
double binomial(long long n, long long k);

/// log [ C(m_total, m) / 2^m_total ]: the symmetric-subspace weight of |+>^m_total.
double log_binomial_weight(long long m_total, long long m);

/// Unnormalized sinc: sin(x)/x, with sinc(0) = 1.
double sinc(double x);

}  // namespace nsb

#endif
