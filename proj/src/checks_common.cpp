#include "checks_common.hpp"

#include <cstdio>
#include <vector>

#include "umbra/gamma.hpp"

namespace umbra::checks {

double tricomi_value(int s, double z) {
  if (z == 0.0) return inv_factorial(s);
  if (z < 0.0) throw DomainError("tricomi_value needs a non-negative argument");
  const double r = std::sqrt(z);
  return std::cyl_bessel_j(static_cast<double>(s), 2.0 * r) / std::pow(r, s);
}

double sum_real(const TruncatedSeries& s, double x) { return evaluate(s, x).value.real(); }

void require_negligible_increment(double increment, double total, const std::string& what) {
  if (std::abs(increment) > 1e-14 * std::max(1.0, std::abs(total))) {
    char buf[96];
    std::snprintf(buf, sizeof buf, ": increment at n = 40 is %.3e, above 1e-14", increment);
    throw ConvergenceError(what + buf);
  }
}

double converged_value(const QuadratureResult& q, const std::string& what) {
  if (!q.converged) {
    char buf[96];
    std::snprintf(buf, sizeof buf, " did not converge (error estimate %.3e)", q.error_estimate);
    throw ConvergenceError(what + buf);
  }
  return q.value;
}

double richardson_derivative(const RealFn& f, int n, double x, double h, int levels) {
  if (n < 0 || levels < 1) throw DomainError("bad finite-difference request");
  auto central = [&](double step) {
    double acc = 0.0;
    for (int k = 0; k <= n; ++k)
      acc += (k % 2 ? -1.0 : 1.0) * binomial(n, k) * f(x + (0.5 * n - k) * step);
    return acc / std::pow(step, n);
  };
  // Error expands in even powers of the step.
  std::vector<double> t;
  for (int j = 0; j < levels; ++j) t.push_back(central(h / std::pow(2.0, j)));
  for (int m = 1; m < levels; ++m) {
    const double w = std::pow(4.0, m);
    for (int j = levels - 1; j >= m; --j) t[j] = (w * t[j] - t[j - 1]) / (w - 1.0);
  }
  return t.back();
}

}  // namespace umbra::checks
