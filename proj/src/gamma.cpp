#include "umbra/gamma.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "umbra/error.hpp"

namespace umbra {

double factorial(int n) {
  if (n < 0) throw DomainError("factorial of negative integer " + std::to_string(n));
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

double inv_factorial(int n) { return 1.0 / factorial(n); }

double binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0.0;
  if (k > n - k) k = n - k;
  double c = 1.0;
  for (int j = 1; j <= k; ++j) c = c * (n - k + j) / j;
  // Below 2^53 the true value is an integer the running product only
  // approximates by a few ulps.
  return c < 9.0e15 ? std::round(c) : c;
}

bool is_nonpositive_integer(double x) { return x <= 0.0 && std::floor(x) == x; }

double reciprocal_gamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  const double g = std::tgamma(x);
  if (std::isfinite(g)) return 1.0 / g;
  // Overflowed: go through the logarithm. lgamma carries the sign separately.
  int sign = 1;
  const double lg = ::lgamma_r(x, &sign);
  return sign * std::exp(-lg);
}

double gamma_fn(double x) {
  if (is_nonpositive_integer(x))
    throw DomainError("Gamma has a pole at " + std::to_string(x));
  const double g = std::tgamma(x);
  if (std::isfinite(g)) return g;
  int sign = 1;
  const double lg = ::lgamma_r(x, &sign);
  return sign * std::exp(lg);
}

double beta_fn(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0))
    throw DomainError("beta function needs positive arguments");
  const double ga = std::tgamma(a), gb = std::tgamma(b), gab = std::tgamma(a + b);
  if (std::isfinite(ga) && std::isfinite(gb) && std::isfinite(gab) && gab != 0.0) {
    const double r = ga / gab * gb;
    if (std::isfinite(r) && r != 0.0) return r;
  }
  return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

double pochhammer(double a, int k) {
  double p = 1.0;
  for (int j = 0; j < k; ++j) p *= a + j;
  return p;
}

}  // namespace umbra
