#ifndef UMBRA_GAMMA_HPP
#define UMBRA_GAMMA_HPP

// Gamma-function helpers shared by the coefficient formulas.

namespace umbra {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kSqrtPi = 1.77245385090551602729816748334114518;

// n! as a double, computed by exact multiplication (exact up to 22!).
double factorial(int n);

// 1/n!, computed as 1/factorial(n) so the value agrees bit-for-bit with it.
double inv_factorial(int n);

// Binomial coefficient C(n, k) for 0 <= k <= n; 0 otherwise.
double binomial(int n, int k);

// True when x is 0, -1, -2, ... (a pole of Gamma).
bool is_nonpositive_integer(double x);

// 1/Gamma(x), zero at the poles x = 0, -1, -2, ...
double reciprocal_gamma(double x);

// Gamma(x); throws DomainError at a pole. Falls back to exp(lgamma) with
// the reflection sign when tgamma overflows, returning +-inf only when the
// value itself is not representable.
double gamma_fn(double x);

// Euler beta B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b) for a, b > 0.
double beta_fn(double a, double b);

// Rising factorial (a)_k.
double pochhammer(double a, int k);

}  // namespace umbra

#endif  // UMBRA_GAMMA_HPP
