#ifndef UMBRA_NEGDERIV_HPP
#define UMBRA_NEGDERIV_HPP

#include <functional>
#include <optional>
#include <vector>

#include "umbra/series.hpp"

namespace umbra {

// f^{(s)}(x) on demand. max_s bounds s when the derivatives are known to
// vanish or are unavailable beyond it.
struct DerivativeProvider {
  std::function<double(int s, double x)> eval_deriv;
  std::optional<int> max_s;
};

DerivativeProvider constant_provider(double c);
// Polynomial (or truncated series) with real coefficients; max_s = order.
DerivativeProvider series_provider(const TruncatedSeries& p);
// H_n(., y); max_s = n.
DerivativeProvider hermite_provider(int n, double y);
// e^{a x^2 + b x}, derivatives through Hermite polynomials.
DerivativeProvider gaussian_provider(double a, double b);
// J_0 with the closed-form n-th derivative below.
DerivativeProvider j0_provider();

struct NegDerivResult {
  double value = 0.0;
  std::vector<double> partial_sums;
  // First index whose increment fell to or below settle_tol, or -1.
  int settled_at = -1;
  // Last increment <= settle_tol, or every derivative of a polynomial used.
  bool converged = false;
};

// sum_{s<terms} (-1)^s x^{s+1}/(s+1)! f^{(s)}(x), which equals int_0^x f.
NegDerivResult negderiv_integral(const DerivativeProvider& f, double x, int terms,
                                 double settle_tol = 1e-15);

// m-fold iterated primitive of cos from 0:
// sum_k (-1)^k x^{2k+m} / (2k+m)!. m = 1 gives sin x.
double iterated_cos_primitive(int m, double x);

// int_0^x f(t) cos t dt as sum_s (-1)^s f^{(s)}(x) iterated_cos_primitive(s+1, x).
NegDerivResult negderiv_cos_integral(const DerivativeProvider& f, double x, int terms,
                                     double settle_tol = 1e-15);

enum class HermiteIntegral {
  x_plain,  // int_0^x H_n(t, y) dt
  y_plain,  // int_0^y H_n(x, t) dt
  x_cos,    // int_0^x H_n(t, y) cos t dt
  y_cos,    // int_0^y H_n(x, t) cos t dt
};

// Finite sums for the four Hermite integrals.
double hermite_integral_series(HermiteIntegral which, int n, double x, double y);

// int_0^x e^{a t^2 + b t} dt as
// e^{a x^2 + b x} sum_{s<terms} x^{s+1}/(s+1)! H_s(-(2ax + b), a).
NegDerivResult gaussian_integral_series(double a, double b, double x, int terms,
                                        double settle_tol = 1e-15);

// d^n/dx^n J_0(x) = (-1)^n n! sum_{r<=n/2} (-2x)^{-r} / (r! (n-2r)!) J_{n-r}(x).
// Throws DomainError at x = 0 when n >= 2.
double bessel_nth_derivative(int n, double x);

// int_0^x J_0 from the derivative formula inserted into the negative
// derivative series. Throws DomainError at x = 0.
NegDerivResult bessel_integral_series(double x, int terms, double settle_tol = 1e-15);

}  // namespace umbra

#endif  // UMBRA_NEGDERIV_HPP
