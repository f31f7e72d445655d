#ifndef UMBRA_TRANSFORMS_HPP
#define UMBRA_TRANSFORMS_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "umbra/quadrature.hpp"
#include "umbra/series.hpp"

namespace umbra {

enum class TransformFamily { borel, borel_leroy, beta };

std::string to_string(TransformFamily f);
TransformFamily transform_family_from_string(const std::string& s);

// Selects one member of the Borel family.
//   borel / borel_leroy: kernel t^{gamma-1} e^{-t}, argument t^alpha x,
//     coefficient factor Gamma(gamma + alpha r). Plain Borel is gamma = 1.
//   beta: kernel t^{alpha-1}(1-t)^{beta-1} on (0,1), argument
//     t^gamma (1-t)^delta x, coefficient factor B(alpha + gamma r, beta + delta r).
struct TransformSpec {
  TransformFamily family = TransformFamily::borel;
  double alpha = 1.0;
  double gamma = 1.0;
  std::optional<double> beta;
  std::optional<double> delta;
  bool inverse = false;

  static TransformSpec borel(double alpha, bool inverse = false);
  static TransformSpec borel_leroy(double alpha, double gamma, bool inverse = false);
  static TransformSpec beta_form(double alpha, double beta, double gamma, double delta,
                                 bool inverse = false);

  // Throws DomainError unless the parameters fit the family.
  void validate() const;
};

// Multiplier the forward transform applies to the coefficient of x^r.
// Throws DomainError naming r at a Gamma pole or a beta-argument violation.
double coefficient_factor(const TransformSpec& spec, int r);

// Exact coefficient map: coefficient r multiplied (forward) or divided
// (inverse) by coefficient_factor. Never fails on factorial growth; inverse
// coefficients at a Gamma pole are 0.
TruncatedSeries borel_apply(const TruncatedSeries& s, const TransformSpec& spec);

struct IntegralFormOptions {
  int nodes = 64;         // Gauss-Laguerre nodes
  bool adaptive = false;  // adaptive quadrature instead of Gauss-Laguerre
  double tol = 1e-12;     // adaptive tolerance
};

// Value of the defining integral at x (forward transforms only). The Borel
// family uses Gauss-Laguerre by default; the beta family always uses
// adaptive quadrature on (0,1). Throws ConvergenceError when the adaptive
// run misses its tolerance.
double borel_integral_form(const RealFn& f, const TransformSpec& spec, double x,
                           const IntegralFormOptions& opt = {});

// Pointwise transform of a power series f(x) = sum f_k x^k, summed in
// extended precision term by term until the terms are negligible.
// max_term reports the largest term so callers can bound cancellation.
struct PointwiseValue {
  long double value = 0.0L;
  long double max_term = 0.0L;
  int terms = 0;
  bool converged = false;
};
PointwiseValue transform_pointwise(const std::function<double(int)>& f_coeff,
                                   const TransformSpec& spec, double x, int max_terms = 2000);

// Coefficient given as sign and log magnitude, for coefficients such as
// 1/k! that underflow a double long before the sum settles. sign = 0 marks
// a zero coefficient.
struct LogCoeff {
  int sign = 0;
  long double log_abs = 0.0L;
};
PointwiseValue transform_pointwise_log(const std::function<LogCoeff(int)>& f_coeff,
                                       const TransformSpec& spec, double x,
                                       int max_terms = 2000);

struct Prop1Result {
  double lhs = 0.0;
  double rhs = 0.0;
  double error_estimate = 0.0;
  bool converged = false;
};

// Integral over the real line of the forward transform, by nested
// quadrature, against k Gamma(1-alpha) (Borel) or k B(alpha-gamma,
// beta-delta) (beta family). Requires 0 <= alpha < 1 for Borel.
Prop1Result proposition1_check(const RealFn& f, const TransformSpec& spec, double k_expected,
                               double tol = 1e-7);

// Inverse-transform counterpart against k / Gamma(1-alpha). The inverse has
// no integral form here, so the transformed function is summed pointwise
// from the coefficients of f and integrated over [-X, X], X being the
// largest abscissa at which extended-precision cancellation stays below
// tol. Not converged when the integrand at X is not negligible.
Prop1Result proposition1_inverse_check(const std::function<double(int)>& f_coeff,
                                       double alpha, double k_expected, double tol = 1e-7);

// Inverse order-alpha Borel transform of e^{-x^2}, the function
// sum_m (-x^2)^m / (m! Gamma(1 + 2 alpha m)), alpha in (0, 1). Coefficients
// and sum are carried in 50 digits: for alpha = 1/4 the terms reach 1e22 at
// |x| = 12 while the sum is below 1e-10. Throws ConvergenceError past the
// coefficient table.
RealFn inverse_borel_gaussian(double alpha);

// Inverse counterpart taking the inverse image g pointwise: integral of g
// over [-X, X] against k / Gamma(1-alpha), X the first point of a 1/2 grid
// after which |g| stays below tol/100 for two units on both sides. Not
// converged when no such X exists below 64.
Prop1Result proposition1_inverse_pointwise(const RealFn& g, double alpha, double k_expected,
                                           double tol = 1e-7);

// (Borel value, x^{-1} Laplace[f](1/x)), both by quadrature.
std::pair<double, double> laplace_link_check(const RealFn& f, double x, double tol = 1e-11);

struct MellinStrip {
  double lo = 0.0;  // exclusive
  double hi = 0.0;  // exclusive
};

// int_0^inf x^{s-1} f(x) dx. Pass an oscillatory spec when f oscillates;
// throws DomainError when s lies outside the strip.
QuadratureResult mellin_numeric(const RealFn& f, double s, MellinStrip strip,
                                const std::optional<OscillatorySpec>& oscillatory = std::nullopt,
                                double tol = 1e-10);

}  // namespace umbra

#endif  // UMBRA_TRANSFORMS_HPP
