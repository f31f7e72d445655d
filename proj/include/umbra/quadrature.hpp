#ifndef UMBRA_QUADRATURE_HPP
#define UMBRA_QUADRATURE_HPP

#include <functional>
#include <memory>
#include <vector>

namespace umbra {

using RealFn = std::function<double(double)>;

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  // Met the tolerance, or every remaining piece is at its rounding floor.
  bool converged = false;
  bool rounding_limited = false;
};

struct GaussLaguerreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// n-point rule for int_0^inf t^{gamma-1} e^{-t} g(t) dt, exact for
// polynomials of degree <= 2n-1. Rules are cached per (n, gamma); the
// returned pointer stays valid for the life of the process.
std::shared_ptr<const GaussLaguerreRule> gauss_laguerre_nodes(int n, double gamma);

// Applies a rule with a fixed left-to-right summation order.
double gauss_laguerre_apply(const GaussLaguerreRule& rule, const RealFn& g);

struct AdaptiveOptions {
  double abs_tol = 1e-12;
  double rel_tol = 0.0;  // converged once error <= max(abs_tol, rel_tol*|value|)
  int max_subdivisions = 4000;
};

// Globally adaptive 7/15-point Gauss-Kronrod. The error estimate is
// |K15 - G7| summed over subintervals, each raised to a rounding floor of
// 50 eps times its absolute integral. Also converged (rounding_limited)
// when the estimate minus the summed floors meets the tolerance.
QuadratureResult integrate_finite(const RealFn& f, double a, double b, double tol);
QuadratureResult integrate_finite(const RealFn& f, double a, double b,
                                  const AdaptiveOptions& opt);

// int_a^inf f via x = a + t/(1-t). Handles algebraic and exponential decay.
QuadratureResult integrate_semi_infinite(const RealFn& f, double a,
                                         const AdaptiveOptions& opt);

// int_{-inf}^{inf} f as two semi-infinite pieces split at 0.
QuadratureResult integrate_real_line(const RealFn& f, double tol);
QuadratureResult integrate_real_line(const RealFn& f, const AdaptiveOptions& opt);

// How partition endpoints for integrate_oscillatory are placed.
enum class PartitionMode {
  // Scan forward for sign changes of f and refine each by bisection; the
  // scan step follows the last observed zero spacing, so slowly drifting
  // spacings (J0(2 sqrt(x)), J0(x^2)) are tracked.
  sign_changes,
  // Equally spaced endpoints start + k*h. Suited to products with a
  // trigonometric carrier of period 2h whose other factor has its own zeros.
  fixed_period,
};

struct OscillatorySpec {
  double zero_spacing_hint = 0.0;  // > 0
  int max_partitions = 4096;
  double start = 0.0;
  PartitionMode mode = PartitionMode::sign_changes;
  int window = 20;  // partial sums entering the Euler averaging
};

// int_start^inf f for eventually alternating f: integrates partition by
// partition, then applies iterated Euler averaging to the last `window`
// partial sums. The partition count doubles from 32 until two successive
// accelerated values agree within tol; their difference is the error
// estimate.
QuadratureResult integrate_oscillatory(const RealFn& f, const OscillatorySpec& spec,
                                       double tol);

}  // namespace umbra

#endif  // UMBRA_QUADRATURE_HPP
