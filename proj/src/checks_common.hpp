#ifndef UMBRA_CHECKS_COMMON_HPP
#define UMBRA_CHECKS_COMMON_HPP

// Helpers shared by the catalog registration files.

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "umbra/catalog.hpp"
#include "umbra/error.hpp"
#include "umbra/quadrature.hpp"
#include "umbra/series.hpp"

namespace umbra::checks {

inline Args sample(std::string variant, std::map<std::string, double> params = {},
                   std::optional<double> tol = std::nullopt) {
  return Args{std::move(variant), std::move(params), tol};
}

inline Evaluator constant(double v) {
  return [v](const Args&, const Context&) { return v; };
}

// Large-argument J_n for quadrature integrands, where the power series
// loses all accuracy.
inline double bessel_j(double n, double x) { return std::cyl_bessel_j(n, std::abs(x)); }

// C_s(z) = z^{-s/2} J_s(2 sqrt z) for z >= 0, limit 1/s! at 0.
double tricomi_value(int s, double z);

// Real part of a series evaluated at x; every catalog series is real.
double sum_real(const TruncatedSeries& s, double x);

// Truncated generating-function sums stop at n = 40; the last increment
// must already be negligible, so truncation cannot hide a mismatch.
inline constexpr int kGfTerms = 40;
void require_negligible_increment(double increment, double total, const std::string& what);

// Value of a quadrature that must have met its tolerance.
double converged_value(const QuadratureResult& q, const std::string& what);

// n-th derivative by central differences with Richardson extrapolation over
// `levels` halvings of h.
double richardson_derivative(const RealFn& f, int n, double x, double h = 0.05, int levels = 4);

}  // namespace umbra::checks

#endif  // UMBRA_CHECKS_COMMON_HPP
