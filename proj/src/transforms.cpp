#include "umbra/transforms.hpp"

#include <cfloat>
#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "umbra/error.hpp"
#include "umbra/gamma.hpp"

namespace umbra {

std::string to_string(TransformFamily f) {
  switch (f) {
    case TransformFamily::borel: return "borel";
    case TransformFamily::borel_leroy: return "borel-leroy";
    case TransformFamily::beta: return "beta";
  }
  return "borel";
}

TransformFamily transform_family_from_string(const std::string& s) {
  if (s == "borel") return TransformFamily::borel;
  if (s == "borel-leroy") return TransformFamily::borel_leroy;
  if (s == "beta") return TransformFamily::beta;
  throw DomainError("unknown transform family '" + s + "'");
}

TransformSpec TransformSpec::borel(double alpha, bool inverse) {
  TransformSpec s;
  s.alpha = alpha;
  s.inverse = inverse;
  return s;
}

TransformSpec TransformSpec::borel_leroy(double alpha, double gamma, bool inverse) {
  TransformSpec s;
  s.family = TransformFamily::borel_leroy;
  s.alpha = alpha;
  s.gamma = gamma;
  s.inverse = inverse;
  return s;
}

TransformSpec TransformSpec::beta_form(double alpha, double beta, double gamma, double delta,
                                       bool inverse) {
  TransformSpec s;
  s.family = TransformFamily::beta;
  s.alpha = alpha;
  s.beta = beta;
  s.gamma = gamma;
  s.delta = delta;
  s.inverse = inverse;
  return s;
}

void TransformSpec::validate() const {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("transform needs alpha > 0");
  if (family == TransformFamily::beta) {
    if (!beta || !delta) throw DomainError("beta transform needs alpha, beta, gamma and delta");
    if (!(*beta > 0.0) || !(gamma >= 0.0) || !(*delta >= 0.0) || !std::isfinite(*beta) ||
        !std::isfinite(gamma) || !std::isfinite(*delta))
      throw DomainError("beta transform needs beta > 0 and gamma, delta >= 0");
  } else {
    if (!(gamma > 0.0) || !std::isfinite(gamma))
      throw DomainError("Borel-Leroy transform needs gamma > 0");
  }
}

namespace {

// log|factor| and its sign, for when the factor itself overflows.
std::pair<double, int> log_factor(const TransformSpec& spec, int r) {
  if (spec.family == TransformFamily::beta) {
    const double a = spec.alpha + spec.gamma * r, b = *spec.beta + *spec.delta * r;
    return {std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b), 1};
  }
  int sign = 1;
  const double lg = ::lgamma_r(spec.gamma + spec.alpha * r, &sign);
  return {lg, sign};
}

}  // namespace

double coefficient_factor(const TransformSpec& spec, int r) {
  spec.validate();
  if (spec.family == TransformFamily::beta) {
    const double a = spec.alpha + spec.gamma * r, b = *spec.beta + *spec.delta * r;
    if (!(a > 0.0) || !(b > 0.0))
      throw DomainError("beta arguments not positive at r = " + std::to_string(r));
    return beta_fn(a, b);
  }
  const double z = spec.gamma + spec.alpha * r;
  if (is_nonpositive_integer(z))
    throw DomainError("Gamma pole in transform factor at r = " + std::to_string(r));
  return gamma_fn(z);
}

TruncatedSeries borel_apply(const TruncatedSeries& s, const TransformSpec& spec) {
  spec.validate();
  std::vector<Scalar> c(s.coeffs().begin(), s.coeffs().end());
  for (int r = 0; r <= s.order(); ++r) {
    if (spec.inverse && spec.family != TransformFamily::beta &&
        is_nonpositive_integer(spec.gamma + spec.alpha * r)) {
      c[r] = 0.0;
      continue;
    }
    const double g = coefficient_factor(spec, r);
    if (c[r] == Scalar{}) continue;
    if (std::isfinite(g) && g != 0.0) {
      const Scalar v = spec.inverse ? c[r] / g : c[r] * g;
      if (std::isfinite(v.real()) && std::isfinite(v.imag())) {
        c[r] = v;
        continue;
      }
    }
    // Factor or product out of range: combine in log space.
    const auto [lg, sign] = log_factor(spec, r);
    const double mag = std::exp(std::log(std::abs(c[r])) + (spec.inverse ? -lg : lg));
    c[r] = std::polar(mag, std::arg(c[r])) * static_cast<double>(sign);
  }
  return TruncatedSeries(std::move(c));
}

double borel_integral_form(const RealFn& f, const TransformSpec& spec, double x,
                           const IntegralFormOptions& opt) {
  spec.validate();
  if (spec.inverse)
    throw DomainError("the inverse transform has no integral form here; use borel_apply");
  if (spec.family == TransformFamily::beta) {
    const double a = spec.alpha, b = *spec.beta, g = spec.gamma, d = *spec.delta;
    const RealFn k = [&](double t) {
      const double u = 1.0 - t;
      return std::pow(t, a - 1.0) * std::pow(u, b - 1.0) * f(std::pow(t, g) * std::pow(u, d) * x);
    };
    AdaptiveOptions ao;
    ao.abs_tol = opt.tol;
    ao.rel_tol = opt.tol;
    const auto q = integrate_finite(k, 0.0, 1.0, ao);
    if (!q.converged)
      throw ConvergenceError("beta integral form did not converge at x = " + std::to_string(x) +
                             " (error estimate " + std::to_string(q.error_estimate) + ")");
    return q.value;
  }
  const double alpha = spec.alpha, gamma = spec.gamma;
  if (!opt.adaptive) {
    const auto rule = gauss_laguerre_nodes(opt.nodes, gamma);
    return gauss_laguerre_apply(*rule, [&](double t) { return f(std::pow(t, alpha) * x); });
  }
  // t = e^s turns the scale 1/x^{1/alpha} at which f(t^alpha x) varies into
  // a shift in s, which the adaptive rule finds at any x.
  const RealFn k = [&](double s) {
    const double w = std::exp(gamma * s - std::exp(s));
    if (w == 0.0) return 0.0;
    return w * f(std::exp(alpha * s) * x);
  };
  AdaptiveOptions ao;
  ao.abs_tol = opt.tol;
  ao.rel_tol = opt.tol;
  const auto q = integrate_real_line(k, ao);
  if (!q.converged)
    throw ConvergenceError("Borel integral form did not converge at x = " + std::to_string(x) +
                           " (error estimate " + std::to_string(q.error_estimate) + ")");
  return q.value;
}

PointwiseValue transform_pointwise(const std::function<double(int)>& f_coeff,
                                   const TransformSpec& spec, double x, int max_terms) {
  return transform_pointwise_log(
      [&f_coeff](int k) {
        const double fk = f_coeff(k);
        if (fk == 0.0) return LogCoeff{};
        return LogCoeff{fk < 0 ? -1 : 1, std::log(std::abs(static_cast<long double>(fk)))};
      },
      spec, x, max_terms);
}

PointwiseValue transform_pointwise_log(const std::function<LogCoeff(int)>& f_coeff,
                                       const TransformSpec& spec, double x, int max_terms) {
  spec.validate();
  PointwiseValue out;
  const long double lx = std::log(std::abs(static_cast<long double>(x)));
  int quiet = 0;
  for (int k = 0; k < max_terms; ++k) {
    const LogCoeff fk = f_coeff(k);
    out.terms = k + 1;
    if (fk.sign == 0 || (x == 0.0 && k > 0)) {
      if (k > 0 && ++quiet > 40) {
        out.converged = true;
        break;
      }
      continue;
    }
    long double lg;
    int sign = 1;
    if (spec.family == TransformFamily::beta) {
      const long double a = spec.alpha + spec.gamma * k, b = *spec.beta + *spec.delta * k;
      lg = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
    } else {
      const long double z = spec.gamma + static_cast<long double>(spec.alpha) * k;
      if (z <= 0 && std::floor(z) == z) {
        if (!spec.inverse) throw DomainError("Gamma pole at term " + std::to_string(k));
        continue;
      }
      lg = ::lgammal_r(z, &sign);
    }
    long double logmag = fk.log_abs + (spec.inverse ? -lg : lg);
    if (k > 0) logmag += k * lx;
    long double term = std::exp(logmag) * sign;
    if (fk.sign < 0) term = -term;
    if (x < 0 && k % 2 == 1) term = -term;
    out.value += term;
    const long double at = std::abs(term);
    if (at > out.max_term) out.max_term = at;
    if (at <= LDBL_EPSILON * 1e-3L * std::max(out.max_term, std::abs(out.value))) {
      if (++quiet > 40) {
        out.converged = true;
        break;
      }
    } else {
      quiet = 0;
    }
  }
  return out;
}

Prop1Result proposition1_check(const RealFn& f, const TransformSpec& spec, double k_expected,
                               double tol) {
  spec.validate();
  if (spec.inverse)
    throw DomainError("use proposition1_inverse_check for the inverse transform");
  Prop1Result res;
  if (spec.family == TransformFamily::beta) {
    const double a = spec.alpha - spec.gamma, b = *spec.beta - *spec.delta;
    if (!(a > 0.0) || !(b > 0.0))
      throw DomainError("beta form of the real-line integral needs alpha > gamma, beta > delta");
    res.rhs = k_expected * beta_fn(a, b);
  } else {
    if (!(spec.alpha < 1.0)) throw DomainError("real-line integral of the transform needs alpha < 1");
    if (spec.gamma != 1.0) throw DomainError("real-line integral check is stated for gamma = 1");
    res.rhs = k_expected * gamma_fn(1.0 - spec.alpha);
  }
  IntegralFormOptions inner;
  inner.adaptive = true;
  inner.tol = tol * 1e-3;
  const RealFn outer = [&](double x) { return borel_integral_form(f, spec, x, inner); };
  const auto q = integrate_real_line(outer, tol);
  res.lhs = q.value;
  res.error_estimate = q.error_estimate;
  res.converged = q.converged;
  return res;
}

Prop1Result proposition1_inverse_check(const std::function<double(int)>& f_coeff,
                                       double alpha, double k_expected, double tol) {
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw DomainError("inverse real-line integral check needs 0 < alpha < 1");
  const auto spec = TransformSpec::borel(alpha, true);
  Prop1Result res;
  res.rhs = k_expected / gamma_fn(1.0 - alpha);

  const auto g = [&](double x) { return transform_pointwise(f_coeff, spec, x); };
  // Largest X on a 1/4 grid where rounding in the extended sum stays well
  // below the tolerance on both sides.
  double X = 0.0;
  for (double x = 0.25; x <= 64.0; x += 0.25) {
    const auto p = g(x), m = g(-x);
    const long double noise = LDBL_EPSILON * std::max(p.max_term, m.max_term) * (p.terms + 1);
    if (!p.converged || !m.converged || noise > 1e-3L * tol) break;
    X = x;
  }
  if (X == 0.0) throw ConvergenceError("inverse transform cannot be summed near the origin");
  AdaptiveOptions ao;
  ao.abs_tol = tol;
  const auto q = integrate_finite([&](double x) { return static_cast<double>(g(x).value); },
                                  -X, X, ao);
  res.lhs = q.value;
  const double edge = std::max(std::abs(static_cast<double>(g(X).value)),
                               std::abs(static_cast<double>(g(-X).value)));
  res.error_estimate = q.error_estimate + edge;
  res.converged = q.converged && edge <= tol;
  return res;
}

RealFn inverse_borel_gaussian(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("inverse Gaussian image needs 0 < alpha < 1");
  using Wide = boost::multiprecision::cpp_bin_float_50;
  // 1/(m! Gamma(1 + 2 alpha m)); 600 terms cover |x| <= 20 at alpha = 1/4.
  constexpr int kTerms = 600;
  auto c = std::make_shared<std::vector<Wide>>();
  c->reserve(kTerms);
  const Wide two_alpha = 2 * Wide(alpha);
  Wide fact = 1;
  for (int m = 0; m < kTerms; ++m) {
    if (m > 0) fact *= m;
    c->push_back(1 / (fact * boost::math::tgamma(1 + two_alpha * m)));
  }
  return [c](double x) {
    const Wide y = -Wide(x) * Wide(x);
    Wide sum = 0, p = 1, peak = 0;
    for (std::size_t m = 0; m < c->size(); ++m, p *= y) {
      const Wide term = (*c)[m] * p;
      sum += term;
      const Wide at = abs(term);
      if (at > peak) peak = at;
      // Past the peak, stop once terms are far below the 50-digit noise of
      // the largest one.
      if (m > 2 && at < peak && at < 1e-40 * peak && at < Wide(1e-30)) return sum.convert_to<double>();
    }
    throw ConvergenceError("inverse Gaussian image needs more terms at x = " + std::to_string(x));
  };
}

Prop1Result proposition1_inverse_pointwise(const RealFn& g, double alpha, double k_expected,
                                           double tol) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("inverse check needs 0 < alpha < 1");
  Prop1Result res;
  res.rhs = k_expected / gamma_fn(1.0 - alpha);
  const double quiet = 1e-2 * tol;
  double X = 0.0, last_loud = 0.0;
  for (double x = 0.5; x <= 64.0; x += 0.5) {
    if (std::max(std::abs(g(x)), std::abs(g(-x))) > quiet) last_loud = x;
    if (x - last_loud >= 2.0) {
      X = last_loud + 0.5;
      break;
    }
  }
  if (X == 0.0) {
    res.error_estimate = std::max(std::abs(g(64.0)), std::abs(g(-64.0)));
    return res;
  }
  AdaptiveOptions ao;
  ao.abs_tol = 1e-2 * tol;
  const auto q = integrate_finite(g, -X, X, ao);
  res.lhs = q.value;
  res.error_estimate = q.error_estimate + quiet;
  res.converged = q.converged;
  return res;
}

std::pair<double, double> laplace_link_check(const RealFn& f, double x, double tol) {
  if (!(x > 0.0)) throw DomainError("Laplace link needs x > 0");
  AdaptiveOptions ao;
  ao.abs_tol = tol;
  ao.rel_tol = tol;
  const auto borel = integrate_semi_infinite(
      [&](double t) {
        const double w = std::exp(-t);
        return w == 0.0 ? 0.0 : w * f(t * x);
      },
      0.0, ao);
  const auto laplace = integrate_semi_infinite(
      [&](double u) {
        const double w = std::exp(-u / x);
        return w == 0.0 ? 0.0 : w * f(u);
      },
      0.0, ao);
  if (!borel.converged || !laplace.converged)
    throw ConvergenceError("Laplace link quadrature did not converge at x = " + std::to_string(x));
  return {borel.value, laplace.value / x};
}

QuadratureResult mellin_numeric(const RealFn& f, double s, MellinStrip strip,
                                const std::optional<OscillatorySpec>& oscillatory, double tol) {
  if (!(s > strip.lo && s < strip.hi))
    throw DomainError("Mellin argument s = " + std::to_string(s) + " outside the strip (" +
                      std::to_string(strip.lo) + ", " + std::to_string(strip.hi) + ")");
  const RealFn g = [&](double x) { return std::pow(x, s - 1.0) * f(x); };
  if (oscillatory) {
    OscillatorySpec spec = *oscillatory;
    spec.start = 0.0;
    return integrate_oscillatory(g, spec, tol);
  }
  AdaptiveOptions ao;
  ao.abs_tol = tol;
  ao.rel_tol = tol;
  return integrate_semi_infinite(
      [&](double x) {
        const double v = f(x);
        return v == 0.0 ? 0.0 : std::pow(x, s - 1.0) * v;
      },
      0.0, ao);
}

}  // namespace umbra
