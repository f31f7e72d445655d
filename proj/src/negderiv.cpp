#include "umbra/negderiv.hpp"

#include <cmath>
#include <string>

#include "umbra/error.hpp"
#include "umbra/gamma.hpp"
#include "umbra/special.hpp"

namespace umbra {

DerivativeProvider constant_provider(double c) {
  return {[c](int s, double) { return s == 0 ? c : 0.0; }, 0};
}

DerivativeProvider series_provider(const TruncatedSeries& p) {
  return {[p](int s, double x) {
            if (s > p.order()) return 0.0;
            // s-th derivative evaluated directly from the coefficients.
            double v = 0.0;
            for (int k = p.order(); k >= s; --k) {
              double fall = 1.0;
              for (int j = 0; j < s; ++j) fall *= k - j;
              v = v * x + fall * p[k].real();
            }
            return v;
          },
          p.order()};
}

DerivativeProvider hermite_provider(int n, double y) {
  if (n < 0) throw DomainError("Hermite degree must be non-negative");
  return {[n, y](int s, double x) {
            if (s > n) return 0.0;
            return factorial(n) / factorial(n - s) * hermite2_value(n - s, x, y);
          },
          n};
}

DerivativeProvider gaussian_provider(double a, double b) {
  return {[a, b](int s, double x) { return gaussian_hermite_derivative(s, a, b, x); },
          std::nullopt};
}

DerivativeProvider j0_provider() {
  return {[](int s, double x) { return bessel_nth_derivative(s, x); }, std::nullopt};
}

namespace {

void check_terms(const DerivativeProvider& f, int terms) {
  if (terms < 1) throw DomainError("need at least one term");
  if (f.max_s && terms > *f.max_s + 1)
    throw DomainError("provider has derivatives only up to order " + std::to_string(*f.max_s));
}

// Accumulates increments and records where they settle.
void push(NegDerivResult& r, double inc, double tol) {
  r.value += inc;
  r.partial_sums.push_back(r.value);
  if (r.settled_at < 0 && std::abs(inc) <= tol)
    r.settled_at = static_cast<int>(r.partial_sums.size()) - 1;
  r.converged = std::abs(inc) <= tol;
}

// A series that used every derivative of a polynomial is exact.
void mark_exhausted(NegDerivResult& r, const DerivativeProvider& f, int terms) {
  if (f.max_s && terms == *f.max_s + 1) r.converged = true;
}

double derivative(const DerivativeProvider& f, int s, double x) {
  try {
    return f.eval_deriv(s, x);
  } catch (const Error& e) {
    throw Error("derivative provider failed at s = " + std::to_string(s) + ": " + e.what());
  }
}

}  // namespace

NegDerivResult negderiv_integral(const DerivativeProvider& f, double x, int terms,
                                 double settle_tol) {
  check_terms(f, terms);
  NegDerivResult r;
  double w = x;  // x^{s+1}/(s+1)!
  for (int s = 0; s < terms; ++s) {
    const double sign = s % 2 ? -1.0 : 1.0;
    push(r, sign * w * derivative(f, s, x), settle_tol);
    w *= x / (s + 2);
  }
  mark_exhausted(r, f, terms);
  return r;
}

double iterated_cos_primitive(int m, double x) {
  if (m < 0) throw DomainError("primitive order must be non-negative");
  // Leading term x^m/m! built by multiplication, then the alternating tail.
  double t = 1.0;
  for (int j = 1; j <= m; ++j) t *= x / j;
  double sum = 0.0;
  for (int k = 0; k < 500; ++k) {
    sum += t;
    const int d = 2 * k + m;
    t *= -x * x / ((d + 1.0) * (d + 2.0));
    if (std::abs(t) <= 1e-18 * std::abs(sum) || t == 0.0) break;
  }
  return sum;
}

NegDerivResult negderiv_cos_integral(const DerivativeProvider& f, double x, int terms,
                                     double settle_tol) {
  check_terms(f, terms);
  NegDerivResult r;
  for (int s = 0; s < terms; ++s) {
    const double sign = s % 2 ? -1.0 : 1.0;
    push(r, sign * derivative(f, s, x) * iterated_cos_primitive(s + 1, x), settle_tol);
  }
  mark_exhausted(r, f, terms);
  return r;
}

double hermite_integral_series(HermiteIntegral which, int n, double x, double y) {
  if (n < 0) throw DomainError("Hermite degree must be non-negative");
  const double nf = factorial(n);
  double sum = 0.0;
  switch (which) {
    case HermiteIntegral::x_plain:
    case HermiteIntegral::x_cos:
      for (int s = 0; s <= n; ++s) {
        const double sign = s % 2 ? -1.0 : 1.0;
        const double w = which == HermiteIntegral::x_plain
                             ? std::pow(x, s + 1) / factorial(s + 1)
                             : iterated_cos_primitive(s + 1, x);
        sum += sign * w * nf / factorial(n - s) * hermite2_value(n - s, x, y);
      }
      break;
    case HermiteIntegral::y_plain:
    case HermiteIntegral::y_cos:
      for (int s = 0; 2 * s <= n; ++s) {
        const double sign = s % 2 ? -1.0 : 1.0;
        const double w = which == HermiteIntegral::y_plain
                             ? std::pow(y, s + 1) / factorial(s + 1)
                             : iterated_cos_primitive(s + 1, y);
        sum += sign * w * nf / factorial(n - 2 * s) * hermite2_value(n - 2 * s, x, y);
      }
      break;
  }
  return sum;
}

NegDerivResult gaussian_integral_series(double a, double b, double x, int terms,
                                        double settle_tol) {
  if (terms < 1) throw DomainError("need at least one term");
  NegDerivResult r;
  const double e = std::exp(a * x * x + b * x);
  const double u = -(2.0 * a * x + b);
  double w = x;
  for (int s = 0; s < terms; ++s) {
    push(r, e * w * hermite2_value(s, u, a), settle_tol);
    w *= x / (s + 2);
  }
  return r;
}

double bessel_nth_derivative(int n, double x) {
  if (n < 0) throw DomainError("derivative order must be non-negative");
  if (x == 0.0 && n >= 2) throw DomainError("singular at origin");
  double sum = 0.0;
  for (int r = 0; 2 * r <= n; ++r) {
    const double j = bessel_family(BesselKind::J, n - r, x).value;
    sum += std::pow(-2.0 * x, -r) / (factorial(r) * factorial(n - 2 * r)) * j;
  }
  return (n % 2 ? -1.0 : 1.0) * factorial(n) * sum;
}

NegDerivResult bessel_integral_series(double x, int terms, double settle_tol) {
  if (x == 0.0) throw DomainError("singular at origin");
  if (terms < 1) throw DomainError("need at least one term");
  NegDerivResult r;
  double w = x;
  for (int s = 0; s < terms; ++s) {
    double inner = 0.0;
    for (int q = 0; 2 * q <= s; ++q)
      inner += std::pow(-2.0 * x, -q) / (factorial(q) * factorial(s - 2 * q)) *
               bessel_family(BesselKind::J, s - q, x).value;
    push(r, w * factorial(s) * inner, settle_tol);
    w *= x / (s + 2);
  }
  return r;
}

}  // namespace umbra
