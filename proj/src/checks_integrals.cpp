// Integral identities: oscillatory half-line integrals of Bessel-type
// integrands, the Gaussian-Bessel integral, the error-function image, the
// Mellin reading of the Ramanujan master theorem and the negative-derivative
// series.

#include <cmath>

#include "checks_common.hpp"
#include "umbra/gamma.hpp"
#include "umbra/negderiv.hpp"
#include "umbra/special.hpp"
#include "umbra/transforms.hpp"
#include "umbra/umbral.hpp"

namespace umbra {

using namespace checks;

namespace {

double j0(double x) { return bessel_j(0.0, x); }

OscillatorySpec scan(double hint) {
  OscillatorySpec s;
  s.zero_spacing_hint = hint;
  return s;
}

OscillatorySpec lattice(double hint) {
  OscillatorySpec s = scan(hint);
  s.mode = PartitionMode::fixed_period;
  return s;
}

// (sqrt(pi)/2) e^{-b^2/8} I_0(b^2/8).
double gauss_j0_closed(double b) {
  const double z = b * b / 8.0;
  return 0.5 * kSqrtPi * std::exp(-z) * bessel_family(BesselKind::I0, 0, z).value;
}

// The umbral route: J_0(bx) = e^{-c (bx/2)^2} turns the integral into
// (sqrt(pi)/2)(1 + c b^2/4)^{-1/2}; expanding the root binomially and
// applying 1/Gamma(1 + mu) gives a convergent series in b^2/4.
double gauss_j0_umbral(double b, int order) {
  const double q = b * b / 4.0;
  std::vector<UmbralTerm> terms;
  double coeff = 1.0;  // binom(-1/2, r) q^r
  for (int r = 0; r <= order; ++r) {
    terms.push_back({coeff, Rational(r), r});
    coeff *= -(r + 0.5) / (r + 1) * q;
  }
  const auto s = umbral_eval(UmbralExpression(terms), laguerre_functional(), order);
  return 0.5 * kSqrtPi * sum_real(s, 1.0);
}

// Gaussian e^{-x^2} from the geometric umbral image 1/(1 + c x^2).
TruncatedSeries gaussian_series(int order) {
  const int m = order / 2;
  const auto g = umbral_eval(umbral_geometric(Rational(1), 1, m), laguerre_functional(), m);
  std::vector<Scalar> c(static_cast<std::size_t>(order) + 1, 0.0);
  for (int r = 0; r <= m; ++r) c[2 * r] = g[r];
  return TruncatedSeries(std::move(c));
}

void register_oscillatory(Registry& reg) {
  reg.add({
      .id = "int-j0-line",
      .description = "integral of J0 over the half line equals 1",
      .reference = "integral of J0 on (0, inf) from the Gaussian umbral image",
      .lhs = [](const Args&, const Context&) {
        return converged_value(integrate_oscillatory(j0, scan(kPi), 1e-10), "J0 half-line");
      },
      .rhs = constant(1.0),
      .samples = {sample("")},
      .tolerance = 1e-6,
      .compare = Compare::absolute,
  });

  reg.add({
      .id = "mellin-j0",
      .description = "Mellin transform of J0: 2^{nu-1} Gamma(nu/2) / Gamma(1 - nu/2)",
      .reference = "Mellin-type integral of J0 for |nu| <= 1",
      .lhs = [](const Args& a, const Context&) {
        return converged_value(
            mellin_numeric(j0, a.at("nu"), {0.0, 1.5}, scan(kPi), 1e-10), "Mellin of J0");
      },
      .rhs = [](const Args& a, const Context&) {
        const double nu = a.at("nu");
        return std::pow(2.0, nu - 1.0) * gamma_fn(nu / 2.0) * reciprocal_gamma(1.0 - nu / 2.0);
      },
      .samples = {sample("", {{"nu", 0.5}}), sample("", {{"nu", 0.75}})},
      .tolerance = 1e-5,
  });

  reg.add({
      .id = "int-j0-xsq",
      .description = "integral of J0(x^2) over the half line",
      .reference = "integral of J0(x^2) on (0, inf) from the umbral Gaussian image",
      .lhs = [](const Args&, const Context&) {
        return converged_value(
            integrate_oscillatory([](double x) { return j0(x * x); }, scan(kPi), 1e-10),
            "J0(x^2) half-line");
      },
      .rhs = constant(std::pow(4.0, -0.75) * gamma_fn(0.25) / gamma_fn(0.75)),
      .samples = {sample("")},
      .tolerance = 1e-5,
      .slow = true,
  });

  reg.add({
      .id = "j0-sincos",
      .description = "integrals of J0(2 sqrt(xu)) against sin u and cos u give cos x and sin x",
      .reference = "sine and cosine integrals of J0(2 sqrt(xu)) as restated umbral exponentials",
      .lhs = [](const Args& a, const Context&) {
        const double x = a.at("x");
        const bool sin_carrier = a.variant == "sin";
        const RealFn f = [=](double u) {
          return j0(2.0 * std::sqrt(x * u)) * (sin_carrier ? std::sin(u) : std::cos(u));
        };
        return converged_value(integrate_oscillatory(f, lattice(kPi), 1e-9), "J0 sin/cos");
      },
      .rhs = [](const Args& a, const Context&) {
        const double x = a.at("x");
        return a.variant == "sin" ? std::cos(x) : std::sin(x);
      },
      .samples = {sample("sin", {{"x", 0.5}}), sample("sin", {{"x", 0.8}}),
                  sample("sin", {{"x", 1.2}}), sample("cos", {{"x", 0.5}}),
                  sample("cos", {{"x", 0.8}}), sample("cos", {{"x", 1.2}})},
      .tolerance = 1e-5,
  });

  reg.add({
      .id = "tricomi-sincos",
      .description = "integrals of u^s C_s(xu) against sin u and cos u",
      .reference = "Tricomi sine and cosine integrals, (-1)^s cos/sin(x + s pi/2)",
      .lhs = [](const Args& a, const Context&) {
        const double x = a.at("x");
        const int s = static_cast<int>(a.at("s"));
        const bool sin_carrier = a.variant == "sin";
        const RealFn f = [=](double u) {
          return std::pow(u, s) * tricomi_value(s, x * u) *
                 (sin_carrier ? std::sin(u) : std::cos(u));
        };
        return converged_value(integrate_oscillatory(f, lattice(kPi), 1e-8), "Tricomi sin/cos");
      },
      .rhs = [](const Args& a, const Context&) {
        const double x = a.at("x");
        const int s = static_cast<int>(a.at("s"));
        const double phase = x + s * kPi / 2.0;
        return (s % 2 ? -1.0 : 1.0) * (a.variant == "sin" ? std::cos(phase) : std::sin(phase));
      },
      .samples = {sample("sin", {{"s", 0}, {"x", 0.5}}), sample("sin", {{"s", 0}, {"x", 0.8}}),
                  sample("sin", {{"s", 1}, {"x", 0.5}}), sample("sin", {{"s", 1}, {"x", 0.8}}),
                  sample("cos", {{"s", 0}, {"x", 0.5}}), sample("cos", {{"s", 0}, {"x", 0.8}}),
                  sample("cos", {{"s", 1}, {"x", 0.5}}), sample("cos", {{"s", 1}, {"x", 0.8}})},
      .tolerance = 1e-4,
      .slow = true,
  });

  reg.add({
      .id = "tricomi-j0-projection",
      .description = "integral of C0(xu) J0(u) over the half line equals J0(x)",
      .reference = "projection of the Tricomi function onto J0, tabulated Bessel integral",
      .lhs = [](const Args& a, const Context&) {
        const double x = a.at("x");
        const RealFn f = [=](double u) { return tricomi_value(0, x * u) * j0(u); };
        return converged_value(integrate_oscillatory(f, lattice(kPi), 1e-8), "C0 J0 projection");
      },
      .rhs = [](const Args& a, const Context&) { return j0(a.at("x")); },
      .samples = {sample("", {{"x", 0.8}}), sample("", {{"x", 2.0}})},
      .tolerance = 1e-3,
      .slow = true,
      .notes = "The integral converges only conditionally and no region is stated; the loose "
               "tolerance is an engineering margin. Observed agreement is far tighter.",
  });
}

void register_gaussian_bessel(Registry& reg) {
  reg.add({
      .id = "gauss-j0",
      .description = "integral of e^{-x^2} J0(bx) against (sqrt(pi)/2) e^{-b^2/8} I0(b^2/8)",
      .reference = "Gaussian-weighted J0 integral by the umbral Gaussian image",
      .lhs = [](const Args& a, const Context& ctx) {
        const double b = a.at("b");
        if (a.variant == "umbral-series") return gauss_j0_umbral(b, ctx.order);
        AdaptiveOptions ao;
        ao.abs_tol = 1e-14;
        ao.rel_tol = 1e-13;
        return converged_value(integrate_semi_infinite(
                                   [b](double x) {
                                     const double w = std::exp(-x * x);
                                     return w == 0.0 ? 0.0 : w * j0(b * x);
                                   },
                                   0.0, ao),
                               "Gaussian J0 integral");
      },
      .rhs = [](const Args& a, const Context&) { return gauss_j0_closed(a.at("b")); },
      .samples = {sample("quadrature", {{"b", 0.5}}), sample("quadrature", {{"b", 1.0}}),
                  sample("quadrature", {{"b", 2.0}}), sample("umbral-series", {{"b", 0.5}}),
                  sample("umbral-series", {{"b", 1.0}}), sample("umbral-series", {{"b", 2.0}})},
      .tolerance = 1e-8,
      .compare = Compare::relative,
  });

  reg.add({
      .id = "hankel-gauss",
      .description = "zeroth-order Hankel transform of e^{-x^2}/x",
      .reference = "0th order Hankel transform of e^{-x^2}/x, same closed form as gauss-j0",
      .lhs = [](const Args& a, const Context&) {
        const double y = a.at("y");
        AdaptiveOptions ao;
        ao.abs_tol = 1e-14;
        ao.rel_tol = 1e-13;
        // x f(x) J0(xy) with f = e^{-x^2}/x; nodes never sit at x = 0.
        return converged_value(integrate_semi_infinite(
                                   [y](double x) {
                                     const double w = std::exp(-x * x);
                                     return w == 0.0 ? 0.0 : x * (w / x) * j0(x * y);
                                   },
                                   0.0, ao),
                               "Hankel transform");
      },
      .rhs = [](const Args& a, const Context&) { return gauss_j0_closed(a.at("y")); },
      .samples = {sample("", {{"y", 0.5}}), sample("", {{"y", 1.0}}), sample("", {{"y", 2.0}})},
      .tolerance = 1e-8,
  });

  reg.add({
      .id = "erf-umbral",
      .description = "umbral error-function image against quadrature of e^{-t^2} on [0, x]",
      .reference = "umbral image of the error function",
      .lhs = [](const Args& a, const Context& ctx) {
        const double x = a.at("x");
        if (a.variant == "antiderivative")
          return sum_real(antidifferentiate(gaussian_series(ctx.order)), x);
        // c^{-1/2} arctan(sqrt(c) x) expanded in c, then 1/Gamma(1 + mu).
        std::vector<UmbralTerm> terms;
        for (int r = 0; 2 * r + 1 <= ctx.order; ++r)
          terms.push_back({(r % 2 ? -1.0 : 1.0) / (2 * r + 1), Rational(r), 2 * r + 1});
        return sum_real(umbral_eval(UmbralExpression(terms), laguerre_functional(), ctx.order),
                        x);
      },
      .rhs = [](const Args& a, const Context&) {
        return converged_value(
            integrate_finite([](double t) { return std::exp(-t * t); }, 0.0, a.at("x"), 1e-15),
            "erf quadrature");
      },
      .samples = {sample("antiderivative", {{"x", 0.25}}), sample("antiderivative", {{"x", 0.5}}),
                  sample("antiderivative", {{"x", 1.0}}), sample("antiderivative", {{"x", 1.5}}),
                  sample("umbral-arctan", {{"x", 0.5}}), sample("umbral-arctan", {{"x", 1.0}}),
                  sample("umbral-arctan", {{"x", 1.5}})},
      .tolerance = 1e-10,
  });

  reg.add({
      .id = "rmt-footnote",
      .description = "master-theorem Mellin integrals: Gamma(nu) phi(-nu)",
      .reference = "Ramanujan master theorem for e^{-x} and C0",
      .lhs = [](const Args& a, const Context&) {
        const double nu = a.at("nu");
        if (a.variant == "exp")
          return converged_value(
              mellin_numeric([](double x) { return std::exp(-x); }, nu, {0.0, 1e300},
                             std::nullopt, 1e-12),
              "Mellin of e^{-x}");
        return converged_value(
            mellin_numeric([](double x) { return j0(2.0 * std::sqrt(x)); }, nu, {0.0, 0.75},
                           scan(kPi), 1e-11),
            "Mellin of C0");
      },
      .rhs = [](const Args& a, const Context&) {
        // phi = 1 for e^{-x}; phi(n) = 1/Gamma(1+n) for C0.
        const double nu = a.at("nu");
        return a.variant == "exp" ? gamma_fn(nu) : gamma_fn(nu) * reciprocal_gamma(1.0 - nu);
      },
      .samples = {sample("exp", {{"nu", 0.5}}), sample("exp", {{"nu", 2.0}}),
                  sample("tricomi", {{"nu", 0.25}})},
      .tolerance = 1e-9,
  });
}

// Quadrature oracles for the negative-derivative suite.
double quad(const RealFn& f, double a, double b) {
  return converged_value(integrate_finite(f, a, b, 1e-15), "oracle quadrature");
}

double negderiv_lhs(const Args& a) {
  const std::string& v = a.variant;
  auto p = [&](const char* k) { return a.at(k); };
  auto ip = [&](const char* k) { return static_cast<int>(a.at(k)); };
  if (v == "series-j0") return negderiv_integral(j0_provider(), p("x"), ip("terms")).value;
  if (v == "series-j0-increment") {
    const auto r = negderiv_integral(j0_provider(), p("x"), ip("s") + 1);
    const auto& ps = r.partial_sums;
    return std::abs(ps[ps.size() - 1] - ps[ps.size() - 2]);
  }
  if (v == "series-poly") {
    const std::vector<double> c{1.0, 2.0, 0.0, -1.0};
    return negderiv_integral(series_provider(TruncatedSeries::from_real(c)), p("x"), 4).value;
  }
  if (v == "hermite-x")
    return hermite_integral_series(HermiteIntegral::x_plain, ip("n"), p("x"), p("y"));
  if (v == "hermite-y")
    return hermite_integral_series(HermiteIntegral::y_plain, ip("n"), p("x"), p("y"));
  if (v == "hermite-x-cos") return hermite_integral_series(HermiteIntegral::x_cos, ip("n"), p("x"), p("y"));
  if (v == "hermite-y-cos")
    return hermite_integral_series(HermiteIntegral::y_cos, ip("n"), p("x"), p("y"));
  if (v == "cos-one") return negderiv_cos_integral(constant_provider(1.0), p("x"), 1).value;
  if (v == "cos-j0") return negderiv_cos_integral(j0_provider(), p("x"), ip("terms")).value;
  if (v == "gauss-derivative") return gaussian_hermite_derivative(ip("s"), p("a"), p("b"), p("x"));
  if (v == "gauss-integral") return gaussian_integral_series(p("a"), p("b"), p("x"), ip("terms")).value;
  if (v == "j0-derivative") return bessel_nth_derivative(ip("n"), p("x"));
  if (v == "j0-integral") return bessel_integral_series(p("x"), ip("terms")).value;
  throw DomainError("unknown negderiv variant " + v);
}

double negderiv_rhs(const Args& a) {
  const std::string& v = a.variant;
  const double x = a.params.count("x") ? a.at("x") : 0.0;
  if (v == "series-j0" || v == "j0-integral") return quad(j0, 0.0, x);
  if (v == "series-j0-increment") return 0.0;
  if (v == "series-poly") return x + x * x - std::pow(x, 4) / 4.0;
  if (v == "hermite-x" || v == "hermite-x-cos") {
    const int n = static_cast<int>(a.at("n"));
    const double y = a.at("y");
    const bool cos_w = v == "hermite-x-cos";
    return quad([=](double t) { return hermite2_value(n, t, y) * (cos_w ? std::cos(t) : 1.0); },
                0.0, x);
  }
  if (v == "hermite-y" || v == "hermite-y-cos") {
    const int n = static_cast<int>(a.at("n"));
    const bool cos_w = v == "hermite-y-cos";
    return quad([=](double t) { return hermite2_value(n, x, t) * (cos_w ? std::cos(t) : 1.0); },
                0.0, a.at("y"));
  }
  if (v == "cos-one") return std::sin(x);
  if (v == "cos-j0") return quad([](double t) { return j0(t) * std::cos(t); }, 0.0, x);
  if (v == "gauss-derivative") {
    const double aa = a.at("a"), b = a.at("b");
    return richardson_derivative([=](double t) { return std::exp(aa * t * t + b * t); },
                                 static_cast<int>(a.at("s")), x);
  }
  if (v == "gauss-integral") {
    const double aa = a.at("a"), b = a.at("b");
    return quad([=](double t) { return std::exp(aa * t * t + b * t); }, 0.0, x);
  }
  if (v == "j0-derivative") return richardson_derivative(j0, static_cast<int>(a.at("n")), x);
  throw DomainError("unknown negderiv variant " + v);
}

void register_negderiv(Registry& reg) {
  std::vector<Args> s{
      sample("series-j0", {{"x", 1.0}, {"terms", 30}}, 1e-10),
      sample("series-j0-increment", {{"x", 1.0}, {"s", 30}}, 1e-12),
      sample("series-poly", {{"x", 0.7}}, 1e-14),
      sample("hermite-x", {{"n", 0}, {"x", 0.6}, {"y", 1.0}}, 1e-14),
      sample("hermite-x", {{"n", 2}, {"x", 1.0}, {"y", 1.0}}, 1e-13),
      sample("hermite-x", {{"n", 5}, {"x", 0.9}, {"y", -0.5}}, 1e-13),
      sample("hermite-y", {{"n", 2}, {"x", 1.0}, {"y", 0.5}}, 1e-13),
      sample("hermite-y", {{"n", 6}, {"x", 0.8}, {"y", 1.2}}, 1e-12),
      sample("hermite-x-cos", {{"n", 2}, {"x", 1.0}, {"y", 1.0}}, 1e-10),
      sample("hermite-x-cos", {{"n", 4}, {"x", 1.3}, {"y", -0.5}}, 1e-10),
      sample("hermite-y-cos", {{"n", 4}, {"x", 0.7}, {"y", 0.9}}, 1e-10),
      sample("cos-one", {{"x", 0.7}}, 1e-14),
      sample("cos-j0", {{"x", 1.0}, {"terms", 30}}, 1e-10),
      sample("gauss-derivative", {{"s", 1}, {"a", 1.0}, {"b", 0.0}, {"x", 1.0}}, 1e-6),
      sample("gauss-derivative", {{"s", 3}, {"a", 0.5}, {"b", 1.0}, {"x", 0.3}}, 1e-6),
      sample("gauss-integral", {{"a", -1.0}, {"b", 0.0}, {"x", 1.0}, {"terms", 40}}, 1e-10),
      sample("gauss-integral", {{"a", 0.3}, {"b", 0.5}, {"x", 0.8}, {"terms", 40}}, 1e-9),
      sample("j0-derivative", {{"n", 1}, {"x", 1.2}}, 1e-7),
      sample("j0-derivative", {{"n", 2}, {"x", 1.2}}, 1e-7),
      sample("j0-derivative", {{"n", 3}, {"x", 1.2}}, 1e-7),
      sample("j0-integral", {{"x", 1.0}, {"terms", 30}}, 1e-9),
      sample("j0-integral", {{"x", 0.5}, {"terms", 25}}, 1e-9),
  };
  reg.add({
      .id = "negderiv-suite",
      .description = "negative-derivative integral series against quadrature and finite "
                     "differences",
      .reference = "negative-derivative integration series and its Hermite, Gaussian and "
                   "Bessel instances",
      .lhs = [](const Args& a, const Context&) { return negderiv_lhs(a); },
      .rhs = [](const Args& a, const Context&) { return negderiv_rhs(a); },
      .samples = std::move(s),
      .tolerance = 1e-9,
      .notes = "Per-sample tolerances. The cosine variants use the exact iterated primitive "
               "of cos; the displayed cos(x + s pi/2)/(s+1)! weights do not integrate even "
               "f = 1 correctly. The Gaussian series uses H_s(-(2ax+b), a).",
  });
}

}  // namespace

void register_integral_checks(Registry& reg) {
  register_oscillatory(reg);
  register_gaussian_bessel(reg);
  register_negderiv(reg);
}

}  // namespace umbra
