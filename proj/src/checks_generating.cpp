// Generating-function checks. Every left side is a truncated sum to
// n = 40 whose last increment is asserted negligible; right sides are the
// closed forms and, where the derivation passes through the shift symbol,
// the umbral expression evaluated by the matching functional.

#include <cmath>
#include <complex>

#include "checks_common.hpp"
#include "umbra/gamma.hpp"
#include "umbra/special.hpp"
#include "umbra/transforms.hpp"
#include "umbra/umbral.hpp"

namespace umbra {

using namespace checks;

namespace {

// sum_{n=0}^{40} term(n), refusing a sum whose last term still matters.
template <class F>
double gf_sum(F term, const std::string& what) {
  double total = 0.0, last = 0.0;
  for (int n = 0; n <= kGfTerms; ++n) {
    last = term(n);
    total += last;
  }
  require_negligible_increment(last, total, what);
  return total;
}

// exp(a c + b c^2) graded by a dummy variable X carrying the c exponent,
// evaluated by f and summed at X = 1.
double umbral_exp_quadratic(double a, double b, const UmbralFunctional& f, int order) {
  std::vector<UmbralTerm> lin, quad;
  double p = 1.0;
  for (int j = 0; j <= order; ++j, p *= a / j) lin.push_back({p, Rational(j), j});
  p = 1.0;
  for (int k = 0; 2 * k <= order; ++k, p *= b / k) quad.push_back({p, Rational(2 * k), 2 * k});
  const auto e = umbral_multiply(UmbralExpression(lin), UmbralExpression(quad), order);
  return sum_real(umbral_eval(e, f, order), 1.0);
}

// 1/(1 + c X) under 1/Gamma(1 + mu), at complex X.
Scalar umbral_geometric_at(Scalar X, int order) {
  const auto s = umbral_eval(umbral_geometric(Rational(1), 1, order), laguerre_functional(), order);
  return evaluate(s, X).value;
}

void register_bessel_family(Registry& reg) {
  std::vector<Args> tri;
  for (auto [x, t, s] : {std::tuple{1.0, 0.5, 0.3}, {2.0, 0.7, 0.5}, {0.5, 1.0, -0.4},
                         {0.3, 1.2, 0.8}})
    tri.push_back(sample("sum", {{"x", x}, {"t", t}, {"sigma", s}}));
  for (int n : {0, 1, 2})
    for (double x : {0.5, 1.0}) tri.push_back(sample("laplace", {{"n", n}, {"x", x}}));
  reg.add({
      .id = "gf-tricomi",
      .description = "sum (sigma t)^n/n! C_n(xt) = C0((x - sigma) t), from int e^{-t} t^n "
                     "C_n(xt) dt = e^{-x}",
      .reference = "Tricomi generating function derived through the Borel transform",
      .lhs = [](const Args& a, const Context& ctx) {
        const double x = a.at("x");
        if (a.variant == "laplace") {
          const int n = static_cast<int>(a.at("n"));
          const auto tn = tricomi(n, ctx.order);
          return borel_integral_form([&](double u) { return sum_real(tn, u); },
                                     TransformSpec::borel_leroy(1.0, n + 1.0), x);
        }
        const double t = a.at("t"), s = a.at("sigma");
        return gf_sum(
            [&](int n) {
              return std::pow(s * t, n) * inv_factorial(n) * sum_real(tricomi(n, ctx.order), x * t);
            },
            "Tricomi generating function");
      },
      .rhs = [](const Args& a, const Context& ctx) {
        const double x = a.at("x");
        if (a.variant == "laplace") return std::exp(-x);
        return sum_real(tricomi(0, ctx.order), (x - a.at("sigma")) * a.at("t"));
      },
      .samples = std::move(tri),
      .tolerance = 1e-10,
  });

  reg.add({
      .id = "gf-bessel",
      .description = "sum sigma^n/n! J_n(x) = J0(sqrt(x^2 - 2 sigma x))",
      .reference = "classical Bessel generating function recovered from the Tricomi case",
      .lhs = [](const Args& a, const Context& ctx) {
        const double x = a.at("x"), s = a.at("sigma");
        return gf_sum(
            [&](int n) {
              return std::pow(s, n) * inv_factorial(n) *
                     bessel_family(BesselKind::J, n, x, ctx.order).value;
            },
            "Bessel generating function");
      },
      .rhs = [](const Args& a, const Context& ctx) {
        const double x = a.at("x"), s = a.at("sigma");
        return bessel_family(BesselKind::J, 0, std::sqrt(x * x - 2.0 * s * x), ctx.order).value;
      },
      .samples = {sample("", {{"x", 1.0}, {"sigma", 0.3}}), sample("", {{"x", 2.0}, {"sigma", 0.5}}),
                  sample("", {{"x", 1.5}, {"sigma", -0.5}}), sample("", {{"x", 3.0}, {"sigma", 1.0}})},
      .tolerance = 1e-9,
  });
}

void register_laguerre_family(Registry& reg) {
  std::vector<Args> lag;
  for (auto [x, y, xi] : {std::tuple{0.5, 1.0, 0.3}, {1.0, 0.5, 0.4}, {-0.5, -0.8, 0.3},
                          {2.0, 0.25, 0.5}})
    for (const char* v : {"closed", "umbral"})
      lag.push_back(sample(v, {{"x", x}, {"y", y}, {"xi", xi}}));
  reg.add({
      .id = "gf-laguerre",
      .description = "ordinary Laguerre generating function as the inverse Borel transform of a "
                     "geometric series",
      .reference = "ordinary generating function of the two-variable Laguerre polynomials",
      .lhs = [](const Args& a, const Context&) {
        const double x = a.at("x"), y = a.at("y"), xi = a.at("xi");
        return gf_sum([&](int n) { return std::pow(xi, n) * laguerre2_value(n, x, y); },
                      "Laguerre generating function");
      },
      .rhs = [](const Args& a, const Context& ctx) {
        const double x = a.at("x"), y = a.at("y"), xi = a.at("xi");
        const double d = 1.0 - y * xi;
        if (a.variant == "closed") return std::exp(-x * xi / d) / d;
        return umbral_geometric_at(xi * x / d, ctx.order).real() / d;
      },
      .samples = std::move(lag),
      .tolerance = 1e-10,
  });

  std::vector<Args> bt;
  for (auto [x, y, xi] : {std::tuple{0.5, 1.0, 0.3}, {1.0, 0.5, 0.6}, {2.0, -0.8, 0.4},
                          {-1.0, 0.3, 1.0}})
    bt.push_back(sample("sum", {{"x", x}, {"y", y}, {"xi", xi}}));
  for (double x : {0.5, 2.0}) bt.push_back(sample("borel-y", {{"n", 3}, {"x", x}, {"y", 1.0}}));
  reg.add({
      .id = "gf-bessel-trunc",
      .description = "sum xi^n/n! b_n(x, y) = C0(x xi)/(1 - y xi); b_n is the Borel image of "
                     "L_n in y",
      .reference = "generating function of the Bessel truncated polynomials",
      .lhs = [](const Args& a, const Context& ctx) {
        const double x = a.at("x"), y = a.at("y");
        if (a.variant == "borel-y") {
          const int n = static_cast<int>(a.at("n"));
          return sum_real(bessel_truncated(n, y), x);
        }
        const double xi = a.at("xi");
        (void)ctx;
        return gf_sum(
            [&](int n) { return std::pow(xi, n) * inv_factorial(n) * sum_real(bessel_truncated(n, y), x); },
            "Bessel truncated generating function");
      },
      .rhs = [](const Args& a, const Context& ctx) {
        const double x = a.at("x"), y = a.at("y");
        if (a.variant == "borel-y") {
          const int n = static_cast<int>(a.at("n"));
          return borel_integral_form([&](double u) { return laguerre2_value(n, x, u); },
                                     TransformSpec::borel(1.0), y);
        }
        const double xi = a.at("xi");
        return sum_real(tricomi(0, ctx.order), x * xi) / (1.0 - y * xi);
      },
      .samples = std::move(bt),
      .tolerance = 1e-10,
  });

  std::vector<Args> l2;
  for (auto [x, y, t] : {std::tuple{0.3, 0.5, 0.2}, {1.0, 0.2, 0.1}, {-0.4, 0.6, 0.15},
                         {0.5, 0.3, 0.2}})
    for (const char* v : {"closed", "umbral"})
      l2.push_back(sample(v, {{"x", x}, {"y", y}, {"t", t}}));
  reg.add({
      .id = "gf-lacunary-l2-ordinary",
      .description = "ordinary generating function of L_{2n}(x, y) as two exponentials",
      .reference = "ordinary generating function of lacunary Laguerre polynomials",
      .lhs = [](const Args& a, const Context&) {
        const double x = a.at("x"), y = a.at("y"), t = a.at("t");
        return gf_sum([&](int n) { return std::pow(t, n) * laguerre2_value(2 * n, x, y); },
                      "lacunary Laguerre sum");
      },
      .rhs = [](const Args& a, const Context& ctx) {
        const double x = a.at("x"), y = a.at("y"), s = std::sqrt(a.at("t"));
        const double dm = 1.0 - s * y, dp = 1.0 + s * y;
        if (a.variant == "closed")
          return 0.5 * (std::exp(-s * x / dm) / dm + std::exp(s * x / dp) / dp);
        return 0.5 * (umbral_geometric_at(s * x / dm, ctx.order).real() / dm +
                      umbral_geometric_at(-s * x / dp, ctx.order).real() / dp);
      },
      .samples = std::move(l2),
      .tolerance = 1e-9,
  });

  std::vector<Args> l2e;
  for (auto [x, y, t] : {std::tuple{0.5, 0.3, 0.2}, {1.0, -0.5, 0.1}, {1.5, 0.2, 0.3}})
    for (const char* v : {"umbral", "hermite-sum"})
      l2e.push_back(sample(v, {{"x", x}, {"y", y}, {"t", t}}));
  reg.add({
      .id = "gf-lacunary-l2-exp",
      .description = "exponential generating function of L_{2n}(x, y): umbral exponential and "
                     "Hermite-sum forms",
      .reference = "exponential generating function of lacunary Laguerre polynomials",
      .lhs = [](const Args& a, const Context&) {
        const double x = a.at("x"), y = a.at("y"), t = a.at("t");
        return gf_sum(
            [&](int n) { return std::pow(t, n) * inv_factorial(n) * laguerre2_value(2 * n, x, y); },
            "lacunary Laguerre exponential sum");
      },
      .rhs = [](const Args& a, const Context& ctx) {
        const double x = a.at("x"), y = a.at("y"), t = a.at("t");
        const double pre = std::exp(t * y * y);
        if (a.variant == "umbral")
          return pre * umbral_exp_quadratic(-2.0 * x * y * t, x * x * t, laguerre_functional(),
                                            ctx.order);
        return pre * gf_sum(
                         [&](int r) {
                           const double f = inv_factorial(r);
                           return std::pow(x, r) * f * f * hermite2_value(r, -2.0 * y * t, t);
                         },
                         "Hermite-sum form");
      },
      .samples = std::move(l2e),
      .tolerance = 1e-9,
  });

  std::vector<Args> lp;
  for (int p : {2, 3})
    for (auto [x, y, t] : {std::tuple{0.5, 0.3, 0.2}, {1.0, -0.5, 0.05}}) {
      lp.push_back(sample("closed", {{"p", p}, {"x", x}, {"y", y}, {"t", t}}));
      lp.push_back(sample("umbral", {{"p", p}, {"x", x}, {"y", y}, {"t", t}}));
      lp.push_back(sample("imag", {{"p", p}, {"x", x}, {"y", y}, {"t", t}}, 1e-10));
    }
  reg.add({
      .id = "gf-lacunary-lp",
      .description = "p-lacunary Laguerre generating function as a roots-of-unity average",
      .reference = "ordinary generating function of p-lacunary Laguerre polynomials via "
                   "roots of unity",
      .lhs = [](const Args& a, const Context& ctx) {
        const int p = static_cast<int>(a.at("p"));
        const double x = a.at("x"), y = a.at("y"), t = a.at("t");
        Scalar closed = 0.0, umbral = 0.0;
        for (int k = 0; k < p; ++k) {
          const Scalar w = std::pow(t, 1.0 / p) * std::polar(1.0, 2.0 * kPi * k / p);
          const Scalar d = 1.0 - w * y;
          closed += std::exp(-w * x / d) / d;
          umbral += umbral_geometric_at(w * x / d, ctx.order) / d;
        }
        closed /= static_cast<double>(p);
        umbral /= static_cast<double>(p);
        if (a.variant == "imag") return std::max(std::abs(closed.imag()), std::abs(umbral.imag()));
        return (a.variant == "closed" ? closed : umbral).real();
      },
      .rhs = [](const Args& a, const Context&) {
        if (a.variant == "imag") return 0.0;
        const int p = static_cast<int>(a.at("p"));
        const double x = a.at("x"), y = a.at("y"), t = a.at("t");
        return gf_sum([&](int n) { return std::pow(t, n) * laguerre2_value(p * n, x, y); },
                      "p-lacunary Laguerre sum");
      },
      .samples = std::move(lp),
      .tolerance = 1e-8,
      .notes = "Complex arithmetic; the imaginary residue is reported as its own sample.",
  });
}

void register_hermite_family(Registry& reg) {
  std::vector<Args> hexp;
  for (double y : {-1.0, 0.5, 2.0})
    for (int k = 0; k <= 64; ++k) hexp.push_back(sample("", {{"y", y}, {"k", k}}));
  reg.add({
      .id = "hermite-umbral-exp",
      .description = "umbral exponential e^{c x} under the Hermite functional is e^{y x^2}",
      .reference = "Hermite umbral image of the exponential",
      .lhs = [](const Args& a, const Context& ctx) {
        const int order = std::max(ctx.order, static_cast<int>(a.at("k")));
        std::vector<UmbralTerm> terms;
        for (int r = 0; r <= order; ++r) terms.push_back({inv_factorial(r), Rational(r), r});
        return umbral_eval(UmbralExpression(terms), hermite_functional(a.at("y")), order)
            .coeff(static_cast<int>(a.at("k")))
            .real();
      },
      .rhs = [](const Args& a, const Context&) {
        const int k = static_cast<int>(a.at("k"));
        if (k % 2) return 0.0;
        return std::pow(a.at("y"), k / 2) * inv_factorial(k / 2);
      },
      .samples = std::move(hexp),
      .tolerance = 1e-12,
      .compare = Compare::relative,
  });

  std::vector<Args> hs;
  for (auto [x, y] : {std::pair{0.1, 1.0}, {0.25, 0.5}, {-0.5, 0.25}, {0.2, -0.5}})
    for (const char* v : {"umbral", "gauss-integral"}) hs.push_back(sample(v, {{"x", x}, {"y", y}}));
  reg.add({
      .id = "hermite-sqrt-identity",
      .description = "umbral e^{c^2 x} under the Hermite functional is 1/sqrt(1 - 4yx)",
      .reference = "Hermite umbral image of e^{c^2 x} through a Gaussian integral",
      .lhs = [](const Args& a, const Context& ctx) {
        const double x = a.at("x"), y = a.at("y");
        if (a.variant == "gauss-integral") {
          const double s = 1.0 - 4.0 * x * y;
          return converged_value(integrate_real_line(
                                     [s](double xi) { return std::exp(-s * xi * xi); }, 1e-14),
                                 "Gaussian integral") /
                 kSqrtPi;
        }
        std::vector<UmbralTerm> terms;
        for (int r = 0; r <= ctx.order; ++r) terms.push_back({inv_factorial(r), Rational(2 * r), r});
        return sum_real(umbral_eval(UmbralExpression(terms), hermite_functional(y), ctx.order), x);
      },
      .rhs = [](const Args& a, const Context&) {
        return 1.0 / std::sqrt(1.0 - 4.0 * a.at("y") * a.at("x"));
      },
      .samples = std::move(hs),
      .tolerance = 1e-10,
  });

  std::vector<Args> dl;
  for (auto [x, y, t] : {std::tuple{0.5, 0.3, 0.2}, {1.0, -0.5, 0.1}, {1.5, -0.5, 0.2},
                         {2.0, 0.3, 0.15}})
    for (const char* v : {"closed", "umbral"})
      dl.push_back(sample(v, {{"x", x}, {"y", y}, {"t", t}}));
  reg.add({
      .id = "gf-hermite-double-lacunary",
      .description = "sum t^n/n! H_{2n}(x, y) = (1 - 4yt)^{-1/2} exp(x^2 t/(1 - 4yt))",
      .reference = "double lacunary exponential generating function of Hermite polynomials",
      .lhs = [](const Args& a, const Context&) {
        const double x = a.at("x"), y = a.at("y"), t = a.at("t");
        return gf_sum(
            [&](int n) { return std::pow(t, n) * inv_factorial(n) * hermite2_value(2 * n, x, y); },
            "double lacunary Hermite sum");
      },
      .rhs = [](const Args& a, const Context& ctx) {
        const double x = a.at("x"), y = a.at("y"), t = a.at("t");
        const double d = 1.0 - 4.0 * y * t;
        if (a.variant == "closed") return std::exp(x * x * t / d) / std::sqrt(d);
        // e^{t (x + c)^2} = e^{t x^2} e^{2 t x c + t c^2}.
        return std::exp(t * x * x) *
               umbral_exp_quadratic(2.0 * t * x, t, hermite_functional(y), ctx.order);
      },
      .samples = std::move(dl),
      .tolerance = 1e-9,
  });

  std::vector<Args> me;
  for (auto [x, y, u, v, t] : {std::tuple{0.3, 0.2, 0.4, 0.1, 0.2}, {1.0, 0.5, -0.7, 0.3, 0.4},
                               {0.5, -0.3, 0.8, 0.2, 0.5}})
    for (const char* var : {"closed", "umbral"})
      me.push_back(sample(var, {{"x", x}, {"y", y}, {"u", u}, {"v", v}, {"t", t}}));
  reg.add({
      .id = "mehler",
      .description = "Mehler bilinear generating function of two-variable Hermite polynomials",
      .reference = "classical Mehler formula from the Hermite umbral functional",
      .lhs = [](const Args& a, const Context&) {
        const double x = a.at("x"), y = a.at("y"), u = a.at("u"), v = a.at("v"), t = a.at("t");
        return gf_sum(
            [&](int n) {
              return std::pow(t, n) * inv_factorial(n) * hermite2_value(n, x, y) *
                     hermite2_value(n, u, v);
            },
            "Mehler sum");
      },
      .rhs = [](const Args& a, const Context& ctx) {
        const double x = a.at("x"), y = a.at("y"), u = a.at("u"), v = a.at("v"), t = a.at("t");
        const double d = 1.0 - 4.0 * y * v * t * t;
        if (a.variant == "closed")
          return std::exp((x * u * t + v * x * x * t * t + y * u * u * t * t) / d) / std::sqrt(d);
        // e^{t x u + v (t x)^2} e^{v t^2 c^2 + (2 v x t^2 + t u) c}, c under the y functional.
        return std::exp(t * x * u + v * t * t * x * x) *
               umbral_exp_quadratic(2.0 * v * x * t * t + t * u, v * t * t, hermite_functional(y),
                                    ctx.order);
      },
      .samples = std::move(me),
      .tolerance = 1e-10,
      .notes = "Closed form in the classical symmetric shape. The variant "
               "e^{y(ut)^2}/sqrt(1 - 4yvt^2) exp((utx + vt^2x^2)/(1 - 4yvt^2)) differs from "
               "the series by about 4e-6 at the first sample.",
  });

  std::vector<Args> hy;
  for (auto [x, y, u, v, t] : {std::tuple{0.3, 0.2, 0.4, 0.1, 0.2}, {1.0, 0.5, -0.7, 0.3, 0.4},
                               {-0.5, 1.0, 0.6, -0.2, 0.5}})
    for (const char* var : {"hermite-sum", "umbral"})
      hy.push_back(sample(var, {{"x", x}, {"y", y}, {"u", u}, {"v", v}, {"t", t}}));
  reg.add({
      .id = "hybrid-laguerre-hermite",
      .description = "hybrid bilateral Laguerre-Hermite generating function",
      .reference = "hybrid bilateral generating function of Laguerre and Hermite polynomials",
      .lhs = [](const Args& a, const Context&) {
        const double x = a.at("x"), y = a.at("y"), u = a.at("u"), v = a.at("v"), t = a.at("t");
        return gf_sum(
            [&](int n) {
              return std::pow(t, n) * inv_factorial(n) * laguerre2_value(n, x, y) *
                     hermite2_value(n, u, v);
            },
            "hybrid sum");
      },
      .rhs = [](const Args& a, const Context& ctx) {
        const double x = a.at("x"), y = a.at("y"), u = a.at("u"), v = a.at("v"), t = a.at("t");
        const double pre = std::exp(t * y * u + t * t * y * y * v);
        if (a.variant == "umbral")
          return pre * umbral_exp_quadratic(-t * (x * u + 2.0 * t * y * x * v), t * t * x * x * v,
                                            laguerre_functional(), ctx.order);
        return pre * gf_sum(
                         [&](int r) {
                           const double f = inv_factorial(r);
                           return std::pow(x, r) * f * f *
                                  hermite2_value(r, -t * u - 2.0 * y * v * t * t, v * t * t);
                         },
                         "hybrid Hermite-sum form");
      },
      .samples = std::move(hy),
      .tolerance = 1e-9,
  });
}

}  // namespace

void register_generating_checks(Registry& reg) {
  register_bessel_family(reg);
  register_laguerre_family(reg);
  register_hermite_family(reg);
}

}  // namespace umbra
