// Borel-family checks: exact coefficient maps, their integral forms, the
// real-line integral relation and the Laplace/Mellin links.

#include <cmath>

#include "checks_common.hpp"
#include "umbra/gamma.hpp"
#include "umbra/special.hpp"
#include "umbra/transforms.hpp"
#include "umbra/umbral.hpp"

namespace umbra {

using namespace checks;

namespace {

constexpr int kCoeffMax = 64;

// One sample per coefficient index r = 0..kCoeffMax.
std::vector<Args> coeff_samples(const std::string& variant,
                                std::map<std::string, double> params = {}) {
  std::vector<Args> out;
  for (int r = 0; r <= kCoeffMax; ++r) {
    auto p = params;
    p["r"] = r;
    out.push_back(sample(variant, std::move(p)));
  }
  return out;
}

void append(std::vector<Args>& to, std::vector<Args> from) {
  to.insert(to.end(), from.begin(), from.end());
}

int index(const Args& a) { return static_cast<int>(a.at("r")); }

// Order large enough to hold coefficient r.
int order_for(const Args& a, const Context& ctx) { return std::max(ctx.order, index(a)); }

double coeff(const TruncatedSeries& s, int r) { return s.coeff(r).real(); }

// e^{-(x/2)^2} to the given order.
TruncatedSeries quarter_gaussian(int order) {
  std::vector<Scalar> c(static_cast<std::size_t>(order) + 1);
  for (int m = 0; 2 * m <= order; ++m) c[2 * m] = std::pow(-0.25, m) * inv_factorial(m);
  return TruncatedSeries(std::move(c));
}

double c0(double x) { return tricomi_value(0, x); }

void register_exact_maps(Registry& reg) {
  reg.add({
      .id = "borel-c0-exp",
      .description = "Borel transform of C0 has the coefficients of e^{-x}",
      .reference = "Borel transform of the 0th order Tricomi function",
      .lhs = [](const Args& a, const Context& ctx) {
        return coeff(borel_apply(tricomi(0, order_for(a, ctx)), TransformSpec::borel(1.0)),
                     index(a));
      },
      .rhs = [](const Args& a, const Context&) {
        const int r = index(a);
        return (r % 2 ? -1.0 : 1.0) * inv_factorial(r);
      },
      .samples = coeff_samples(""),
      .tolerance = 1e-13,
      .compare = Compare::relative,
  });

  std::vector<Args> geom = coeff_samples("coeff");
  for (double x : {-0.9, -0.5, 0.0, 0.5, 0.9}) geom.push_back(sample("pointwise", {{"x", x}}));
  reg.add({
      .id = "borel2-c0-geom",
      .description = "second Borel transform of C0 is the geometric series of 1/(1+x)",
      .reference = "successive Borel transforms of C0, geometric series for |x| < 1",
      .lhs = [](const Args& a, const Context& ctx) {
        const auto b = TransformSpec::borel(1.0);
        if (a.variant == "coeff")
          return coeff(borel_apply(borel_apply(tricomi(0, order_for(a, ctx)), b), b), index(a));
        // Pointwise: Borel of e^{-x} summed in extended precision.
        const auto v = transform_pointwise_log(
            [](int k) { return LogCoeff{k % 2 ? -1 : 1, -std::lgamma(k + 1.0L)}; }, b, a.at("x"));
        if (!v.converged) throw ConvergenceError("geometric series did not settle");
        return static_cast<double>(v.value);
      },
      .rhs = [](const Args& a, const Context&) {
        if (a.variant == "coeff") return index(a) % 2 ? -1.0 : 1.0;
        return 1.0 / (1.0 + a.at("x"));
      },
      .samples = std::move(geom),
      .tolerance = 1e-10,
  });

  std::vector<Args> div = coeff_samples("coeff");
  div.push_back(sample("divergent-flag"));
  div.push_back(sample("radius"));
  div.push_back(sample("strict-refusal", {{"x", 0.5}}));
  // Optimal truncation error is about sqrt(2 pi / x) e^{-1/x}: 4e-4 at 0.1.
  div.push_back(sample("smallest-term", {{"x", 0.1}}, 1e-3));
  reg.add({
      .id = "borel3-divergent",
      .description = "third Borel transform of C0: coefficients (-1)^r r!, a divergent series",
      .reference = "threefold Borel transform of C0 yields a divergent series",
      .lhs = [](const Args& a, const Context& ctx) {
        const auto b = TransformSpec::borel(1.0);
        const int order = a.params.count("r") ? order_for(a, ctx) : ctx.order;
        const auto s = borel_apply(borel_apply(borel_apply(tricomi(0, order), b), b), b);
        if (a.variant == "coeff") return coeff(s, index(a));
        if (a.variant == "divergent-flag") return is_divergent(s) ? 1.0 : 0.0;
        if (a.variant == "radius") return radius_estimate(s);
        if (a.variant == "strict-refusal") {
          try {
            evaluate(s, a.at("x"), EvalPolicy::strict);
          } catch (const DivergentSeriesError&) {
            return 1.0;
          }
          return 0.0;
        }
        return evaluate(s, a.at("x"), EvalPolicy::smallest_term).value.real();
      },
      .rhs = [](const Args& a, const Context&) {
        if (a.variant == "coeff") return (index(a) % 2 ? -1.0 : 1.0) * factorial(index(a));
        if (a.variant == "divergent-flag" || a.variant == "strict-refusal") return 1.0;
        if (a.variant == "radius") return 0.0;
        // Borel sum: int_0^inf e^{-t} / (1 + x t) dt.
        const double x = a.at("x");
        AdaptiveOptions ao;
        ao.abs_tol = 1e-14;
        return converged_value(
            integrate_semi_infinite([x](double t) { return std::exp(-t) / (1.0 + x * t); }, 0.0,
                                    ao),
            "Borel sum");
      },
      .samples = std::move(div),
      .tolerance = 1e-13,
      .compare = Compare::relative,
      .divergent_aware = true,
      .notes = "Coefficients compared relatively. The smallest-term sample compares the "
               "optimally truncated sum with the Borel integral at the truncation error.",
  });

  std::vector<Args> half = coeff_samples("forward");
  append(half, coeff_samples("inverse"));
  reg.add({
      .id = "borel-half-j0",
      .description = "order-1/2 Borel transform maps J0 to e^{-(x/2)^2} and back",
      .reference = "Borel transform of index 1/2 applied to J0 and its inversion",
      .lhs = [](const Args& a, const Context& ctx) {
        const int order = order_for(a, ctx);
        if (a.variant == "forward")
          return coeff(borel_apply(bessel_j_series(0, order), TransformSpec::borel(0.5)),
                       index(a));
        return coeff(borel_apply(quarter_gaussian(order), TransformSpec::borel(0.5, true)),
                     index(a));
      },
      .rhs = [](const Args& a, const Context&) {
        const int r = index(a);
        if (r % 2) return 0.0;
        const int m = r / 2;
        const double g = (m % 2 ? -1.0 : 1.0) * inv_factorial(m) * std::pow(0.25, m);
        return a.variant == "forward" ? g : g * inv_factorial(m);
      },
      .samples = std::move(half),
      .tolerance = 1e-13,
      .compare = Compare::relative,
  });

  std::vector<Args> eag = coeff_samples("", {{"alpha", 1.0}, {"gamma", 1.0}});
  append(eag, coeff_samples("", {{"alpha", 0.5}, {"gamma", 2.0}}));
  reg.add({
      .id = "borel-leroy-ealphagamma",
      .description = "Borel-Leroy transform of C_gamma gives e_{alpha,gamma}(-x)",
      .reference = "Borel-Leroy transform of the Tricomi function, convergent for alpha <= 2",
      .lhs = [](const Args& a, const Context& ctx) {
        const double al = a.at("alpha"), g = a.at("gamma");
        return coeff(borel_apply(tricomi(static_cast<int>(g), order_for(a, ctx)),
                                 TransformSpec::borel_leroy(al, g + 1.0)),
                     index(a));
      },
      .rhs = [](const Args& a, const Context& ctx) {
        const int r = index(a);
        return (r % 2 ? -1.0 : 1.0) *
               coeff(e_alpha_gamma(a.at("alpha"), a.at("gamma"), order_for(a, ctx)), r);
      },
      .samples = std::move(eag),
      .tolerance = 1e-13,
      .compare = Compare::relative,
  });

  std::vector<Args> bw = coeff_samples("", {{"alpha", 1.0}, {"gamma", 0.0}});
  append(bw, coeff_samples("", {{"alpha", 0.5}, {"gamma", 1.5}}));
  append(bw, coeff_samples("", {{"alpha", 1.5}, {"gamma", 1.0}}));
  reg.add({
      .id = "bessel-wright-inverse",
      .description = "inverse Borel-Leroy transform of e^{-x} is the Bessel-Wright function",
      .reference = "inverse Borel-Leroy transform yielding W_gamma(-x|alpha)",
      .lhs = [](const Args& a, const Context& ctx) {
        const double al = a.at("alpha"), g = a.at("gamma");
        return coeff(borel_apply(exp_series(order_for(a, ctx), -1.0),
                                 TransformSpec::borel_leroy(al, g + 1.0, true)),
                     index(a));
      },
      .rhs = [](const Args& a, const Context& ctx) {
        return coeff(bessel_wright(a.at("gamma"), a.at("alpha"), order_for(a, ctx)), index(a));
      },
      .samples = std::move(bw),
      .tolerance = 1e-13,
      .compare = Compare::relative,
  });

  std::vector<Args> rn;
  for (int n = 0; n <= 3; ++n) {
    append(rn, coeff_samples("inverse", {{"n", n}}));
    append(rn, coeff_samples("umbral", {{"n", n}}));
  }
  reg.add({
      .id = "rn-inverse-bl",
      .description = "inverse Borel-Leroy of index 1/2 maps e^{-(x/2)^2} to R_n",
      .reference = "R_n from the inverse Borel-Leroy transform of the Gaussian",
      .lhs = [](const Args& a, const Context& ctx) {
        const int n = static_cast<int>(a.at("n"));
        const int order = order_for(a, ctx);
        if (a.variant == "inverse")
          return coeff(borel_apply(quarter_gaussian(order),
                                   TransformSpec::borel_leroy(0.5, n + 1.0, true)),
                       index(a));
        // c^n e^{-c (x/2)^2}: shift every c exponent by n.
        const auto gauss = umbral_exp_gaussian(0.25, order);
        std::vector<UmbralTerm> terms;
        for (const auto& t : gauss.terms())
          terms.push_back({t.coeff, t.c_exp + Rational(n), t.x_exp});
        return coeff(umbral_eval(UmbralExpression(terms), laguerre_functional(), order),
                     index(a));
      },
      .rhs = [](const Args& a, const Context& ctx) {
        // R_n(x) = C_n(x^2/4).
        const int n = static_cast<int>(a.at("n")), r = index(a);
        if (r % 2) return 0.0;
        const auto c = tricomi(n, order_for(a, ctx) / 2);
        return coeff(c, r / 2) * std::pow(0.25, r / 2);
      },
      .samples = std::move(rn),
      .tolerance = 1e-13,
      .compare = Compare::relative,
  });

  std::vector<Args> ml = coeff_samples("", {{"beta", 1.0}});
  append(ml, coeff_samples("", {{"beta", 2.0}}));
  reg.add({
      .id = "mittag-leffler",
      .description = "beta-kernel Borel-Leroy transform of e^x/Gamma(beta) gives E_{1,beta+1}",
      .reference = "(beta, delta)-Borel-Leroy transform producing a Mittag-Leffler function",
      .lhs = [](const Args& a, const Context& ctx) {
        const double b = a.at("beta");
        const auto in = scale(exp_series(order_for(a, ctx)), reciprocal_gamma(b));
        return coeff(borel_apply(in, TransformSpec::beta_form(1.0, b, 1.0, 0.0)), index(a));
      },
      .rhs = [](const Args& a, const Context& ctx) {
        return coeff(mittag_leffler_1_beta(a.at("beta"), order_for(a, ctx)), index(a));
      },
      .samples = std::move(ml),
      .tolerance = 1e-13,
      .compare = Compare::relative,
  });
}

double gaussian(double x) { return std::exp(-x * x); }

RealFn link_integrand(const std::string& name) {
  if (name == "one") return [](double) { return 1.0; };
  if (name == "u") return [](double u) { return u; };
  if (name == "j0sqrt") return c0;
  throw DomainError("unknown Laplace-link integrand " + name);
}

void register_integral_relations(Registry& reg) {
  reg.add({
      .id = "prop1",
      .description = "real-line integral of the Borel transform of e^{-x^2}",
      .reference = "real-line integral of a Borel-transformed function against Gamma(1 - alpha)",
      .lhs = [](const Args& a, const Context&) {
        const double al = a.at("alpha");
        if (a.variant == "forward") {
          const auto r = proposition1_check(gaussian, TransformSpec::borel(al), kSqrtPi, 1e-8);
          if (!r.converged) throw ConvergenceError("nested quadrature did not converge");
          return r.lhs;
        }
        if (al == 0.5) {
          // The inverse image of e^{-x^2} is C0(x^2) = J0(2x), whose integral
          // converges only conditionally.
          const int order = kDefaultOrder;
          std::vector<double> g(order + 1, 0.0);
          for (int m = 0; 2 * m <= order; ++m) g[2 * m] = (m % 2 ? -1.0 : 1.0) * inv_factorial(m);
          const auto inv = borel_apply(TruncatedSeries::from_real(g), TransformSpec::borel(0.5, true));
          const auto c = tricomi(0, order / 2);
          for (int m = 0; 2 * m <= order; ++m)
            if (std::abs(inv[2 * m].real() - c[m].real()) > 1e-13 * std::abs(c[m].real()))
              throw Error("inverse image of the Gaussian is not C0(x^2)");
          OscillatorySpec os;
          os.zero_spacing_hint = kPi / 2.0;
          return 2.0 * converged_value(
                           integrate_oscillatory([](double x) { return bessel_j(0.0, 2.0 * x); },
                                                 os, 1e-10),
                           "J0(2x) half-line");
        }
        const auto r =
            proposition1_inverse_pointwise(inverse_borel_gaussian(al), al, kSqrtPi, 1e-8);
        if (!r.converged) throw ConvergenceError("inverse integrand not negligible at the cut");
        return r.lhs;
      },
      .rhs = [](const Args& a, const Context&) {
        const double al = a.at("alpha");
        return a.variant == "forward" ? kSqrtPi * gamma_fn(1.0 - al)
                                      : kSqrtPi * reciprocal_gamma(1.0 - al);
      },
      .samples = {sample("forward", {{"alpha", 0.25}}), sample("forward", {{"alpha", 0.5}}),
                  sample("inverse", {{"alpha", 0.25}}), sample("inverse", {{"alpha", 0.5}})},
      .tolerance = 1e-5,
      .notes = "The inverse statement is sampled only at alpha in {1/4, 1/2}.",
  });

  reg.add({
      .id = "beta-prop",
      .description = "real-line integral of the beta-kernel transform of e^{-x^2}, and its 2F2 "
                     "closed form",
      .reference = "real-line integral of the beta-kernel Borel-Leroy transform against a beta function",
      .lhs = [](const Args& a, const Context& ctx) {
        if (a.variant == "integral") {
          const auto r = proposition1_check(gaussian, TransformSpec::beta_form(3.0, 2.0, 1.0, 0.0),
                                            kSqrtPi, 1e-8);
          if (!r.converged) throw ConvergenceError("nested quadrature did not converge");
          return r.lhs;
        }
        const double x = a.at("x");
        return beta_fn(3.0, 2.0) * sum_real(hyp_2f2(1.5, 2.0, 2.5, 3.0, ctx.order), -x * x);
      },
      .rhs = [](const Args& a, const Context&) {
        if (a.variant == "integral") return kSqrtPi * beta_fn(2.0, 2.0);
        return borel_integral_form(gaussian, TransformSpec::beta_form(3.0, 2.0, 1.0, 0.0),
                                   a.at("x"));
      },
      .samples = {sample("integral"), sample("2f2-pointwise", {{"x", 0.5}}),
                  sample("2f2-pointwise", {{"x", 1.0}}), sample("2f2-pointwise", {{"x", 2.0}})},
      .tolerance = 1e-5,
  });

  std::vector<Args> ll;
  for (const char* f : {"one", "u", "j0sqrt"})
    for (double x : {0.5, 1.0, 2.0}) ll.push_back(sample(f, {{"x", x}}));
  reg.add({
      .id = "laplace-link",
      .description = "Borel transform equals x^{-1} times the Laplace transform at 1/x",
      .reference = "Borel-Laplace link by a change of variable",
      .lhs = [](const Args& a, const Context&) {
        return laplace_link_check(link_integrand(a.variant), a.at("x")).first;
      },
      .rhs = [](const Args& a, const Context&) {
        return laplace_link_check(link_integrand(a.variant), a.at("x")).second;
      },
      .samples = std::move(ll),
      .tolerance = 1e-8,
  });

  std::vector<Args> ml;
  for (double x : {0.0, 0.5, 1.0, 1.5, 2.0}) {
    ml.push_back(sample("operator", {{"x", x}}));
    ml.push_back(sample("gauss-laguerre", {{"x", x}}));
  }
  ml.push_back(sample("mellin", {{"s", 0.5}}));
  reg.add({
      .id = "mellin-link-j0sqrt",
      .description = "Borel transform of J0(2 sqrt t) is e^{-x}; its Mellin transform at 1/2 is 1",
      .reference = "Mellin and Borel transforms of J0(2 sqrt t)",
      .lhs = [](const Args& a, const Context& ctx) {
        if (a.variant == "mellin")
          return converged_value(mellin_numeric(c0, a.at("s"), {0.0, 0.75},
                                                OscillatorySpec{kPi}, 1e-11),
                                 "Mellin of C0");
        const double x = a.at("x");
        if (a.variant == "operator")
          return sum_real(borel_apply(tricomi(0, ctx.order), TransformSpec::borel(1.0)), x);
        return borel_integral_form(c0, TransformSpec::borel(1.0), x);
      },
      .rhs = [](const Args& a, const Context&) {
        // Gamma(s) / Gamma(1 - s) at s = 1/2.
        if (a.variant == "mellin") return gamma_fn(a.at("s")) * reciprocal_gamma(1.0 - a.at("s"));
        return std::exp(-a.at("x"));
      },
      .samples = std::move(ml),
      .tolerance = 1e-8,
  });
}

}  // namespace

void register_transform_checks(Registry& reg) {
  register_exact_maps(reg);
  register_integral_relations(reg);
}

}  // namespace umbra
