#include <doctest.h>

#include <cmath>
#include <limits>

#include "frozen_values.hpp"
#include "properties.hpp"
#include "umbra/error.hpp"
#include "umbra/gamma.hpp"
#include "umbra/io.hpp"
#include "umbra/special.hpp"
#include "umbra/transforms.hpp"
#include "umbra/umbral.hpp"

using namespace umbra;

namespace {

double c0(double x) {
  return x == 0.0 ? 1.0 : std::cyl_bessel_j(0.0, 2.0 * std::sqrt(x));
}

TruncatedSeries gaussian_series(int order) {
  std::vector<double> g(static_cast<std::size_t>(order) + 1, 0.0);
  for (int m = 0; 2 * m <= order; ++m) g[2 * m] = (m % 2 ? -1.0 : 1.0) * inv_factorial(m);
  return TruncatedSeries::from_real(g);
}

}  // namespace

TEST_SUITE("transforms") {

TEST_CASE("coefficient factors") {
  CHECK(coefficient_factor(TransformSpec::borel(1.0), 5) == doctest::Approx(120.0));
  CHECK(coefficient_factor(TransformSpec::borel(0.5), 1) == doctest::Approx(kSqrtPi / 2));
  CHECK(coefficient_factor(TransformSpec::borel_leroy(1.0, 2.0), 3) == doctest::Approx(24.0));
  CHECK(coefficient_factor(TransformSpec::beta_form(3.0, 2.0, 1.0, 0.0), 1) ==
        doctest::Approx(beta_fn(4.0, 2.0)));
  CHECK_THROWS_AS(coefficient_factor(TransformSpec::borel_leroy(1.0, -1.0), 1), DomainError);
  CHECK_THROWS_AS(TransformSpec::borel(-1.0).validate(), DomainError);
  CHECK_THROWS_AS(TransformSpec::beta_form(0.0, 1.0, 1.0, 1.0).validate(), DomainError);
}

TEST_CASE("forward then inverse reproduces the series") {
  CHECK(props::borel_round_trip_deviation(3) <= 4 * std::numeric_limits<double>::epsilon());
}

TEST_CASE("index additivity counterexample: 2 * 2 != 24") {
  const auto once = TransformSpec::borel(1.0);
  const auto s = monomial(4, 2);
  const auto twice = borel_apply(borel_apply(s, once), once);
  const auto doubled = borel_apply(s, TransformSpec::borel(2.0));
  CHECK(twice[2].real() == 4.0);
  CHECK(doubled[2].real() == doctest::Approx(24.0));
}

TEST_CASE("Borel transform of C0 is e^{-x}, by operator and by Gauss-Laguerre") {
  const auto op = borel_apply(tricomi(0), TransformSpec::borel(1.0));
  CHECK(props::max_coeff_rel_diff(op, exp_series(kDefaultOrder, -1.0)) <= 1e-13);
  double sup = 0.0;
  for (int i = 0; i <= 40; ++i) {
    const double x = 0.05 * i;
    const double gl = borel_integral_form(c0, TransformSpec::borel(1.0), x);
    sup = std::max(sup, std::abs(gl - std::exp(-x)));
    sup = std::max(sup, std::abs(evaluate(op, x).value.real() - std::exp(-x)));
  }
  CHECK(sup <= 1e-8);
}

TEST_CASE("operator and integral forms agree for the Gaussian") {
  // At order 64 the operator series for e^{-x^2} is accurate only up to x_max:
  // it has radius 1 at alpha = 1/2 and zero radius at alpha = 1.
  const std::pair<double, double> ranges[] = {{1.0 / 3.0, 1.2}, {0.5, 0.7}, {1.0, 0.1}};
  for (const auto& [al, x_max] : ranges)
    for (double ga : {1.0, 2.0}) {
      const auto spec = TransformSpec::borel_leroy(al, ga);
      const auto op = borel_apply(gaussian_series(kDefaultOrder), spec);
      IntegralFormOptions o;
      o.adaptive = true;
      double sup = 0.0;
      for (int i = 0; 0.05 * i <= x_max + 1e-12; ++i) {
        const double x = 0.05 * i;
        const double lhs = evaluate(op, x, EvalPolicy::full).value.real();
        const double rhs =
            borel_integral_form([](double t) { return std::exp(-t * t); }, spec, x, o);
        sup = std::max(sup, std::abs(lhs - rhs));
      }
      CHECK_MESSAGE(sup <= 1e-8, "alpha=" << al << " gamma=" << ga);
    }
}

TEST_CASE("pointwise transform of the geometric coefficients") {
  // Inverse Borel of 1/(1+x) is e^{-x}.
  const auto v = transform_pointwise([](int k) { return k % 2 ? -1.0 : 1.0; },
                                     TransformSpec::borel(1.0, true), 3.0);
  CHECK(v.converged);
  CHECK(static_cast<double>(v.value) == doctest::Approx(std::exp(-3.0)).epsilon(1e-12));
  // 1/k! coefficients past k = 170 need the log form.
  const auto w = transform_pointwise_log(
      [](int k) { return LogCoeff{k % 2 ? -1 : 1, -std::lgamma(k + 1.0L)}; },
      TransformSpec::borel(1.0), 0.9);
  CHECK(static_cast<double>(w.value) == doctest::Approx(1.0 / 1.9).epsilon(1e-12));
}

TEST_CASE("real-line integral of the order-1/2 transform of the Gaussian is pi") {
  const auto r = proposition1_check([](double x) { return std::exp(-x * x); },
                                    TransformSpec::borel(0.5), kSqrtPi, 1e-8);
  CHECK(r.converged);
  CHECK(std::abs(r.lhs - kPi) <= 1e-5);
  CHECK(r.rhs == doctest::Approx(kPi));
}

TEST_CASE("inverse Gaussian image at alpha = 1/2 is J0(2x)") {
  const auto g = inverse_borel_gaussian(0.5);
  for (double x : {0.0, 0.5, 1.0, 3.0, 7.5})
    CHECK(std::abs(g(x) - std::cyl_bessel_j(0.0, 2.0 * x)) <= 1e-13);
  const auto q = proposition1_inverse_pointwise(inverse_borel_gaussian(0.25), 0.25, kSqrtPi, 1e-8);
  CHECK(q.converged);
  CHECK(std::abs(q.lhs - frozen::kProp1InverseQuarter) <= 1e-5);
}

TEST_CASE("Mellin transform of J0") {
  OscillatorySpec os;
  os.zero_spacing_hint = kPi;
  const auto h = mellin_numeric([](double x) { return std::cyl_bessel_j(0.0, x); }, 0.5,
                                {0.0, 1.5}, os, 1e-10);
  CHECK(std::abs(h.value - frozen::kMellinJ0Half) <= 1e-5);
  const auto t = mellin_numeric([](double x) { return std::cyl_bessel_j(0.0, x); }, 0.75,
                                {0.0, 1.5}, os, 1e-10);
  CHECK(std::abs(t.value - frozen::kMellinJ0ThreeQuarter) <= 1e-5);
  CHECK_THROWS_AS(mellin_numeric([](double) { return 1.0; }, 2.0, {0.0, 1.5}), DomainError);
}

TEST_CASE("Borel value is x^{-1} Laplace at 1/x") {
  for (double x : {0.5, 1.0, 2.0}) {
    const auto [b, l] = laplace_link_check(c0, x);
    CHECK(std::abs(b - l) <= 1e-8);
    CHECK(std::abs(b - std::exp(-x)) <= 1e-8);
  }
}

TEST_CASE("JSON round trips") {
  std::mt19937 rng(41);
  const auto s = props::random_series(rng, 12);
  const auto back = series_from_json(series_to_json(s));
  REQUIRE(back.order() == s.order());
  for (int k = 0; k <= s.order(); ++k) CHECK(back[k] == s[k]);
  CHECK_THROWS_AS(series_from_json(nlohmann::json{{"order", 3}, {"coeffs", {{1.0, 0.0}}}}),
                  DomainError);

  const auto spec = TransformSpec::beta_form(3.0, 2.0, 1.0, 0.5, true);
  const auto sb = transform_spec_from_json(transform_spec_to_json(spec));
  CHECK(sb.family == spec.family);
  CHECK(sb.beta == spec.beta);
  CHECK(sb.delta == spec.delta);
  CHECK(sb.inverse);
  CHECK_FALSE(transform_spec_to_json(TransformSpec::borel(1.0)).contains("beta"));

  const auto u = umbral_exp_gaussian(0.25, 10);
  const auto ub = umbral_from_json(umbral_to_json(u));
  REQUIRE(ub.terms().size() == u.terms().size());
  for (std::size_t i = 0; i < u.terms().size(); ++i) {
    CHECK(ub.terms()[i].coeff == u.terms()[i].coeff);
    CHECK(ub.terms()[i].c_exp == u.terms()[i].c_exp);
    CHECK(ub.terms()[i].x_exp == u.terms()[i].x_exp);
  }
}

}  // TEST_SUITE
