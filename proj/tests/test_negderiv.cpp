#include <doctest.h>

#include <cmath>

#include "checks_common.hpp"
#include "frozen_values.hpp"
#include "umbra/error.hpp"
#include "umbra/gamma.hpp"
#include "umbra/negderiv.hpp"
#include "umbra/special.hpp"

using namespace umbra;

TEST_SUITE("negderiv") {

TEST_CASE("J0 partial sums reach the integral by 30 terms") {
  const auto r = negderiv_integral(j0_provider(), 1.0, 30);
  CHECK(std::abs(r.value - frozen::kIntJ0To1) <= 1e-10);
  const auto& ps = r.partial_sums;
  REQUIRE(ps.size() == 30);
  CHECK(std::abs(ps[29] - ps[28]) <= 1e-12);
  CHECK(r.converged);
  const auto h = negderiv_integral(j0_provider(), 0.5, 30);
  CHECK(std::abs(h.value - frozen::kIntJ0ToHalf) <= 1e-12);
}

TEST_CASE("polynomial integrands are exact at degree + 1 terms and stay put") {
  const std::vector<double> c{1.0, 2.0, 0.0, -1.0};
  const auto p = series_provider(TruncatedSeries::from_real(c));
  const double want = 0.7 + 0.49 - std::pow(0.7, 4) / 4.0;
  const auto r = negderiv_integral(p, 0.7, 4);
  CHECK(r.value == doctest::Approx(want).epsilon(1e-15));
  CHECK(r.converged);
  CHECK_THROWS_AS(negderiv_integral(p, 0.7, 9), DomainError);
  // Padding with zero coefficients lets further terms run; they add nothing.
  std::vector<double> padded = c;
  padded.resize(11, 0.0);
  const auto q = series_provider(TruncatedSeries::from_real(padded));
  for (int terms = 4; terms <= 11; ++terms)
    CHECK(negderiv_integral(q, 0.7, terms).value == r.value);
}

TEST_CASE("Hermite finite sums equal the direct antiderivatives") {
  for (int n = 0; n <= 6; ++n)
    for (double y : {-1.0, 0.5, 2.0}) {
      const double x = 0.8;
      const double ax = evaluate(antidifferentiate(hermite2(n, y)), x).value.real();
      CHECK(hermite_integral_series(HermiteIntegral::x_plain, n, x, y) ==
            doctest::Approx(ax).epsilon(1e-14));
      // int_0^y H_n(x, t) dt = n! sum y^{r+1}/(r+1) x^{n-2r} / ((n-2r)! r!)
      double ay = 0.0;
      for (int r = 0; 2 * r <= n; ++r)
        ay += factorial(n) * std::pow(y, r + 1) / (r + 1) * std::pow(x, n - 2 * r) /
              (factorial(n - 2 * r) * factorial(r));
      CHECK(hermite_integral_series(HermiteIntegral::y_plain, n, x, y) ==
            doctest::Approx(ay).epsilon(1e-14));
    }
  CHECK(hermite_integral_series(HermiteIntegral::x_cos, 2, 1.0, 1.0) ==
        doctest::Approx(frozen::kIntH2Cos).epsilon(1e-13));
}

TEST_CASE("cosine-weighted sum needs the exact iterated primitive") {
  // Weights cos(x + s pi/2)/(s+1)! in place of the iterated primitives give
  // cos x for a constant integrand, while int_0^x cos t dt = sin x.
  const auto displayed = [](int n, double x, double y) {
    double acc = 0.0;
    for (int s = 0; s <= n; ++s)
      acc += (s % 2 ? -1.0 : 1.0) * std::cos(x + s * kPi / 2) / factorial(s + 1) *
             factorial(n) / factorial(n - s) * hermite2_value(n - s, x, y);
    return acc;
  };
  const double x = 0.9;
  CHECK(displayed(0, x, 1.0) == doctest::Approx(std::cos(x)));
  CHECK(std::abs(displayed(0, x, 1.0) - std::sin(x)) > 0.1);
  CHECK(std::abs(displayed(2, 1.0, 1.0) - frozen::kIntH2Cos) > 1e-3);
  CHECK(iterated_cos_primitive(1, x) == doctest::Approx(std::sin(x)).epsilon(1e-15));
  CHECK(iterated_cos_primitive(2, x) == doctest::Approx(1.0 - std::cos(x)).epsilon(1e-14));
  CHECK(negderiv_cos_integral(constant_provider(1.0), x, 1).value ==
        doctest::Approx(std::sin(x)).epsilon(1e-15));
}

TEST_CASE("Gaussian integral series") {
  const auto r = gaussian_integral_series(0.3, 0.5, 0.8, 40);
  CHECK(std::abs(r.value - frozen::kIntGauss) <= 1e-9);
  CHECK(r.converged);
  const auto e = gaussian_integral_series(-1.0, 0.0, 1.0, 40);
  CHECK(std::abs(e.value - frozen::kHalfSqrtPiErf1) <= 1e-12);
}

TEST_CASE("J0 n-th derivative formula") {
  CHECK(bessel_nth_derivative(1, 2.0) == doctest::Approx(-frozen::kJ1At2).epsilon(1e-14));
  CHECK(bessel_nth_derivative(3, 1.2) == doctest::Approx(frozen::kJ0ThirdDerivAt1p2).epsilon(1e-13));
  CHECK_THROWS_AS(bessel_nth_derivative(2, 0.0), DomainError);
  const RealFn j0 = [](double t) { return std::cyl_bessel_j(0.0, t); };
  for (int n = 0; n <= 3; ++n)
    for (double x : {0.5, 1.0, 1.7})
      CHECK(std::abs(bessel_nth_derivative(n, x) - checks::richardson_derivative(j0, n, x)) <=
            1e-7);
}

TEST_CASE("J0 derivative formula agrees with differentiating the series") {
  TruncatedSeries s = bessel_j_series(0, kDefaultOrder);
  for (int n = 0; n <= 5; ++n) {
    if (n > 0) s = differentiate(s);
    for (double x : {0.5, 1.0, 1.5, 2.0})
      CHECK(std::abs(bessel_nth_derivative(n, x) - evaluate(s, x).value.real()) <= 1e-9);
  }
}

TEST_CASE("J0 integral through the derivative formula") {
  const auto r = bessel_integral_series(1.0, 30);
  CHECK(std::abs(r.value - frozen::kIntJ0To1) <= 1e-10);
  CHECK_THROWS_AS(bessel_integral_series(0.0, 10), DomainError);
}

}  // TEST_SUITE
