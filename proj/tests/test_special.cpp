#include <doctest.h>

#include <cmath>

#include "frozen_values.hpp"
#include "properties.hpp"
#include "umbra/error.hpp"
#include "umbra/gamma.hpp"
#include "umbra/special.hpp"

using namespace umbra;

TEST_SUITE("special") {

TEST_CASE("Hermite and Laguerre point values") {
  CHECK(hermite2_value(5, 0.9, -0.5) == doctest::Approx(frozen::kHermite5).epsilon(1e-14));
  CHECK(evaluate(hermite2(2, 1.0), 1.0).value.real() == 3.0);
  // L_n(x, 1) is the classical Laguerre polynomial; L_n(0, y) = y^n.
  CHECK(laguerre2_value(3, 0.5, 1.0) == doctest::Approx(frozen::kLaguerre3At0p5).epsilon(1e-15));
  CHECK(laguerre2_value(3, 0.0, 0.5) == 0.125);
}

TEST_CASE("Laguerre homogeneity L_n(x, y) = y^n L_n(x/y, 1)") {
  for (int n = 0; n <= 10; ++n)
    for (double y : {-1.5, 0.5, 2.0})
      for (double x : {-1.0, 0.3, 2.5}) {
        const double lhs = laguerre2_value(n, x, y);
        const double rhs = std::pow(y, n) * laguerre2_value(n, x / y, 1.0);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
      }
}

TEST_CASE("Tricomi and Bessel values") {
  CHECK(evaluate(tricomi(1), 1.0).value.real() == doctest::Approx(frozen::kJ1At2).epsilon(1e-15));
  CHECK(evaluate(tricomi(2), 0.9).value.real() ==
        doctest::Approx(frozen::kTricomi2At0p9).epsilon(1e-14));
  CHECK(bessel_family(BesselKind::J, 0, 2.0).value ==
        doctest::Approx(frozen::kJ0At2).epsilon(1e-14));
  CHECK(bessel_family(BesselKind::J, 1, 1.0).value ==
        doctest::Approx(frozen::kJ1At1).epsilon(1e-14));
  CHECK(bessel_family(BesselKind::I0, 0, 1.5).value ==
        doctest::Approx(frozen::kI0At1p5).epsilon(1e-14));
  CHECK(bessel_family(BesselKind::R, 1, 2.0).value ==
        doctest::Approx(frozen::kJ1At2).epsilon(1e-14));
}

TEST_CASE("J_n(x) = (x/2)^n C_n(x^2/4) on [0, 5]") {
  for (int n = 0; n <= 5; ++n)
    for (int i = 0; i <= 50; ++i) {
      const double x = 0.1 * i;
      const double v = std::pow(x / 2, n) * evaluate(tricomi(n), x * x / 4).value.real();
      CHECK(std::abs(v - std::cyl_bessel_j(static_cast<double>(n), x)) <= 1e-12);
    }
}

TEST_CASE("Tricomi derivative chain") {
  CHECK(props::tricomi_chain_deviation() <= 1e-13);
  for (int s = 0; s <= 6; ++s) {
    const auto d = differentiate(tricomi(s));
    CHECK(props::max_coeff_rel_diff(d, -1.0 * tricomi(s + 1, d.order())) <= 1e-13);
  }
}

TEST_CASE("Hermite derivative rules") {
  CHECK(props::hermite_rule_deviation() <= 1e-14);
  // x-rule: d/dx H_n = n H_{n-1}
  const auto d = differentiate(hermite2(6, 0.7));
  CHECK(props::max_coeff_rel_diff(d, 6.0 * hermite2(5, 0.7)) <= 1e-15);
}

TEST_CASE("half-order cosine family matches its closed form") {
  CHECK(props::cs_closed_form_deviation() <= 1e-10);
  CHECK(cs_closed_form(2, 0.7) == doctest::Approx(frozen::kCsP2At0p7).epsilon(1e-14));
  const auto sn = cs_sn_family(CsSnKind::Sn, 0);
  CHECK(evaluate(sn, 0.8).value.real() ==
        doctest::Approx(std::exp(-0.64) * frozen::kErfi0p8).epsilon(1e-13));
  CHECK(erfi(0.8) == doctest::Approx(frozen::kErfi0p8).epsilon(1e-15));
}

TEST_CASE("other families at frozen points") {
  CHECK(evaluate(epsilon_half(), 0.6).value.real() ==
        doctest::Approx(frozen::kEpsilonHalf0p6).epsilon(1e-13));
  CHECK(evaluate(mittag_leffler_1_beta(1.0), 0.5).value.real() ==
        doctest::Approx(frozen::kMittagLeffler12At0p5).epsilon(1e-15));
  CHECK(evaluate(hyp_2f2(1.5, 2.0, 2.5, 3.0), -0.25).value.real() ==
        doctest::Approx(frozen::kHyp2F2).epsilon(1e-15));
  CHECK(evaluate(bessel_wright(0.5, 1.5), 0.7).value.real() ==
        doctest::Approx(frozen::kBesselWright).epsilon(1e-14));
  CHECK(evaluate(e_alpha_gamma(0.5, 2.0), 0.3).value.real() ==
        doctest::Approx(frozen::kEAlphaGamma).epsilon(1e-14));
  CHECK(gaussian_hermite_derivative(3, 0.5, 1.0, 0.3) ==
        doctest::Approx(frozen::kGaussThirdDeriv).epsilon(1e-14));
  CHECK_THROWS_AS(hyp_2f2(1.0, 1.0, -2.0, 1.0), DomainError);
}

TEST_CASE("e_alpha_gamma warns past alpha = 2") {
  CHECK_FALSE(e_alpha_gamma_warning(2.0).has_value());
  CHECK(e_alpha_gamma_warning(2.5).has_value());
}

TEST_CASE("family names round trip") {
  for (const auto& name : poly_family_names())
    CHECK(to_string(poly_family_from_string(name)) == name);
  CHECK_THROWS_AS(poly_family_from_string("nope"), DomainError);
  FamilyParams p;
  p.n = 2;
  p.y = 1.0;
  CHECK(special_eval(PolyFamilyId::Hermite2, p, 1.0).value == 3.0);
}

}  // TEST_SUITE
