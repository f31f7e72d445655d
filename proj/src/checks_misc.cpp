// Closed-form and Hermite-definition checks that need no quadrature.

#include <cmath>

#include "checks_common.hpp"
#include "umbra/gamma.hpp"
#include "umbra/special.hpp"
#include "umbra/umbral.hpp"

namespace umbra {

using namespace checks;

namespace {

// Cs_{1/2,2p} at x = 2 and p = 4 still carries terms near 1e-10 past
// x^{100}, so these series are generated at twice the default order.
constexpr int kCsOrder = 128;

void register_cs_sn(Registry& reg) {
  std::vector<Args> s;
  for (int p = 0; p <= 4; ++p)
    for (double x : {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0})
      s.push_back(sample("cs", {{"p", p}, {"x", x}}));
  for (double x : {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0})
    s.push_back(sample("sn", {{"p", 0}, {"x", x}}));
  reg.add({
      .id = "cs-sn-closed",
      .description = "Cs_{1/2,2p}(x) = (-1)^p H_{2p}(2x, -1) e^{-x^2}; Sn_{1/2,0}(x) = e^{-x^2} "
                     "erfi(x)",
      .reference = "closed forms of the half-order cosine and sine families from gamma "
                   "function properties",
      .lhs = [](const Args& a, const Context& ctx) {
        const int p = static_cast<int>(a.at("p"));
        const auto kind = a.variant == "cs" ? CsSnKind::Cs : CsSnKind::Sn;
        return sum_real(cs_sn_family(kind, p, std::max(ctx.order, kCsOrder)), a.at("x"));
      },
      .rhs = [](const Args& a, const Context&) {
        const double x = a.at("x");
        if (a.variant == "sn") return std::exp(-x * x) * erfi(x);
        return cs_closed_form(static_cast<int>(a.at("p")), x);
      },
      .samples = std::move(s),
      .tolerance = 1e-10,
      .notes = "The closed form carries the factor (-1)^p; without it odd p fails.",
  });
}

void register_hermite_definitions(Registry& reg) {
  std::vector<Args> def;
  for (double y : {-1.0, 0.5, 2.0})
    for (int n = 0; n <= 10; ++n)
      for (int k = 0; k <= n; ++k) def.push_back(sample("", {{"y", y}, {"n", n}, {"k", k}}));
  reg.add({
      .id = "hermite-umbral-def",
      .description = "(x + c)^n under the Hermite functional reproduces H_n(x, y)",
      .reference = "umbral definition of two-variable Hermite polynomials",
      .lhs = [](const Args& a, const Context&) {
        const int n = static_cast<int>(a.at("n"));
        return umbral_eval(umbral_binomial(true, n), hermite_functional(a.at("y")), n)
            .coeff(static_cast<int>(a.at("k")))
            .real();
      },
      .rhs = [](const Args& a, const Context&) {
        return hermite2(static_cast<int>(a.at("n")), a.at("y"))
            .coeff(static_cast<int>(a.at("k")))
            .real();
      },
      .samples = std::move(def),
      .tolerance = 1e-15,
      .compare = Compare::relative,
  });

  std::vector<Args> op;
  for (double y : {-1.0, 0.5, 2.0})
    for (int n = 0; n <= 8; ++n)
      for (int k = 0; k <= n; ++k) op.push_back(sample("", {{"y", y}, {"n", n}, {"k", k}}));
  reg.add({
      .id = "hermite-operational",
      .description = "H_n(x, y) = e^{y d^2/dx^2} x^n as the finite sum of y^k/k! d^{2k} x^n",
      .reference = "operational heat-kernel identity for two-variable Hermite polynomials",
      .lhs = [](const Args& a, const Context&) {
        const int n = static_cast<int>(a.at("n"));
        const double y = a.at("y");
        const int j = static_cast<int>(a.at("k"));
        // Differentiation lowers the order, so coefficients are read before summing.
        TruncatedSeries d = monomial(n, n);
        double acc = 0.0;
        for (int k = 0; 2 * k <= n; ++k) {
          acc += std::pow(y, k) * inv_factorial(k) * d.coeff(j).real();
          if (d.order() >= 2) d = differentiate(differentiate(d));
        }
        return acc;
      },
      .rhs = [](const Args& a, const Context&) {
        return hermite2(static_cast<int>(a.at("n")), a.at("y"))
            .coeff(static_cast<int>(a.at("k")))
            .real();
      },
      .samples = std::move(op),
      .tolerance = 1e-15,
      .compare = Compare::relative,
  });
}

}  // namespace

void register_misc_checks(Registry& reg) {
  register_cs_sn(reg);
  register_hermite_definitions(reg);
}

}  // namespace umbra
