#include "umbra/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "umbra/error.hpp"
#include "umbra/gamma.hpp"

namespace umbra {

namespace {

void require_nonnegative(int n, const char* what) {
  if (n < 0) throw DomainError(std::string(what) + " must be non-negative");
}

std::vector<Scalar> zeros(int order) {
  require_nonnegative(order, "truncation order");
  return std::vector<Scalar>(static_cast<std::size_t>(order) + 1);
}

// Gamma(a)/Gamma(b) without intermediate overflow.
double gamma_ratio(double a, double b) {
  const double ga = std::tgamma(a), gb = std::tgamma(b);
  if (std::isfinite(ga) && std::isfinite(gb) && gb != 0.0) return ga / gb;
  int sa = 1, sb = 1;
  const double la = ::lgamma_r(a, &sa), lb = ::lgamma_r(b, &sb);
  return sa * sb * std::exp(la - lb);
}

}  // namespace

TruncatedSeries hermite2(int n, double y) {
  require_nonnegative(n, "Hermite degree");
  auto c = zeros(n);
  const double nf = factorial(n);
  double yr = 1.0;
  for (int r = 0; 2 * r <= n; ++r) {
    c[n - 2 * r] = nf * yr / (factorial(n - 2 * r) * factorial(r));
    yr *= y;
  }
  return TruncatedSeries(std::move(c));
}

double hermite2_value(int n, double x, double y) {
  require_nonnegative(n, "Hermite degree");
  const double nf = factorial(n);
  double s = 0.0, yr = 1.0;
  for (int r = 0; 2 * r <= n; ++r) {
    s += nf * yr * std::pow(x, n - 2 * r) / (factorial(n - 2 * r) * factorial(r));
    yr *= y;
  }
  return s;
}

TruncatedSeries hermite2_derivative_rules(int n, int s, HermiteSlot wrt, double y) {
  require_nonnegative(n, "Hermite degree");
  require_nonnegative(s, "derivative order");
  const int drop = wrt == HermiteSlot::x ? s : 2 * s;
  if (drop > n) return TruncatedSeries::zero(n);
  const auto h = hermite2(n - drop, y);
  const double k = factorial(n) / factorial(n - drop);
  auto c = zeros(n);
  for (int j = 0; j <= h.order(); ++j) c[j] = k * h[j];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries laguerre2(int n, double y) {
  require_nonnegative(n, "Laguerre degree");
  auto c = zeros(n);
  for (int r = 0; r <= n; ++r)
    c[r] = binomial(n, r) * (r % 2 ? -1.0 : 1.0) * std::pow(y, n - r) / factorial(r);
  return TruncatedSeries(std::move(c));
}

double laguerre2_value(int n, double x, double y) {
  return evaluate(laguerre2(n, y), x).value.real();
}

TruncatedSeries tricomi(int s, int order) {
  require_nonnegative(s, "Tricomi order");
  auto c = zeros(order);
  for (int r = 0; r <= order; ++r)
    c[r] = (r % 2 ? -1.0 : 1.0) / (factorial(r) * factorial(r + s));
  return TruncatedSeries(std::move(c));
}

TruncatedSeries bessel_j_series(int n, int order) {
  require_nonnegative(n, "Bessel order");
  auto c = zeros(order);
  for (int r = 0; n + 2 * r <= order; ++r)
    c[n + 2 * r] = (r % 2 ? -1.0 : 1.0) /
                   (factorial(r) * factorial(n + r) * std::ldexp(1.0, n + 2 * r));
  return TruncatedSeries(std::move(c));
}

PointValue bessel_family(BesselKind kind, int n, double x, int order) {
  require_nonnegative(n, "Bessel order");
  if (kind == BesselKind::I0 && n != 0) throw DomainError("only I_0 is provided");
  require_nonnegative(order, "truncation order");
  // All three are C_n(z) for a suitable z, up to a power prefactor.
  const double z = kind == BesselKind::I0 ? -x * x / 4.0 : x * x / 4.0;
  double sum = 0.0, term = 1.0 / factorial(n), max_term = 0.0, last = 0.0;
  for (int r = 0; r <= order; ++r) {
    sum += term;
    max_term = std::max(max_term, std::abs(term));
    last = std::abs(term);
    term *= -z / ((r + 1.0) * (r + 1.0 + n));
  }
  const double eps = std::numeric_limits<double>::epsilon();
  if (last > eps * max_term && last > 1e-300)
    throw ConvergenceError("Bessel series tail " + std::to_string(last) + " at x = " +
                           std::to_string(x) + " not converged at order " +
                           std::to_string(order) + "; raise the order");
  if (max_term * eps > 1e-12)
    throw ConvergenceError("Bessel series loses precision to cancellation at x = " +
                           std::to_string(x) + "; argument too large for series evaluation");
  double pre = 1.0;
  if (kind == BesselKind::J) pre = std::pow(x / 2.0, n);
  return {pre * sum, pre * last};
}

TruncatedSeries bessel_truncated(int n, double y) {
  require_nonnegative(n, "degree");
  auto c = zeros(n);
  const double nf = factorial(n);
  for (int r = 0; r <= n; ++r) {
    const double fr = factorial(r);
    c[r] = nf * (r % 2 ? -1.0 : 1.0) * std::pow(y, n - r) / (fr * fr);
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries mittag_leffler_1_beta(double beta, int order) {
  if (!(beta >= 0.0)) throw DomainError("Mittag-Leffler parameter needs beta >= 0");
  auto c = zeros(order);
  for (int k = 0; k <= order; ++k) c[k] = reciprocal_gamma(k + beta + 1.0);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries bessel_wright(double gamma, double alpha, int order) {
  if (!(alpha > 0.0)) throw DomainError("Bessel-Wright needs alpha > 0");
  if (!(gamma > -1.0)) throw DomainError("Bessel-Wright needs gamma > -1");
  auto c = zeros(order);
  for (int r = 0; r <= order; ++r)
    c[r] = (r % 2 ? -1.0 : 1.0) * reciprocal_gamma(alpha * r + gamma + 1.0) / factorial(r);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries e_alpha_gamma(double alpha, double gamma, int order) {
  if (!(alpha > 0.0)) throw DomainError("e_alpha_gamma needs alpha > 0");
  if (!(gamma > -1.0)) throw DomainError("e_alpha_gamma needs gamma > -1");
  auto c = zeros(order);
  for (int r = 0; r <= order; ++r)
    c[r] = gamma_ratio(gamma + alpha * r + 1.0, gamma + r + 1.0) / factorial(r);
  return TruncatedSeries(std::move(c));
}

std::optional<std::string> e_alpha_gamma_warning(double alpha) {
  if (alpha <= 2.0) return std::nullopt;
  return "e_alpha_gamma: alpha = " + std::to_string(alpha) +
         " > 2, the series has zero radius of convergence";
}

TruncatedSeries cs_sn_family(CsSnKind kind, int p, int order) {
  require_nonnegative(p, "index p");
  auto c = zeros(order);
  const double four_p = std::ldexp(1.0, 2 * p);
  for (int r = 0;; ++r) {
    const int k = kind == CsSnKind::Cs ? 2 * r : 2 * r + 1;
    if (k > order) break;
    const double sign = r % 2 ? -1.0 : 1.0;
    if (kind == CsSnKind::Cs)
      c[k] = four_p * sign * std::ldexp(1.0, 2 * r) * gamma_fn(r + p + 0.5) /
             (kSqrtPi * factorial(2 * r));
    else
      c[k] = four_p * sign * std::ldexp(1.0, 2 * r + 1) * factorial(r + p) /
             (kSqrtPi * factorial(2 * r + 1));
  }
  return TruncatedSeries(std::move(c));
}

double cs_closed_form(int p, double x) {
  require_nonnegative(p, "index p");
  return (p % 2 ? -1.0 : 1.0) * hermite2_value(2 * p, 2.0 * x, -1.0) * std::exp(-x * x);
}

TruncatedSeries epsilon_half(int order) {
  auto c = zeros(order);
  for (int r = 0; r <= order; ++r) c[r] = (r % 2 ? -1.0 : 1.0) * reciprocal_gamma(r / 2.0 + 1.0);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries hyp_2f2(double a1, double a2, double b1, double b2, int order) {
  if (is_nonpositive_integer(b1) || is_nonpositive_integer(b2))
    throw DomainError("2F2 denominator parameter is a non-positive integer");
  auto c = zeros(order);
  double t = 1.0;
  for (int k = 0; k <= order; ++k) {
    c[k] = t;
    t *= (a1 + k) * (a2 + k) / ((b1 + k) * (b2 + k) * (k + 1.0));
  }
  return TruncatedSeries(std::move(c));
}

double gaussian_hermite_derivative(int s, double a, double b, double x) {
  require_nonnegative(s, "derivative order");
  return hermite2_value(s, 2.0 * a * x + b, a) * std::exp(a * x * x + b * x);
}

double erfi(double x) {
  const double x2 = x * x;
  double p = x, sum = 0.0;
  for (int r = 0; r < 400; ++r) {
    const double term = p / (2 * r + 1);
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
    p *= x2 / (r + 1);
  }
  return 2.0 / kSqrtPi * sum;
}

namespace {

struct FamilyName {
  PolyFamilyId id;
  const char* name;
};

constexpr FamilyName kFamilies[] = {
    {PolyFamilyId::Hermite2, "hermite2"},
    {PolyFamilyId::Laguerre2, "laguerre2"},
    {PolyFamilyId::Tricomi, "tricomi"},
    {PolyFamilyId::BesselJ, "besselj"},
    {PolyFamilyId::BesselR, "besselr"},
    {PolyFamilyId::BesselTruncated, "bessel-truncated"},
    {PolyFamilyId::MittagLeffler, "mittag-leffler"},
    {PolyFamilyId::BesselWright, "bessel-wright"},
    {PolyFamilyId::EAlphaGamma, "e-alpha-gamma"},
    {PolyFamilyId::CsHalf, "cs-half"},
    {PolyFamilyId::SnHalf, "sn-half"},
    {PolyFamilyId::CsHalf2p, "cs-half-2p"},
    {PolyFamilyId::SnHalf2p, "sn-half-2p"},
    {PolyFamilyId::Hyp2F2, "hyp2f2"},
    {PolyFamilyId::BesselI0, "besseli0"},
    {PolyFamilyId::EpsilonHalf, "epsilon-half"},
};

PointValue eval_series(const TruncatedSeries& s, double x) {
  const auto v = evaluate(s, x);
  return {v.value.real(), v.last_term};
}

}  // namespace

std::string to_string(PolyFamilyId id) {
  for (const auto& f : kFamilies)
    if (f.id == id) return f.name;
  return "unknown";
}

PolyFamilyId poly_family_from_string(const std::string& name) {
  for (const auto& f : kFamilies)
    if (name == f.name) return f.id;
  throw DomainError("unknown function family '" + name + "'");
}

const std::vector<std::string>& poly_family_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& f : kFamilies) v.emplace_back(f.name);
    return v;
  }();
  return names;
}

PointValue special_eval(PolyFamilyId id, const FamilyParams& p, double x, int order) {
  switch (id) {
    case PolyFamilyId::Hermite2: return eval_series(hermite2(p.n, p.y), x);
    case PolyFamilyId::Laguerre2: return eval_series(laguerre2(p.n, p.y), x);
    case PolyFamilyId::Tricomi: return eval_series(tricomi(p.n, order), x);
    case PolyFamilyId::BesselJ: return bessel_family(BesselKind::J, p.n, x, order);
    case PolyFamilyId::BesselR: return bessel_family(BesselKind::R, p.n, x, order);
    case PolyFamilyId::BesselI0: return bessel_family(BesselKind::I0, 0, x, order);
    case PolyFamilyId::BesselTruncated: return eval_series(bessel_truncated(p.n, p.y), x);
    case PolyFamilyId::MittagLeffler: return eval_series(mittag_leffler_1_beta(p.beta, order), x);
    case PolyFamilyId::BesselWright:
      return eval_series(bessel_wright(p.gamma, p.alpha, order), x);
    case PolyFamilyId::EAlphaGamma: return eval_series(e_alpha_gamma(p.alpha, p.gamma, order), x);
    case PolyFamilyId::CsHalf: return eval_series(cs_sn_family(CsSnKind::Cs, 0, order), x);
    case PolyFamilyId::SnHalf: return eval_series(cs_sn_family(CsSnKind::Sn, 0, order), x);
    case PolyFamilyId::CsHalf2p: return eval_series(cs_sn_family(CsSnKind::Cs, p.n, order), x);
    case PolyFamilyId::SnHalf2p: return eval_series(cs_sn_family(CsSnKind::Sn, p.n, order), x);
    case PolyFamilyId::Hyp2F2: return eval_series(hyp_2f2(p.a1, p.a2, p.b1, p.b2, order), x);
    case PolyFamilyId::EpsilonHalf: return eval_series(epsilon_half(order), x);
  }
  throw DomainError("unknown function family");
}

}  // namespace umbra
