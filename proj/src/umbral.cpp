#include "umbra/umbral.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "umbra/error.hpp"
#include "umbra/gamma.hpp"

namespace umbra {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational operator+(Rational a, Rational b) {
  const std::int64_t g = std::gcd(a.den_, b.den_);
  return Rational(a.num_ * (b.den_ / g) + b.num_ * (a.den_ / g), a.den_ / g * b.den_);
}

Rational operator*(Rational a, Rational b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

std::string to_string(const Rational& r) {
  if (r.is_integer()) return std::to_string(r.num());
  return std::to_string(r.num()) + "/" + std::to_string(r.den());
}

UmbralExpression::UmbralExpression(const std::vector<UmbralTerm>& terms, int max_x_exp)
    : max_x_exp_(max_x_exp) {
  std::map<std::pair<int, Rational>, Scalar> merged;
  for (const auto& t : terms) {
    if (t.x_exp < 0) throw DomainError("negative x exponent in umbral term");
    if (t.c_exp < Rational(0)) throw DomainError("negative c exponent in umbral term");
    merged[{t.x_exp, t.c_exp}] += t.coeff;
  }
  terms_.reserve(merged.size());
  for (const auto& [key, coeff] : merged) terms_.push_back({coeff, key.second, key.first});
}

UmbralExpression umbral_multiply(const UmbralExpression& a, const UmbralExpression& b,
                                 int max_x_exp) {
  std::vector<UmbralTerm> out;
  for (const auto& s : a.terms())
    for (const auto& t : b.terms())
      if (s.x_exp + t.x_exp <= max_x_exp)
        out.push_back({s.coeff * t.coeff, s.c_exp + t.c_exp, s.x_exp + t.x_exp});
  return UmbralExpression(out, max_x_exp);
}

UmbralFunctional laguerre_functional() {
  return UmbralFunctional("laguerre", [](const Rational& mu) {
    if (mu.is_integer() && mu.num() >= 0) return inv_factorial(static_cast<int>(mu.num()));
    return reciprocal_gamma(1.0 + mu.value());
  });
}

UmbralFunctional hermite_functional(double y) {
  return UmbralFunctional("hermite:y=" + std::to_string(y), [y](const Rational& mu) {
    if (!mu.is_integer() || mu.num() < 0)
      throw DomainError("hermite functional is defined on non-negative integers only, got " +
                        to_string(mu));
    const std::int64_t k = mu.num();
    if (k % 2 != 0) return 0.0;
    // (2r)!/r! y^r built up as w_{r+1} = w_r * 2y(2r+1).
    double w = 1.0;
    for (std::int64_t r = 0; r < k / 2; ++r) w *= 2.0 * y * static_cast<double>(2 * r + 1);
    return w;
  });
}

UmbralFunctional functional_by_name(const std::string& name) {
  if (name == "laguerre") return laguerre_functional();
  const std::string prefix = "hermite:y=";
  if (name.rfind(prefix, 0) == 0) {
    const std::string v = name.substr(prefix.size());
    char* end = nullptr;
    const double y = std::strtod(v.c_str(), &end);
    if (v.empty() || end != v.c_str() + v.size() || !std::isfinite(y))
      throw DomainError("bad hermite parameter in functional name '" + name + "'");
    return hermite_functional(y);
  }
  throw DomainError("unknown umbral functional '" + name + "'");
}

TruncatedSeries umbral_eval(const UmbralExpression& expr, const UmbralFunctional& f,
                            int order) {
  if (order < 0) throw DomainError("negative truncation order");
  std::vector<Scalar> c(static_cast<std::size_t>(order) + 1);
  for (const auto& t : expr.terms()) {
    if (t.x_exp > order) continue;
    double w;
    try {
      w = f(t.c_exp);
    } catch (const DomainError& e) {
      throw DomainError("functional " + f.name() + " undefined for term c^" +
                        to_string(t.c_exp) + " x^" + std::to_string(t.x_exp) + ": " + e.what());
    }
    c[t.x_exp] += t.coeff * w;
  }
  return TruncatedSeries(std::move(c));
}

UmbralExpression umbral_exp_gaussian(Scalar scale, int order) {
  if (order < 0) throw DomainError("negative truncation order");
  std::vector<UmbralTerm> terms;
  Scalar a = 1.0;
  for (int r = 0; 2 * r <= order; ++r) {
    if (r == 0 || a != Scalar{}) terms.push_back({a, Rational(r), 2 * r});
    a *= -scale / static_cast<double>(r + 1);
  }
  return UmbralExpression(terms, order);
}

UmbralExpression umbral_binomial(bool /*x_shift*/, int n) {
  if (n < 0) throw DomainError("negative binomial exponent");
  std::vector<UmbralTerm> terms;
  for (int k = 0; k <= n; ++k) terms.push_back({binomial(n, k), Rational(k), n - k});
  return UmbralExpression(terms, n);
}

UmbralExpression umbral_geometric(Rational c_power, int sign, int order) {
  if (order < 0) throw DomainError("negative truncation order");
  if (sign != 1 && sign != -1) throw DomainError("geometric sign must be +1 or -1");
  if (c_power < Rational(0)) throw DomainError("negative c power");
  std::vector<UmbralTerm> terms;
  double s = 1.0;
  for (int r = 0; r <= order; ++r) {
    terms.push_back({s, c_power * Rational(r), r});
    s *= -sign;
  }
  return UmbralExpression(terms, order);
}

}  // namespace umbra
