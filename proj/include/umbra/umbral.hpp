#ifndef UMBRA_UMBRAL_HPP
#define UMBRA_UMBRAL_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "umbra/series.hpp"

namespace umbra {

// Exact rational exponent, always stored in lowest terms with den > 0.
class Rational {
 public:
  Rational(std::int64_t num = 0, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  bool is_integer() const { return den_ == 1; }

  friend Rational operator+(Rational a, Rational b);
  friend Rational operator*(Rational a, Rational b);
  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_, den_;
};

std::string to_string(const Rational& r);

// coeff * c^c_exp * x^x_exp.
struct UmbralTerm {
  Scalar coeff;
  Rational c_exp;
  int x_exp = 0;
};

// A finite sum of umbral terms. Terms sharing (c_exp, x_exp) are merged on
// construction and kept sorted by (x_exp, c_exp).
class UmbralExpression {
 public:
  UmbralExpression() = default;
  // Throws DomainError on a negative exponent of either kind.
  explicit UmbralExpression(const std::vector<UmbralTerm>& terms, int max_x_exp = -1);

  const std::vector<UmbralTerm>& terms() const { return terms_; }
  // Generation cutoff; -1 when the expression was not produced by a generator.
  int max_x_exp() const { return max_x_exp_; }

 private:
  std::vector<UmbralTerm> terms_;
  int max_x_exp_ = -1;
};

// Product with the exponent law c^a c^b = c^(a+b), x-degree capped at
// max_x_exp (drop terms beyond it).
UmbralExpression umbral_multiply(const UmbralExpression& a, const UmbralExpression& b,
                                 int max_x_exp);

// The map mu -> phi(mu) realising "apply and set z = 0". Throws
// DomainError for exponents outside its domain.
class UmbralFunctional {
 public:
  UmbralFunctional(std::string name, std::function<double(const Rational&)> weight)
      : name_(std::move(name)), weight_(std::move(weight)) {}

  const std::string& name() const { return name_; }
  double operator()(const Rational& mu) const { return weight_(mu); }

 private:
  std::string name_;
  std::function<double(const Rational&)> weight_;
};

// mu -> 1/Gamma(1 + mu); zero at the reciprocal-gamma poles.
UmbralFunctional laguerre_functional();

// Integer k -> 0 for odd k, 4^r y^r Gamma(r + 1/2)/sqrt(pi) for k = 2r.
// Non-integer exponents are outside its domain.
UmbralFunctional hermite_functional(double y);

// Parses "laguerre" or "hermite:y=<real>".
UmbralFunctional functional_by_name(const std::string& name);

// Each term contributes coeff * f(c_exp) to the coefficient of x^x_exp;
// terms above `order` are dropped. Domain errors name the offending term.
TruncatedSeries umbral_eval(const UmbralExpression& expr, const UmbralFunctional& f,
                            int order);

// sum_r (-scale)^r / r! c^r x^{2r} for 2r <= order.
UmbralExpression umbral_exp_gaussian(Scalar scale, int order);

// (x + c)^n, or (c + x)^n; the flag only records which slot is shifted and
// both yield binomial(n, k) c^k x^{n-k}.
UmbralExpression umbral_binomial(bool x_shift, int n);

// sum_r (-sign)^r c^{r c_power} x^r, r = 0..order: the expansion of
// 1/(1 + sign c^{c_power} x).
UmbralExpression umbral_geometric(Rational c_power, int sign, int order);

}  // namespace umbra

#endif  // UMBRA_UMBRAL_HPP
