#ifndef UMBRA_SERIES_HPP
#define UMBRA_SERIES_HPP

#include <complex>
#include <span>
#include <vector>

namespace umbra {

using Scalar = std::complex<double>;

// Truncation order used when a caller does not ask for one.
inline constexpr int kDefaultOrder = 64;

// A power series sum_{k=0}^{N} c_k x^k with complex coefficients, truncated
// at order N. Immutable once built; every coefficient is finite.
class TruncatedSeries {
 public:
  // Throws DomainError when coeffs is empty or holds a non-finite value.
  explicit TruncatedSeries(std::vector<Scalar> coeffs);

  static TruncatedSeries zero(int order);
  static TruncatedSeries from_real(std::span<const double> coeffs);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Scalar& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  // Coefficient k, or 0 beyond the truncation order.
  Scalar coeff(int k) const;
  std::span<const Scalar> coeffs() const { return coeffs_; }

  // Same series cut down to a lower order. Throws if order exceeds order().
  TruncatedSeries truncate(int order) const;

 private:
  std::vector<Scalar> coeffs_;
};

// Coefficient comparison: per coefficient |a-b| <= abs_tol or
// |a-b| <= rel_tol * max(|a|, |b|). Orders must match.
struct SeriesTolerance {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
};
bool approx_equal(const TruncatedSeries& a, const TruncatedSeries& b,
                  SeriesTolerance tol = {});

// Binary operations truncate to the smaller order.
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries subtract(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale(const TruncatedSeries& a, Scalar s);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return subtract(a, b); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return multiply(a, b); }
inline TruncatedSeries operator*(Scalar s, const TruncatedSeries& a) { return scale(a, s); }
inline TruncatedSeries operator-(const TruncatedSeries& a) { return scale(a, -1.0); }

// Term-by-term derivative; order drops by one. Throws on an order-0 series.
TruncatedSeries differentiate(const TruncatedSeries& a);
// Primitive vanishing at 0; order grows by one.
TruncatedSeries antidifferentiate(const TruncatedSeries& a);
// Substitutes x -> s x.
TruncatedSeries compose_linear(const TruncatedSeries& a, Scalar s);

// How evaluation treats a series whose coefficients grow factorially.
enum class EvalPolicy {
  strict,         // refuse once the terms have passed their smallest magnitude
  smallest_term,  // sum up to and including the smallest term
  full,           // sum every term regardless
};

struct SeriesValue {
  Scalar value;
  double last_term = 0.0;  // |c_k x^k| of the last nonzero term summed
  int terms_used = 0;
};

// Horner evaluation. Only series flagged divergent are subject to the
// policy; convergent or polynomial series are always summed in full.
SeriesValue evaluate(const TruncatedSeries& a, Scalar x,
                     EvalPolicy policy = EvalPolicy::strict);

// Root-test estimate 1/|c_k|^{1/k} at the last nonzero coefficient; 0 when
// the series is flagged divergent, +inf for a polynomial with no tail.
double radius_estimate(const TruncatedSeries& a);

// Factorial growth heuristic: over the upper half of the nonzero
// coefficients |c_k|^{1/k} increases monotonically and by at least 50%.
bool is_divergent(const TruncatedSeries& a);

// exp(s x) to the given order.
TruncatedSeries exp_series(int order, Scalar s = 1.0);
// A monomial c x^k padded to the given order.
TruncatedSeries monomial(int order, int k, Scalar c = 1.0);

}  // namespace umbra

#endif  // UMBRA_SERIES_HPP
