#include "umbra/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "umbra/error.hpp"

namespace umbra {

namespace {

bool finite(Scalar z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

int min_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  return std::min(a.order(), b.order());
}

// Index of the last coefficient with nonzero magnitude, or -1.
int last_nonzero(const TruncatedSeries& a) {
  for (int k = a.order(); k >= 0; --k)
    if (a[k] != Scalar{}) return k;
  return -1;
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("series needs at least one coefficient");
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (!finite(coeffs_[k]))
      throw DomainError("non-finite coefficient at index " + std::to_string(k));
}

TruncatedSeries TruncatedSeries::zero(int order) {
  if (order < 0) throw DomainError("negative truncation order");
  return TruncatedSeries(std::vector<Scalar>(static_cast<std::size_t>(order) + 1));
}

TruncatedSeries TruncatedSeries::from_real(std::span<const double> coeffs) {
  return TruncatedSeries(std::vector<Scalar>(coeffs.begin(), coeffs.end()));
}

Scalar TruncatedSeries::coeff(int k) const {
  if (k < 0 || k > order()) return {};
  return coeffs_[static_cast<std::size_t>(k)];
}

TruncatedSeries TruncatedSeries::truncate(int n) const {
  if (n < 0 || n > order())
    throw DomainError("cannot truncate order " + std::to_string(order()) + " series to " +
                      std::to_string(n));
  return TruncatedSeries(std::vector<Scalar>(coeffs_.begin(), coeffs_.begin() + n + 1));
}

bool approx_equal(const TruncatedSeries& a, const TruncatedSeries& b, SeriesTolerance tol) {
  if (a.order() != b.order()) return false;
  for (int k = 0; k <= a.order(); ++k) {
    const double d = std::abs(a[k] - b[k]);
    if (d <= tol.abs_tol) continue;
    if (d <= tol.rel_tol * std::max(std::abs(a[k]), std::abs(b[k]))) continue;
    return false;
  }
  return true;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = min_order(a, b);
  std::vector<Scalar> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[k] = a[k] + b[k];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries subtract(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = min_order(a, b);
  std::vector<Scalar> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[k] = a[k] - b[k];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = min_order(a, b);
  std::vector<Scalar> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Scalar s{};
    for (int j = 0; j <= k; ++j) s += a[j] * b[k - j];
    c[k] = s;
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries scale(const TruncatedSeries& a, Scalar s) {
  std::vector<Scalar> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& v : c) v *= s;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries differentiate(const TruncatedSeries& a) {
  if (a.order() < 1) throw DomainError("cannot differentiate constant-only series");
  std::vector<Scalar> c(static_cast<std::size_t>(a.order()));
  for (int k = 0; k < a.order(); ++k) c[k] = static_cast<double>(k + 1) * a[k + 1];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries antidifferentiate(const TruncatedSeries& a) {
  std::vector<Scalar> c(static_cast<std::size_t>(a.order()) + 2);
  for (int k = 0; k <= a.order(); ++k) c[k + 1] = a[k] / static_cast<double>(k + 1);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries compose_linear(const TruncatedSeries& a, Scalar s) {
  std::vector<Scalar> c(a.coeffs().begin(), a.coeffs().end());
  Scalar p = 1.0;
  for (auto& v : c) {
    v *= p;
    p *= s;
  }
  return TruncatedSeries(std::move(c));
}

SeriesValue evaluate(const TruncatedSeries& a, Scalar x, EvalPolicy policy) {
  int n = a.order();
  if (policy != EvalPolicy::full && is_divergent(a)) {
    // Locate the smallest nonzero term; strict mode refuses if the tail
    // grows past it.
    double best = std::numeric_limits<double>::infinity();
    int best_k = 0;
    bool grows = false;
    double ax = std::abs(x), p = 1.0;
    for (int k = 0; k <= a.order(); ++k, p *= ax) {
      if (a[k] == Scalar{}) continue;
      const double m = std::abs(a[k]) * p;
      if (m < best) {
        best = m;
        best_k = k;
      } else if (m > best) {
        grows = true;
      }
    }
    if (grows && best_k < last_nonzero(a)) {
      if (policy == EvalPolicy::strict)
        throw DivergentSeriesError(
            "series is divergent and its terms grow after index " + std::to_string(best_k) +
            "; use the smallest_term or full policy to evaluate it");
      n = best_k;
    }
  }
  Scalar v{};
  for (int k = n; k >= 0; --k) v = v * x + a[k];
  SeriesValue out;
  out.value = v;
  out.terms_used = n + 1;
  for (int k = n; k >= 0; --k) {
    if (a[k] != Scalar{}) {
      out.last_term = std::abs(a[k]) * std::pow(std::abs(x), k);
      break;
    }
  }
  return out;
}

namespace {

// |c_k|^{1/k} over nonzero coefficients with k >= 1, paired with k.
std::vector<std::pair<int, double>> roots(const TruncatedSeries& a) {
  std::vector<std::pair<int, double>> r;
  for (int k = 1; k <= a.order(); ++k) {
    const double m = std::abs(a[k]);
    if (m > 0.0) r.emplace_back(k, std::pow(m, 1.0 / k));
  }
  return r;
}

}  // namespace

bool is_divergent(const TruncatedSeries& a) {
  const auto r = roots(a);
  if (r.size() < 6) return false;
  const std::size_t start = r.size() / 2;
  for (std::size_t i = start + 1; i < r.size(); ++i)
    if (!(r[i].second > r[i - 1].second)) return false;
  return r.back().second >= 1.5 * r[start].second;
}

double radius_estimate(const TruncatedSeries& a) {
  const auto r = roots(a);
  if (r.empty()) return std::numeric_limits<double>::infinity();
  if (is_divergent(a)) return 0.0;
  return 1.0 / r.back().second;
}

TruncatedSeries exp_series(int order, Scalar s) {
  if (order < 0) throw DomainError("negative truncation order");
  std::vector<Scalar> c(static_cast<std::size_t>(order) + 1);
  Scalar t = 1.0;
  for (int k = 0; k <= order; ++k) {
    c[k] = t;
    t *= s / static_cast<double>(k + 1);
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries monomial(int order, int k, Scalar c) {
  if (k < 0 || k > order) throw DomainError("monomial degree outside truncation order");
  std::vector<Scalar> v(static_cast<std::size_t>(order) + 1);
  v[k] = c;
  return TruncatedSeries(std::move(v));
}

}  // namespace umbra
