#include "umbra/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <queue>
#include <string>
#include <tuple>
#include <utility>

#include "umbra/error.hpp"

namespace umbra {

std::shared_ptr<const GaussLaguerreRule> gauss_laguerre_nodes(int n, double gamma) {
  if (n < 1) throw DomainError("Gauss-Laguerre needs at least one node");
  if (!(gamma > 0.0)) throw DomainError("Gauss-Laguerre weight exponent needs gamma > 0");

  static std::mutex mu;
  static std::map<std::pair<int, double>, std::shared_ptr<const GaussLaguerreRule>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, gamma});
    if (it != cache.end()) return it->second;
  }

  // Golub-Welsch: eigen-decomposition of the Jacobi matrix of the
  // generalized Laguerre polynomials with a = gamma - 1.
  const double a = gamma - 1.0;
  Eigen::VectorXd diag(n), sub(std::max(n - 1, 0));
  for (int k = 0; k < n; ++k) diag(k) = 2.0 * k + a + 1.0;
  for (int k = 1; k < n; ++k) sub(k - 1) = std::sqrt(k * (k + a));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success)
    throw ConvergenceError("Gauss-Laguerre eigenvalue solver did not converge for n=" +
                           std::to_string(n));

  // Eigenvector weights are accurate only relative to the largest weight,
  // which loses the tail nodes (weights near 1e-100 at n = 64). Polish each
  // node by Newton on L_n^{(a)} and take w = Gamma(n+a+1) / (n! x L_n'(x)^2).
  // L_n^{(a)}(x) and L_n' by the three-term recurrence.
  const auto laguerre = [n, a](double x) {
    double p0 = 1.0, p1 = 1.0 + a - x;
    if (n == 1) return std::pair{p1, -1.0};
    for (int k = 1; k < n; ++k) {
      const double p2 = ((2.0 * k + 1.0 + a - x) * p1 - (k + a) * p0) / (k + 1.0);
      p0 = p1;
      p1 = p2;
    }
    return std::pair{p1, (n * p1 - (n + a) * p0) / x};
  };
  const double log_scale = std::lgamma(n + a + 1.0) - std::lgamma(n + 1.0);
  auto rule = std::make_shared<GaussLaguerreRule>();
  rule->nodes.resize(n);
  rule->weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = solver.eigenvalues()(i);
    for (int it = 0; it < 8; ++it) {
      const auto [p, dp] = laguerre(x);
      const double step = p / dp;
      x -= step;
      if (std::abs(step) <= 1e-16 * x) break;
    }
    const double dp = laguerre(x).second;
    rule->nodes[i] = x;
    rule->weights[i] = std::exp(log_scale - std::log(x) - 2.0 * std::log(std::abs(dp)));
  }

  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(std::make_pair(n, gamma), std::move(rule));
  return it->second;
}

double gauss_laguerre_apply(const GaussLaguerreRule& rule, const RealFn& g) {
  double s = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    if (rule.weights[i] == 0.0) continue;
    s += rule.weights[i] * g(rule.nodes[i]);
  }
  return s;
}

namespace {

// QUADPACK qk15 abscissae (descending, last is the centre) and weights.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss 7-point weights at kXgk[1], kXgk[3], kXgk[5], kXgk[7].
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error, floor;
  // Refine where the error exceeds the rounding floor the most.
  bool operator<(const Segment& o) const { return error - floor < o.error - o.floor; }
};

double checked(const RealFn& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y))
    throw ConvergenceError("integrand is not finite at x = " + std::to_string(x));
  return y;
}

Segment kronrod(const RealFn& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const double fc = checked(f, c);
  double k = kWgk[7] * fc, g = kWg[3] * fc, absk = std::abs(k);
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double f1 = checked(f, c - dx), f2 = checked(f, c + dx);
    k += kWgk[j] * (f1 + f2);
    absk += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) g += kWg[j / 2] * (f1 + f2);
  }
  Segment s{a, b, k * h, std::abs((k - g) * h), 0.0};
  // Below this the difference is rounding noise and subdividing cannot help.
  s.floor = 50.0 * std::numeric_limits<double>::epsilon() * absk * std::abs(h);
  s.error = std::max(s.error, s.floor);
  return s;
}

}  // namespace

QuadratureResult integrate_finite(const RealFn& f, double a, double b, double tol) {
  AdaptiveOptions opt;
  opt.abs_tol = tol;
  return integrate_finite(f, a, b, opt);
}

QuadratureResult integrate_finite(const RealFn& f, double a, double b,
                                  const AdaptiveOptions& opt) {
  if (!(a <= b)) throw DomainError("integrate_finite needs a <= b");
  QuadratureResult res;
  if (a == b) {
    res.converged = true;
    return res;
  }
  std::priority_queue<Segment> heap;
  heap.push(kronrod(f, a, b));
  long evals = 15;
  auto totals = [&heap]() {
    // Sum in a fixed order (by endpoint) so the result does not depend on
    // heap layout.
    auto copy = heap;
    std::vector<Segment> segs;
    while (!copy.empty()) {
      segs.push_back(copy.top());
      copy.pop();
    }
    std::sort(segs.begin(), segs.end(), [](const Segment& x, const Segment& y) { return x.a < y.a; });
    double v = 0.0, e = 0.0, fl = 0.0;
    for (const auto& s : segs) {
      v += s.value;
      e += s.error;
      fl += s.floor;
    }
    return std::make_tuple(v, e, fl);
  };
  double value = heap.top().value, error = heap.top().error, floor = heap.top().floor;
  // The part of the error above the rounding floors is what refinement can
  // still remove; once it is within tolerance the result is as good as
  // double precision allows.
  auto target = [&] { return std::max(opt.abs_tol, opt.rel_tol * std::abs(value)); };
  int splits = 0;
  while (error > target() && error - floor > target()) {
    const Segment worst = heap.top();
    if (splits >= opt.max_subdivisions || worst.error <= worst.floor) break;
    heap.pop();
    const double m = 0.5 * (worst.a + worst.b);
    if (!(m > worst.a && m < worst.b)) break;  // interval exhausted
    const Segment l = kronrod(f, worst.a, m), r = kronrod(f, m, worst.b);
    evals += 30;
    heap.push(l);
    heap.push(r);
    ++splits;
    value += l.value + r.value - worst.value;
    error += l.error + r.error - worst.error;
    floor += l.floor + r.floor - worst.floor;
    // Running sums drift; resynchronise periodically.
    if (splits % 64 == 0) std::tie(value, error, floor) = totals();
  }
  std::tie(value, error, floor) = totals();
  res.value = value;
  res.error_estimate = error;
  res.evaluations = evals;
  res.converged = error <= target() || error - floor <= target();
  res.rounding_limited = res.converged && error > target();
  return res;
}

QuadratureResult integrate_semi_infinite(const RealFn& f, double a,
                                         const AdaptiveOptions& opt) {
  const RealFn g = [&f, a](double t) {
    const double u = 1.0 - t;
    const double x = a + t / u;
    const double y = f(x);
    if (y == 0.0) return 0.0;
    return y / (u * u);
  };
  return integrate_finite(g, 0.0, 1.0, opt);
}

QuadratureResult integrate_real_line(const RealFn& f, double tol) {
  AdaptiveOptions opt;
  opt.abs_tol = tol;
  return integrate_real_line(f, opt);
}

QuadratureResult integrate_real_line(const RealFn& f, const AdaptiveOptions& opt) {
  AdaptiveOptions half = opt;
  half.abs_tol *= 0.5;
  half.rel_tol *= 0.5;
  const auto right = integrate_semi_infinite(f, 0.0, half);
  const auto left = integrate_semi_infinite([&f](double x) { return f(-x); }, 0.0, half);
  QuadratureResult res;
  res.value = left.value + right.value;
  res.error_estimate = left.error_estimate + right.error_estimate;
  res.evaluations = left.evaluations + right.evaluations;
  res.converged = left.converged && right.converged;
  res.rounding_limited = left.rounding_limited || right.rounding_limited;
  return res;
}

namespace {

double bisect_zero(const RealFn& f, double a, double b, double fa) {
  for (int it = 0; it < 200; ++it) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if (fa * fm <= 0.0) {
      b = m;
    } else {
      a = m;
      fa = fm;
    }
    if (b - a < 1e-15 * std::max(1.0, std::abs(a))) break;
  }
  return 0.5 * (a + b);
}

// Produces successive partition endpoints after spec.start.
class Partitioner {
 public:
  Partitioner(const RealFn& f, const OscillatorySpec& spec)
      : f_(f), spec_(spec), spacing_(spec.zero_spacing_hint) {
    x_ = spec.start + spacing_ / 4.0;
    fx_ = f_(x_);
  }

  double next() {
    if (spec_.mode == PartitionMode::fixed_period) {
      ++count_;
      return spec_.start + count_ * spec_.zero_spacing_hint;
    }
    for (int steps = 0; steps < 4000; ++steps) {
      const double x2 = x_ + spacing_ / 4.0;
      const double f2 = f_(x2);
      if (fx_ * f2 <= 0.0) {
        const double z = bisect_zero(f_, x_, x2, fx_);
        if (have_last_) spacing_ = z - last_;
        last_ = z;
        have_last_ = true;
        x_ = z + spacing_ / 8.0;
        fx_ = f_(x_);
        return z;
      }
      x_ = x2;
      fx_ = f2;
    }
    throw ConvergenceError("no sign change found beyond x = " + std::to_string(x_));
  }

 private:
  const RealFn& f_;
  OscillatorySpec spec_;
  double spacing_;
  double x_ = 0.0, fx_ = 0.0, last_ = 0.0;
  bool have_last_ = false;
  long count_ = 0;
};

double euler_average(const std::vector<double>& sums, int window) {
  const std::size_t m = std::min<std::size_t>(static_cast<std::size_t>(window), sums.size());
  std::vector<double> s(sums.end() - static_cast<std::ptrdiff_t>(m), sums.end());
  while (s.size() > 1) {
    for (std::size_t i = 0; i + 1 < s.size(); ++i) s[i] = 0.5 * (s[i] + s[i + 1]);
    s.pop_back();
  }
  return s[0];
}

}  // namespace

QuadratureResult integrate_oscillatory(const RealFn& f, const OscillatorySpec& spec,
                                       double tol) {
  if (!(spec.zero_spacing_hint > 0.0) || !std::isfinite(spec.zero_spacing_hint))
    throw DomainError("oscillatory quadrature needs a positive finite spacing hint");
  if (spec.window < 1) throw DomainError("oscillatory quadrature needs window >= 1");
  const int first = std::max(32, spec.window);
  if (spec.max_partitions < first)
    throw DomainError("max_partitions must be at least " + std::to_string(first));

  QuadratureResult res;
  Partitioner parts(f, spec);
  std::vector<double> sums;
  double left = spec.start, total = 0.0;
  AdaptiveOptions piece;
  piece.abs_tol = std::max(1e-15, 1e-4 * tol);
  piece.rel_tol = 1e-13;
  auto extend = [&](int k) {
    while (static_cast<int>(sums.size()) < k) {
      const double right = parts.next();
      const auto q = integrate_finite(f, left, right, piece);
      res.evaluations += q.evaluations;
      total += q.value;
      sums.push_back(total);
      left = right;
    }
  };

  extend(first);
  double prev = euler_average(sums, spec.window);
  for (int k = 2 * first; k <= spec.max_partitions; k *= 2) {
    extend(k);
    const double cur = euler_average(sums, spec.window);
    res.value = cur;
    res.error_estimate = std::abs(cur - prev);
    if (res.error_estimate <= tol) {
      res.converged = true;
      return res;
    }
    prev = cur;
  }
  res.value = prev;
  if (res.error_estimate == 0.0) res.error_estimate = std::numeric_limits<double>::infinity();
  return res;
}

}  // namespace umbra
