#ifndef UMBRA_SPECIAL_HPP
#define UMBRA_SPECIAL_HPP

#include <optional>
#include <string>

#include "umbra/series.hpp"

namespace umbra {

// Two-variable Hermite H_n(x, y) = n! sum_r y^r x^{n-2r} / ((n-2r)! r!),
// as an order-n series in x.
TruncatedSeries hermite2(int n, double y);
// Direct pointwise sum of the same polynomial.
double hermite2_value(int n, double x, double y);

enum class HermiteSlot { x, y };

// s-th derivative of H_n(x, y) in x (n!/(n-s)! H_{n-s}) or in y
// (n!/(n-2s)! H_{n-2s}), as an order-n series in x. Zero once the degree
// is exhausted.
TruncatedSeries hermite2_derivative_rules(int n, int s, HermiteSlot wrt, double y);

// Two-variable Laguerre L_n(x, y) = sum_r binom(n,r) (-1)^r y^{n-r} x^r / r!.
TruncatedSeries laguerre2(int n, double y);
double laguerre2_value(int n, double x, double y);

// Tricomi C_s(x) = sum_r (-x)^r / (r! (r+s)!).
TruncatedSeries tricomi(int s, int order = kDefaultOrder);

enum class BesselKind { J, R, I0 };

struct PointValue {
  double value = 0.0;
  double tail = 0.0;  // magnitude of the last series term included
};

// J_n(x) = (x/2)^n C_n(x^2/4), R_n(x) = C_n(x^2/4), I_0(x) = C_0(-x^2/4),
// summed to the given order. Throws ConvergenceError when the tail or the
// cancellation error exceeds 1e-13; a higher order may fix the former.
PointValue bessel_family(BesselKind kind, int n, double x, int order = kDefaultOrder);

// Series of J_n(x) in x, to the given order.
TruncatedSeries bessel_j_series(int n, int order = kDefaultOrder);

// b_n(x, y) = n! sum_r (-x)^r y^{n-r} / (r!)^2.
TruncatedSeries bessel_truncated(int n, double y);

// E_{1,beta+1}(x) = sum_k x^k / Gamma(k + beta + 1); beta >= 0.
TruncatedSeries mittag_leffler_1_beta(double beta, int order = kDefaultOrder);

// W_gamma(-x | alpha) = sum_r (-x)^r / (r! Gamma(alpha r + gamma + 1)).
TruncatedSeries bessel_wright(double gamma, double alpha, int order = kDefaultOrder);

// e_{alpha,gamma}(x) = sum_r Gamma(gamma + alpha r + 1) x^r / (r! Gamma(gamma + r + 1)).
TruncatedSeries e_alpha_gamma(double alpha, double gamma, int order = kDefaultOrder);
// Warning text when alpha > 2 (the series has zero radius), else empty.
std::optional<std::string> e_alpha_gamma_warning(double alpha);

enum class CsSnKind { Cs, Sn };

// Cs_{1/2,2p} on x^{2r} and Sn_{1/2,2p} on x^{2r+1}; p = 0 gives the
// Gaussian and e^{-x^2} erfi(x).
TruncatedSeries cs_sn_family(CsSnKind kind, int p, int order = kDefaultOrder);

// (-1)^p H_{2p}(2x, -1) e^{-x^2}.
double cs_closed_form(int p, double x);

// sum_r (-x)^r / Gamma(r/2 + 1).
TruncatedSeries epsilon_half(int order = kDefaultOrder);

// 2F2([a1, a2], [b1, b2]; x). Throws DomainError when b1 or b2 is a
// non-positive integer.
TruncatedSeries hyp_2f2(double a1, double a2, double b1, double b2, int order = kDefaultOrder);

// d^s/dx^s e^{a x^2 + b x} = H_s(2ax + b, a) e^{a x^2 + b x}.
double gaussian_hermite_derivative(int s, double a, double b, double x);

// erfi(x) = 2/sqrt(pi) sum_r x^{2r+1} / (r! (2r+1)), from its power series.
// Intended for |x| <= 3.
double erfi(double x);

// Names accepted by the command line, one per family.
enum class PolyFamilyId {
  Hermite2, Laguerre2, Tricomi, BesselJ, BesselR, BesselTruncated, MittagLeffler,
  BesselWright, EAlphaGamma, CsHalf, SnHalf, CsHalf2p, SnHalf2p, Hyp2F2, BesselI0,
  EpsilonHalf,
};

std::string to_string(PolyFamilyId id);
PolyFamilyId poly_family_from_string(const std::string& name);
// All family names, in declaration order.
const std::vector<std::string>& poly_family_names();

struct FamilyParams {
  int n = 0;  // degree, order index, or p for the 2p families
  double y = 1.0;
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 0.0;
  double a1 = 1.0, a2 = 1.0, b1 = 1.0, b2 = 1.0;
};

// Pointwise value of a family member at x with the magnitude of the last
// term summed.
PointValue special_eval(PolyFamilyId id, const FamilyParams& p, double x,
                        int order = kDefaultOrder);

}  // namespace umbra

#endif  // UMBRA_SPECIAL_HPP
