// umbra: evaluate special functions, apply coefficient transforms, sum
// negative-derivative series and run the identity catalog.
//
// Exit codes: 0 success or all checks pass, 1 computation or check
// failure, 2 usage error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "umbra/catalog.hpp"
#include "umbra/error.hpp"
#include "umbra/io.hpp"
#include "umbra/negderiv.hpp"
#include "umbra/quadrature.hpp"
#include "umbra/special.hpp"
#include "umbra/transforms.hpp"

namespace {

using namespace umbra;

constexpr int kUsage = 2;

// Bad values found after parsing; reported like a parse error.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct SpecialArgs {
  std::string family;
  FamilyParams p;
  double x = 0.0;
  int order = kDefaultOrder;
  std::string emit;
};

// "a:b:n" with n >= 2 points.
struct SampleGrid {
  double a, b;
  int n;
};

SampleGrid parse_grid(const std::string& s) {
  SampleGrid g{};
  char tail = 0;
  if (std::sscanf(s.c_str(), "%lf:%lf:%d%c", &g.a, &g.b, &g.n, &tail) != 3 || g.n < 2 ||
      !(g.a < g.b))
    throw UsageError("--emit-samples expects a:b:n with a < b and n >= 2, got '" + s + "'");
  return g;
}

int cmd_special(const SpecialArgs& a) {
  PolyFamilyId id;
  try {
    id = poly_family_from_string(a.family);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (id == PolyFamilyId::EAlphaGamma)
    if (auto w = e_alpha_gamma_warning(a.p.alpha)) std::cerr << "warning: " << *w << '\n';
  if (!a.emit.empty()) {
    const auto g = parse_grid(a.emit);
    std::cout << "x,f(x)\n";
    for (int i = 0; i < g.n; ++i) {
      const double x = g.a + (g.b - g.a) * i / (g.n - 1);
      std::cout << fmt(x) << ',' << fmt(special_eval(id, a.p, x, a.order).value) << '\n';
    }
    return 0;
  }
  const auto v = special_eval(id, a.p, a.x, a.order);
  std::cout << "value " << fmt(v.value) << "\ntail " << fmt(v.tail) << '\n';
  return 0;
}

struct TransformArgs {
  std::string input;
  std::string family = "borel";
  double alpha = 1.0, gamma = 1.0;
  std::optional<double> beta, delta;
  bool inverse = false;
};

int cmd_transform(const TransformArgs& a) {
  std::string text;
  if (a.input.empty() || a.input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(a.input);
    if (!in) throw UsageError("cannot read '" + a.input + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("input is not JSON: ") + e.what());
  }
  TransformSpec spec;
  try {
    spec.family = transform_family_from_string(a.family);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  spec.alpha = a.alpha;
  spec.gamma = a.gamma;
  spec.beta = a.beta;
  spec.delta = a.delta;
  spec.inverse = a.inverse;
  spec.validate();
  std::cout << series_to_json(borel_apply(series_from_json(doc), spec)).dump() << '\n';
  return 0;
}

struct NegDerivArgs {
  std::string integrand = "one";
  std::string f = "j0";
  double x = 1.0;
  int terms = 60;
};

// Integrand choices: j0, const:c, gauss:a,b (e^{a t^2 + b t}), hermite:n,y.
std::pair<DerivativeProvider, RealFn> parse_integrand(const std::string& s) {
  const auto colon = s.find(':');
  const std::string head = s.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : s.substr(colon + 1);
  char tail = 0;
  if (head == "j0" && colon == std::string::npos)
    return {j0_provider(), [](double t) { return std::cyl_bessel_j(0.0, std::abs(t)); }};
  if (head == "const") {
    double c;
    if (std::sscanf(rest.c_str(), "%lf%c", &c, &tail) == 1)
      return {constant_provider(c), [c](double) { return c; }};
  }
  if (head == "gauss") {
    double a, b;
    if (std::sscanf(rest.c_str(), "%lf,%lf%c", &a, &b, &tail) == 2)
      return {gaussian_provider(a, b), [a, b](double t) { return std::exp(a * t * t + b * t); }};
  }
  if (head == "hermite") {
    int n;
    double y;
    if (std::sscanf(rest.c_str(), "%d,%lf%c", &n, &y, &tail) == 2 && n >= 0)
      return {hermite_provider(n, y), [n, y](double t) { return hermite2_value(n, t, y); }};
  }
  throw UsageError("--f expects j0, const:c, gauss:a,b or hermite:n,y, got '" + s + "'");
}

int cmd_negderiv(const NegDerivArgs& a) {
  const auto [provider, f] = parse_integrand(a.f);
  const bool with_cos = a.integrand == "cos";
  // Polynomial integrands have finitely many derivatives; the series stops there.
  const int terms = provider.max_s ? std::min(a.terms, *provider.max_s + 1) : a.terms;
  const auto r = with_cos ? negderiv_cos_integral(provider, a.x, terms)
                          : negderiv_integral(provider, a.x, terms);
  const RealFn g = with_cos ? RealFn([f](double t) { return f(t) * std::cos(t); }) : f;
  const auto q = integrate_finite(g, 0.0, a.x, 1e-14);
  std::cout << "value " << fmt(r.value) << "\noracle " << fmt(q.value) << "\ndiff "
            << fmt(std::abs(r.value - q.value)) << "\nsettled_at " << r.settled_at
            << "\nconverged " << (r.converged ? "true" : "false") << '\n';
  return r.converged ? 0 : 1;
}

struct CheckArgs {
  bool all = false;
  std::string id, filter;
  bool include_slow = false;
  std::string format = "text";
  double tol_scale = 1.0;
  int order = kDefaultOrder;
  bool timing = false;
  int jobs = 1;
};

void write_reports(const std::vector<CheckReport>& rs, const std::string& format, bool single) {
  if (format == "json") {
    std::cout << (single ? report_to_json(rs.front()) : reports_to_json(rs)).dump(2) << '\n';
  } else if (format == "csv") {
    std::cout << reports_to_csv(rs);
  } else {
    std::cout << reports_to_text(rs);
  }
}

int cmd_check_run(const CheckArgs& a) {
  const Context ctx{a.order, a.tol_scale};
  const auto& reg = default_registry();
  std::vector<CheckReport> rs;
  if (!a.id.empty()) {
    if (!reg.find(a.id)) throw UsageError("unknown check id '" + a.id + "'");
    rs.push_back(run_check(reg, a.id, ctx, a.timing));
  } else {
    rs = run_all(reg, {a.filter, a.include_slow, a.timing, a.jobs}, ctx);
    if (rs.empty()) throw UsageError("no check matches '" + a.filter + "'");
  }
  write_reports(rs, a.format, !a.id.empty());
  for (const auto& r : rs)
    if (!r.pass) return 1;
  return 0;
}

int cmd_check_list() {
  for (const auto* c : default_registry().list()) {
    std::string flags;
    if (c->slow) flags += " [slow]";
    if (c->divergent_aware) flags += " [divergent-aware]";
    std::cout << c->id << flags << "  " << c->description << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Umbral and Borel-transform toolkit for special functions"};
  app.require_subcommand(1);

  SpecialArgs sa;
  auto* special = app.add_subcommand("special", "Special-function families");
  special->require_subcommand(1);
  auto* eval = special->add_subcommand("eval", "Evaluate one family member at x");
  eval->add_option("--family", sa.family, "Family name")
      ->required()
      ->check(CLI::IsMember(poly_family_names()));
  eval->add_option("--n", sa.p.n, "Degree, index, or p for the 2p families")
      ->check(CLI::NonNegativeNumber);
  eval->add_option("--y", sa.p.y, "Second variable");
  eval->add_option("--x", sa.x, "Evaluation point");
  eval->add_option("--alpha", sa.p.alpha, "alpha parameter");
  eval->add_option("--beta", sa.p.beta, "beta parameter");
  eval->add_option("--gamma", sa.p.gamma, "gamma parameter");
  eval->add_option("--a1", sa.p.a1, "2F2 numerator a1");
  eval->add_option("--a2", sa.p.a2, "2F2 numerator a2");
  eval->add_option("--b1", sa.p.b1, "2F2 denominator b1");
  eval->add_option("--b2", sa.p.b2, "2F2 denominator b2");
  eval->add_option("--order", sa.order, "Series truncation order")
      ->envname("UMBRA_ORDER")
      ->check(CLI::PositiveNumber);
  eval->add_option("--emit-samples", sa.emit, "CSV of (x, f(x)) on the grid a:b:n");

  TransformArgs ta;
  auto* transform = app.add_subcommand("transform", "Apply a Borel-family transform to a series");
  transform->add_option("--input", ta.input, "Series JSON file; stdin when absent or '-'");
  transform->add_option("--family", ta.family, "borel, borel-leroy or beta")
      ->check(CLI::IsMember({"borel", "borel-leroy", "beta"}));
  transform->add_option("--alpha", ta.alpha, "alpha");
  transform->add_option("--gamma", ta.gamma, "gamma");
  transform->add_option("--beta", ta.beta, "beta (beta family)");
  transform->add_option("--delta", ta.delta, "delta (beta family)");
  transform->add_flag("--inverse", ta.inverse, "Divide the coefficients instead");

  NegDerivArgs na;
  auto* negderiv = app.add_subcommand("negderiv", "Integral as a negative-derivative series");
  negderiv->add_option("--integrand", na.integrand, "one or cos")
      ->check(CLI::IsMember({"one", "cos"}));
  negderiv->add_option("--f", na.f, "j0, const:c, gauss:a,b or hermite:n,y");
  negderiv->add_option("--x", na.x, "Upper limit");
  negderiv->add_option("--terms", na.terms, "Series terms")->check(CLI::PositiveNumber);

  CheckArgs ca;
  auto* check = app.add_subcommand("check", "Identity catalog");
  check->require_subcommand(1);
  auto* run = check->add_subcommand("run", "Run checks");
  auto* all = run->add_flag("--all", ca.all, "Every non-slow check");
  auto* id = run->add_option("--id", ca.id, "A single check");
  auto* filter = run->add_option("--filter", ca.filter, "Checks whose id starts with this prefix");
  all->excludes(id);
  id->excludes(filter);
  run->add_flag("--include-slow", ca.include_slow, "Also run checks flagged slow");
  run->add_option("--format", ca.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  run->add_option("--tol-scale", ca.tol_scale, "Multiplies every check tolerance")
      ->envname("UMBRA_TOL_SCALE")
      ->check(CLI::PositiveNumber);
  run->add_option("--order", ca.order, "Series truncation order")
      ->envname("UMBRA_ORDER")
      ->check(CLI::PositiveNumber);
  run->add_flag("--timing", ca.timing, "Record runtime_ms per check");
  run->add_option("--jobs", ca.jobs, "Worker threads")->check(CLI::Range(1, 64));
  auto* list = check->add_subcommand("list", "List registered checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (eval->parsed()) return cmd_special(sa);
    if (transform->parsed()) return cmd_transform(ta);
    if (negderiv->parsed()) return cmd_negderiv(na);
    if (run->parsed()) return cmd_check_run(ca);
    if (list->parsed()) return cmd_check_list();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kUsage;
}
