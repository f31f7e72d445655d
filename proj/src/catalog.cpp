#include "umbra/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include "umbra/error.hpp"

namespace umbra {

using nlohmann::json;

double Args::at(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) throw DomainError("sample has no parameter '" + key + "'");
  return it->second;
}

std::string Args::label() const {
  std::string s = variant;
  for (const auto& [k, v] : params) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s=%.17g", k.c_str(), v);
    if (!s.empty()) s += ' ';
    s += buf;
  }
  return s;
}

std::string to_string(Compare c) {
  switch (c) {
    case Compare::absolute: return "absolute";
    case Compare::relative: return "relative";
    case Compare::mixed: return "mixed";
  }
  return "mixed";
}

void Registry::add(IdentityCheck check) {
  if (check.id.empty()) throw DomainError("check id must not be empty");
  if (check.reference.empty())
    throw DomainError("check '" + check.id + "' has no reference anchor");
  if (check.samples.empty()) throw DomainError("check '" + check.id + "' has no samples");
  if (!(check.tolerance > 0.0))
    throw DomainError("check '" + check.id + "' needs a positive tolerance");
  if (!check.lhs || !check.rhs) throw DomainError("check '" + check.id + "' lacks an evaluator");
  for (const auto& s : check.samples)
    if (s.tolerance && !(*s.tolerance > 0.0))
      throw DomainError("check '" + check.id + "' has a non-positive sample tolerance");
  const std::string id = check.id;
  if (!checks_.emplace(id, std::move(check)).second)
    throw DomainError("duplicate check id '" + id + "'");
}

const IdentityCheck* Registry::find(const std::string& id) const {
  auto it = checks_.find(id);
  return it == checks_.end() ? nullptr : &it->second;
}

std::vector<const IdentityCheck*> Registry::list() const {
  std::vector<const IdentityCheck*> out;
  for (const auto& [id, c] : checks_) out.push_back(&c);
  return out;
}

const Registry& default_registry() {
  static const Registry reg = [] {
    Registry r;
    register_integral_checks(r);
    register_transform_checks(r);
    register_generating_checks(r);
    register_misc_checks(r);
    return r;
  }();
  return reg;
}

namespace {

double evaluate_side(const Evaluator& f, const Args& a, const Context& ctx, const char* side) {
  const double v = f(a, ctx);
  if (!std::isfinite(v)) throw ConvergenceError(std::string(side) + " is not finite");
  return v;
}

bool within(Compare mode, double d, double lhs, double rhs, double tol) {
  switch (mode) {
    case Compare::absolute: return d <= tol;
    case Compare::relative: return d <= tol * std::max(std::abs(lhs), std::abs(rhs));
    case Compare::mixed: return d <= tol * std::max(1.0, std::abs(rhs));
  }
  return false;
}

}  // namespace

CheckReport run_check(const Registry& reg, const std::string& id, const Context& ctx,
                      bool timing) {
  const IdentityCheck* c = reg.find(id);
  if (!c) throw DomainError("unknown check id '" + id + "'");
  if (!(ctx.tolerance_scale > 0.0)) throw DomainError("tolerance scale must be positive");
  if (ctx.order < 1) throw DomainError("order must be at least 1");

  const auto t0 = std::chrono::steady_clock::now();
  CheckReport r;
  r.id = c->id;
  r.reference = c->reference;
  r.tolerance = c->tolerance * ctx.tolerance_scale;
  r.pass = true;
  for (const auto& a : c->samples) {
    SampleReport s;
    s.label = a.label();
    s.tolerance = a.tolerance.value_or(c->tolerance) * ctx.tolerance_scale;
    double lhs = 0.0, rhs = 0.0;
    try {
      lhs = evaluate_side(c->lhs, a, ctx, "lhs");
      rhs = evaluate_side(c->rhs, a, ctx, "rhs");
    } catch (const std::exception& e) {
      throw Error("check '" + id + "', sample [" + s.label + "]: " + e.what());
    }
    s.lhs = lhs;
    s.rhs = rhs;
    s.abs_diff = std::abs(lhs - rhs);
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    s.rel_diff = scale > 0.0 ? s.abs_diff / scale : 0.0;
    s.pass = within(c->compare, s.abs_diff, lhs, rhs, s.tolerance);
    r.pass = r.pass && s.pass;
    r.max_abs_diff = std::max(r.max_abs_diff, s.abs_diff);
    r.max_rel_diff = std::max(r.max_rel_diff, s.rel_diff);
    r.samples.push_back(std::move(s));
  }
  if (timing)
    r.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<CheckReport> run_all(const Registry& reg, const RunOptions& opt, const Context& ctx) {
  std::vector<const IdentityCheck*> selected;
  for (const auto* c : reg.list()) {
    if (c->slow && !opt.include_slow) continue;
    if (c->id.compare(0, opt.prefix.size(), opt.prefix) != 0) continue;
    selected.push_back(c);
  }
  std::vector<CheckReport> out(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < selected.size();) {
      const auto* c = selected[i];
      try {
        out[i] = run_check(reg, c->id, ctx, opt.timing);
      } catch (const std::exception& e) {
        CheckReport r;
        r.id = c->id;
        r.reference = c->reference;
        r.tolerance = c->tolerance * ctx.tolerance_scale;
        r.error = e.what();
        out[i] = std::move(r);
      }
    }
  };
  const int jobs = std::clamp(opt.jobs, 1, 64);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return out;
}

namespace {

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> number_or_null(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<double>();
}

}  // namespace

json report_to_json(const CheckReport& r) {
  json samples = json::array();
  for (const auto& s : r.samples) {
    json js = {{"label", s.label},
               {"lhs", optional_number(s.lhs)},
               {"rhs", optional_number(s.rhs)},
               {"abs_diff", s.abs_diff},
               {"rel_diff", s.rel_diff},
               {"tolerance", s.tolerance},
               {"pass", s.pass}};
    samples.push_back(std::move(js));
  }
  json j = {{"id", r.id},
            {"pass", r.pass},
            {"max_abs_diff", r.max_abs_diff},
            {"max_rel_diff", r.max_rel_diff},
            {"samples", samples},
            {"paper_ref", r.reference},
            {"tolerance", r.tolerance},
            {"runtime_ms", optional_number(r.runtime_ms)}};
  if (r.error) j["error"] = *r.error;
  return j;
}

CheckReport report_from_json(const json& j) {
  try {
    CheckReport r;
    r.id = j.at("id").get<std::string>();
    r.pass = j.at("pass").get<bool>();
    r.max_abs_diff = j.at("max_abs_diff").get<double>();
    r.max_rel_diff = j.at("max_rel_diff").get<double>();
    r.reference = j.at("paper_ref").get<std::string>();
    r.tolerance = j.value("tolerance", 0.0);
    r.runtime_ms = number_or_null(j, "runtime_ms");
    if (j.contains("error")) r.error = j.at("error").get<std::string>();
    for (const auto& js : j.at("samples")) {
      SampleReport s;
      s.label = js.at("label").get<std::string>();
      s.lhs = number_or_null(js, "lhs");
      s.rhs = number_or_null(js, "rhs");
      s.abs_diff = js.at("abs_diff").get<double>();
      s.rel_diff = js.at("rel_diff").get<double>();
      s.tolerance = js.value("tolerance", 0.0);
      s.pass = js.at("pass").get<bool>();
      r.samples.push_back(std::move(s));
    }
    return r;
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed report JSON: ") + e.what());
  }
}

json reports_to_json(const std::vector<CheckReport>& rs) {
  json a = json::array();
  for (const auto& r : rs) a.push_back(report_to_json(r));
  return a;
}

std::vector<CheckReport> reports_from_json(const json& j) {
  if (!j.is_array()) throw DomainError("report JSON must be an array");
  std::vector<CheckReport> out;
  for (const auto& e : j) out.push_back(report_from_json(e));
  return out;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

}  // namespace

std::string reports_to_csv(const std::vector<CheckReport>& rs) {
  std::ostringstream os;
  os << "id,pass,max_abs_diff,max_rel_diff,samples,paper_ref,runtime_ms\n";
  for (const auto& r : rs) {
    os << csv_field(r.id) << ',' << (r.pass ? "true" : "false") << ',' << fmt(r.max_abs_diff)
       << ',' << fmt(r.max_rel_diff) << ',' << r.samples.size() << ',' << csv_field(r.reference)
       << ',';
    if (r.runtime_ms) os << fmt(*r.runtime_ms);
    os << '\n';
  }
  return os.str();
}

std::string reports_to_text(const std::vector<CheckReport>& rs) {
  std::ostringstream os;
  int passed = 0;
  for (const auto& r : rs) {
    passed += r.pass;
    os << (r.pass ? "PASS " : "FAIL ") << r.id << "  max_abs=" << fmt(r.max_abs_diff)
       << "  max_rel=" << fmt(r.max_rel_diff) << "  samples=" << r.samples.size();
    if (r.runtime_ms) os << "  " << fmt(*r.runtime_ms) << " ms";
    os << '\n';
    if (r.error) os << "    error: " << *r.error << '\n';
    for (const auto& s : r.samples)
      if (!s.pass && !r.error)
        os << "    [" << s.label << "] lhs=" << (s.lhs ? fmt(*s.lhs) : "n/a")
           << " rhs=" << (s.rhs ? fmt(*s.rhs) : "n/a") << " diff=" << fmt(s.abs_diff)
           << " tol=" << fmt(s.tolerance) << '\n';
  }
  os << passed << '/' << rs.size() << " checks passed\n";
  return os.str();
}

}  // namespace umbra
