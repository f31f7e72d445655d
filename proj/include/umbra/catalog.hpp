#ifndef UMBRA_CATALOG_HPP
#define UMBRA_CATALOG_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace umbra {

// One sample: a variant tag selecting the sub-identity and its named
// parameters. A per-sample tolerance overrides the check tolerance.
struct Args {
  std::string variant;
  std::map<std::string, double> params;
  std::optional<double> tolerance;

  double at(const std::string& key) const;
  std::string label() const;
};

struct Context {
  int order = 64;
  double tolerance_scale = 1.0;
};

using Evaluator = std::function<double(const Args&, const Context&)>;

// How a sample passes, for d = |lhs - rhs|:
//   absolute: d <= tol
//   relative: d <= tol * max(|lhs|, |rhs|)
//   mixed:    d <= tol * max(1, |rhs|)
enum class Compare { absolute, relative, mixed };
std::string to_string(Compare c);

struct IdentityCheck {
  std::string id{};
  std::string description{};
  std::string reference{};  // anchor locating the identity; required
  Evaluator lhs{};
  Evaluator rhs{};
  std::vector<Args> samples{};
  double tolerance = 0.0;
  Compare compare = Compare::mixed;
  bool slow = false;
  bool divergent_aware = false;
  std::string notes{};
};

struct SampleReport {
  std::string label;
  std::optional<double> lhs, rhs;
  double abs_diff = 0.0;
  double rel_diff = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct CheckReport {
  std::string id;
  bool pass = false;
  double max_abs_diff = 0.0;
  double max_rel_diff = 0.0;
  std::vector<SampleReport> samples;
  std::string reference;
  double tolerance = 0.0;
  std::optional<double> runtime_ms;  // only when timing was requested
  std::optional<std::string> error;  // evaluator failure recorded by run_all
};

class Registry {
 public:
  // Throws DomainError on an empty id or reference, no samples, a
  // non-positive tolerance, a missing evaluator or a duplicate id.
  void add(IdentityCheck check);
  const IdentityCheck* find(const std::string& id) const;
  // Sorted by id.
  std::vector<const IdentityCheck*> list() const;

 private:
  std::map<std::string, IdentityCheck> checks_;
};

// The full catalog, built once.
const Registry& default_registry();

struct RunOptions {
  std::string prefix;  // empty selects every id
  bool include_slow = false;
  bool timing = false;
  int jobs = 1;
};

// Throws DomainError for an unknown id and Error, with the sample label,
// when an evaluator fails.
CheckReport run_check(const Registry& reg, const std::string& id, const Context& ctx = {},
                      bool timing = false);
// Never throws on evaluator failure; the report records it and fails.
// Reports come back sorted by id whatever the job count.
std::vector<CheckReport> run_all(const Registry& reg, const RunOptions& opt,
                                 const Context& ctx = {});

nlohmann::json report_to_json(const CheckReport& r);
CheckReport report_from_json(const nlohmann::json& j);
nlohmann::json reports_to_json(const std::vector<CheckReport>& rs);
std::vector<CheckReport> reports_from_json(const nlohmann::json& j);
// Header plus one row per check: id,pass,max_abs_diff,max_rel_diff,samples,paper_ref,runtime_ms
std::string reports_to_csv(const std::vector<CheckReport>& rs);
std::string reports_to_text(const std::vector<CheckReport>& rs);

// Registration hooks, one per group of checks.
void register_integral_checks(Registry& reg);
void register_transform_checks(Registry& reg);
void register_generating_checks(Registry& reg);
void register_misc_checks(Registry& reg);

}  // namespace umbra

#endif  // UMBRA_CATALOG_HPP
