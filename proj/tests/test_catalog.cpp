#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "frozen_values.hpp"
#include "umbra/catalog.hpp"
#include "umbra/error.hpp"

using namespace umbra;

namespace {

IdentityCheck trivial(std::string id) {
  IdentityCheck c;
  c.id = std::move(id);
  c.description = "one equals one";
  c.reference = "unit test";
  c.lhs = [](const Args&, const Context&) { return 1.0; };
  c.rhs = [](const Args&, const Context&) { return 1.0; };
  c.samples = {Args{"", {}, std::nullopt}};
  c.tolerance = 1e-12;
  return c;
}

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("registry validates entries") {
  Registry reg;
  auto no_ref = trivial("a");
  no_ref.reference.clear();
  CHECK_THROWS_AS(reg.add(no_ref), DomainError);
  auto no_samples = trivial("a");
  no_samples.samples.clear();
  CHECK_THROWS_AS(reg.add(no_samples), DomainError);
  auto bad_tol = trivial("a");
  bad_tol.tolerance = 0.0;
  CHECK_THROWS_AS(reg.add(bad_tol), DomainError);
  auto no_eval = trivial("a");
  no_eval.rhs = nullptr;
  CHECK_THROWS_AS(reg.add(no_eval), DomainError);
  CHECK_THROWS_AS(reg.add(trivial("")), DomainError);
  reg.add(trivial("a"));
  CHECK_THROWS_AS(reg.add(trivial("a")), DomainError);
  CHECK_THROWS_AS(run_check(reg, "b"), DomainError);
}

TEST_CASE("evaluator failures are recorded by run_all") {
  Registry reg;
  auto bad = trivial("bad");
  bad.lhs = [](const Args&, const Context&) -> double { throw std::runtime_error("boom"); };
  reg.add(bad);
  reg.add(trivial("good"));
  CHECK_THROWS_AS(run_check(reg, "bad"), Error);
  const auto rs = run_all(reg, {});
  REQUIRE(rs.size() == 2);
  CHECK(rs[0].id == "bad");
  CHECK_FALSE(rs[0].pass);
  CHECK(rs[0].error.has_value());
  CHECK(rs[1].pass);
}

TEST_CASE("default catalog has 38 referenced checks") {
  const auto& reg = default_registry();
  const auto all = reg.list();
  CHECK(all.size() == 38);
  int slow = 0;
  for (const auto* c : all) {
    CHECK_FALSE(c->reference.empty());
    slow += c->slow;
  }
  CHECK(slow == 3);
  CHECK(reg.find("mehler") != nullptr);
  CHECK(reg.find("nope") == nullptr);
}

TEST_CASE("prefix and slow filters") {
  const auto& reg = default_registry();
  RunOptions opt;
  opt.prefix = "gf-";
  const auto gf = run_all(reg, opt);
  CHECK(gf.size() == 8);
  for (const auto& r : gf) {
    CHECK(r.id.rfind("gf-", 0) == 0);
    CHECK_MESSAGE(r.pass, r.id);
  }
  opt.prefix = "tricomi";
  CHECK(run_all(reg, opt).empty());
  opt.include_slow = true;
  CHECK(run_all(reg, opt).size() == 2);
}

TEST_CASE("runs are deterministic across job counts") {
  const auto& reg = default_registry();
  RunOptions one;
  RunOptions many;
  many.jobs = 6;
  const auto a = reports_to_json(run_all(reg, one)).dump();
  const auto b = reports_to_json(run_all(reg, many)).dump();
  const auto c = reports_to_json(run_all(reg, one)).dump();
  CHECK(a == b);
  CHECK(a == c);
}

TEST_CASE("report JSON round trip is lossless") {
  const auto& reg = default_registry();
  std::vector<CheckReport> rs{run_check(reg, "mehler"), run_check(reg, "gauss-j0", {}, true)};
  const auto j = reports_to_json(rs);
  const auto back = reports_from_json(j);
  CHECK(reports_to_json(back).dump() == j.dump());
  REQUIRE(back.size() == 2);
  CHECK_FALSE(back[0].runtime_ms.has_value());
  CHECK(back[1].runtime_ms.has_value());
}

TEST_CASE("CSV header") {
  const auto csv = reports_to_csv({run_check(default_registry(), "rmt-footnote")});
  CHECK(csv.rfind("id,pass,max_abs_diff,max_rel_diff,samples,paper_ref,runtime_ms\n", 0) == 0);
}

TEST_CASE("tolerance scale loosens every sample") {
  Context ctx;
  ctx.tolerance_scale = 10.0;
  const auto r = run_check(default_registry(), "mehler", ctx);
  for (const auto& s : r.samples) CHECK(s.tolerance == doctest::Approx(1e-9));
}

TEST_CASE("displayed Mehler variant misses the brute-force sum") {
  CHECK(std::abs(frozen::kMehler1 - frozen::kMehlerSum1) <= 1e-15);
  CHECK(std::abs(frozen::kMehlerVariant1 - frozen::kMehlerSum1) > 1e-6);
  const auto r = run_check(default_registry(), "mehler");
  CHECK(r.pass);
}

}  // TEST_SUITE
