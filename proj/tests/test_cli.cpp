#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  std::string out;
  int code = -1;
};

// Runs the CLI with stdout captured and stderr discarded.
Run umbra(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " \"" UMBRA_CLI_PATH "\" " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("special eval prints value and tail") {
  const auto r = umbra("special eval --family hermite2 --n 2 --y 1 --x 1");
  CHECK(r.code == 0);
  CHECK(r.out == "value 3\ntail 1\n");
  const auto j = umbra("special eval --family besselj --n 0 --x 2");
  CHECK(j.code == 0);
  CHECK(j.out.rfind("value 0.223890779141235", 0) == 0);
}

TEST_CASE("special eval samples a range as CSV") {
  const auto r = umbra("special eval --family tricomi --n 0 --emit-samples 0:1:3");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("x,f(x)\n0,1\n", 0) == 0);
}

TEST_CASE("usage errors exit 2") {
  CHECK(umbra("special eval --family nope").code == 2);
  CHECK(umbra("check run --id no-such-check").code == 2);
  CHECK(umbra("frobnicate").code == 2);
  CHECK(umbra("check run --all --jobs 0").code == 2);
}

TEST_CASE("transform round trip through stdin") {
  const std::string in =
      R"({"order":3,"coeffs":[[1,0],[-1,0],[0.5,0],[-0.16666666666666666,0]]})";
  const auto f = umbra("transform --family borel --alpha 1", "echo '" + in + "' |");
  REQUIRE(f.code == 0);
  const auto fwd = nlohmann::json::parse(f.out);
  CHECK(fwd["coeffs"][3][0].get<double>() == doctest::Approx(-1.0));
  const auto b = umbra("transform --family borel --alpha 1 --inverse", "echo '" + fwd.dump() + "' |");
  REQUIRE(b.code == 0);
  const auto back = nlohmann::json::parse(b.out);
  CHECK(back["coeffs"][2][0].get<double>() == doctest::Approx(0.5));
  CHECK(back["coeffs"][3][0].get<double>() == doctest::Approx(-1.0 / 6.0));
}

TEST_CASE("check run reports pass and fail through the exit code") {
  const auto ok = umbra("check run --id mehler --format json");
  CHECK(ok.code == 0);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j["id"] == "mehler");
  CHECK(j["pass"] == true);
  CHECK(j["runtime_ms"].is_null());
  CHECK(umbra("check run --id mehler --tol-scale 1e-6").code == 1);
  CHECK(umbra("check run --id mehler", "UMBRA_TOL_SCALE=1e-6").code == 1);
  CHECK(umbra("check run --id mehler --tol-scale 1", "UMBRA_TOL_SCALE=1e-6").code == 0);
}

TEST_CASE("negderiv exits 1 when the series has not settled") {
  const auto r = umbra("negderiv --integrand one --f j0 --x 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("converged true") != std::string::npos);
  CHECK(umbra("negderiv --integrand one --f j0 --x 1 --terms 3").code == 1);
}

TEST_CASE("identical invocations give identical output") {
  const auto a = umbra("check run --all --format json");
  const auto b = umbra("check run --all --format json --jobs 4");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(umbra("check run --filter gf- --format csv").out ==
        umbra("check run --filter gf- --format csv").out);
}
