#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

const char* binary_path() { return std::getenv("CRBELT_BIN"); }

RunResult run_cli(const std::string& args) {
  RunResult r;
  const std::string cmd = std::string(binary_path()) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("cli eval on the sphere") {
  if (!binary_path()) return;  // driven through ctest, which sets CRBELT_BIN
  const RunResult r = run_cli("eval --fixture sphere --point 0.7071,0,0.7071,0");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["coeff"][0].get<double>() == 0.0);
  CHECK(j["coeff"][1].get<double>() == 0.0);
  CHECK(j["beta"].get<double>() == 0.0);
}

TEST_CASE("cli eval accepts raw expressions") {
  if (!binary_path()) return;
  const RunResult fixture_run = run_cli("eval --fixture sphere --point 1,0,0,0");
  const RunResult expr_run = run_cli("eval --expr \"abs2(z1)+abs2(z2)-1\" --point 1,0,0,0");
  CHECK(fixture_run.exit_code == 0);
  CHECK(expr_run.exit_code == 0);
  const auto a = nlohmann::json::parse(fixture_run.out);
  const auto b = nlohmann::json::parse(expr_run.out);
  CHECK(a["coeff"] == b["coeff"]);
  CHECK(a["beta"] == b["beta"]);
}

TEST_CASE("cli exit codes") {
  if (!binary_path()) return;
  CHECK(run_cli("eval --expr \"z1+\" --point 1,0,0,0").exit_code == 2);
  CHECK(run_cli("eval --fixture sphere --point 0.5,0,0,0").exit_code == 3);
  CHECK(run_cli("eval --expr \"1-abs2(z1)-abs2(z2)\" --point 0.7071,0,0.7071,0").exit_code == 4);
  CHECK(run_cli("scan --fixture torus --param 0.05 --resolution 5").exit_code == 5);
  const RunResult err = run_cli("eval --expr \"z1+\" --point 1,0,0,0");
  const auto j = nlohmann::json::parse(err.out);
  CHECK(j["error"]["kind"] == "parse_error");
}

TEST_CASE("cli reruns are byte-identical") {
  if (!binary_path()) return;
  const std::string scan_args =
      "scan --fixture deformed_sphere --param 0.05 --halfwidth 1.5 --resolution 21";
  const RunResult a = run_cli(scan_args);
  const RunResult b = run_cli(scan_args + " --threads 3");
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  CHECK(a.out == b.out);

  const RunResult e1 = run_cli("eval --fixture bulge --point 1,0,0,0 --tolerance 1e-6");
  const RunResult e2 = run_cli("eval --fixture bulge --point 1,0,0,0 --tolerance 1e-6");
  CHECK(e1.exit_code == 0);
  CHECK(e1.out == e2.out);
}

TEST_CASE("cli find-umbilics on the bulge") {
  if (!binary_path()) return;
  const RunResult r =
      run_cli("find-umbilics --fixture bulge --halfwidth 0.5 --min-halfwidth 0.01");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["index_sum"].get<int>() == -2);
  CHECK(j["stokes_consistent"] == true);
  CHECK(!j["cells"].empty());
}

TEST_CASE("cli winding") {
  if (!binary_path()) return;
  const RunResult r = run_cli("winding --fixture bulge --radius 20");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["winding"].get<int>() == -2);
  CHECK(j["axis_hypothesis"] == false);
}

TEST_CASE("cli verify filters groups") {
  if (!binary_path()) return;
  const RunResult r = run_cli("verify --only rossi");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("[PASS] rossi/t03") != std::string::npos);
  CHECK(r.out.find("vanishing/") == std::string::npos);
}
