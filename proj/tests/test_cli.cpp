#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "amalgam/generators.hpp"
#include "amalgam/grid.hpp"
#include "cli.hpp"

using namespace amalgam;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "amalgam");
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("amalgam_test_" + name)).string();
}

}  // namespace

TEST_CASE("oracle subcommand exit codes") {
  auto r = run({"oracle", "--src", "M[p=1,q=1,s=0]", "--dst", "W[p=2,q=2]", "--d", "1"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["status"] == "Holds");

  r = run({"oracle", "--src", "M[p=2,q=4,s=0]", "--dst", "W[p=2,q=2]", "--d", "1"});
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["status"] == "Fails");

  // wiener to triebel with q > 2 is not settled
  r = run({"oracle", "--src", "W[p=1,q=4]", "--dst", "F[p=1,q=2]"});
  CHECK(r.code == 2);
}

TEST_CASE("oracle output is deterministic") {
  const std::vector<std::string> args = {"oracle", "--src", "Ma[p=4,q=2,s=1,alpha=1/3]", "--dst", "W[p=2,q=2]",
                                         "--alpha-reading", "tau1"};
  const auto a = run(args), b = run(args);
  CHECK(a.out == b.out);
  CHECK(json::parse(a.out)["inputs"]["alpha_reading"] == "tau1");
}

TEST_CASE("usage errors exit 64") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"oracle", "--src", "W[p=1,q=1]"}).code == cli::kExitUsage);
  CHECK(run({"oracle", "--src", "W[p=1,q=1]", "--dst", "W[p=1,q=1]", "--bogus"}).code == cli::kExitUsage);
  CHECK(run({"oracle", "--src", "W[p=0.5,q=1]", "--dst", "W[p=1,q=1]"}).code == cli::kExitUsage);
  CHECK(run({"oracle", "--src", "L[r=2]", "--dst", "B[p=2,q=2]"}).code == cli::kExitUsage);
  CHECK(run({"oracle", "--src", "W[p=1,q=1]", "--dst", "W[p=1,q=1]", "--alpha-reading", "x"}).code ==
        cli::kExitUsage);
  CHECK(run({"norm", "--space", "W[p=2,q=2]"}).code == cli::kExitUsage);
  CHECK(run({"norm", "--space", "W[p=2,q=2]", "--gen", "gaussian", "--in", "x.wgf1"}).code == cli::kExitUsage);
  CHECK(run({"probe", "--family", "nope", "--src", "L[r=2]", "--dst", "W[p=2,q=2]", "--sweep", "1..8"}).code ==
        cli::kExitUsage);
}

TEST_CASE("help exits cleanly") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("oracle") != std::string::npos);
}

TEST_CASE("norm on a generator") {
  const auto r = run({"norm", "--space", "W[p=2,q=2,s=0]", "--gen", "gaussian", "--grid", "d=1,N=4096,P=16"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  const double v = j["value"].get<double>();
  CHECK(v <= std::pow(std::numbers::pi, 0.25) * (1 + 1e-8));
  CHECK(v >= 0.7 * std::pow(std::numbers::pi, 0.25));
  CHECK(j["method"] == "uniform");
}

TEST_CASE("norm on a wgf1 file and a corrupt one") {
  GridSpec g;
  g.n = 1024;
  g.period = Rational(8);
  const auto path = temp_path("f.wgf1");
  write_wgf1_file(path, gaussian(g));
  auto r = run({"norm", "--space", "L[r=2]", "--in", path});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["value"].get<double>() == doctest::Approx(std::pow(std::numbers::pi, 0.25)));

  const auto bad = temp_path("bad.wgf1");
  std::ofstream(bad) << "not a grid function";
  r = run({"norm", "--space", "L[r=2]", "--in", bad});
  CHECK(r.code == cli::kExitDataFormat);
  std::remove(path.c_str());
  std::remove(bad.c_str());
}

TEST_CASE("region writes svg and csv") {
  const auto svg = temp_path("tau1.svg"), csv = temp_path("tau1.csv");
  CHECK(run({"region", "--theorem", "tau1", "--step", "1/16", "--out", svg}).code == 0);
  CHECK(run({"region", "--theorem", "sobolev-to-wiener", "--fix", "r=p,s=0", "--step", "1/16", "--out", csv}).code ==
        0);
  std::ifstream a(svg), b(csv);
  std::string first;
  std::getline(b, first);
  CHECK(first == "u,v,label,boundary_flags");
  std::stringstream body;
  body << a.rdbuf();
  CHECK(body.str().find("<svg") != std::string::npos);
  CHECK(run({"region", "--theorem", "tau1", "--step", "1/10"}).code == cli::kExitUsage);
  std::remove(svg.c_str());
  std::remove(csv.c_str());
}

TEST_CASE("probe subcommand") {
  auto r = run({"probe", "--family", "modulated-bump", "--src", "L[r=2]", "--dst", "W[p=2,q=2,s=1/2]", "--sweep",
                "1..32:x2", "--grid", "d=1,N=8192,P=32"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["loglog_slope"].get<double>() == doctest::Approx(0.5).epsilon(1e-3));
  CHECK(j["verdict"]["status"] == "Fails");

  r = run({"probe", "--designated", "dyadic-shell-sum-holds", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.find('\n') != std::string::npos);

  r = run({"probe", "--family", "modulated-bump", "--src", "L[r=2]", "--dst", "W[p=2,q=2]", "--sweep", "1,2"});
  CHECK(r.code == cli::kExitUsage);
}

TEST_CASE("selftest subset") {
  const auto r = run({"selftest", "--quick", "--only", "1,12"});
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j.dump().find("\"pass\":true") != std::string::npos);
}

TEST_CASE("sweep syntax") {
  CHECK(cli::parse_sweep("1,2,4") == std::vector<double>{1, 2, 4});
  CHECK(cli::parse_sweep("2..5") == std::vector<double>{2, 3, 4, 5});
  CHECK(cli::parse_sweep("1..16:x2") == std::vector<double>{1, 2, 4, 8, 16});
  CHECK_THROWS(cli::parse_sweep("5..2"));
  CHECK_THROWS(cli::parse_sweep("1..8:+2"));
  CHECK_THROWS(cli::parse_sweep("a,b"));
}
