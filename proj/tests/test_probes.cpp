#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>

#include "amalgam/error.hpp"
#include "amalgam/probes.hpp"

using namespace amalgam;
using RI = ReciprocalIndex;

namespace {

GridSpec grid(int n, int period) {
  GridSpec g;
  g.n = n;
  g.period = Rational(period);
  return g;
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("fit_growth recovers a power law") {
  const std::vector<double> xs = {1, 2, 4, 8, 16};
  std::vector<double> ys;
  for (double x : xs) ys.push_back(3.0 * std::pow(x, 0.75));
  const auto fit = fit_growth(xs, ys);
  CHECK(fit.slope == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(fit.r_squared == doctest::Approx(1.0));
}

TEST_CASE("fit_growth rejects degenerate sweeps") {
  CHECK(kind_of([] { (void)fit_growth({1, 2, 4}, {1, 2, 3}); }) == ErrorKind::DegenerateFit);
  CHECK(kind_of([] { (void)fit_growth({1, 2, 2, 4}, {1, 2, 3, 4}); }) == ErrorKind::DegenerateFit);
  CHECK(kind_of([] { (void)fit_growth({1, 1.2, 1.4, 1.6}, {1, 2, 3, 4}); }) == ErrorKind::DegenerateFit);
  CHECK(kind_of([] { (void)fit_growth({1, 2, 4, 8}, {1, -2, 3, 4}); }) == ErrorKind::DegenerateFit);
}

TEST_CASE("family spec validation") {
  FamilySpec f;
  f.sweep = {1, 2, 3};
  CHECK(kind_of([&] { f.validate(); }) == ErrorKind::SweepDegenerate);
  f.sweep.push_back(4);
  CHECK_NOTHROW(f.validate());
}

TEST_CASE("family kind names round trip") {
  for (auto k : {FamilyKind::ModulatedBump, FamilyKind::ScaledBump, FamilyKind::ApproxIdentity,
                 FamilyKind::DyadicShellSum, FamilyKind::UniformLacunary, FamilyKind::SpreadTranslates,
                 FamilyKind::RademacherShell, FamilyKind::AlphaCenterTranslates, FamilyKind::AlphaBlockTranslates})
    CHECK(parse_family_kind(to_string(k)) == k);
  CHECK_FALSE(parse_family_kind("nope").has_value());
}

TEST_CASE("modulated bump: weighted target slope equals the weight") {
  FamilySpec f;
  f.kind = FamilyKind::ModulatedBump;
  f.sweep = {2, 4, 8, 16, 32};
  const auto r = run_probe(f, SpaceSpec::parse("L[r=2]"), SpaceSpec::parse("W[p=2,q=2,s=3/4]"), grid(8192, 32));
  CHECK(r.ratios.size() == 5);
  CHECK(r.loglog_slope == doctest::Approx(0.75).epsilon(1e-3));
  REQUIRE(r.verdict);
  CHECK(r.verdict->status == Status::Fails);
  CHECK(r.growth_consistent);
}

TEST_CASE("members are deterministic in the seed") {
  FamilySpec f;
  f.kind = FamilyKind::RademacherShell;
  f.sweep = {2, 3, 4, 5};
  f.trials = 2;
  NormContext ctx;
  const auto g = grid(4096, 16);
  const auto a = generate_member(f, g, 2, 1, ctx);
  const auto b = generate_member(f, g, 2, 1, ctx);
  CHECK(a.samples == b.samples);
  const auto c = generate_member(f, g, 2, 0, ctx);
  CHECK(a.samples != c.samples);
  f.seed = 8;
  CHECK(generate_member(f, g, 2, 1, ctx).samples != a.samples);
}

TEST_CASE("shell cells sit on the plateau of their shell") {
  FamilySpec f;
  f.kind = FamilyKind::RademacherShell;
  f.sweep = {2, 3, 4, 5};
  NormContext ctx;
  const auto g = grid(4096, 16);
  const auto cells = shell_cells(f, g, 4, ctx);
  REQUIRE_FALSE(cells.empty());
  // the fourth dyadic shell is centered around |xi| ~ 16
  for (const auto& c : cells) {
    CHECK(std::abs(c[0]) >= 8);
    CHECK(std::abs(c[0]) <= 32);
  }
}

TEST_CASE("approximate identity functional by hand") {
  // t = 1/2: |k| <= 1 gives 1 + 2 / sqrt(2); q = 1
  CHECK(approx_identity_functional(0.5, RI(Rational(1)), 1) == doctest::Approx(1 + 2 / std::sqrt(2.0)));
  // q = 1/2 squares it
  CHECK(approx_identity_functional(0.5, RI(Rational(2)), 1) ==
        doctest::Approx(std::pow(1 + 2 / std::sqrt(2.0), 2)));
  // t = 1 keeps only k = 0
  CHECK(approx_identity_functional(1.0, RI(Rational(1)), 2) == doctest::Approx(1.0));
}

TEST_CASE("alpha block cell count grows like <k>^{alpha d/(1-alpha)}") {
  const AlphaConstants c{};
  const int small = alpha_block_cell_count(256, Rational(1, 2), c, 1);
  const int large = alpha_block_cell_count(1024, Rational(1, 2), c, 1);
  CHECK(static_cast<double>(large) / small == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("grid too small for a scaled bump") {
  FamilySpec f;
  f.kind = FamilyKind::ScaledBump;
  f.sweep = {0.01, 0.02, 0.04, 0.08};
  NormContext ctx;
  CHECK(kind_of([&] { (void)generate_member(f, grid(4096, 16), 0, 0, ctx); }) == ErrorKind::GridTooSmall);
}

TEST_CASE("csv has one row per sweep point") {
  FamilySpec f;
  f.kind = FamilyKind::DyadicShellSum;
  f.sweep = {2, 3, 4, 5, 6};
  const auto r = run_probe(f, SpaceSpec::parse("B[p=1,q=1,s=1]"), SpaceSpec::parse("W[p=1,q=1]"), grid(4096, 4));
  const auto csv = probe_csv(r);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
}

TEST_CASE("designated instances cover five families on both sides") {
  const auto& list = designated_probe_instances();
  CHECK(list.size() == 10);
  int fails = 0;
  for (const auto& inst : list) fails += inst.expected == Status::Fails;
  CHECK(fails == 5);
}
