#include <doctest.h>

#include <cmath>
#include <numbers>

#include "amalgam/error.hpp"
#include "amalgam/generators.hpp"
#include "amalgam/norms.hpp"

using namespace amalgam;
using RI = ReciprocalIndex;

namespace {

GridSpec grid(int d, int n, int period) {
  GridSpec g;
  g.d = d;
  g.n = n;
  g.period = Rational(period);
  return g;
}

const RI kOne(Rational(1)), kTwo(Rational(1, 2)), kHalf(Rational(2)), kInf = RI::infinity();

}  // namespace

TEST_CASE("W_{p,p} and M_{p,p} are the same sum") {
  const auto g = grid(1, 4096, 16);
  NormContext ctx;
  const auto f = random_band_limited(g, 6.0, 21);
  for (const RI& p : {kHalf, kOne, kTwo, RI(Rational(1, 3)), kInf}) {
    const double w = space_norm(SpaceSpec::wiener(p, p), f, ctx).value;
    const double m = space_norm(SpaceSpec::modulation(p, p), f, ctx).value;
    CHECK(w == doctest::Approx(m).epsilon(1e-10));
  }
}

TEST_CASE("a single uniform block sees only its weight") {
  const auto g = grid(1, 4096, 16);
  NormContext ctx;
  // spectrum within 1/8 of k = 5 lies on the plateau of one block
  const auto f = spectral_bump(g, 0.125, {5, 0});
  const double bracket = std::sqrt(26.0);  // <5> = (1 + 5^2)^{1/2}
  for (const RI& p : {kOne, kTwo, kInf}) {
    const double lp = lebesgue_norm(f, p);
    for (const RI& q : {kHalf, kOne, kInf}) {
      const auto r = space_norm(SpaceSpec::wiener(p, q, Rational(1)), f, ctx);
      CHECK(r.nonzero_blocks == 1);
      CHECK(r.value == doctest::Approx(bracket * lp).epsilon(1e-10));
      CHECK(space_norm(SpaceSpec::modulation(p, q, Rational(-1)), f, ctx).value ==
            doctest::Approx(lp / bracket).epsilon(1e-10));
    }
  }
}

TEST_CASE("lq nesting of the block profile") {
  const auto g = grid(1, 4096, 16);
  NormContext ctx;
  const auto f = random_band_limited(g, 8.0, 4);
  for (const RI& p : {kOne, kTwo}) {
    const double w_half = space_norm(SpaceSpec::wiener(p, kHalf), f, ctx).value;
    const double w_one = space_norm(SpaceSpec::wiener(p, kOne), f, ctx).value;
    const double w_inf = space_norm(SpaceSpec::wiener(p, kInf), f, ctx).value;
    CHECK(w_half >= w_one);
    CHECK(w_one >= w_inf);
    const double m_one = space_norm(SpaceSpec::modulation(p, kOne), f, ctx).value;
    const double m_two = space_norm(SpaceSpec::modulation(p, kTwo), f, ctx).value;
    CHECK(m_one >= m_two);
  }
}

TEST_CASE("W_{2,2} sits in the plancherel band") {
  const auto g = grid(1, 4096, 16);
  NormContext ctx;
  const double c = bank_square_floor(ctx.uniform(g));
  CHECK(c > 0.4);
  CHECK(c <= 1.0);
  for (const auto& name : generator_names()) {
    const auto f = generate_named(name, g);
    const double ratio = space_norm(SpaceSpec::wiener(kTwo, kTwo), f, ctx).value / lebesgue_norm(f, kTwo);
    CHECK(ratio >= std::sqrt(c) - 1e-8);
    CHECK(ratio <= 1.0 + 1e-8);
  }
}

TEST_CASE("bessel potential norm of a gaussian") {
  // ||(1 - Laplacian)^{1/2} exp(-x^2/2)||_2^2 = integral (1 + xi^2) exp(-xi^2) dxi = 3 sqrt(pi) / 2
  const auto g = grid(1, 4096, 16);
  const auto r = space_norm(SpaceSpec::sobolev(kTwo, Rational(1)), gaussian(g));
  CHECK(r.method == "bessel");
  CHECK(r.value == doctest::Approx(std::sqrt(1.5 * std::sqrt(std::numbers::pi))).epsilon(1e-10));
  CHECK(space_norm(SpaceSpec::sobolev(kTwo), gaussian(g)).value ==
        doctest::Approx(std::pow(std::numbers::pi, 0.25)).epsilon(1e-10));
}

TEST_CASE("fourier lebesgue norm obeys plancherel") {
  const auto g = grid(1, 4096, 16);
  const auto f = random_band_limited(g, 3.0, 9);
  CHECK(fourier_lebesgue_norm(f, kTwo) ==
        doctest::Approx(std::sqrt(2 * std::numbers::pi) * lebesgue_norm(f, kTwo)).epsilon(1e-10));
}

TEST_CASE("besov norm on the dyadic bank") {
  const auto g = grid(1, 4096, 16);
  NormContext ctx;
  const auto f = gaussian(g, 0.5);
  const auto b = space_norm(SpaceSpec::besov(kTwo, kTwo), f, ctx);
  CHECK(b.method == "dyadic");
  CHECK(b.value <= lebesgue_norm(f, kTwo) * (1 + 1e-8));
  CHECK(b.value >= 0.5 * lebesgue_norm(f, kTwo));
  // more smoothness never lowers the norm
  CHECK(space_norm(SpaceSpec::besov(kTwo, kTwo, Rational(1)), f, ctx).value >= b.value);
}

TEST_CASE("energy beyond the bank is reported as truncation") {
  const auto g = grid(1, 4096, 16);
  const auto inside = space_norm(SpaceSpec::wiener(kTwo, kTwo), spectral_bump(g, 0.5, {20, 0}));
  CHECK_FALSE(inside.truncation_flag);
  const auto outside = space_norm(SpaceSpec::wiener(kTwo, kTwo), spectral_bump(g, 0.4, {127.6, 0}));
  CHECK(outside.truncation_flag);
  CHECK(outside.truncation_tail > 0.5);
}

TEST_CASE("sequence spaces have no function norm") {
  const auto g = grid(1, 4096, 16);
  try {
    (void)space_norm(SpaceSpec::parse("l0[q=2]"), gaussian(g));
    FAIL("expected UnsupportedSpace");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedSpace);
  }
}

TEST_CASE("stft and block forms of the wiener norm agree up to constants") {
  const auto g = grid(1, 2048, 16);
  const auto f = random_band_limited(g, 4.0, 2);
  const auto check = stft_norm_crosscheck(f, SpaceSpec::wiener(kTwo, kOne), gaussian_window(g));
  CHECK(check.ratio > 0.1);
  CHECK(check.ratio < 10.0);
}

TEST_CASE("local hardy norm uses the maximal function") {
  const auto g = grid(1, 4096, 16);
  const auto r = space_norm(SpaceSpec::local_hardy(kOne), gaussian(g));
  CHECK(r.method == "maximal");
  CHECK(r.maximal_levels > 0);
  CHECK(r.value >= lebesgue_norm(gaussian(g), kOne) * (1 - 1e-8));
}
