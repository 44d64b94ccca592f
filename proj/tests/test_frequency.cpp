#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "amalgam/banks.hpp"
#include "amalgam/error.hpp"
#include "amalgam/fft.hpp"
#include "amalgam/generators.hpp"
#include "amalgam/grid.hpp"
#include "amalgam/transforms.hpp"
#include "amalgam/window.hpp"

using namespace amalgam;

namespace {

GridSpec grid(int d, int n, int period) {
  GridSpec g;
  g.d = d;
  g.n = n;
  g.period = Rational(period);
  return g;
}

double max_partition_error(const DecompositionBank& bank) {
  const auto sum = bank.partition_sum();
  double worst = 0;
  for (std::size_t b = 0; b < sum.size(); ++b)
    if (bank.covers_bin(b)) worst = std::max(worst, std::abs(sum[b] - 1.0));
  return worst;
}

}  // namespace

TEST_CASE("grid spec parsing and validation") {
  const auto g = GridSpec::parse("d=2,N=256,P=8");
  CHECK(g.d == 2);
  CHECK(g.n == 256);
  CHECK(g.period == Rational(8));
  CHECK(GridSpec::parse(g.to_string()) == g);
  CHECK(GridSpec::parse("N=1024").period == Rational(16));
  CHECK_THROWS_AS(GridSpec::parse("N=1000").validate(), Error);
  CHECK_THROWS_AS(GridSpec::parse("d=3").validate(), Error);
  CHECK_THROWS_AS(GridSpec::parse("q=1"), Error);
  try {
    grid(1, 64, 16).validate();  // Nyquist 2
    FAIL("expected GridTooSmall");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::GridTooSmall);
  }
}

TEST_CASE("grid geometry") {
  const auto g = grid(1, 4096, 16);
  CHECK(g.spacing() == doctest::Approx(2 * std::numbers::pi * 16 / 4096));
  CHECK(g.nyquist() == doctest::Approx(128));
  CHECK(g.frequency(1) == doctest::Approx(1.0 / 16));
  CHECK(g.frequency(4095) == doctest::Approx(-1.0 / 16));
}

TEST_CASE("gaussian transform matches the analytic integral") {
  // integral exp(-x^2/2) exp(-i x xi) dx = sqrt(2 pi) exp(-xi^2/2)
  const auto g = grid(1, 4096, 16);
  const auto fhat = forward_transform(gaussian(g));
  double worst = 0;
  for (int m = 0; m < g.n; ++m) {
    const double xi = g.frequency(m);
    const Complex expect = std::sqrt(2 * std::numbers::pi) * std::exp(-xi * xi / 2);
    worst = std::max(worst, std::abs(fhat[static_cast<std::size_t>(m)] - expect));
  }
  CHECK(worst < 1e-10);
  CHECK(lebesgue_norm(gaussian(g), ReciprocalIndex(Rational(1, 2))) ==
        doctest::Approx(std::pow(std::numbers::pi, 0.25)).epsilon(1e-10));
}

TEST_CASE("transform round trip and parseval in two dimensions") {
  const auto g = grid(2, 64, 4);
  const auto f = random_band_limited(g, 3.0, 11);
  const auto fhat = forward_transform(f);
  const auto back = inverse_transform(g, fhat);
  double err = 0, energy = 0, spectral = 0;
  for (std::size_t i = 0; i < f.samples.size(); ++i) {
    err = std::max(err, std::abs(back[i] - f[i]));
    energy += std::norm(f[i]);
    spectral += std::norm(fhat[i]);
  }
  CHECK(err < 1e-12);
  const double h2 = g.cell_volume();
  const double twopip = 2 * std::numbers::pi * 4;
  CHECK(energy * h2 == doctest::Approx(spectral / (twopip * twopip)).epsilon(1e-10));
}

TEST_CASE("smooth step and window profile") {
  CHECK(smooth_step(0.0) == 0.0);
  CHECK(smooth_step(1.0) == 1.0);
  CHECK(smooth_step(0.5) == doctest::Approx(0.5));
  CHECK(smooth_step(0.3) + smooth_step(0.7) == doctest::Approx(1.0));
  double prev = 0;
  for (int i = 1; i < 90; ++i) {
    const double v = smooth_step(i / 100.0);
    CHECK(v > prev);
    prev = v;
  }
  const WindowProfile w{0.5, 0.75};
  CHECK(w(0.4) == 1.0);
  CHECK(w(0.8) == 0.0);
  CHECK_THROWS_AS((WindowProfile{0.8, 0.5}).validate(), Error);
}

TEST_CASE("uniform and dyadic banks sum to one") {
  const auto g = grid(1, 4096, 16);
  const auto uniform = build_uniform_bank(g);
  CHECK(max_partition_error(uniform) < 1e-12);
  CHECK(uniform.max_overlap == 2);
  CHECK(uniform.find({0, 0}).has_value());
  const auto dyadic = build_dyadic_bank(g);
  CHECK(max_partition_error(dyadic) < 1e-12);

  const auto g2 = grid(2, 128, 4);
  CHECK(max_partition_error(build_uniform_bank(g2)) < 1e-12);
  CHECK(max_partition_error(build_dyadic_bank(g2)) < 1e-12);
}

TEST_CASE("alpha bank sums to one on its covered ball") {
  const auto g = grid(1, 4096, 16);
  for (const auto& a : {Rational(1, 4), Rational(1, 2)}) {
    const auto bank = build_alpha_bank(g, a);
    CHECK(max_partition_error(bank) < 1e-8);
    CHECK(bank.coverage_floor >= 0.5);
  }
}

TEST_CASE("bank too small for the grid") {
  try {
    (void)build_uniform_bank(grid(1, 64, 16));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK((e.kind() == ErrorKind::SpecTooSmall || e.kind() == ErrorKind::GridTooSmall));
  }
}

TEST_CASE("blocks reconstruct the function") {
  const auto g = grid(1, 4096, 16);
  const auto bank = build_uniform_bank(g);
  const auto f = gaussian(g, 1.0, {0, 0}, {3.0, 0});
  const auto fhat = forward_transform(f);
  std::vector<Complex> sum(f.samples.size());
  for (std::size_t b = 0; b < bank.size(); ++b) {
    const auto piece = apply_block_spectrum(bank, b, fhat);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += piece[i];
  }
  double num = 0, den = 0;
  for (std::size_t i = 0; i < sum.size(); ++i) {
    num += std::norm(sum[i] - f[i]);
    den += std::norm(f[i]);
  }
  CHECK(std::sqrt(num / den) < 1e-10);
  CHECK_THROWS_AS(apply_block(bank, bank.size(), f), Error);
}

TEST_CASE("wgf1 round trip and corruption") {
  const auto f = random_band_limited(grid(1, 256, 4), 2.0, 3);
  std::stringstream buf;
  write_wgf1(buf, f);
  const auto text = buf.str();
  std::istringstream in(text);
  const auto back = read_wgf1(in);
  CHECK(back.spec == f.spec);
  CHECK(back.samples == f.samples);

  for (const std::string& bad : {std::string("WGF2") + text.substr(4), text.substr(0, text.size() - 3), text + "x"}) {
    std::istringstream bin(bad);
    try {
      (void)read_wgf1(bin);
      FAIL("expected DataFormat");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DataFormat);
    }
  }
  CHECK_THROWS_AS(read_wgf1_file("/nonexistent/file.wgf1"), Error);
}

TEST_CASE("spectral bump is band limited") {
  const auto g = grid(1, 4096, 16);
  CHECK(spectral_excess(spectral_bump(g, 1.0), 1.0 + 1e-9) < 1e-14);
  CHECK(spectral_excess(random_band_limited(g, 2.0, 5), 2.0 + 1e-9) < 1e-14);
  CHECK(spectral_excess(gaussian(g), 1.0) > 0.01);
}

TEST_CASE("bernstein exponent for p = 1, q = inf") {
  const auto g = grid(1, 8192, 64);
  const auto sweep = bernstein_sweep(g, ReciprocalIndex(Rational(1)), ReciprocalIndex::infinity(), {1, 2, 4, 8});
  CHECK(sweep.expected_exponent == doctest::Approx(1.0));
  CHECK(sweep.fitted_exponent == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("convolution of gaussians") {
  // exp(-x^2/2) * exp(-x^2/2) = sqrt(pi) exp(-x^2/4)
  const auto g = grid(1, 4096, 16);
  const auto c = convolve(gaussian(g), gaussian(g));
  const auto expect = gaussian(g, std::sqrt(2.0));
  double worst = 0;
  for (std::size_t i = 0; i < c.samples.size(); ++i)
    worst = std::max(worst, std::abs(c[i] - std::sqrt(std::numbers::pi) * expect[i]));
  CHECK(worst < 1e-10);
}

TEST_CASE("stft is one-dimensional") {
  const auto g = grid(2, 64, 4);
  const auto f = random_band_limited(g, 2.0, 1);
  try {
    (void)stft_grid(f, f, 4);
    FAIL("expected UnsupportedSpace");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedSpace);
  }
}
