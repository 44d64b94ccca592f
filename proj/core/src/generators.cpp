#include "amalgam/generators.hpp"

#include <cmath>
#include <random>

#include "amalgam/error.hpp"
#include "amalgam/fft.hpp"
#include "amalgam/window.hpp"

namespace amalgam {

namespace {

const WindowProfile kSpectralProfile{0.5, 1.0};

template <typename F>
GridFunction from_positions(const GridSpec& spec, F&& value) {
  spec.validate();
  GridFunction f(spec);
  const int n = spec.n;
  if (spec.d == 1) {
    for (int i = 0; i < n; ++i) f[static_cast<std::size_t>(i)] = value(spec.position(i), 0.0);
  } else {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        f[static_cast<std::size_t>(i) * n + j] = value(spec.position(i), spec.position(j));
      }
    }
  }
  return f;
}

template <typename F>
GridFunction from_spectrum(const GridSpec& spec, F&& value) {
  spec.validate();
  std::vector<Complex> fhat(spec.size());
  const int n = spec.n;
  if (spec.d == 1) {
    for (int i = 0; i < n; ++i) fhat[static_cast<std::size_t>(i)] = value(spec.frequency(i), 0.0);
  } else {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        fhat[static_cast<std::size_t>(i) * n + j] = value(spec.frequency(i), spec.frequency(j));
      }
    }
  }
  return inverse_transform(spec, std::move(fhat));
}

}  // namespace

GridFunction synthesize_spectrum(const GridSpec& spec, const std::function<Complex(double, double)>& fhat) {
  return from_spectrum(spec, fhat);
}

GridFunction gaussian(const GridSpec& spec, double width, Vec2 shift, Vec2 modulation) {
  return from_positions(spec, [&](double x0, double x1) {
    const double dx0 = x0 - shift[0];
    const double dx1 = spec.d == 1 ? 0.0 : x1 - shift[1];
    const double phase = modulation[0] * x0 + (spec.d == 1 ? 0.0 : modulation[1] * x1);
    return std::polar(std::exp(-(dx0 * dx0 + dx1 * dx1) / (2.0 * width * width)), phase);
  });
}

GridFunction spectral_bump(const GridSpec& spec, double radius, Vec2 center, Vec2 shift) {
  return from_spectrum(spec, [&](double xi0, double xi1) {
    const double r = std::hypot(xi0 - center[0], xi1 - center[1]);
    const double phase = -(xi0 * shift[0] + xi1 * shift[1]);
    return std::polar(kSpectralProfile(r / radius), phase);
  });
}

GridFunction random_band_limited(const GridSpec& spec, double radius, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  return from_spectrum(spec, [&](double xi0, double xi1) {
    const double w = kSpectralProfile(std::hypot(xi0, xi1) / radius);
    const Complex z(normal(rng), normal(rng));
    return w * z;
  });
}

GridFunction dyadic_shell_sum(const GridSpec& spec, int j_lo, int j_hi) {
  return from_spectrum(spec, [&](double xi0, double xi1) {
    double sum = 0.0;
    for (int j = j_lo; j <= j_hi; ++j) {
      const double c = std::ldexp(1.0, j);
      sum += kSpectralProfile(std::hypot(xi0 - c, xi1) / (c / 4.0));
    }
    return Complex(sum, 0.0);
  });
}

const std::vector<std::string>& generator_names() {
  static const std::vector<std::string> kNames = {"gaussian", "modulated-gaussian", "shell-sum", "random-band-limited",
                                                  "single-block"};
  return kNames;
}

GridFunction generate_named(const std::string& name, const GridSpec& spec, std::uint64_t seed) {
  if (name == "gaussian") return gaussian(spec);
  if (name == "modulated-gaussian") return gaussian(spec, 1.0, {0, 0}, {3.0, 2.0});
  if (name == "shell-sum") return dyadic_shell_sum(spec, 1, 3);
  if (name == "random-band-limited") return random_band_limited(spec, 4.0, seed);
  if (name == "single-block") return spectral_bump(spec, 0.125, {2.0, 0.0});
  throw Error(ErrorKind::InvalidArgument, "unknown generator '" + name + "'");
}

}  // namespace amalgam
