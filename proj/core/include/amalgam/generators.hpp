#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "amalgam/grid.hpp"

namespace amalgam {

using Vec2 = std::array<double, 2>;

/// Inverse transform of the spectrum fhat(xi0, xi1) sampled on the lattice.
GridFunction synthesize_spectrum(const GridSpec& spec, const std::function<Complex(double, double)>& fhat);

/// e^{i k.x} exp(-|x - y|^2 / (2 w^2)).
GridFunction gaussian(const GridSpec& spec, double width = 1.0, Vec2 shift = {0, 0}, Vec2 modulation = {0, 0});

/// Function whose spectrum is the radial bump W(|xi - center| / radius), with W = 1
/// on [0, 1/2] and 0 beyond 1; its spectrum vanishes outside B(center, radius).
GridFunction spectral_bump(const GridSpec& spec, double radius, Vec2 center = {0, 0}, Vec2 shift = {0, 0});

/// Spectrum W(|xi| / radius) times independent complex Gaussian coefficients.
GridFunction random_band_limited(const GridSpec& spec, double radius, std::uint64_t seed);

/// Sum of spectral bumps of radius 2^{j-2} centred at 2^j e_1, j in [j_lo, j_hi].
GridFunction dyadic_shell_sum(const GridSpec& spec, int j_lo, int j_hi);

/// Named generators for the command line: gaussian, modulated-gaussian,
/// shell-sum, random-band-limited, single-block.
GridFunction generate_named(const std::string& name, const GridSpec& spec, std::uint64_t seed = 7);
const std::vector<std::string>& generator_names();

}  // namespace amalgam
