#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "amalgam/grid.hpp"
#include "amalgam/rational.hpp"

namespace amalgam {

enum class BankKind { Uniform, Dyadic, Alpha };

const char* to_string(BankKind kind) noexcept;

/// Multiplier values on the few frequency bins where a block is nonzero.
struct SparseMultiplier {
  std::vector<std::uint32_t> bins;  // flat row-major bin indices
  std::vector<double> values;
};

struct Block {
  std::array<int, 2> index{0, 0};  // k (uniform, alpha) or {j, 0} (dyadic)
  std::array<double, 2> center{0.0, 0.0};
  double weight_base = 1.0;  // <k>, 2^j or <k>^{1/(1-alpha)}; weighted norms raise it to s
  SparseMultiplier multiplier;
};

struct AlphaConstants {
  double c = 0.5;  // plateau radius, in units of <k>^{alpha/(1-alpha)}
  double C = 2.0;  // support radius, same units
};

/// A smooth partition of unity sampled on a frequency grid.
///
/// The partition sums to one on the covered region: the cube
/// |xi|_inf <= covered_radius for the uniform bank, the ball |xi| <= covered_radius
/// otherwise. Frequencies beyond it are reported as truncation by the norms.
struct DecompositionBank {
  BankKind kind = BankKind::Uniform;
  GridSpec spec;
  std::optional<Rational> alpha;
  AlphaConstants constants;
  std::vector<Block> blocks;
  double covered_radius = 0.0;
  int max_overlap = 0;            // most nonzero multipliers seen at one bin
  double coverage_floor = 1.0;    // alpha: min pre-normalization sum on the covered ball

  std::size_t size() const noexcept { return blocks.size(); }
  std::optional<std::size_t> find(std::array<int, 2> index) const;
  /// Whether bin (flat index) lies in the covered region.
  bool covers_bin(std::size_t bin) const;
  /// Sum of all multipliers at every bin.
  std::vector<double> partition_sum() const;
};

/// Uniform blocks sigma_k, |k|_inf <= K_max = floor(N/(2P) - 3/4). Throws SpecTooSmall when K_max < 3.
DecompositionBank build_uniform_bank(const GridSpec& spec);
/// Dyadic blocks phi_0..phi_J with J = floor(log2(N/(2P))) - 1.
DecompositionBank build_dyadic_bank(const GridSpec& spec);
/// Alpha blocks on balls B(<k>^b k, C <k>^b), b = alpha/(1-alpha). Throws CoverageGap
/// when the unnormalized bumps sum below 1/2 somewhere on the covered ball.
DecompositionBank build_alpha_bank(const GridSpec& spec, const Rational& alpha, AlphaConstants constants = {});

/// Frequency bin coordinates of a flat index.
std::array<double, 2> bin_frequency(const GridSpec& spec, std::size_t bin);

/// F^{-1} m_block F f. Throws IndexOutOfRange.
GridFunction apply_block(const DecompositionBank& bank, std::size_t block, const GridFunction& f);
/// Same, starting from a precomputed spectrum (forward_transform of f).
GridFunction apply_block_spectrum(const DecompositionBank& bank, std::size_t block, const std::vector<Complex>& fhat);
/// sum over the block's bins of |m fhat|^2.
double block_spectral_energy(const DecompositionBank& bank, std::size_t block, const std::vector<Complex>& fhat);

}  // namespace amalgam
