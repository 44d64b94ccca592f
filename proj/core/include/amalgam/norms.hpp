#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "amalgam/banks.hpp"
#include "amalgam/grid.hpp"
#include "amalgam/space.hpp"

namespace amalgam {

struct BlockNorm {
  std::array<int, 2> index{0, 0};
  double value = 0.0;  // weighted L^p norm of the block piece
};

struct NormResult {
  double value = 0.0;
  double truncation_tail = 0.0;  // spectral energy fraction outside the bank's covered region
  bool truncation_flag = false;  // truncation_tail >= 1e-6
  std::string method;            // uniform, dyadic, alpha, bessel, maximal
  std::vector<BlockNorm> blocks; // nonzero blocks only
  int nonzero_blocks = 0;
  int maximal_levels = 0;        // local Hardy: number of dyadic scales t = 2^{-m}
};

/// Bank cache shared across norm evaluations on the same grid.
class NormContext {
 public:
  NormContext() = default;

  const DecompositionBank& uniform(const GridSpec& spec);
  const DecompositionBank& dyadic(const GridSpec& spec);
  const DecompositionBank& alpha(const GridSpec& spec, const Rational& a);

  /// Constants used for the alpha bank at this alpha (defaults c = 1/2, C = 2).
  void set_alpha_constants(const Rational& a, AlphaConstants constants);
  AlphaConstants alpha_constants(const Rational& a) const;

 private:
  struct Key {
    int kind;
    GridSpec spec;
    Rational alpha;
    bool operator<(const Key& o) const;
  };
  std::map<Key, std::unique_ptr<DecompositionBank>> banks_;
  std::map<Rational, AlphaConstants> constants_;
};

/// Norm of f in `space` (s, p, q and alpha taken from the spec).
/// Throws UnsupportedSpace for the sequence spaces.
NormResult space_norm(const SpaceSpec& space, const GridFunction& f, NormContext& ctx);
NormResult space_norm(const SpaceSpec& space, const GridFunction& f);

/// ||fhat||_{L^q} as a Riemann sum over the frequency lattice.
double fourier_lebesgue_norm(const GridFunction& f, const ReciprocalIndex& q);

/// min over covered bins of sum_k m_k(xi)^2; ||f||_{W_{2,2}} / ||f||_2 lies in [sqrt(c), 1].
double bank_square_floor(const DecompositionBank& bank);

/// Unit-L2 Gaussian window pi^{-d/4} exp(-|x|^2/2).
GridFunction gaussian_window(const GridSpec& spec);

struct CrossCheck {
  double stft_value = 0.0;
  double decomposition_value = 0.0;
  double ratio = 0.0;  // stft / decomposition
};

/// Compares the STFT definition of the W (or M) norm with the block form.
/// `space` must be Wiener or Modulation; d = 1 only.
CrossCheck stft_norm_crosscheck(const GridFunction& f, const SpaceSpec& space, const GridFunction& window,
                                int stride = 4);

struct SpotCheck {
  std::vector<double> ratios;
  double max_ratio = 0.0;
};

/// ||f*g||_{W_{p,inf}} / (||f||_{W_{p,inf}} ||g||_{W_{p,inf}}) over random band-limited pairs.
SpotCheck convolution_closure_check(const GridSpec& spec, const ReciprocalIndex& p, int pairs, std::uint64_t seed);
/// ||f(lambda .)||_{M_{inf,q}} / ||f||_{M_{inf,q}} for a band-limited bump of the given radius.
SpotCheck dilation_check(const GridSpec& spec, const ReciprocalIndex& q, double radius,
                         const std::vector<double>& lambdas);

}  // namespace amalgam
