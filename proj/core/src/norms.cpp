#include "amalgam/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <tuple>

#include "amalgam/error.hpp"
#include "amalgam/fft.hpp"
#include "amalgam/generators.hpp"
#include "amalgam/transforms.hpp"

namespace amalgam {

bool NormContext::Key::operator<(const Key& o) const {
  return std::make_tuple(kind, spec.d, spec.n, spec.period, alpha) <
         std::make_tuple(o.kind, o.spec.d, o.spec.n, o.spec.period, o.alpha);
}

const DecompositionBank& NormContext::uniform(const GridSpec& spec) {
  auto& slot = banks_[Key{0, spec, Rational(0)}];
  if (!slot) slot = std::make_unique<DecompositionBank>(build_uniform_bank(spec));
  return *slot;
}

const DecompositionBank& NormContext::dyadic(const GridSpec& spec) {
  auto& slot = banks_[Key{1, spec, Rational(0)}];
  if (!slot) slot = std::make_unique<DecompositionBank>(build_dyadic_bank(spec));
  return *slot;
}

const DecompositionBank& NormContext::alpha(const GridSpec& spec, const Rational& a) {
  auto& slot = banks_[Key{2, spec, a}];
  if (!slot) slot = std::make_unique<DecompositionBank>(build_alpha_bank(spec, a, alpha_constants(a)));
  return *slot;
}

void NormContext::set_alpha_constants(const Rational& a, AlphaConstants constants) {
  constants_[a] = constants;
  for (auto it = banks_.begin(); it != banks_.end();) {
    it = it->first.kind == 2 && it->first.alpha == a ? banks_.erase(it) : std::next(it);
  }
}

AlphaConstants NormContext::alpha_constants(const Rational& a) const {
  auto it = constants_.find(a);
  return it == constants_.end() ? AlphaConstants{} : it->second;
}

namespace {

constexpr double kNegligible = 1e-26;  // relative block energy treated as empty
constexpr double kTailFlag = 1e-6;

double total_energy(const std::vector<Complex>& fhat) {
  double e = 0.0;
  for (const auto& z : fhat) e += std::norm(z);
  return e;
}

double truncation_tail(const DecompositionBank& bank, const std::vector<Complex>& fhat, double total) {
  if (total <= 0.0) return 0.0;
  double outside = 0.0;
  for (std::size_t bin = 0; bin < fhat.size(); ++bin) {
    if (!bank.covers_bin(bin)) outside += std::norm(fhat[bin]);
  }
  return std::clamp(outside / total, 0.0, 1.0);
}

// Accumulates |w g|^q (or the max for q = inf) into a pointwise profile.
class LqAccumulator {
 public:
  LqAccumulator(std::size_t size, const ReciprocalIndex& q) : acc_(size, 0.0), q_(q) {
    if (!q.is_infinite()) exponent_ = 1.0 / q.u().to_double();
  }

  void add(const GridFunction& g, double weight) {
    for (std::size_t i = 0; i < acc_.size(); ++i) {
      const double m = weight * std::abs(g.samples[i]);
      if (q_.is_infinite()) {
        acc_[i] = std::max(acc_[i], m);
      } else {
        acc_[i] += std::pow(m, exponent_);
      }
    }
  }

  std::vector<double> finish() {
    if (!q_.is_infinite()) {
      const double u = q_.u().to_double();
      for (auto& a : acc_) a = std::pow(a, u);
    }
    return std::move(acc_);
  }

 private:
  std::vector<double> acc_;
  ReciprocalIndex q_;
  double exponent_ = 1.0;
};

double sequence_norm(const std::vector<double>& values, const ReciprocalIndex& q) {
  return lebesgue_norm(values, 1.0, q);
}

// Shared block loop: mixed = true gives ||(sum |w_k B_k f|^q)^{1/q}||_p,
// mixed = false gives (sum (w_k ||B_k f||_p)^q)^{1/q}.
NormResult block_norm(const DecompositionBank& bank, const GridFunction& f, const ReciprocalIndex& p,
                      const ReciprocalIndex& q, double s, bool mixed, const char* method) {
  if (!(f.spec == bank.spec)) throw Error(ErrorKind::InvalidArgument, "function grid does not match bank grid");
  const auto fhat = forward_transform(f);
  const double total = total_energy(fhat);
  NormResult out;
  out.method = method;
  out.truncation_tail = truncation_tail(bank, fhat, total);
  out.truncation_flag = out.truncation_tail >= kTailFlag;

  LqAccumulator profile(f.spec.size(), q);
  std::vector<double> weighted;
  for (std::size_t k = 0; k < bank.size(); ++k) {
    const double energy = block_spectral_energy(bank, k, fhat);
    if (energy <= kNegligible * total || energy == 0.0) continue;
    const GridFunction piece = apply_block_spectrum(bank, k, fhat);
    const double w = std::pow(bank.blocks[k].weight_base, s);
    const double local = w * lebesgue_norm(piece, p);
    out.blocks.push_back({bank.blocks[k].index, local});
    weighted.push_back(local);
    if (mixed) profile.add(piece, w);
  }
  out.nonzero_blocks = static_cast<int>(out.blocks.size());
  if (mixed) {
    out.value = lebesgue_norm(profile.finish(), f.spec.cell_volume(), p);
  } else {
    out.value = sequence_norm(weighted, q);
  }
  return out;
}

std::vector<Complex> bessel_spectrum(const GridFunction& f, double s) {
  auto fhat = forward_transform(f);
  if (s == 0.0) return fhat;
  for (std::size_t bin = 0; bin < fhat.size(); ++bin) {
    const auto xi = bin_frequency(f.spec, bin);
    fhat[bin] *= std::pow(1.0 + xi[0] * xi[0] + xi[1] * xi[1], s / 2.0);
  }
  return fhat;
}

NormResult sobolev_norm(const GridFunction& f, const ReciprocalIndex& r, double s) {
  NormResult out;
  out.method = "bessel";
  out.value = lebesgue_norm(inverse_transform(f.spec, bessel_spectrum(f, s)), r);
  return out;
}

// sup over t = 2^{-m}, m = 0..M, of |psi_t * (I - Laplacian)^{s/2} f| with a
// unit-mass Gaussian psi; 2^{-M} is the first scale at or below one grid cell.
NormResult hardy_norm(const GridFunction& f, const ReciprocalIndex& r, double s) {
  const auto base = bessel_spectrum(f, s);
  const double h = f.spec.spacing();
  const int levels = std::max(0, static_cast<int>(std::ceil(std::log2(1.0 / h) - 1e-12)));
  std::vector<double> sup(f.spec.size(), 0.0);
  for (int m = 0; m <= levels; ++m) {
    const double t = std::ldexp(1.0, -m);
    auto spectrum = base;
    for (std::size_t bin = 0; bin < spectrum.size(); ++bin) {
      const auto xi = bin_frequency(f.spec, bin);
      spectrum[bin] *= std::exp(-0.5 * t * t * (xi[0] * xi[0] + xi[1] * xi[1]));
    }
    const GridFunction smoothed = inverse_transform(f.spec, std::move(spectrum));
    for (std::size_t i = 0; i < sup.size(); ++i) sup[i] = std::max(sup[i], std::abs(smoothed.samples[i]));
  }
  NormResult out;
  out.method = "maximal";
  out.maximal_levels = levels + 1;
  out.value = lebesgue_norm(sup, f.spec.cell_volume(), r);
  return out;
}

}  // namespace

NormResult space_norm(const SpaceSpec& space, const GridFunction& f, NormContext& ctx) {
  f.spec.validate();
  const double s = space.s.to_double();
  switch (space.family) {
    case SpaceFamily::Wiener:
      return block_norm(ctx.uniform(f.spec), f, space.p, space.q, s, true, "uniform");
    case SpaceFamily::Modulation:
      return block_norm(ctx.uniform(f.spec), f, space.p, space.q, s, false, "uniform");
    case SpaceFamily::Besov:
      return block_norm(ctx.dyadic(f.spec), f, space.p, space.q, s, false, "dyadic");
    case SpaceFamily::Triebel:
      if (space.p.is_infinite()) throw Error(ErrorKind::UnsupportedSpace, "Triebel norm needs p < inf");
      return block_norm(ctx.dyadic(f.spec), f, space.p, space.q, s, true, "dyadic");
    case SpaceFamily::AlphaModulation: {
      if (!space.alpha) throw Error(ErrorKind::MalformedQuery, "alpha-modulation space without alpha");
      const Rational& a = *space.alpha;
      // <k>^{s/(1-alpha)} is weight_base^s for the alpha bank.
      return block_norm(ctx.alpha(f.spec, a), f, space.p, space.q, s, false, "alpha");
    }
    case SpaceFamily::Sobolev:
      return sobolev_norm(f, space.p, s);
    case SpaceFamily::LocalHardy:
      return hardy_norm(f, space.p, s);
    case SpaceFamily::SeqWeighted0:
    case SpaceFamily::SeqWeighted1:
      break;
  }
  throw Error(ErrorKind::UnsupportedSpace, std::string("no grid norm for ") + to_string(space.family));
}

NormResult space_norm(const SpaceSpec& space, const GridFunction& f) {
  NormContext ctx;
  return space_norm(space, f, ctx);
}

double fourier_lebesgue_norm(const GridFunction& f, const ReciprocalIndex& q) {
  const auto fhat = forward_transform(f);
  std::vector<double> mags(fhat.size());
  for (std::size_t i = 0; i < mags.size(); ++i) mags[i] = std::abs(fhat[i]);
  return lebesgue_norm(mags, std::pow(1.0 / f.spec.period.to_double(), f.spec.d), q);
}

double bank_square_floor(const DecompositionBank& bank) {
  std::vector<double> squares(bank.spec.size(), 0.0);
  for (const auto& b : bank.blocks) {
    for (std::size_t i = 0; i < b.multiplier.bins.size(); ++i) {
      squares[b.multiplier.bins[i]] += b.multiplier.values[i] * b.multiplier.values[i];
    }
  }
  double floor = std::numeric_limits<double>::infinity();
  for (std::size_t bin = 0; bin < squares.size(); ++bin) {
    if (bank.covers_bin(bin)) floor = std::min(floor, squares[bin]);
  }
  return floor;
}

GridFunction gaussian_window(const GridSpec& spec) {
  GridFunction g = gaussian(spec);
  const double scale = std::pow(std::numbers::pi, -spec.d / 4.0);
  for (auto& z : g.samples) z *= scale;
  return g;
}

CrossCheck stft_norm_crosscheck(const GridFunction& f, const SpaceSpec& space, const GridFunction& window,
                                int stride) {
  const bool wiener = space.family == SpaceFamily::Wiener;
  if (!wiener && space.family != SpaceFamily::Modulation) {
    throw Error(ErrorKind::UnsupportedSpace, "STFT cross-check applies to Wiener and modulation norms");
  }
  const StftSamples v = stft_grid(f, window, stride);
  const double s = space.s.to_double();
  const double dx = stride * f.spec.spacing();
  const double dxi = 1.0 / f.spec.period.to_double();
  std::vector<double> weight(static_cast<std::size_t>(v.bins));
  for (int m = 0; m < v.bins; ++m) {
    const double xi = f.spec.frequency(m);
    weight[static_cast<std::size_t>(m)] = std::pow(1.0 + xi * xi, s / 2.0);
  }
  auto magnitude = [&](int j, int m) { return weight[static_cast<std::size_t>(m)] * std::abs(v.at(j, m)); };

  CrossCheck out;
  if (wiener) {
    std::vector<double> inner(static_cast<std::size_t>(v.positions));
    std::vector<double> row(static_cast<std::size_t>(v.bins));
    for (int j = 0; j < v.positions; ++j) {
      for (int m = 0; m < v.bins; ++m) row[static_cast<std::size_t>(m)] = magnitude(j, m);
      inner[static_cast<std::size_t>(j)] = lebesgue_norm(row, dxi, space.q);
    }
    out.stft_value = lebesgue_norm(inner, dx, space.p);
  } else {
    std::vector<double> inner(static_cast<std::size_t>(v.bins));
    std::vector<double> column(static_cast<std::size_t>(v.positions));
    for (int m = 0; m < v.bins; ++m) {
      for (int j = 0; j < v.positions; ++j) column[static_cast<std::size_t>(j)] = magnitude(j, m);
      inner[static_cast<std::size_t>(m)] = lebesgue_norm(column, dx, space.p);
    }
    out.stft_value = lebesgue_norm(inner, dxi, space.q);
  }
  out.decomposition_value = space_norm(space, f).value;
  out.ratio = out.stft_value / out.decomposition_value;
  return out;
}

SpotCheck convolution_closure_check(const GridSpec& spec, const ReciprocalIndex& p, int pairs, std::uint64_t seed) {
  NormContext ctx;
  const SpaceSpec w = SpaceSpec::wiener(p, ReciprocalIndex::infinity());
  SpotCheck out;
  for (int i = 0; i < pairs; ++i) {
    const auto f = random_band_limited(spec, 3.0, seed + 2 * static_cast<std::uint64_t>(i));
    const auto g = random_band_limited(spec, 3.0, seed + 2 * static_cast<std::uint64_t>(i) + 1);
    const double ratio =
        space_norm(w, convolve(f, g), ctx).value / (space_norm(w, f, ctx).value * space_norm(w, g, ctx).value);
    out.ratios.push_back(ratio);
    out.max_ratio = std::max(out.max_ratio, ratio);
  }
  return out;
}

SpotCheck dilation_check(const GridSpec& spec, const ReciprocalIndex& q, double radius,
                         const std::vector<double>& lambdas) {
  NormContext ctx;
  const SpaceSpec m = SpaceSpec::modulation(ReciprocalIndex::infinity(), q);
  const double base = space_norm(m, spectral_bump(spec, radius), ctx).value;
  SpotCheck out;
  for (double lambda : lambdas) {
    // f(lambda x) has spectrum lambda^{-d} fhat(xi / lambda).
    GridFunction dilated = spectral_bump(spec, lambda * radius);
    const double scale = std::pow(lambda, -spec.d);
    for (auto& z : dilated.samples) z *= scale;
    const double ratio = space_norm(m, dilated, ctx).value / base;
    out.ratios.push_back(ratio);
    out.max_ratio = std::max(out.max_ratio, ratio);
  }
  return out;
}

}  // namespace amalgam
