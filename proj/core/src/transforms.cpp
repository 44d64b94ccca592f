#include "amalgam/transforms.hpp"

#include <cmath>

#include "amalgam/error.hpp"
#include "amalgam/fft.hpp"
#include "amalgam/fit.hpp"
#include "amalgam/generators.hpp"

namespace amalgam {

StftSamples stft_grid(const GridFunction& f, const GridFunction& g, int stride) {
  if (f.spec.d != 1) throw Error(ErrorKind::UnsupportedSpace, "STFT is implemented for d = 1 only");
  if (!(f.spec == g.spec)) throw Error(ErrorKind::InvalidArgument, "STFT window grid differs from function grid");
  const int n = f.spec.n;
  if (stride <= 0 || n % stride != 0) throw Error(ErrorKind::InvalidArgument, "stride must divide N");
  const double gnorm = lebesgue_norm(g, ReciprocalIndex(Rational(1, 2)));
  if (std::abs(gnorm - 1.0) > 1e-6) throw Error(ErrorKind::InvalidArgument, "STFT window must have unit L2 norm");

  StftSamples out;
  out.stride = stride;
  out.positions = n / stride;
  out.bins = n;
  out.values.resize(static_cast<std::size_t>(out.positions) * n);
  const double h = f.spec.spacing();
  std::vector<Complex> work(static_cast<std::size_t>(n));
  for (int j = 0; j < out.positions; ++j) {
    const int offset = j * stride;
    for (int t = 0; t < n; ++t) {
      work[static_cast<std::size_t>(t)] = f[static_cast<std::size_t>(t)] *
                                          std::conj(g[static_cast<std::size_t>(((t - offset) % n + n) % n)]);
    }
    dft_in_place(f.spec, work, -1);
    for (int m = 0; m < n; ++m) out.values[static_cast<std::size_t>(j) * n + m] = h * work[static_cast<std::size_t>(m)];
  }
  return out;
}

double spectral_excess(const GridFunction& f, double radius) {
  const auto fhat = forward_transform(f);
  const int n = f.spec.n;
  double total = 0.0, outside = 0.0;
  for (std::size_t bin = 0; bin < fhat.size(); ++bin) {
    const double x0 = f.spec.frequency(static_cast<int>(f.spec.d == 1 ? bin : bin / n));
    const double x1 = f.spec.d == 1 ? 0.0 : f.spec.frequency(static_cast<int>(bin % n));
    const double e = std::norm(fhat[bin]);
    total += e;
    if (std::hypot(x0, x1) > radius) outside += e;
  }
  return total > 0 ? outside / total : 0.0;
}

GridFunction convolve(const GridFunction& f, const GridFunction& g) {
  if (!(f.spec == g.spec)) throw Error(ErrorKind::InvalidArgument, "convolution needs matching grids");
  auto a = forward_transform(f);
  const auto b = forward_transform(g);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
  return inverse_transform(f.spec, std::move(a));
}

namespace {

void require_band_limited(const GridFunction& f, double radius) {
  const double excess = spectral_excess(f, radius);
  if (excess > 1e-10) {
    throw Error(ErrorKind::NotBandLimited,
                "spectral energy fraction " + std::to_string(excess) + " lies outside B(0," + std::to_string(radius) + ")");
  }
}

}  // namespace

InequalityCheck check_bernstein(const GridFunction& f, double radius, const ReciprocalIndex& p,
                                const ReciprocalIndex& q) {
  if (!p_less_equal(p, q)) throw Error(ErrorKind::InvalidArgument, "Bernstein check needs p <= q");
  require_band_limited(f, radius);
  InequalityCheck out;
  out.ratio = lebesgue_norm(f, q) / lebesgue_norm(f, p);
  out.scale = std::pow(radius, f.spec.d * (p.u() - q.u()).to_double());
  out.normalized = out.ratio / out.scale;
  return out;
}

InequalityCheck check_young_sub1(const GridFunction& f, const GridFunction& g, const ReciprocalIndex& p, double r1,
                                 double r2) {
  if (p.u() <= Rational(1)) throw Error(ErrorKind::InvalidArgument, "Young-type check needs 0 < p < 1");
  require_band_limited(f, r1);
  require_band_limited(g, r2);
  InequalityCheck out;
  out.ratio = lebesgue_norm(convolve(f, g), p) / (lebesgue_norm(f, p) * lebesgue_norm(g, p));
  out.scale = std::pow(r1 + r2, f.spec.d * (p.u() - Rational(1)).to_double());
  out.normalized = out.ratio / out.scale;
  return out;
}

InequalitySweep bernstein_sweep(const GridSpec& spec, const ReciprocalIndex& p, const ReciprocalIndex& q,
                                const std::vector<double>& radii) {
  InequalitySweep out;
  out.radii = radii;
  for (double r : radii) out.ratios.push_back(check_bernstein(spectral_bump(spec, r), r, p, q).ratio);
  out.fitted_exponent = fit_loglog(out.radii, out.ratios).slope;
  out.expected_exponent = spec.d * (p.u() - q.u()).to_double();
  return out;
}

InequalitySweep young_sweep(const GridSpec& spec, const ReciprocalIndex& p, const std::vector<double>& radii) {
  InequalitySweep out;
  std::vector<double> sums;
  for (double r : radii) {
    const auto f = spectral_bump(spec, r);
    out.ratios.push_back(check_young_sub1(f, f, p, r, r).ratio);
    sums.push_back(2 * r);
  }
  out.radii = sums;
  out.fitted_exponent = fit_loglog(sums, out.ratios).slope;
  out.expected_exponent = spec.d * (p.u() - Rational(1)).to_double();
  return out;
}

}  // namespace amalgam
