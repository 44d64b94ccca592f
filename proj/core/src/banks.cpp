#include "amalgam/banks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "amalgam/error.hpp"
#include "amalgam/fft.hpp"
#include "amalgam/window.hpp"

namespace amalgam {

const char* to_string(BankKind kind) noexcept {
  switch (kind) {
    case BankKind::Uniform: return "uniform";
    case BankKind::Dyadic: return "dyadic";
    case BankKind::Alpha: return "alpha";
  }
  return "?";
}

namespace {

constexpr double kSlack = 1e-9;

std::size_t wrap_bin(const GridSpec& spec, long m) {
  const long n = spec.n;
  return static_cast<std::size_t>(((m % n) + n) % n);
}

std::size_t flat(const GridSpec& spec, std::size_t b0, std::size_t b1) {
  return spec.d == 1 ? b0 : b0 * static_cast<std::size_t>(spec.n) + b1;
}

// Signed lattice indices m with lo <= m/P <= hi.
std::pair<long, long> bin_range(const GridSpec& spec, double lo, double hi) {
  const double p = spec.period.to_double();
  return {static_cast<long>(std::ceil(lo * p - kSlack)), static_cast<long>(std::floor(hi * p + kSlack))};
}

double norm2(const std::array<double, 2>& x) { return std::sqrt(x[0] * x[0] + x[1] * x[1]); }

// Tracks the number of nonzero multipliers per bin.
void count_overlap(DecompositionBank& bank) {
  std::vector<int> counts(bank.spec.size(), 0);
  for (const auto& b : bank.blocks) {
    for (auto bin : b.multiplier.bins) ++counts[bin];
  }
  bank.max_overlap = counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

// sigma(t) = g(t) / sum_m g(t - m) for the 1D uniform window g.
double uniform_profile(double t) {
  static const WindowProfile g{0.5, 0.75};
  const double num = g(t);
  if (num == 0.0) return 0.0;
  return num / (g(t - 1.0) + num + g(t + 1.0));
}

}  // namespace

std::array<double, 2> bin_frequency(const GridSpec& spec, std::size_t bin) {
  const auto n = static_cast<std::size_t>(spec.n);
  if (spec.d == 1) return {spec.frequency(static_cast<int>(bin)), 0.0};
  return {spec.frequency(static_cast<int>(bin / n)), spec.frequency(static_cast<int>(bin % n))};
}

std::optional<std::size_t> DecompositionBank::find(std::array<int, 2> index) const {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].index == index) return i;
  }
  return std::nullopt;
}

bool DecompositionBank::covers_bin(std::size_t bin) const {
  const auto xi = bin_frequency(spec, bin);
  if (kind == BankKind::Uniform) return std::max(std::abs(xi[0]), std::abs(xi[1])) <= covered_radius + kSlack;
  return norm2(xi) <= covered_radius + kSlack;
}

std::vector<double> DecompositionBank::partition_sum() const {
  std::vector<double> sum(spec.size(), 0.0);
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.multiplier.bins.size(); ++i) sum[b.multiplier.bins[i]] += b.multiplier.values[i];
  }
  return sum;
}

DecompositionBank build_uniform_bank(const GridSpec& spec) {
  spec.validate();
  const int k_max = static_cast<int>(std::floor(spec.nyquist() - 0.75 + kSlack));
  if (k_max < 3) throw Error(ErrorKind::SpecTooSmall, "uniform bank needs K_max >= 3, got " + std::to_string(k_max));

  DecompositionBank bank;
  bank.kind = BankKind::Uniform;
  bank.spec = spec;
  bank.covered_radius = k_max + 0.25;

  // One axis of sigma_k: (bin, value) pairs for integer shift k.
  auto axis = [&](int k) {
    std::vector<std::pair<std::size_t, double>> out;
    const auto [lo, hi] = bin_range(spec, k - 0.75, k + 0.75);
    const double p = spec.period.to_double();
    for (long m = lo; m <= hi; ++m) {
      const double v = uniform_profile(m / p - k);
      if (v > 0.0) out.emplace_back(wrap_bin(spec, m), v);
    }
    return out;
  };

  const int k1_lo = spec.d == 1 ? 0 : -k_max;
  const int k1_hi = spec.d == 1 ? 0 : k_max;
  for (int k0 = -k_max; k0 <= k_max; ++k0) {
    const auto a0 = axis(k0);
    for (int k1 = k1_lo; k1 <= k1_hi; ++k1) {
      Block b;
      b.index = {k0, k1};
      b.center = {static_cast<double>(k0), static_cast<double>(k1)};
      b.weight_base = std::sqrt(1.0 + k0 * k0 + k1 * k1);
      if (spec.d == 1) {
        for (const auto& [bin, v] : a0) {
          b.multiplier.bins.push_back(static_cast<std::uint32_t>(bin));
          b.multiplier.values.push_back(v);
        }
      } else {
        const auto a1 = axis(k1);
        for (const auto& [bin0, v0] : a0) {
          for (const auto& [bin1, v1] : a1) {
            b.multiplier.bins.push_back(static_cast<std::uint32_t>(flat(spec, bin0, bin1)));
            b.multiplier.values.push_back(v0 * v1);
          }
        }
      }
      bank.blocks.push_back(std::move(b));
    }
  }
  count_overlap(bank);
  return bank;
}

DecompositionBank build_dyadic_bank(const GridSpec& spec) {
  spec.validate();
  const int big_j = static_cast<int>(std::floor(std::log2(spec.nyquist()) + kSlack)) - 1;
  if (big_j < 1) throw Error(ErrorKind::SpecTooSmall, "dyadic bank needs J >= 1");
  // psi = 1 on |xi| <= 5/4 and 0 beyond 3/2, so phi_j = 1 on [3/4, 5/4] 2^j.
  const WindowProfile psi{1.25, 1.5};

  DecompositionBank bank;
  bank.kind = BankKind::Dyadic;
  bank.spec = spec;
  bank.covered_radius = 1.25 * std::ldexp(1.0, big_j);
  bank.blocks.resize(static_cast<std::size_t>(big_j) + 1);
  for (int j = 0; j <= big_j; ++j) {
    auto& b = bank.blocks[static_cast<std::size_t>(j)];
    b.index = {j, 0};
    b.center = {j == 0 ? 0.0 : std::ldexp(1.0, j), 0.0};
    b.weight_base = std::ldexp(1.0, j);
  }
  const double reach = 1.5 * std::ldexp(1.0, big_j);
  for (std::size_t bin = 0; bin < spec.size(); ++bin) {
    const double r = norm2(bin_frequency(spec, bin));
    if (r >= reach) continue;
    double previous = psi(r);  // psi(2^{1-j} r) for the next j
    if (previous > 0.0) {
      bank.blocks[0].multiplier.bins.push_back(static_cast<std::uint32_t>(bin));
      bank.blocks[0].multiplier.values.push_back(previous);
    }
    for (int j = 1; j <= big_j; ++j) {
      const double current = psi(std::ldexp(r, -j));
      const double v = current - previous;
      if (v > 0.0) {
        auto& m = bank.blocks[static_cast<std::size_t>(j)].multiplier;
        m.bins.push_back(static_cast<std::uint32_t>(bin));
        m.values.push_back(v);
      }
      previous = current;
    }
  }
  count_overlap(bank);
  return bank;
}

DecompositionBank build_alpha_bank(const GridSpec& spec, const Rational& alpha, AlphaConstants constants) {
  spec.validate();
  if (alpha <= Rational(0) || alpha >= Rational(1)) throw Error(ErrorKind::InvalidArgument, "alpha must lie in (0,1)");
  if (!(constants.c > 0.0 && constants.C > constants.c)) {
    throw Error(ErrorKind::InvalidArgument, "alpha bank needs 0 < c < C");
  }
  const double a = alpha.to_double();
  const double beta = a / (1.0 - a);
  const double nyq = spec.nyquist();
  const double edge = nyq - 1.0 / spec.period.to_double();
  const WindowProfile bump{constants.c, constants.C};

  DecompositionBank bank;
  bank.kind = BankKind::Alpha;
  bank.spec = spec;
  bank.alpha = alpha;
  bank.constants = constants;

  auto bracket = [](double k0, double k1) { return std::sqrt(1.0 + k0 * k0 + k1 * k1); };
  // Beyond k_max every block's support starts outside the Nyquist box.
  int k_max = 0;
  while (std::pow(bracket(k_max, 0), beta) * (k_max - constants.C) <= nyq * std::sqrt(2.0)) ++k_max;

  double covered = edge;
  std::vector<double> total(spec.size(), 0.0);
  const int k1_lim = spec.d == 1 ? 0 : k_max;
  for (int k0 = -k_max; k0 <= k_max; ++k0) {
    for (int k1 = -k1_lim; k1 <= k1_lim; ++k1) {
      const double radius = std::pow(bracket(k0, k1), beta);
      const std::array<double, 2> center{radius * k0, radius * k1};
      const double reach = constants.C * radius;
      if (std::max(std::abs(center[0]), std::abs(center[1])) + reach >= edge) {
        covered = std::min(covered, norm2(center) - reach);
        continue;
      }
      Block b;
      b.index = {k0, k1};
      b.center = center;
      b.weight_base = std::pow(bracket(k0, k1), 1.0 / (1.0 - a));
      const auto [lo0, hi0] = bin_range(spec, center[0] - reach, center[0] + reach);
      const auto [lo1, hi1] =
          spec.d == 1 ? std::pair<long, long>{0, 0} : bin_range(spec, center[1] - reach, center[1] + reach);
      const double p = spec.period.to_double();
      for (long m0 = lo0; m0 <= hi0; ++m0) {
        for (long m1 = lo1; m1 <= hi1; ++m1) {
          const std::array<double, 2> xi{m0 / p, spec.d == 1 ? 0.0 : m1 / p};
          const double v = bump(norm2({xi[0] - center[0], xi[1] - center[1]}) / radius);
          if (v <= 0.0) continue;
          const std::size_t bin = flat(spec, wrap_bin(spec, m0), spec.d == 1 ? 0 : wrap_bin(spec, m1));
          b.multiplier.bins.push_back(static_cast<std::uint32_t>(bin));
          b.multiplier.values.push_back(v);
          total[bin] += v;
        }
      }
      bank.blocks.push_back(std::move(b));
    }
  }
  if (covered < 1.0) throw Error(ErrorKind::SpecTooSmall, "alpha bank covers less than the unit ball");
  bank.covered_radius = covered;

  double floor = std::numeric_limits<double>::infinity();
  for (std::size_t bin = 0; bin < spec.size(); ++bin) {
    if (norm2(bin_frequency(spec, bin)) <= covered) floor = std::min(floor, total[bin]);
  }
  bank.coverage_floor = floor;
  if (floor < 0.5) {
    std::ostringstream msg;
    msg << "alpha=" << alpha.to_string() << " with c=" << constants.c << ", C=" << constants.C
        << " leaves the bump sum at " << floor << " < 1/2 on the covered ball";
    throw Error(ErrorKind::CoverageGap, msg.str());
  }
  for (auto& b : bank.blocks) {
    for (std::size_t i = 0; i < b.multiplier.bins.size(); ++i) b.multiplier.values[i] /= total[b.multiplier.bins[i]];
  }
  count_overlap(bank);
  return bank;
}

namespace {

void check_block(const DecompositionBank& bank, std::size_t block) {
  if (block >= bank.size()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "block " + std::to_string(block) + " outside bank of size " + std::to_string(bank.size()));
  }
}

}  // namespace

GridFunction apply_block_spectrum(const DecompositionBank& bank, std::size_t block, const std::vector<Complex>& fhat) {
  check_block(bank, block);
  if (fhat.size() != bank.spec.size()) throw Error(ErrorKind::InvalidArgument, "spectrum size does not match bank");
  std::vector<Complex> filtered(fhat.size());
  const auto& m = bank.blocks[block].multiplier;
  for (std::size_t i = 0; i < m.bins.size(); ++i) filtered[m.bins[i]] = m.values[i] * fhat[m.bins[i]];
  return inverse_transform(bank.spec, std::move(filtered));
}

GridFunction apply_block(const DecompositionBank& bank, std::size_t block, const GridFunction& f) {
  check_block(bank, block);
  if (!(f.spec == bank.spec)) throw Error(ErrorKind::InvalidArgument, "function grid does not match bank grid");
  return apply_block_spectrum(bank, block, forward_transform(f));
}

double block_spectral_energy(const DecompositionBank& bank, std::size_t block, const std::vector<Complex>& fhat) {
  check_block(bank, block);
  const auto& m = bank.blocks[block].multiplier;
  double e = 0.0;
  for (std::size_t i = 0; i < m.bins.size(); ++i) e += std::norm(m.values[i] * fhat[m.bins[i]]);
  return e;
}

}  // namespace amalgam
