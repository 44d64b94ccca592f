#include "amalgam/probes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "amalgam/error.hpp"
#include "amalgam/fft.hpp"
#include "amalgam/generators.hpp"
#include "amalgam/window.hpp"

namespace amalgam {

namespace {

constexpr double kBumpRadius = 0.125;       // supp eta-hat in B(0, 1/8)
constexpr double kSpreadWidth = 1.0 / 24;   // Gaussian spectral width of the spread translates
constexpr double kUnitTolerance = 1e-12;

double bracket(double k) { return std::sqrt(1.0 + k * k); }

double beta_of(const Rational& alpha) {
  const double a = alpha.to_double();
  return a / (1.0 - a);
}

Rational family_alpha(const FamilySpec& family) { return family.alpha.value_or(Rational(1, 2)); }

std::vector<Complex> zero_spectrum(const GridSpec& grid) { return std::vector<Complex>(grid.size(), Complex(0, 0)); }

std::vector<double> dense(const GridSpec& grid, const SparseMultiplier& m) {
  std::vector<double> out(grid.size(), 0.0);
  for (std::size_t i = 0; i < m.bins.size(); ++i) out[m.bins[i]] = m.values[i];
  return out;
}

// Adds a * m(xi) * e^{-i xi.y} to the spectrum.
void add_block(const GridSpec& grid, std::vector<Complex>& spectrum, const SparseMultiplier& m, Complex a,
               std::array<double, 2> y = {0, 0}) {
  for (std::size_t i = 0; i < m.bins.size(); ++i) {
    const auto xi = bin_frequency(grid, m.bins[i]);
    const double phase = -(xi[0] * y[0] + xi[1] * y[1]);
    spectrum[m.bins[i]] += a * m.values[i] * Complex(std::cos(phase), std::sin(phase));
  }
}

const Block& block_at(const DecompositionBank& bank, std::array<int, 2> index, const char* what) {
  const auto found = bank.find(index);
  if (!found) {
    std::ostringstream msg;
    msg << what << " block (" << index[0] << "," << index[1] << ") is not in the " << to_string(bank.kind)
        << " bank of " << bank.spec.to_string();
    throw Error(ErrorKind::GridTooSmall, msg.str());
  }
  return bank.blocks[*found];
}

int as_int(double v, const char* what) {
  const double r = std::round(v);
  if (std::abs(r - v) > 1e-9) throw Error(ErrorKind::InvalidArgument, std::string(what) + " must be an integer");
  return static_cast<int>(r);
}

double sweep_max(const FamilySpec& family) { return *std::max_element(family.sweep.begin(), family.sweep.end()); }

double translate_spacing(const FamilySpec& family, const GridSpec& grid) {
  const double period = 2 * std::numbers::pi * grid.period.to_double();
  const double spacing = family.spacing > 0 ? family.spacing : period / (sweep_max(family) + 1);
  if (spacing * sweep_max(family) > period) throw Error(ErrorKind::GridTooSmall, "translates do not fit in the period");
  return spacing;
}

// Translates centred on the origin: y_k = (k - (K_max - 1) / 2) * spacing.
std::array<double, 2> translate_offset(const FamilySpec& family, double spacing, int k) {
  return {(k - (sweep_max(family) - 1) / 2) * spacing, 0.0};
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double rademacher(std::uint64_t seed, int shell, std::array<int, 2> cell, int trial) {
  std::uint64_t h = splitmix(seed);
  h = splitmix(h ^ static_cast<std::uint64_t>(static_cast<std::int64_t>(shell)));
  h = splitmix(h ^ static_cast<std::uint64_t>(static_cast<std::int64_t>(cell[0])));
  h = splitmix(h ^ static_cast<std::uint64_t>(static_cast<std::int64_t>(cell[1])));
  h = splitmix(h ^ static_cast<std::uint64_t>(static_cast<std::int64_t>(trial)));
  return (h >> 63) ? 1.0 : -1.0;
}

const DecompositionBank& shell_bank(const FamilySpec& family, const GridSpec& grid, NormContext& ctx) {
  return family.alpha_shells ? ctx.alpha(grid, family_alpha(family)) : ctx.dyadic(grid);
}

const Block& shell_block(const FamilySpec& family, const GridSpec& grid, double shell, NormContext& ctx) {
  const int j = as_int(shell, "shell index");
  return block_at(shell_bank(family, grid, ctx), {j, 0}, "shell");
}

GridFunction modulated_bump(const GridSpec& grid, double k, NormContext& ctx) {
  const int ki = as_int(k, "frequency index");
  block_at(ctx.uniform(grid), {ki, 0}, "modulated bump");
  return spectral_bump(grid, kBumpRadius, {static_cast<double>(ki), 0});
}

GridFunction scaled_bump(const GridSpec& grid, double lambda) {
  if (!(lambda > 0 && lambda <= 1)) throw Error(ErrorKind::InvalidArgument, "dilation must lie in (0, 1]");
  if (lambda * kBumpRadius * grid.period.to_double() < 2) throw Error(ErrorKind::GridTooSmall, "dilated bump is below two bins");
  GridFunction f = spectral_bump(grid, lambda * kBumpRadius);
  const double scale = std::pow(lambda, -grid.d);
  // f(lambda x) has spectrum lambda^{-d} fhat(xi / lambda); spectral_bump already rescaled the argument.
  for (auto& v : f.samples) v *= scale;
  return f;
}

GridFunction approx_identity(const GridSpec& grid, double t) {
  if (!(t > 0 && t <= 1)) throw Error(ErrorKind::InvalidArgument, "t must lie in (0, 1]");
  const WindowProfile profile{1.0, 1.25};
  if (profile.support / t >= grid.nyquist()) throw Error(ErrorKind::GridTooSmall, "approximate identity exceeds Nyquist");
  return synthesize_spectrum(grid, [&](double x0, double x1) {
    return Complex(profile(t * std::max(std::abs(x0), std::abs(x1))), 0);
  });
}

GridFunction shell_sum(const FamilySpec& family, const GridSpec& grid, double last, NormContext& ctx, bool lacunary) {
  const int J = as_int(last, "last shell");
  if (J < family.j_start) throw Error(ErrorKind::InvalidArgument, "last shell precedes the first");
  auto spectrum = zero_spectrum(grid);
  for (int j = family.j_start; j <= J; ++j) {
    const double a = std::pow(2.0, -j * family.theta);
    if (lacunary) {
      const int k = j == 0 ? 0 : (1 << j);
      add_block(grid, spectrum, block_at(ctx.uniform(grid), {k, 0}, "lacunary").multiplier, a);
    } else {
      add_block(grid, spectrum, block_at(ctx.dyadic(grid), {j, 0}, "dyadic shell").multiplier, a);
    }
  }
  return inverse_transform(grid, spectrum);
}

GridFunction spread_translates(const FamilySpec& family, const GridSpec& grid, double count, NormContext& ctx) {
  const int K = as_int(count, "translate count");
  if (K < 1) throw Error(ErrorKind::InvalidArgument, "translate count must be positive");
  if (grid.period.to_double() * kSpreadWidth < 2) throw Error(ErrorKind::GridTooSmall, "period too short to resolve the translates");
  block_at(ctx.uniform(grid), {K, 0}, "spread translate");
  const double spacing = translate_spacing(family, grid);
  const double two_var = 2 * kSpreadWidth * kSpreadWidth;
  auto spectrum = zero_spectrum(grid);
  for (std::size_t b = 0; b < spectrum.size(); ++b) {
    const auto xi = bin_frequency(grid, b);
    Complex sum(0, 0);
    for (int k = 1; k <= K; ++k) {
      const double r2 = (xi[0] - k) * (xi[0] - k) + xi[1] * xi[1];
      if (r2 > 1.0 / 16) continue;
      const auto y = translate_offset(family, spacing, k);
      const double phase = -xi[0] * y[0];
      sum += std::pow(bracket(k), -family.theta) * std::exp(-r2 / two_var) *
             Complex(std::cos(phase), std::sin(phase));
    }
    spectrum[b] = sum;
  }
  return inverse_transform(grid, spectrum);
}

GridFunction rademacher_shell(const FamilySpec& family, const GridSpec& grid, double shell, int trial,
                              NormContext& ctx) {
  const auto cells = shell_cells(family, grid, shell, ctx);
  if (cells.empty()) throw Error(ErrorKind::GridTooSmall, "shell contains no whole uniform cell");
  const auto& uniform = ctx.uniform(grid);
  const int j = as_int(shell, "shell index");
  auto spectrum = zero_spectrum(grid);
  for (const auto& cell : cells) {
    const double eps = rademacher(family.seed, j, cell, trial);
    add_block(grid, spectrum, block_at(uniform, cell, "cell").multiplier, eps);
  }
  return inverse_transform(grid, spectrum);
}

GridFunction alpha_center(const FamilySpec& family, const GridSpec& grid, double k, NormContext& ctx) {
  const int ki = as_int(k, "alpha index");
  const auto& bank = ctx.alpha(grid, family_alpha(family));
  block_at(bank, {ki, 0}, "alpha");
  const double center = std::round(std::pow(bracket(ki), beta_of(family_alpha(family))) * ki);
  if (std::abs(center) + kBumpRadius >= bank.covered_radius)
    throw Error(ErrorKind::GridTooSmall, "alpha centre lies outside the covered ball");
  return spectral_bump(grid, kBumpRadius, {center, 0});
}

GridFunction alpha_translates(const FamilySpec& family, const GridSpec& grid, double count, NormContext& ctx) {
  const int K = as_int(count, "translate count");
  if (K < 1) throw Error(ErrorKind::InvalidArgument, "translate count must be positive");
  const auto& bank = ctx.alpha(grid, family_alpha(family));
  const double spacing = translate_spacing(family, grid);
  auto spectrum = zero_spectrum(grid);
  for (int k = 0; k < K; ++k) {
    const auto& block = block_at(bank, {k, 0}, "alpha");
    add_block(grid, spectrum, block.multiplier, std::pow(bracket(k), -family.theta),
              translate_offset(family, spacing, k + 1));
  }
  return inverse_transform(grid, spectrum);
}

}  // namespace

void FamilySpec::validate() const {
  if (sweep.size() < 4) throw Error(ErrorKind::SweepDegenerate, "a sweep needs at least four points");
  if (trials < 1) throw Error(ErrorKind::InvalidArgument, "trials must be positive");
  if (alpha && (*alpha <= Rational(0) || *alpha >= Rational(1)))
    throw Error(ErrorKind::InvalidArgument, "alpha must lie in (0,1)");
}

std::string FamilySpec::to_string() const {
  std::ostringstream out;
  out << amalgam::to_string(kind) << "[sweep=";
  for (std::size_t i = 0; i < sweep.size(); ++i) out << (i ? " " : "") << sweep[i];
  out << ",theta=" << theta << ",trials=" << trials << ",seed=" << seed;
  if (spacing > 0) out << ",spacing=" << spacing;
  if (j_start != 0) out << ",j_start=" << j_start;
  if (alpha_shells) out << ",alpha_shells=1";
  if (alpha) out << ",alpha=" << alpha->to_string();
  out << "]";
  return out.str();
}

std::vector<std::array<int, 2>> shell_cells(const FamilySpec& family, const GridSpec& grid, double shell,
                                            NormContext& ctx) {
  const auto& outer = shell_block(family, grid, shell, ctx);
  const auto m = dense(grid, outer.multiplier);
  std::vector<std::array<int, 2>> cells;
  for (const auto& block : ctx.uniform(grid).blocks) {
    bool inside = !block.multiplier.bins.empty();
    for (auto bin : block.multiplier.bins) {
      if (std::abs(m[bin] - 1.0) > kUnitTolerance) {
        inside = false;
        break;
      }
    }
    if (inside) cells.push_back(block.index);
  }
  return cells;
}

GridFunction generate_member(const FamilySpec& family, const GridSpec& grid, std::size_t index, int trial,
                             NormContext& ctx) {
  grid.validate();
  if (index >= family.sweep.size()) throw Error(ErrorKind::IndexOutOfRange, "sweep index out of range");
  const double v = family.sweep[index];
  switch (family.kind) {
    case FamilyKind::ModulatedBump: return modulated_bump(grid, v, ctx);
    case FamilyKind::ScaledBump: return scaled_bump(grid, v);
    case FamilyKind::ApproxIdentity: return approx_identity(grid, v);
    case FamilyKind::DyadicShellSum: return shell_sum(family, grid, v, ctx, false);
    case FamilyKind::UniformLacunary: return shell_sum(family, grid, v, ctx, true);
    case FamilyKind::SpreadTranslates: return spread_translates(family, grid, v, ctx);
    case FamilyKind::RademacherShell: return rademacher_shell(family, grid, v, trial, ctx);
    case FamilyKind::AlphaCenterTranslates: return alpha_center(family, grid, v, ctx);
    case FamilyKind::AlphaBlockTranslates: return alpha_translates(family, grid, v, ctx);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown family");
}

std::vector<GridFunction> generate_family(const FamilySpec& family, const GridSpec& grid, NormContext& ctx) {
  family.validate();
  std::vector<GridFunction> members;
  members.reserve(family.sweep.size());
  for (std::size_t i = 0; i < family.sweep.size(); ++i) members.push_back(generate_member(family, grid, i, 0, ctx));
  return members;
}

std::vector<GridFunction> generate_family(const FamilySpec& family, const GridSpec& grid) {
  NormContext ctx;
  return generate_family(family, grid, ctx);
}

double natural_parameter(const FamilySpec& family, const GridSpec& grid, std::size_t index, NormContext& ctx) {
  const double v = family.sweep.at(index);
  switch (family.kind) {
    case FamilyKind::ModulatedBump:
    case FamilyKind::AlphaCenterTranslates: return bracket(v);
    case FamilyKind::ScaledBump: return 1.0 / v;
    case FamilyKind::ApproxIdentity: return 1.0 + std::log2(1.0 / v);
    case FamilyKind::DyadicShellSum:
    case FamilyKind::UniformLacunary: return std::pow(2.0, v);
    case FamilyKind::SpreadTranslates:
    case FamilyKind::AlphaBlockTranslates: return v;
    case FamilyKind::RademacherShell: return static_cast<double>(shell_cells(family, grid, v, ctx).size());
  }
  return v;
}

LinearFit fit_growth(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size()) throw Error(ErrorKind::DegenerateFit, "x and y sizes differ");
  if (xs.size() < 4) throw Error(ErrorKind::DegenerateFit, "fewer than four points");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0) || !(ys[i] > 0) || !std::isfinite(xs[i]) || !std::isfinite(ys[i]))
      throw Error(ErrorKind::DegenerateFit, "points must be positive and finite");
    if (i > 0 && !(xs[i] > xs[i - 1])) throw Error(ErrorKind::DegenerateFit, "x values must increase strictly");
  }
  if (xs.back() < 4 * xs.front()) throw Error(ErrorKind::DegenerateFit, "x values span less than a factor of 4");
  return fit_loglog(xs, ys);
}

ProbeReport run_probe(const FamilySpec& family, const SpaceSpec& src, const SpaceSpec& dst, const GridSpec& grid,
                      Dimension d, NormContext& ctx) {
  family.validate();
  grid.validate();
  if (d.value != grid.d) throw Error(ErrorKind::InvalidArgument, "dimension differs from the grid");
  FamilySpec fam = family;
  if (!fam.alpha) fam.alpha = src.alpha ? src.alpha : dst.alpha;
  if (fam.kind != FamilyKind::RademacherShell) fam.trials = 1;

  ProbeReport report;
  report.family = fam;
  report.src = src;
  report.dst = dst;
  report.grid = grid;
  report.trials = fam.trials;
  try {
    report.verdict = decide(EmbeddingQuery{src, dst, d});
  } catch (const Error&) {
    report.verdict.reset();
  }

  struct Row {
    double sweep, x, src, dst;
  };
  std::vector<Row> rows;
  for (std::size_t i = 0; i < fam.sweep.size(); ++i) {
    double src_sum = 0, dst_sum = 0;
    for (int t = 0; t < fam.trials; ++t) {
      const auto f = generate_member(fam, grid, i, t, ctx);
      src_sum += space_norm(src, f, ctx).value;
      dst_sum += space_norm(dst, f, ctx).value;
    }
    const Row row{fam.sweep[i], natural_parameter(fam, grid, i, ctx), src_sum / fam.trials, dst_sum / fam.trials};
    if (row.src > 0 && row.dst > 0 && std::isfinite(row.src) && std::isfinite(row.dst)) rows.push_back(row);
  }
  if (rows.size() < 4) throw Error(ErrorKind::SweepDegenerate, "fewer than four usable sweep points");

  for (const auto& r : rows) {
    report.sweep.push_back(r.sweep);
    report.parameters.push_back(r.x);
    report.src_norms.push_back(r.src);
    report.dst_norms.push_back(r.dst);
    report.ratios.push_back(r.dst / r.src);
  }

  auto order = rows;
  std::stable_sort(order.begin(), order.end(), [](const Row& a, const Row& b) { return a.x < b.x; });
  std::vector<double> xs, ys;
  for (const auto& r : order) {
    xs.push_back(r.x);
    ys.push_back(r.dst / r.src);
  }
  try {
    const auto fit = fit_growth(xs, ys);
    report.loglog_slope = fit.slope;
    report.fit_r2 = std::clamp(fit.r_squared, 0.0, 1.0);
  } catch (const Error& e) {
    throw Error(ErrorKind::SweepDegenerate, e.what());
  }

  report.growth = ys.back() / ys.front();
  auto sorted = ys;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  const double median = n % 2 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
  for (double r : ys) report.spread = std::max(report.spread, std::abs(std::log2(r / median)));

  if (report.verdict) {
    if (report.verdict->status == Status::Fails) report.growth_consistent = report.growth >= kProbeGrowthFactor;
    if (report.verdict->status == Status::Holds) report.growth_consistent = report.spread <= 1.0;
  }
  for (const auto& inst : designated_probe_instances()) {
    if (inst.family.kind == family.kind && inst.src == src && inst.dst == dst && inst.grid == grid &&
        inst.family.sweep == family.sweep && inst.family.theta == family.theta) {
      report.designated = true;
    }
  }
  report.verdict_corroborated = report.designated && report.growth_consistent;
  return report;
}

ProbeReport run_probe(const FamilySpec& family, const SpaceSpec& src, const SpaceSpec& dst, const GridSpec& grid,
                      Dimension d) {
  NormContext ctx;
  return run_probe(family, src, dst, grid, d, ctx);
}

const std::vector<ProbeInstance>& designated_probe_instances() {
  static const std::vector<ProbeInstance> instances = [] {
    auto sp = [](const char* text) { return SpaceSpec::parse(text); };
    auto family = [](FamilyKind kind, std::vector<double> sweep) {
      FamilySpec f;
      f.kind = kind;
      f.sweep = std::move(sweep);
      return f;
    };
    auto grid = [](int n, int period) {
      GridSpec g;
      g.d = 1;
      g.n = n;
      g.period = Rational(period);
      return g;
    };

    const auto bump = family(FamilyKind::ModulatedBump, {1, 2, 4, 8, 16, 32, 64});
    const auto spread = family(FamilyKind::SpreadTranslates, {1, 2, 3, 4, 5, 6, 7, 8});
    const auto shells = family(FamilyKind::DyadicShellSum, {2, 3, 4, 5, 6, 7, 8});
    auto rademacher = family(FamilyKind::RademacherShell, {2, 3, 4, 5, 6, 7});
    rademacher.trials = 64;
    auto center = family(FamilyKind::AlphaCenterTranslates, {1, 2, 3, 4, 6, 8});
    center.alpha = Rational(1, 2);

    return std::vector<ProbeInstance>{
        {"modulated-bump-fails", bump, sp("L[r=2]"), sp("W[p=2,q=2,s=1/2]"), grid(16384, 64), Status::Fails},
        {"modulated-bump-holds", bump, sp("L[r=2]"), sp("W[p=2,q=2]"), grid(16384, 64), Status::Holds},
        {"spread-translates-fails", spread, sp("M[p=1,q=inf]"), sp("W[p=1,q=inf]"), grid(16384, 512), Status::Fails},
        {"spread-translates-holds", spread, sp("M[p=1,q=1]"), sp("W[p=1,q=inf]"), grid(16384, 512), Status::Holds},
        {"dyadic-shell-sum-fails", shells, sp("B[p=1,q=1,s=1/2]"), sp("W[p=1,q=1]"), grid(4096, 4), Status::Fails},
        {"dyadic-shell-sum-holds", shells, sp("B[p=1,q=1,s=1]"), sp("W[p=1,q=1]"), grid(4096, 4), Status::Holds},
        {"rademacher-shell-fails", rademacher, sp("L[r=2]"), sp("W[p=2,q=1]"), grid(8192, 16), Status::Fails},
        {"rademacher-shell-holds", rademacher, sp("L[r=2]"), sp("W[p=2,q=2]"), grid(8192, 16), Status::Holds},
        {"alpha-center-fails", center, sp("Ma[p=2,q=2,s=-1/2,alpha=1/2]"), sp("W[p=2,q=2]"), grid(4096, 16),
         Status::Fails},
        {"alpha-center-holds", center, sp("Ma[p=2,q=2,alpha=1/2]"), sp("W[p=2,q=2]"), grid(4096, 16), Status::Holds},
    };
  }();
  return instances;
}

double approx_identity_functional(double t, const ReciprocalIndex& q, int d) {
  if (!(t > 0 && t <= 1)) throw Error(ErrorKind::InvalidArgument, "t must lie in (0, 1]");
  if (q.is_infinite()) throw Error(ErrorKind::InvalidArgument, "the functional needs q < inf");
  const int K = static_cast<int>(std::floor(1.0 / t - 1.0 + 1e-12));
  double sum = 0;
  const int k1_range = d == 2 ? K : 0;
  for (int k0 = -K; k0 <= K; ++k0)
    for (int k1 = -k1_range; k1 <= k1_range; ++k1) sum += std::pow(1.0 + k0 * k0 + k1 * k1, -0.5 * d);
  return std::pow(sum, q.u().to_double());
}

int alpha_block_cell_count(double k, const Rational& alpha, AlphaConstants constants, int d) {
  if (d != 1 && d != 2) throw Error(ErrorKind::InvalidArgument, "d must be 1 or 2");
  const double beta = beta_of(alpha);
  const double radius = constants.C * std::pow(bracket(k), beta);
  const double center = std::pow(bracket(k), beta) * k;
  // Cell l meets the ball when dist(ball centre, l + [-3/4, 3/4]^d) < radius.
  const int lo = static_cast<int>(std::floor(center - radius - 1));
  const int hi = static_cast<int>(std::ceil(center + radius + 1));
  const int side = static_cast<int>(std::ceil(radius + 1));
  auto gap = [](double x, double l) { return std::max(0.0, std::abs(x - l) - 0.75); };
  int count = 0;
  for (int l0 = lo; l0 <= hi; ++l0) {
    for (int l1 = (d == 2 ? -side : 0); l1 <= (d == 2 ? side : 0); ++l1) {
      const double g0 = gap(center, l0), g1 = gap(0.0, l1);
      if (g0 * g0 + g1 * g1 < radius * radius) ++count;
    }
  }
  return count;
}

std::string probe_csv(const ProbeReport& report) {
  std::ostringstream out;
  out.precision(17);
  out << "parameter,src_norm,dst_norm,ratio\n";
  for (std::size_t i = 0; i < report.sweep.size(); ++i)
    out << report.sweep[i] << "," << report.src_norms[i] << "," << report.dst_norms[i] << "," << report.ratios[i]
        << "\n";
  return out.str();
}

}  // namespace amalgam
