#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "amalgam/banks.hpp"
#include "amalgam/family.hpp"
#include "amalgam/fit.hpp"
#include "amalgam/grid.hpp"
#include "amalgam/norms.hpp"
#include "amalgam/oracle.hpp"
#include "amalgam/rational.hpp"
#include "amalgam/space.hpp"

namespace amalgam {

/// One extremal family and its sweep.
///
/// Sweep parameter by kind:
///   ModulatedBump, AlphaCenterTranslates  frequency index k (along e_1)
///   ScaledBump                            dilation lambda in (0, 1]
///   ApproxIdentity                        t = 2^{-m}
///   DyadicShellSum, UniformLacunary       last shell J (shells j_start..J)
///   SpreadTranslates, AlphaBlockTranslates number of translates K
///   RademacherShell                       shell index (dyadic j, or alpha index k)
struct FamilySpec {
  FamilyKind kind = FamilyKind::ModulatedBump;
  std::vector<double> sweep;
  double theta = 0.0;          // a_j = 2^{-j theta}, a_k = <k>^{-theta}
  int trials = 1;              // RademacherShell only
  std::uint64_t seed = 7;
  double spacing = 0.0;        // translate spacing; 0 picks period / (K_max + 1)
  int j_start = 0;             // first shell of DyadicShellSum / UniformLacunary
  bool alpha_shells = false;   // RademacherShell over alpha blocks instead of dyadic shells
  std::optional<Rational> alpha;

  /// Throws SweepDegenerate when the sweep has fewer than four points.
  void validate() const;
  std::string to_string() const;
};

/// Member at sweep position `index`; `trial` selects the Rademacher signs.
/// Throws GridTooSmall when the grid cannot hold the member.
GridFunction generate_member(const FamilySpec& family, const GridSpec& grid, std::size_t index, int trial,
                             NormContext& ctx);
/// One member per sweep point (trial 0).
std::vector<GridFunction> generate_family(const FamilySpec& family, const GridSpec& grid);
std::vector<GridFunction> generate_family(const FamilySpec& family, const GridSpec& grid, NormContext& ctx);

/// Value the growth is fitted against: <k>, 1/lambda, log(1/t) + 1, 2^J, K, or the
/// number of cells in the shell.
double natural_parameter(const FamilySpec& family, const GridSpec& grid, std::size_t index, NormContext& ctx);

/// Uniform cells l whose block lies where the shell multiplier equals one.
std::vector<std::array<int, 2>> shell_cells(const FamilySpec& family, const GridSpec& grid, double shell,
                                            NormContext& ctx);

/// Least squares in log-log coordinates. Needs >= 4 points, strictly increasing xs
/// spanning a factor >= 4; throws DegenerateFit otherwise.
LinearFit fit_growth(const std::vector<double>& xs, const std::vector<double>& ys);

struct ProbeReport {
  FamilySpec family;
  SpaceSpec src;
  SpaceSpec dst;
  GridSpec grid;
  std::vector<double> sweep;
  std::vector<double> parameters;  // natural parameter per sweep point
  std::vector<double> src_norms;   // trial means for RademacherShell
  std::vector<double> dst_norms;
  std::vector<double> ratios;      // dst / src
  double loglog_slope = 0.0;
  double fit_r2 = 0.0;
  int trials = 1;
  std::optional<Verdict> verdict;  // absent when the oracle does not cover the pair
  double growth = 0.0;             // last ratio / first ratio
  double spread = 0.0;             // max |log2(ratio / median)|
  bool growth_consistent = false;  // Fails: growth >= 4; Holds: spread <= 1
  bool designated = false;         // one of designated_probe_instances()
  bool verdict_corroborated = false;
};

inline constexpr double kProbeGrowthFactor = 4.0;

/// Norms of every member in src and dst, fitted growth and corroboration.
/// Throws SweepDegenerate when fewer than four usable points remain.
ProbeReport run_probe(const FamilySpec& family, const SpaceSpec& src, const SpaceSpec& dst, const GridSpec& grid,
                      Dimension d = Dimension{1});
ProbeReport run_probe(const FamilySpec& family, const SpaceSpec& src, const SpaceSpec& dst, const GridSpec& grid,
                      Dimension d, NormContext& ctx);

struct ProbeInstance {
  std::string name;
  FamilySpec family;
  SpaceSpec src;
  SpaceSpec dst;
  GridSpec grid;
  Status expected = Status::Fails;
};

/// The failing instances (one per family) and their matched holding instances
/// for which corroboration is claimed.
const std::vector<ProbeInstance>& designated_probe_instances();

/// (sum_{|k|_inf <= 1/t - 1} <k>^{-d})^{1/q}, a lower bound for ||f_t||_{W^{-d/q}_{p,q}}.
double approx_identity_functional(double t, const ReciprocalIndex& q, int d);

/// Number of uniform cells meeting the support of the alpha block at k e_1.
int alpha_block_cell_count(double k, const Rational& alpha, AlphaConstants constants, int d);

std::string probe_csv(const ProbeReport& report);

}  // namespace amalgam
