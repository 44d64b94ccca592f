#pragma once

#include <map>
#include <string>
#include <vector>

#include "amalgam/indices.hpp"
#include "amalgam/oracle.hpp"
#include "amalgam/rational.hpp"

namespace amalgam {

/// Bit flags attached to a scanned cell.
enum RegionFlag : unsigned {
  kTiePiece1 = 1u << 0,  // indicator scans: piece k attains the extremum
  kTiePiece2 = 1u << 1,
  kTiePiece3 = 1u << 2,
  kEdge = 1u << 3,            // some lattice neighbour carries a different label
  kNonStrictEdge = 1u << 4,   // verdict holds exactly at a non-strict threshold
  kStrictExcluded = 1u << 5,  // verdict fails exactly at a strict threshold
};

/// "tie1;tie2;edge" style rendering, empty when no flag is set.
std::string region_flags_to_string(unsigned flags);

enum class Indicator { Tau1, Sigma1 };

/// Active piece of tau1 / sigma1 at (u, v) = (1/p, 1/q), u, v >= 0.
PieceClassification classify_indicator_region(Indicator which, const Rational& u, const Rational& v);

struct RegionCell {
  Rational u;
  Rational v;
  std::string label;  // Verdict status, or "(1)".."(3)" for indicator scans
  unsigned flags = 0;
  bool strict = false;  // the deciding clause is strict
};

/// Parameters held fixed across a scan. The axes are always (1/p, 1/q) of the
/// Wiener side; `fix` supplies the remaining indices by name. An exponent
/// value of "p" or "q" ties that index to the corresponding axis.
///
/// Names per theorem: r, s (sobolev/hardy, triebel inner index r);
/// p0, s (besov-p0); q0, s (besov-q0); p1, q1, s (modulation); alpha, s
/// (alpha-modulation). The weight s is the one in the printed statement.
struct ScanParams {
  std::map<std::string, std::string> fix;
  Dimension d{1};
  OracleOptions options{};
};

struct RegionScan {
  std::string theorem_id;
  ScanParams params;
  Rational step;
  int side = 0;  // lattice points per axis
  std::vector<RegionCell> cells;  // row-major: v outer, u inner

  const RegionCell& at(int iu, int iv) const { return cells[static_cast<std::size_t>(iv) * side + iu]; }
};

/// Theorem ids accepted by scan_theorem_region, indicator scans "tau1" and "sigma1" included.
const std::vector<std::string>& scannable_theorems();

/// Evaluates every lattice point of [0,2]^2 with spacing `step` (1/16, 1/32 or 1/64).
/// Oracle errors at a point are recorded as OutsideHypothesis.
RegionScan scan_theorem_region(const std::string& theorem_id, const ScanParams& params, const Rational& step);

struct SvgStyle {
  int pixels_per_unit = 256;
  int margin = 48;
};

std::string emit_region_svg(const RegionScan& scan, const SvgStyle& style = {});
std::string emit_region_csv(const RegionScan& scan);

struct Point2 {
  double u;
  double v;
};
struct Segment2 {
  Point2 a;
  Point2 b;
};

/// Midpoints between horizontally or vertically adjacent cells with different labels.
std::vector<Point2> scan_boundary_points(const RegionScan& scan);
/// Exact boundary arrangement of the indicator regions, clipped to [0,2]^2.
std::vector<Segment2> indicator_arrangement(Indicator which);
/// Symmetric Hausdorff distance; segments are sampled every `sample` units.
double hausdorff_distance(const std::vector<Point2>& points, const std::vector<Segment2>& segments, double sample);

}  // namespace amalgam
