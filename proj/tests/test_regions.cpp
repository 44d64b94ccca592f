#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "amalgam/error.hpp"
#include "amalgam/regions.hpp"

using namespace amalgam;

namespace {

const RegionCell& cell_at(const RegionScan& scan, const Rational& u, const Rational& v) {
  const Rational iu = u / scan.step, iv = v / scan.step;
  REQUIRE(iu.is_integer());
  REQUIRE(iv.is_integer());
  return scan.at(static_cast<int>(iu.num()), static_cast<int>(iv.num()));
}

ScanParams fixed(std::map<std::string, std::string> fix) {
  ScanParams p;
  p.fix = std::move(fix);
  return p;
}

}  // namespace

TEST_CASE("indicator scan covers the square") {
  const auto scan = scan_theorem_region("tau1", {}, Rational(1, 16));
  CHECK(scan.side == 33);
  CHECK(scan.cells.size() == 33u * 33u);
  CHECK(cell_at(scan, Rational(1, 4), Rational(1, 4)).label == "(1)");
  CHECK(cell_at(scan, Rational(0), Rational(1)).label == "(2)");
  CHECK(cell_at(scan, Rational(1), Rational(1)).label == "(3)");
  const auto& triple = cell_at(scan, Rational(1, 2), Rational(1, 2));
  CHECK((triple.flags & (kTiePiece1 | kTiePiece2 | kTiePiece3)) == (kTiePiece1 | kTiePiece2 | kTiePiece3));
}

TEST_CASE("classify_indicator_region agrees with the sigma1 formula") {
  // sigma1 = min(0, v - 1/2, u + v - 1); at (0, 0) the third piece is the minimum
  CHECK(classify_indicator_region(Indicator::Sigma1, Rational(0), Rational(0)).piece == 3);
  // at (2, 1/4): min(0, -1/4, 5/4) is piece 2
  CHECK(classify_indicator_region(Indicator::Sigma1, Rational(2), Rational(1, 4)).piece == 2);
  CHECK(classify_indicator_region(Indicator::Sigma1, Rational(1), Rational(1)).piece == 1);
}

TEST_CASE("theorem scan labels") {
  const auto scan = scan_theorem_region("sobolev-to-wiener", fixed({{"r", "p"}, {"s", "0"}}), Rational(1, 16));
  // L^2 -> W_{2,2} at s = 0 holds on the non-strict edge
  const auto& c = cell_at(scan, Rational(1, 2), Rational(1, 2));
  CHECK(c.label == "Holds");
  CHECK((c.flags & kNonStrictEdge) != 0u);
  // L^2 -> W_{2,1}: tau1 = 1/2 > 0
  CHECK(cell_at(scan, Rational(1, 2), Rational(1)).label == "Fails");
  // r = p < 1 is outside the Sobolev range
  CHECK(cell_at(scan, Rational(3, 2), Rational(1)).label == "OutsideHypothesis");
}

TEST_CASE("csv and svg output") {
  const auto scan = scan_theorem_region("sigma1", {}, Rational(1, 16));
  const auto csv = emit_region_csv(scan);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "u,v,label,boundary_flags");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 33 * 33);

  const auto svg = emit_region_svg(scan);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(emit_region_svg(scan_theorem_region("sigma1", {}, Rational(1, 16))) == svg);
}

TEST_CASE("scan boundary tracks the exact arrangement") {
  for (auto [id, which] : {std::pair{"tau1", Indicator::Tau1}, std::pair{"sigma1", Indicator::Sigma1}}) {
    const auto scan = scan_theorem_region(id, {}, Rational(1, 32));
    const double h = hausdorff_distance(scan_boundary_points(scan), indicator_arrangement(which), 1.0 / 256);
    CHECK(h <= 1.0 / 32);
  }
}

TEST_CASE("hausdorff distance of a point set to a segment") {
  const std::vector<Segment2> seg = {{{0, 0}, {1, 0}}};
  // the segment midpoint is sqrt(0.5^2 + 0.1^2) from either point
  const std::vector<Point2> pts = {{0, 0.1}, {1, 0.1}};
  CHECK(hausdorff_distance(pts, seg, 1.0 / 64) == doctest::Approx(std::sqrt(0.26)).epsilon(1e-9));
  const std::vector<Point2> dense = {{0, 0.1}, {0.25, 0.1}, {0.5, 0.1}, {0.75, 0.1}, {1, 0.1}};
  // samples at odd multiples of 1/8 sit 1/8 away from the nearest point horizontally
  CHECK(hausdorff_distance(dense, seg, 1.0 / 8) == doctest::Approx(std::hypot(0.125, 0.1)).epsilon(1e-9));
}

TEST_CASE("scan argument errors") {
  CHECK_THROWS_AS(scan_theorem_region("tau1", {}, Rational(1, 10)), Error);
  CHECK_THROWS_AS(scan_theorem_region("no-such-theorem", {}, Rational(1, 16)), Error);
  const auto& ids = scannable_theorems();
  CHECK(std::find(ids.begin(), ids.end(), "modulation-to-wiener") != ids.end());
}
