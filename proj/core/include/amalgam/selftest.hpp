#pragma once

#include <string>
#include <vector>

#include "amalgam/grid.hpp"
#include "amalgam/oracle.hpp"

namespace amalgam {

/// One hand-derived oracle expectation.
struct AuditedCase {
  const char* group;
  const char* src;
  const char* dst;
  int d;
  Status status;
  const char* theorem;
  const char* clause;
  BoundaryKind boundary;
  const char* derivation;  // the arithmetic behind the expectation
};

const std::vector<AuditedCase>& audited_cases();

/// Band [1/C, C] for the pairwise M / W / Fourier-Lebesgue ratios of functions
/// with spectrum in the unit ball. Calibrated once on the fixed corpus.
inline constexpr double kCompactSupportBand = 24.0;

/// The ten functions the band is calibrated on.
std::vector<GridFunction> compact_support_corpus(const GridSpec& grid);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct SelftestOptions {
  bool quick = false;  // coarser oracle grids, fewer Rademacher trials
};

/// Criteria are numbered 1..12.
const std::vector<std::string>& criterion_names();
CriterionResult run_criterion(int id, const SelftestOptions& options = {});
std::vector<CriterionResult> run_selftest(const SelftestOptions& options = {});

std::string selftest_to_json(const std::vector<CriterionResult>& results, int indent = 2);

}  // namespace amalgam
