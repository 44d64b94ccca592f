#pragma once

#include <string>
#include <string_view>

#include "amalgam/grid.hpp"
#include "amalgam/norms.hpp"
#include "amalgam/oracle.hpp"
#include "amalgam/probes.hpp"
#include "amalgam/space.hpp"

namespace amalgam {

/// A verdict together with the query that produced it.
struct VerdictRecord {
  Verdict verdict;
  EmbeddingQuery query;

  friend bool operator==(const VerdictRecord&, const VerdictRecord&) = default;
};

/// {theorem, status, clause, boundary, probe_hint, threshold, strict,
///  inputs: {src, dst, d, alpha_reading}}. Absent optionals are null.
std::string verdict_to_json(const VerdictRecord& record, int indent = 2);
/// Throws DataFormat on malformed documents.
VerdictRecord verdict_from_json(std::string_view text);

/// {space, grid, value, truncation_tail, truncation_flag, method, nonzero_blocks,
///  maximal_levels, blocks: [{index, value}]}.
std::string norm_to_json(const NormResult& result, const SpaceSpec& space, const GridSpec& grid, int indent = 2);

/// {family, src, dst, grid, sweep, parameters, src_norms, dst_norms, ratios, loglog_slope,
///  fit_r2, trials, verdict, growth, spread, growth_consistent, designated, verdict_corroborated}.
std::string probe_to_json(const ProbeReport& report, int indent = 2);

const char* to_string(AlphaThresholdReading reading) noexcept;
/// "as-written" or "tau1"; throws InvalidArgument otherwise.
AlphaThresholdReading parse_alpha_reading(std::string_view text);

}  // namespace amalgam
