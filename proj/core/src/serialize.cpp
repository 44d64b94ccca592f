#include "amalgam/serialize.hpp"

#include <json.hpp>

#include "amalgam/error.hpp"

namespace amalgam {

using nlohmann::json;

namespace {

json optional_string(const std::string& s) { return s.empty() ? json(nullptr) : json(s); }

Status parse_status(const std::string& s) {
  for (auto st : {Status::Holds, Status::Fails, Status::OutsideHypothesis, Status::OpenInPaper})
    if (s == to_string(st)) return st;
  throw Error(ErrorKind::DataFormat, "unknown status '" + s + "'");
}

BoundaryKind parse_boundary(const std::string& s) {
  for (auto b : {BoundaryKind::Interior, BoundaryKind::NonStrictBoundary, BoundaryKind::StrictBoundaryExcluded})
    if (s == to_string(b)) return b;
  throw Error(ErrorKind::DataFormat, "unknown boundary '" + s + "'");
}

json verdict_body(const Verdict& v) {
  json j;
  j["theorem"] = v.theorem_id;
  j["status"] = to_string(v.status);
  j["clause"] = optional_string(v.clause);
  j["boundary"] = to_string(v.boundary);
  j["probe_hint"] = v.probe_hint ? json(to_string(*v.probe_hint)) : json(nullptr);
  j["threshold"] = v.threshold ? json(v.threshold->to_string()) : json(nullptr);
  j["strict"] = v.strict;
  return j;
}

json grid_json(const GridSpec& g) {
  return json{{"d", g.d}, {"N", g.n}, {"P", g.period.to_string()}, {"text", g.to_string()}};
}

json family_json(const FamilySpec& f) {
  json j;
  j["kind"] = to_string(f.kind);
  j["sweep"] = f.sweep;
  j["theta"] = f.theta;
  j["trials"] = f.trials;
  j["seed"] = f.seed;
  j["spacing"] = f.spacing;
  j["j_start"] = f.j_start;
  j["alpha_shells"] = f.alpha_shells;
  j["alpha"] = f.alpha ? json(f.alpha->to_string()) : json(nullptr);
  return j;
}

std::string dump(const json& j, int indent) { return j.dump(indent < 0 ? -1 : indent); }

}  // namespace

const char* to_string(AlphaThresholdReading reading) noexcept {
  return reading == AlphaThresholdReading::AsWrittenTau ? "as-written" : "tau1";
}

AlphaThresholdReading parse_alpha_reading(std::string_view text) {
  if (text == "as-written") return AlphaThresholdReading::AsWrittenTau;
  if (text == "tau1") return AlphaThresholdReading::AlternateTau1;
  throw Error(ErrorKind::InvalidArgument, "alpha reading must be 'as-written' or 'tau1'");
}

std::string verdict_to_json(const VerdictRecord& record, int indent) {
  json j = verdict_body(record.verdict);
  j["inputs"] = json{{"src", record.query.src.to_string()},
                     {"dst", record.query.dst.to_string()},
                     {"d", record.query.d.value},
                     {"alpha_reading", to_string(record.query.options.alpha_reading)}};
  return dump(j, indent);
}

VerdictRecord verdict_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::DataFormat, e.what());
  }
  try {
    VerdictRecord r{Verdict{}, EmbeddingQuery{SpaceSpec{}, SpaceSpec{}, Dimension{1}, {}}};
    r.verdict.theorem_id = j.at("theorem").get<std::string>();
    r.verdict.status = parse_status(j.at("status").get<std::string>());
    if (!j.at("clause").is_null()) r.verdict.clause = j.at("clause").get<std::string>();
    r.verdict.boundary = parse_boundary(j.at("boundary").get<std::string>());
    if (!j.at("probe_hint").is_null()) {
      const auto name = j.at("probe_hint").get<std::string>();
      r.verdict.probe_hint = parse_family_kind(name);
      if (!r.verdict.probe_hint) throw Error(ErrorKind::DataFormat, "unknown probe hint '" + name + "'");
    }
    if (!j.at("threshold").is_null()) r.verdict.threshold = Rational::parse(j.at("threshold").get<std::string>());
    r.verdict.strict = j.at("strict").get<bool>();
    const auto& in = j.at("inputs");
    r.query.src = SpaceSpec::parse(in.at("src").get<std::string>());
    r.query.dst = SpaceSpec::parse(in.at("dst").get<std::string>());
    r.query.d = Dimension(in.at("d").get<int>());
    r.query.options.alpha_reading = parse_alpha_reading(in.at("alpha_reading").get<std::string>());
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::DataFormat, e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DataFormat) throw;
    throw Error(ErrorKind::DataFormat, e.what());
  }
}

std::string norm_to_json(const NormResult& result, const SpaceSpec& space, const GridSpec& grid, int indent) {
  json j;
  j["space"] = space.to_string();
  j["grid"] = grid_json(grid);
  j["value"] = result.value;
  j["truncation_tail"] = result.truncation_tail;
  j["truncation_flag"] = result.truncation_flag;
  j["method"] = result.method;
  j["nonzero_blocks"] = result.nonzero_blocks;
  j["maximal_levels"] = result.maximal_levels;
  json blocks = json::array();
  for (const auto& b : result.blocks) blocks.push_back(json{{"index", b.index}, {"value", b.value}});
  j["blocks"] = std::move(blocks);
  return dump(j, indent);
}

std::string probe_to_json(const ProbeReport& r, int indent) {
  json j;
  j["family"] = family_json(r.family);
  j["src"] = r.src.to_string();
  j["dst"] = r.dst.to_string();
  j["grid"] = grid_json(r.grid);
  j["sweep"] = r.sweep;
  j["parameters"] = r.parameters;
  j["src_norms"] = r.src_norms;
  j["dst_norms"] = r.dst_norms;
  j["ratios"] = r.ratios;
  j["loglog_slope"] = r.loglog_slope;
  j["fit_r2"] = r.fit_r2;
  j["trials"] = r.trials;
  j["verdict"] = r.verdict ? verdict_body(*r.verdict) : json(nullptr);
  j["growth"] = r.growth;
  j["spread"] = r.spread;
  j["growth_consistent"] = r.growth_consistent;
  j["designated"] = r.designated;
  j["verdict_corroborated"] = r.verdict_corroborated;
  return dump(j, indent);
}

}  // namespace amalgam
