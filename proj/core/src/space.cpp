#include "amalgam/space.hpp"

#include <array>
#include <cctype>
#include <utility>
#include <vector>

#include "amalgam/error.hpp"
#include "amalgam/family.hpp"

namespace amalgam {

namespace {

struct Tag {
  SpaceFamily family;
  std::string_view text;
};

constexpr std::array<Tag, 9> kTags{{
    {SpaceFamily::Sobolev, "L"},
    {SpaceFamily::LocalHardy, "h"},
    {SpaceFamily::Besov, "B"},
    {SpaceFamily::Triebel, "F"},
    {SpaceFamily::Modulation, "M"},
    {SpaceFamily::Wiener, "W"},
    {SpaceFamily::AlphaModulation, "Ma"},
    {SpaceFamily::SeqWeighted0, "l0"},
    {SpaceFamily::SeqWeighted1, "l1"},
}};

std::string_view tag_of(SpaceFamily family) {
  for (const auto& t : kTags) {
    if (t.family == family) return t.text;
  }
  return "?";
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void syntax_error(std::string_view text, const std::string& why) {
  throw Error(ErrorKind::InvalidArgument, "bad space spec '" + std::string(text) + "': " + why);
}

}  // namespace

const char* to_string(SpaceFamily family) noexcept {
  switch (family) {
    case SpaceFamily::Sobolev: return "Sobolev";
    case SpaceFamily::LocalHardy: return "LocalHardy";
    case SpaceFamily::Besov: return "Besov";
    case SpaceFamily::Triebel: return "Triebel";
    case SpaceFamily::Modulation: return "Modulation";
    case SpaceFamily::Wiener: return "Wiener";
    case SpaceFamily::AlphaModulation: return "AlphaModulation";
    case SpaceFamily::SeqWeighted0: return "SeqWeighted0";
    case SpaceFamily::SeqWeighted1: return "SeqWeighted1";
  }
  return "Unknown";
}

SpaceSpec SpaceSpec::sobolev(ReciprocalIndex r, Rational s) { return {SpaceFamily::Sobolev, r, {}, s, {}}; }
SpaceSpec SpaceSpec::local_hardy(ReciprocalIndex r, Rational s) { return {SpaceFamily::LocalHardy, r, {}, s, {}}; }
SpaceSpec SpaceSpec::besov(ReciprocalIndex p, ReciprocalIndex q, Rational s) { return {SpaceFamily::Besov, p, q, s, {}}; }
SpaceSpec SpaceSpec::triebel(ReciprocalIndex p, ReciprocalIndex q, Rational s) { return {SpaceFamily::Triebel, p, q, s, {}}; }
SpaceSpec SpaceSpec::modulation(ReciprocalIndex p, ReciprocalIndex q, Rational s) {
  return {SpaceFamily::Modulation, p, q, s, {}};
}
SpaceSpec SpaceSpec::wiener(ReciprocalIndex p, ReciprocalIndex q, Rational s) { return {SpaceFamily::Wiener, p, q, s, {}}; }
SpaceSpec SpaceSpec::alpha_modulation(ReciprocalIndex p, ReciprocalIndex q, Rational s, Rational alpha) {
  return {SpaceFamily::AlphaModulation, p, q, s, alpha};
}
SpaceSpec SpaceSpec::seq0(ReciprocalIndex q, Rational s) { return {SpaceFamily::SeqWeighted0, {}, q, s, {}}; }
SpaceSpec SpaceSpec::seq1(ReciprocalIndex q, Rational s) { return {SpaceFamily::SeqWeighted1, {}, q, s, {}}; }

std::string SpaceSpec::to_string() const {
  std::string out(tag_of(family));
  out += '[';
  if (family == SpaceFamily::Sobolev || family == SpaceFamily::LocalHardy) {
    out += "r=" + p.to_string();
  } else if (has_p()) {
    out += "p=" + p.to_string() + ",q=" + q.to_string();
  } else {
    out += "q=" + q.to_string();
  }
  out += ",s=" + s.to_string();
  if (alpha) out += ",alpha=" + alpha->to_string();
  out += ']';
  return out;
}

SpaceSpec SpaceSpec::parse(std::string_view text) {
  const std::string_view whole = trim(text);
  const auto open = whole.find('[');
  if (open == std::string_view::npos || whole.back() != ']') syntax_error(whole, "expected TAG[key=value,...]");
  const std::string_view tag = trim(whole.substr(0, open));
  SpaceSpec spec;
  bool found = false;
  for (const auto& t : kTags) {
    if (t.text == tag) {
      spec.family = t.family;
      found = true;
    }
  }
  if (!found) syntax_error(whole, "unknown space tag '" + std::string(tag) + "'");

  bool seen_p = false;
  bool seen_q = false;
  std::string_view body = whole.substr(open + 1, whole.size() - open - 2);
  while (!trim(body).empty()) {
    const auto comma = body.find(',');
    const std::string_view item = trim(body.substr(0, comma));
    body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) syntax_error(whole, "expected key=value, got '" + std::string(item) + "'");
    const std::string_view key = trim(item.substr(0, eq));
    const std::string_view value = trim(item.substr(eq + 1));
    const bool is_lebesgue = spec.family == SpaceFamily::Sobolev || spec.family == SpaceFamily::LocalHardy;
    if ((key == "p" && spec.has_p() && !is_lebesgue) || (key == "r" && is_lebesgue)) {
      spec.p = ReciprocalIndex::parse(value);
      seen_p = true;
    } else if (key == "q" && spec.has_q()) {
      spec.q = ReciprocalIndex::parse(value);
      seen_q = true;
    } else if (key == "s") {
      spec.s = Rational::parse(value);
    } else if (key == "alpha" && spec.family == SpaceFamily::AlphaModulation) {
      spec.alpha = Rational::parse(value);
    } else {
      syntax_error(whole, "unexpected key '" + std::string(key) + "'");
    }
  }
  if (spec.has_p() && !seen_p) syntax_error(whole, "missing exponent p (or r)");
  if (spec.has_q() && !seen_q) syntax_error(whole, "missing exponent q");
  if (spec.family == SpaceFamily::AlphaModulation && !spec.alpha) syntax_error(whole, "missing alpha");
  return spec;
}

const char* to_string(FamilyKind kind) noexcept {
  switch (kind) {
    case FamilyKind::ModulatedBump: return "ModulatedBump";
    case FamilyKind::ScaledBump: return "ScaledBump";
    case FamilyKind::ApproxIdentity: return "ApproxIdentity";
    case FamilyKind::DyadicShellSum: return "DyadicShellSum";
    case FamilyKind::UniformLacunary: return "UniformLacunary";
    case FamilyKind::SpreadTranslates: return "SpreadTranslates";
    case FamilyKind::RademacherShell: return "RademacherShell";
    case FamilyKind::AlphaCenterTranslates: return "AlphaCenterTranslates";
    case FamilyKind::AlphaBlockTranslates: return "AlphaBlockTranslates";
  }
  return "Unknown";
}

namespace {

// "ModulatedBump" -> "modulated-bump"
std::string kebab_case(std::string_view camel) {
  std::string out;
  for (char c : camel) {
    if (std::isupper(static_cast<unsigned char>(c))) {
      if (!out.empty()) out += '-';
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else {
      out += c;
    }
  }
  return out;
}

}  // namespace

/// Accepts "ModulatedBump" or "modulated-bump".
std::optional<FamilyKind> parse_family_kind(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(FamilyKind::AlphaBlockTranslates); ++i) {
    const auto kind = static_cast<FamilyKind>(i);
    if (name == to_string(kind) || name == kebab_case(to_string(kind))) return kind;
  }
  return std::nullopt;
}

}  // namespace amalgam
