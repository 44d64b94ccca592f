#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace amalgam {

/// Extremal test-function families used to corroborate failing embeddings.
enum class FamilyKind {
  ModulatedBump,
  ScaledBump,
  ApproxIdentity,
  DyadicShellSum,
  UniformLacunary,
  SpreadTranslates,
  RademacherShell,
  AlphaCenterTranslates,
  AlphaBlockTranslates,
};

const char* to_string(FamilyKind kind) noexcept;
std::optional<FamilyKind> parse_family_kind(std::string_view name);

}  // namespace amalgam
