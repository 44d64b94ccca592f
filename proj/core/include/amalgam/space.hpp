#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "amalgam/indices.hpp"
#include "amalgam/rational.hpp"

namespace amalgam {

enum class SpaceFamily {
  Sobolev,          // L^{s,r}; exponent stored in p
  LocalHardy,       // h_r^s; exponent stored in p
  Besov,            // B^s_{p,q}
  Triebel,          // F^s_{p,q}
  Modulation,       // M^s_{p,q}
  Wiener,           // W^s_{p,q}
  AlphaModulation,  // M^{s,alpha}_{p,q}
  SeqWeighted0,     // l^{s,0}_q over Z^d
  SeqWeighted1,     // l^{s,1}_q over N
};

const char* to_string(SpaceFamily family) noexcept;

/// Tagged description of one function (or sequence) space.
///
/// Text form: `W[p=2,q=1/2,s=-3/4]`, `B[p=1,q=2,s=1]`, `Ma[p=2,q=2,s=0,alpha=1/3]`,
/// `L[r=2,s=1]`, `h[r=1/2]`, `F[p=1,q=2]`, `M[p=1,q=inf]`, `l0[q=2,s=1]`, `l1[q=inf]`.
/// Omitted `s` defaults to 0; exponents accept `inf` and rationals.
struct SpaceSpec {
  SpaceFamily family = SpaceFamily::Wiener;
  ReciprocalIndex p;  // r for Sobolev / LocalHardy; unused for sequence spaces
  ReciprocalIndex q;  // unused for Sobolev / LocalHardy
  Rational s;
  std::optional<Rational> alpha;

  const ReciprocalIndex& r() const noexcept { return p; }

  static SpaceSpec sobolev(ReciprocalIndex r, Rational s = Rational(0));
  static SpaceSpec local_hardy(ReciprocalIndex r, Rational s = Rational(0));
  static SpaceSpec besov(ReciprocalIndex p, ReciprocalIndex q, Rational s = Rational(0));
  static SpaceSpec triebel(ReciprocalIndex p, ReciprocalIndex q, Rational s = Rational(0));
  static SpaceSpec modulation(ReciprocalIndex p, ReciprocalIndex q, Rational s = Rational(0));
  static SpaceSpec wiener(ReciprocalIndex p, ReciprocalIndex q, Rational s = Rational(0));
  static SpaceSpec alpha_modulation(ReciprocalIndex p, ReciprocalIndex q, Rational s, Rational alpha);
  static SpaceSpec seq0(ReciprocalIndex q, Rational s = Rational(0));
  static SpaceSpec seq1(ReciprocalIndex q, Rational s = Rational(0));

  bool has_p() const noexcept { return family != SpaceFamily::SeqWeighted0 && family != SpaceFamily::SeqWeighted1; }
  bool has_q() const noexcept { return family != SpaceFamily::Sobolev && family != SpaceFamily::LocalHardy; }

  std::string to_string() const;
  /// Throws Error(InvalidArgument) on syntax errors or missing exponents.
  static SpaceSpec parse(std::string_view text);

  friend bool operator==(const SpaceSpec&, const SpaceSpec&) = default;
};

}  // namespace amalgam
