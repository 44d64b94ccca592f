#pragma once

#include <optional>
#include <string>

#include "amalgam/family.hpp"
#include "amalgam/indices.hpp"
#include "amalgam/rational.hpp"
#include "amalgam/space.hpp"

namespace amalgam {

enum class Status { Holds, Fails, OutsideHypothesis, OpenInPaper };
enum class BoundaryKind { Interior, NonStrictBoundary, StrictBoundaryExcluded };

const char* to_string(Status status) noexcept;
const char* to_string(BoundaryKind boundary) noexcept;

/// Outcome of an exact embedding decision.
///
/// For Holds the clause is the satisfied one; for Fails it names the violated
/// necessary condition. `threshold` and `strict` describe the smoothness
/// condition of that clause when there is one.
struct Verdict {
  Status status = Status::OutsideHypothesis;
  std::string theorem_id;
  std::string clause;
  BoundaryKind boundary = BoundaryKind::Interior;
  std::optional<FamilyKind> probe_hint;
  std::optional<Rational> threshold;
  bool strict = false;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// How the smoothness threshold for alpha-modulation -> Wiener is read when p < q.
/// AsWrittenTau uses tau(p,q); AlternateTau1 substitutes tau1(p,q).
enum class AlphaThresholdReading { AsWrittenTau, AlternateTau1 };

struct OracleOptions {
  AlphaThresholdReading alpha_reading = AlphaThresholdReading::AsWrittenTau;
  friend bool operator==(const OracleOptions&, const OracleOptions&) = default;
};

/// "src ↪ dst" in dimension d.
///
/// Weights are canonicalized: only s_src - s_dst matters, since Bessel
/// potentials act isomorphically on every family in the catalogue.
struct EmbeddingQuery {
  SpaceSpec src;
  SpaceSpec dst;
  Dimension d{1};
  OracleOptions options{};

  friend bool operator==(const EmbeddingQuery& a, const EmbeddingQuery& b) {
    return a.src == b.src && a.dst == b.dst && a.d.value == b.d.value && a.options == b.options;
  }
};

/// Decides src ↪ dst exactly.
///
/// Supported pairs (either direction unless noted): Sobolev/Wiener,
/// LocalHardy/Wiener, Besov/Wiener, Modulation/Wiener, AlphaModulation/Wiener,
/// Triebel/Wiener, Besov/Modulation (Besov source only), AlphaModulation/Modulation,
/// Besov/AlphaModulation, Triebel/Modulation and the two weighted sequence
/// spaces with themselves.
///
/// Throws Error(UnsupportedPair) for pairs outside this catalogue and
/// Error(MalformedQuery) when a space violates its own invariants.
Verdict decide(const EmbeddingQuery& query);

/// l^{s1,0}_{q1}(Z^d) ↪ l^{s2,0}_{q2}(Z^d).
Verdict decide_sequence_l0(const ReciprocalIndex& q1, const Rational& s1, const ReciprocalIndex& q2,
                           const Rational& s2, Dimension d);
/// l^{s1,1}_{q1}(N) ↪ l^{s2,1}_{q2}(N).
Verdict decide_sequence_l1(const ReciprocalIndex& q1, const Rational& s1, const ReciprocalIndex& q2,
                           const Rational& s2);

/// The dual query: swap source and target, dualize every exponent, negate weights.
/// Only defined when every exponent lies strictly inside (1, inf); otherwise
/// throws Error(OutOfDualityRange).
EmbeddingQuery dualize_query(const EmbeddingQuery& query);

}  // namespace amalgam
